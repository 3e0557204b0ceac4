#include "fanram/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "fanram/error.hpp"

namespace fanram {

const char* to_string(SearchStatus s) { return s == SearchStatus::Exact ? "exact" : "budget_exhausted"; }

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    red_prunes += o.red_prunes;
    blue_prunes += o.blue_prunes;
    iso_skips += o.iso_skips;
    prune_check_failures += o.prune_check_failures;
    return *this;
}

namespace {

constexpr std::size_t kSplitEdges = 12;
constexpr int kMaxIsoDepth = 4;
constexpr int kMaxDedupOrder = 8;

enum Color : std::uint8_t { kRed = 0, kBlue = 1 };

TwoColoring coloring_from(const Graph& host, std::span<const Edge> edges, std::span<const std::uint8_t> colors) {
    GraphBuilder red(host.order());
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == kRed) red.add_edge(edges[i].first, edges[i].second);
    return TwoColoring(host, red.build());
}

bool trivially_blocked(int order, const TargetPattern& red_target, const TargetPattern& blue_target) {
    const Graph none = empty_graph(order);
    return contains_target(none, red_target).has_value() || contains_target(none, blue_target).has_value();
}

// DFS over a fixed edge order. Edges before `start` come from a loaded prefix;
// the subtree below is explored until `stop`, where on_leaf decides whether
// to halt.
class EdgeSearch {
public:
    EdgeSearch(const Graph& host, const TargetPattern& red_target, const TargetPattern& blue_target,
               std::span<const Edge> edges, const SearchConfig& cfg, std::uint64_t cap)
        : edges_(edges),
          red_target_(red_target),
          blue_target_(blue_target),
          verify_(cfg.verify_prunes),
          cap_(cap),
          red_(host.order()),
          blue_(host.order()),
          colors_(edges.size(), kRed) {}

    void load(std::span<const std::uint8_t> prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            colors_[i] = prefix[i];
            auto [u, v] = edges_[i];
            (prefix[i] == kRed ? red_ : blue_).add_edge(u, v);
        }
    }

    /// Returns true when on_leaf asked to halt; aborted() tells budget exhaustion apart.
    template <typename Leaf>
    bool run(std::size_t start, std::size_t stop, Leaf&& on_leaf) {
        return dfs(start, stop, on_leaf);
    }

    bool aborted() const { return aborted_; }
    const SearchStats& stats() const { return stats_; }
    std::span<const std::uint8_t> colors() const { return colors_; }
    const GraphBuilder& red() const { return red_; }

private:
    template <typename Leaf>
    bool dfs(std::size_t i, std::size_t stop, Leaf& on_leaf) {
        if (++stats_.nodes > cap_) {
            aborted_ = true;
            return true;
        }
        if (i == stop) return on_leaf(*this);
        auto [u, v] = edges_[i];
        if (try_color(i, u, v, kRed, stop, on_leaf)) return true;
        return try_color(i, u, v, kBlue, stop, on_leaf);
    }

    template <typename Leaf>
    bool try_color(std::size_t i, int u, int v, Color c, std::size_t stop, Leaf& on_leaf) {
        GraphBuilder& side = c == kRed ? red_ : blue_;
        const TargetPattern& target = c == kRed ? red_target_ : blue_target_;
        side.add_edge(u, v);
        colors_[i] = c;
        bool halt = false;
        if (contains_target_through_edge(side.view(), target, u, v)) {
            ++(c == kRed ? stats_.red_prunes : stats_.blue_prunes);
            if (verify_ && !contains_target(side.view(), target)) ++stats_.prune_check_failures;
        } else {
            halt = dfs(i + 1, stop, on_leaf);
        }
        side.remove_edge(u, v);
        return halt;
    }

    std::span<const Edge> edges_;
    const TargetPattern& red_target_;
    const TargetPattern& blue_target_;
    bool verify_;
    std::uint64_t cap_;
    GraphBuilder red_;
    GraphBuilder blue_;
    std::vector<std::uint8_t> colors_;
    SearchStats stats_;
    bool aborted_ = false;
};

// Canonical key of a partial coloring of K_N in which exactly the edges
// touching vertices 0..d-1 are colored, under permutations fixing {0..d-1}
// setwise.
std::vector<std::uint32_t> boundary_key(const GraphBuilder& red, int order, int d) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    do {
        std::vector<std::uint32_t> key;
        std::uint32_t inner = 0;
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                inner = (inner << 1) | (red.adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]) ? 1U : 0U);
        std::vector<std::uint32_t> sigs;
        for (int w = d; w < order; ++w) {
            std::uint32_t sig = 0;
            for (int a = 0; a < d; ++a) sig = (sig << 1) | (red.adjacent(perm[static_cast<std::size_t>(a)], w) ? 1U : 0U);
            sigs.push_back(sig);
        }
        std::sort(sigs.begin(), sigs.end());
        key.push_back(inner);
        key.insert(key.end(), sigs.begin(), sigs.end());
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : k) h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};

struct TaskResult {
    bool explored = false;
    bool found = false;
    bool aborted = false;
    std::vector<std::uint8_t> colors;
    SearchStats stats;
};

}  // namespace

FreeColoringResult exists_free_coloring(const Graph& host, const TargetPattern& red_target,
                                        const TargetPattern& blue_target, const SearchConfig& cfg) {
    if (cfg.node_budget < 1) throw Error(ErrorCode::BadParam, "node budget must be >= 1");
    FreeColoringResult result;
    if (trivially_blocked(host.order(), red_target, blue_target)) {
        result.stats.nodes = 1;
        return result;
    }
    const auto edges = host.edges();
    const int n = host.order();
    const int depth = std::min({cfg.iso_rejection_depth, kMaxIsoDepth, n});
    const bool iso = depth > 0 && host == complete(n);
    std::size_t split = std::min(edges.size(), kSplitEdges);
    if (iso) {
        split = 0;
        for (int v = 0; v < depth; ++v) split += static_cast<std::size_t>(n - 1 - v);
    }

    // Serial prefix expansion; isomorphic prefixes keep only their first representative.
    std::vector<std::vector<std::uint8_t>> tasks;
    std::unordered_set<std::vector<std::uint32_t>, KeyHash> seen;
    EdgeSearch gen(host, red_target, blue_target, edges, cfg, cfg.node_budget);
    gen.run(0, split, [&](EdgeSearch& s) {
        if (iso && !seen.insert(boundary_key(s.red(), n, depth)).second) {
            ++result.stats.iso_skips;
            return false;
        }
        tasks.emplace_back(s.colors().begin(), s.colors().begin() + static_cast<std::ptrdiff_t>(split));
        return false;
    });
    result.stats += gen.stats();
    if (gen.aborted()) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }

    const std::uint64_t remaining = cfg.node_budget - gen.stats().nodes;
    std::vector<TaskResult> outcomes(tasks.size());
    std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
    const int threads = std::max(1, cfg.thread_count_hint);
    const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t ti = 0; ti < task_count; ++ti) {
        const auto i = static_cast<std::size_t>(ti);
        if (i > winner.load(std::memory_order_relaxed)) continue;
        EdgeSearch sub(host, red_target, blue_target, edges, cfg, remaining);
        sub.load(tasks[i]);
        TaskResult& out = outcomes[i];
        sub.run(split, edges.size(), [&](EdgeSearch& s) {
            out.found = true;
            out.colors.assign(s.colors().begin(), s.colors().end());
            return true;
        });
        out.explored = true;
        out.aborted = sub.aborted();
        out.stats = sub.stats();
        if (out.found) {
            std::size_t cur = winner.load();
            while (i < cur && !winner.compare_exchange_weak(cur, i)) {
            }
        }
    }

    // Merge in task order so that the outcome matches a serial run exactly.
    std::uint64_t used = gen.stats().nodes;
    for (auto& out : outcomes) {
        result.stats += out.stats;
        used += out.stats.nodes;
        if (out.aborted || used > cfg.node_budget) {
            result.status = SearchStatus::BudgetExhausted;
            return result;
        }
        if (out.found) {
            result.coloring = coloring_from(host, edges, out.colors);
            return result;
        }
    }
    return result;
}

SearchStatus for_each_free_coloring(const Graph& host, const TargetPattern& red_target, const TargetPattern& blue_target,
                                    const SearchConfig& cfg, SearchStats& stats,
                                    const std::function<bool(const TwoColoring&)>& visit) {
    if (trivially_blocked(host.order(), red_target, blue_target)) return SearchStatus::Exact;
    const auto edges = host.edges();
    EdgeSearch s(host, red_target, blue_target, edges, cfg, cfg.node_budget);
    s.run(0, edges.size(), [&](EdgeSearch& st) { return visit(coloring_from(host, edges, st.colors())); });
    stats += s.stats();
    return s.aborted() ? SearchStatus::BudgetExhausted : SearchStatus::Exact;
}

namespace {

// Largest certified free coloring of a complete graph from the known families.
std::optional<TwoColoring> construction_seed(const TargetPattern& red_target, const TargetPattern& blue_target) {
    std::optional<TwoColoring> c;
    try {
        const auto& rv = red_target.variant();
        const auto& bv = blue_target.variant();
        const auto* fan = std::get_if<FanTarget>(&bv);
        int s = 1;
        if (const auto* cp = std::get_if<CopiesTarget>(&bv)) {
            fan = std::get_if<FanTarget>(&cp->inner);
            s = cp->s;
        }
        if (!fan) return std::nullopt;
        if (const auto* k = std::get_if<CliqueTarget>(&rv); k && k->m >= 3)
            c = multipartite_fan_coloring(k->m, s, fan->t, fan->n);
        else if (const auto* m = std::get_if<MatchingTarget>(&rv); m && s == 1)
            c = matching_fan_coloring(m->s, fan->t, fan->n);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (c && c->order() > 0 && check_free(*c, red_target, blue_target).valid()) return c;
    return std::nullopt;
}

}  // namespace

SearchResult ramsey_number(const TargetPattern& red_target, const TargetPattern& blue_target, int lo, int hi,
                           const SearchConfig& cfg) {
    if (lo < 1 || hi < lo || hi > kMaxOrder) throw Error(ErrorCode::BadParam, "need 1 <= lo <= hi <= 128");
    SearchResult result;
    int start = lo;
    if (cfg.seed_from_constructions) {
        if (auto seed = construction_seed(red_target, blue_target); seed && seed->order() + 1 > start) {
            start = seed->order() + 1;
            result.witness = std::move(seed);
        }
    }
    for (int order = start; order <= hi; ++order) {
        auto step = exists_free_coloring(complete(order), red_target, blue_target, cfg);
        result.stats += step.stats;
        if (step.status == SearchStatus::BudgetExhausted) {
            result.status = SearchStatus::BudgetExhausted;
            result.witness.reset();
            return result;
        }
        if (step.coloring) {
            result.witness = std::move(step.coloring);
            continue;
        }
        if (order == start && !result.witness && order > 1) {
            auto below = exists_free_coloring(complete(order - 1), red_target, blue_target, cfg);
            result.stats += below.stats;
            result.witness = std::move(below.coloring);
        }
        result.value = order;
        return result;
    }
    throw Error(ErrorCode::RangeError, "every order in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                           "] admits a free coloring");
}

namespace {

std::vector<std::uint8_t> full_canonical_key(const TwoColoring& c) {
    const int n = c.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
        std::vector<std::uint8_t> key;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                key.push_back(c.red_graph().adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]) ? 1 : 0);
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Largest k such that the base coloring extends to a free coloring of
// K_{r-1} plus one vertex of degree k.
class StarExtender {
public:
    StarExtender(const TargetPattern& red_target, const TargetPattern& blue_target, std::uint64_t cap)
        : red_target_(red_target), blue_target_(blue_target), cap_(cap) {}

    void extend(const TwoColoring& base) {
        base_order_ = base.order();
        const int w = base_order_;
        GraphBuilder red(w + 1);
        GraphBuilder blue(w + 1);
        for (auto [u, v] : base.red_graph().edges()) red.add_edge(u, v);
        for (auto [u, v] : base.blue_graph().edges()) blue.add_edge(u, v);
        if (contains_target(red.view(), red_target_) || contains_target(blue.view(), blue_target_)) return;
        red_ = &red;
        blue_ = &blue;
        chosen_.assign(static_cast<std::size_t>(w), -1);
        dfs(0, 0);
        red_ = blue_ = nullptr;
    }

    int best() const { return best_k_; }
    bool aborted() const { return aborted_; }
    const SearchStats& stats() const { return stats_; }
    const std::optional<TwoColoring>& witness() const { return witness_; }
    bool saturated() const { return best_k_ >= base_order_ - 1 && best_k_ >= 0; }

private:
    void dfs(int j, int k) {
        if (aborted_) return;
        if (++stats_.nodes > cap_) {
            aborted_ = true;
            return;
        }
        if (k + (base_order_ - j) <= best_k_) return;
        const int w = base_order_;
        if (j == base_order_) {
            best_k_ = k;
            record();
            return;
        }
        for (int c = kRed; c <= kBlue; ++c) {
            GraphBuilder& side = c == kRed ? *red_ : *blue_;
            side.add_edge(w, j);
            if (contains_target_through_edge(side.view(), c == kRed ? red_target_ : blue_target_, w, j)) {
                ++(c == kRed ? stats_.red_prunes : stats_.blue_prunes);
            } else {
                chosen_[static_cast<std::size_t>(j)] = c;
                dfs(j + 1, k + 1);
            }
            side.remove_edge(w, j);
            if (aborted_) return;
        }
        chosen_[static_cast<std::size_t>(j)] = -1;
        dfs(j + 1, k);
    }

    void record() {
        const int w = base_order_;
        GraphBuilder host(w + 1);
        for (int a = 0; a < w; ++a)
            for (int b = a + 1; b < w; ++b) host.add_edge(a, b);
        for (int j = 0; j < w; ++j)
            if (red_->adjacent(w, j) || blue_->adjacent(w, j)) host.add_edge(w, j);
        witness_ = TwoColoring(host.build(), red_->build());
    }

    const TargetPattern& red_target_;
    const TargetPattern& blue_target_;
    std::uint64_t cap_;
    int base_order_ = 0;
    int best_k_ = -1;
    GraphBuilder* red_ = nullptr;
    GraphBuilder* blue_ = nullptr;
    std::vector<int> chosen_;
    std::optional<TwoColoring> witness_;
    SearchStats stats_;
    bool aborted_ = false;
};

}  // namespace

SearchResult star_critical(const TargetPattern& red_target, const TargetPattern& blue_target, int r,
                           const SearchConfig& cfg) {
    if (r < 2 || r > kMaxOrder) throw Error(ErrorCode::BadParam, "need 2 <= r <= 128");
    SearchResult result;
    auto top = exists_free_coloring(complete(r), red_target, blue_target, cfg);
    result.stats += top.stats;
    if (top.status == SearchStatus::BudgetExhausted) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }
    if (top.coloring) throw Error(ErrorCode::PreconditionViolated, "K_r admits a free coloring; r is not the Ramsey number");

    const bool dedup = cfg.dedup_base_colorings && r - 1 <= kMaxDedupOrder;
    std::set<std::vector<std::uint8_t>> seen;
    StarExtender ext(red_target, blue_target, cfg.node_budget);
    const auto status = for_each_free_coloring(complete(r - 1), red_target, blue_target, cfg, result.stats,
                                               [&](const TwoColoring& base) {
                                                   if (dedup && !seen.insert(full_canonical_key(base)).second) return false;
                                                   ext.extend(base);
                                                   return ext.aborted() || ext.saturated();
                                               });
    result.stats += ext.stats();
    if (status == SearchStatus::BudgetExhausted || ext.aborted()) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }
    result.value = ext.best() + 1;
    result.witness = ext.witness();
    return result;
}

}  // namespace fanram
