#include <algorithm>
#include <unordered_set>

#include "detail.hpp"
#include "fanram/error.hpp"
#include "fanram/patterns.hpp"

namespace fanram {

namespace detail {

namespace {

struct EmbedPlan {
    std::vector<int> order;                     // pattern vertices in placement order
    std::vector<std::vector<int>> earlier_nbrs;  // positions of already-placed pattern neighbors
};

EmbedPlan plan_for(const Graph& pattern, std::span<const Pin> pins) {
    const int p = pattern.order();
    EmbedPlan plan;
    std::vector<bool> placed(static_cast<std::size_t>(p), false);
    for (auto [q, h] : pins) {
        (void)h;
        if (q < 0 || q >= p || placed[static_cast<std::size_t>(q)]) throw Error(ErrorCode::BadParam, "invalid pin");
        placed[static_cast<std::size_t>(q)] = true;
        plan.order.push_back(q);
    }
    while (static_cast<int>(plan.order.size()) < p) {
        int best = -1;
        int best_links = -1;
        int best_deg = -1;
        for (int q = 0; q < p; ++q) {
            if (placed[static_cast<std::size_t>(q)]) continue;
            int links = 0;
            for (int o : plan.order) links += pattern.adjacent(q, o) ? 1 : 0;
            const int deg = pattern.degree(q);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = q;
                best_links = links;
                best_deg = deg;
            }
        }
        placed[static_cast<std::size_t>(best)] = true;
        plan.order.push_back(best);
    }
    plan.earlier_nbrs.resize(plan.order.size());
    for (std::size_t i = 0; i < plan.order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pattern.adjacent(plan.order[i], plan.order[j])) plan.earlier_nbrs[i].push_back(static_cast<int>(j));
    return plan;
}

}  // namespace

bool enumerate_embeddings(GraphView g, Bitset128 within, const Graph& pattern, std::span<const Pin> pins,
                          const std::function<bool(std::span<const int>)>& visit) {
    within &= g.vertices();
    const int p = pattern.order();
    std::vector<int> map(static_cast<std::size_t>(p), -1);
    if (p == 0) return visit(map);
    if (within.count() < p) return false;

    const EmbedPlan plan = plan_for(pattern, pins);
    std::vector<int> host_deg(static_cast<std::size_t>(g.order), 0);
    within.for_each([&](int v) { host_deg[static_cast<std::size_t>(v)] = (g.neighbors(v) & within).count(); });

    std::function<bool(std::size_t, Bitset128)> rec = [&](std::size_t i, Bitset128 free) -> bool {
        if (i == plan.order.size()) return visit(map);
        const int q = plan.order[i];
        Bitset128 cand = free;
        for (int j : plan.earlier_nbrs[i]) cand &= g.neighbors(map[static_cast<std::size_t>(plan.order[static_cast<std::size_t>(j)])]);
        if (i < pins.size()) {
            const int h = pins[i].second;
            if (h < 0 || h >= g.order || !cand.test(h)) return false;
            cand = Bitset128::of({h});
        }
        const int need_deg = pattern.degree(q);
        for (Bitset128 it = cand; it.any();) {
            const int h = it.pop_first();
            if (host_deg[static_cast<std::size_t>(h)] < need_deg) continue;
            map[static_cast<std::size_t>(q)] = h;
            Bitset128 next = free;
            next.reset(h);
            if (rec(i + 1, next)) return true;
        }
        map[static_cast<std::size_t>(q)] = -1;
        return false;
    };
    return rec(0, within);
}

}  // namespace detail

std::optional<EmbeddingWitness> embed_explicit(GraphView g, const Graph& pattern) {
    std::optional<EmbeddingWitness> out;
    detail::enumerate_embeddings(g, g.vertices(), pattern, {}, [&](std::span<const int> map) {
        out = EmbeddingWitness{{std::vector<int>(map.begin(), map.end())}};
        return true;
    });
    return out;
}

std::optional<EmbeddingWitness> embed_explicit(const Graph& g, const Graph& pattern) { return embed_explicit(g.view(), pattern); }

namespace {

// Disjoint copies of an arbitrary inner graph. The lowest live vertex is
// either inside some copy (enumerated by image set) or unused.
class CopyPacker {
public:
    CopyPacker(GraphView g, Graph inner)
        : g_(g), inner_(std::move(inner)), p_(inner_.order()), connected_(inner_.is_connected()) {
        min_deg_ = p_ > 0 ? degree_profile(inner_).min_degree : 0;
    }

    bool solve(Bitset128 live, int need) {
        if (need == 0) return true;
        live = detail::core_reduce(g_, live, min_deg_);
        if (live.count() < need * p_) return false;
        if (connected_) {
            int capacity = 0;
            for (const auto& comp : detail::components(g_, live)) capacity += comp.count() / p_;
            if (capacity < need) return false;
        }
        if (failed_.contains({live, need})) return false;

        const int v = live.first();
        std::unordered_set<Bitset128, Bitset128Hash> tried;
        bool found = false;
        for (int q = 0; q < p_ && !found; ++q) {
            const detail::Pin pin{q, v};
            found = detail::enumerate_embeddings(g_, live, inner_, std::span(&pin, 1), [&](std::span<const int> map) {
                Bitset128 image;
                for (int h : map) image.set(h);
                if (!tried.insert(image).second) return false;
                chosen_.emplace_back(map.begin(), map.end());
                if (solve(minus(live, image), need - 1)) return true;
                chosen_.pop_back();
                return false;
            });
        }
        Bitset128 rest = live;
        rest.reset(v);
        if (!found && rest.count() >= need * p_) found = solve(rest, need);
        if (!found) failed_.insert({live, need});
        return found;
    }

    const std::vector<std::vector<int>>& chosen() const { return chosen_; }

private:
    using Key = std::pair<Bitset128, int>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.first.hash() * 31U + static_cast<std::size_t>(k.second); }
    };

    GraphView g_;
    Graph inner_;
    int p_;
    bool connected_;
    int min_deg_ = 0;
    std::vector<std::vector<int>> chosen_;
    std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

std::optional<EmbeddingWitness> contains_copies(GraphView g, int s, const TargetPattern& inner) {
    if (s < 1) throw Error(ErrorCode::BadParam, "copy count must be >= 1");
    const auto& v = inner.variant();
    if (std::holds_alternative<MatchingTarget>(v) || std::holds_alternative<CopiesTarget>(v))
        throw Error(ErrorCode::BadParam, "inner pattern of copies must be a clique, fan, or explicit graph");
    if (s == 1) return contains_target(g, inner);
    if (const auto* c = std::get_if<CliqueTarget>(&v)) return kt_packing(g, g.vertices(), c->m, s);

    CopyPacker packer(g, inner.graph());
    if (!packer.solve(g.vertices(), s)) return std::nullopt;
    return EmbeddingWitness{packer.chosen()};
}

std::optional<EmbeddingWitness> contains_copies(const Graph& g, int s, const TargetPattern& inner) {
    return contains_copies(g.view(), s, inner);
}

}  // namespace fanram
