#include <unordered_set>

#include "detail.hpp"
#include "fanram/error.hpp"
#include "fanram/patterns.hpp"

namespace fanram {

namespace {

// Exact search for n disjoint K_t's. The lowest live vertex is either covered
// by a clique through it (tried in lexicographic order) or discarded.
class CliquePacker {
public:
    CliquePacker(GraphView g, int t) : g_(g), t_(t) {}

    bool solve(Bitset128 live, int need) {
        if (need == 0) return true;
        live = detail::core_reduce(g_, live, t_ - 1);
        if (live.count() < need * t_) return false;
        if (failed_.contains(key(live, need))) return false;

        const int v = live.first();
        Bitset128 rest = live;
        rest.reset(v);
        bool found = detail::enumerate_cliques(g_, rest & g_.neighbors(v), t_ - 1, [&](std::span<const int> c) {
            Bitset128 used = Bitset128::of({v});
            for (int u : c) used.set(u);
            chosen_.emplace_back();
            chosen_.back().push_back(v);
            chosen_.back().insert(chosen_.back().end(), c.begin(), c.end());
            if (solve(minus(live, used), need - 1)) return true;
            chosen_.pop_back();
            return false;
        });
        if (!found && rest.count() >= need * t_) found = solve(rest, need);
        if (!found) failed_.insert(key(live, need));
        return found;
    }

    const std::vector<std::vector<int>>& chosen() const { return chosen_; }

private:
    using Key = std::pair<Bitset128, int>;
    static Key key(Bitset128 live, int need) { return {live, need}; }

    struct PairHash {
        std::size_t operator()(const Key& k) const { return k.first.hash() * 31U + static_cast<std::size_t>(k.second); }
    };

    GraphView g_;
    int t_;
    std::vector<std::vector<int>> chosen_;
    std::unordered_set<Key, PairHash> failed_;
};

}  // namespace

std::optional<EmbeddingWitness> kt_packing(GraphView g, const Bitset128& within, int t, int n) {
    if (t < 1 || n < 1) throw Error(ErrorCode::BadParam, "packing needs t >= 1 and n >= 1");
    CliquePacker packer(g, t);
    if (!packer.solve(within & g.vertices(), n)) return std::nullopt;
    return EmbeddingWitness{packer.chosen()};
}

std::optional<EmbeddingWitness> kt_packing(const Graph& g, int t, int n) { return kt_packing(g.view(), g.vertices(), t, n); }

std::optional<EmbeddingWitness> contains_fan(GraphView g, const Bitset128& within, int t, int n) {
    if (t < 1 || n < 1) throw Error(ErrorCode::BadParam, "fan needs t >= 1 and n >= 1");
    const Bitset128 live = detail::core_reduce(g, within & g.vertices(), t);
    if (live.count() < t * n + 1) return std::nullopt;
    for (int c : live.members()) {
        const Bitset128 around = g.neighbors(c) & live;
        if (around.count() < t * n) continue;
        if (auto packing = kt_packing(g, around, t, n)) {
            EmbeddingWitness w;
            w.groups.push_back({c});
            for (auto& blade : packing->groups) w.groups.push_back(std::move(blade));
            return w;
        }
    }
    return std::nullopt;
}

std::optional<EmbeddingWitness> contains_fan(const Graph& g, int t, int n) { return contains_fan(g.view(), g.vertices(), t, n); }

}  // namespace fanram
