#include <algorithm>

#include "detail.hpp"
#include "fanram/error.hpp"
#include "fanram/patterns.hpp"

namespace fanram {

namespace detail {

int greedy_color_bound(GraphView g, Bitset128 p) {
    int colors = 0;
    while (p.any()) {
        ++colors;
        Bitset128 q = p;
        while (q.any()) {
            const int v = q.pop_first();
            p.reset(v);
            q.subtract(g.neighbors(v));
        }
    }
    return colors;
}

Bitset128 core_reduce(GraphView g, Bitset128 within, int k) {
    if (k <= 0) return within;
    bool changed = true;
    while (changed) {
        changed = false;
        Bitset128 drop;
        within.for_each([&](int v) {
            if ((g.neighbors(v) & within).count() < k) drop.set(v);
        });
        if (drop.any()) {
            within.subtract(drop);
            changed = true;
        }
    }
    return within;
}

std::vector<Bitset128> components(GraphView g, Bitset128 within) {
    std::vector<Bitset128> out;
    while (within.any()) {
        Bitset128 comp = Bitset128::of({within.first()});
        Bitset128 frontier = comp;
        while (frontier.any()) {
            Bitset128 next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= within;
            next.subtract(comp);
            comp |= next;
            frontier = next;
        }
        within.subtract(comp);
        out.push_back(comp);
    }
    return out;
}

namespace {

bool clique_rec(GraphView g, Bitset128 p, int k, std::vector<int>& cur,
                const std::function<bool(std::span<const int>)>& visit) {
    if (k == 0) return visit(cur);
    if (p.count() < k) return false;
    if (k >= 3 && greedy_color_bound(g, p) < k) return false;
    while (p.count() >= k) {
        const int v = p.pop_first();
        cur.push_back(v);
        if (clique_rec(g, p & g.neighbors(v), k - 1, cur, visit)) return true;
        cur.pop_back();
    }
    return false;
}

}  // namespace

bool enumerate_cliques(GraphView g, Bitset128 within, int k,
                       const std::function<bool(std::span<const int>)>& visit) {
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(std::max(k, 0)));
    return clique_rec(g, within & g.vertices(), k, cur, visit);
}

}  // namespace detail

std::optional<EmbeddingWitness> contains_clique(GraphView g, int m) {
    if (m < 1) throw Error(ErrorCode::BadParam, "clique size must be >= 1");
    std::optional<EmbeddingWitness> out;
    detail::enumerate_cliques(g, g.vertices(), m, [&](std::span<const int> c) {
        out = EmbeddingWitness{{std::vector<int>(c.begin(), c.end())}};
        return true;
    });
    return out;
}

std::optional<EmbeddingWitness> contains_clique(const Graph& g, int m) { return contains_clique(g.view(), m); }

namespace {

void max_clique_rec(GraphView g, Bitset128 p, std::vector<int>& cur, std::vector<int>& best) {
    if (p.empty()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    while (p.any()) {
        if (cur.size() + static_cast<std::size_t>(detail::greedy_color_bound(g, p)) <= best.size()) return;
        const int v = p.pop_first();
        cur.push_back(v);
        max_clique_rec(g, p & g.neighbors(v), cur, best);
        cur.pop_back();
    }
    if (cur.size() > best.size()) best = cur;
}

}  // namespace

std::vector<int> max_clique(GraphView g, const Bitset128& within) {
    std::vector<int> cur;
    std::vector<int> best;
    max_clique_rec(g, within & g.vertices(), cur, best);
    return best;
}

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g.view(), g.vertices()).size()); }

int independence_number(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::BadParam, "independence number of the empty graph");
    return clique_number(complement(g));
}

}  // namespace fanram
