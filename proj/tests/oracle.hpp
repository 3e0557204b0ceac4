#pragma once

// Brute-force references. Deliberately share nothing with the library's
// search code beyond Graph itself.

#include <cstdint>
#include <random>
#include <vector>

#include "fanram/graph.hpp"

namespace oracle {

using fanram::Graph;

inline bool extend(const Graph& host, const Graph& pat, std::vector<int>& map, std::vector<bool>& used, int next) {
    if (next == pat.order()) return true;
    for (int x = 0; x < host.order(); ++x) {
        if (used[static_cast<std::size_t>(x)]) continue;
        bool ok = true;
        for (int p = 0; p < next && ok; ++p)
            if (pat.adjacent(p, next) && !host.adjacent(map[static_cast<std::size_t>(p)], x)) ok = false;
        if (!ok) continue;
        used[static_cast<std::size_t>(x)] = true;
        map[static_cast<std::size_t>(next)] = x;
        if (extend(host, pat, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(x)] = false;
    }
    return false;
}

/// True iff pat is a (not necessarily induced) subgraph of host.
inline bool contains(const Graph& host, const Graph& pat) {
    if (pat.order() > host.order()) return false;
    std::vector<int> map(static_cast<std::size_t>(pat.order()));
    std::vector<bool> used(static_cast<std::size_t>(host.order()));
    return extend(host, pat, map, used, 0);
}

/// Subgraph of host with the edges selected by mask (bit i = edges()[i]).
inline Graph edge_subgraph(const Graph& host, const std::vector<fanram::Edge>& edges, std::uint64_t mask) {
    std::vector<fanram::Edge> keep;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (mask >> i & 1U) keep.push_back(edges[i]);
    return Graph::from_edges(host.order(), keep);
}

/// Number of red/blue colorings of host with no red `red` and no blue `blue`.
inline std::uint64_t count_free(const Graph& host, const Graph& red, const Graph& blue) {
    const auto edges = host.edges();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        const Graph r = edge_subgraph(host, edges, mask);
        const Graph b = edge_subgraph(host, edges, ~mask & ((std::uint64_t{1} << edges.size()) - 1));
        if (!contains(r, red) && !contains(b, blue)) ++count;
    }
    return count;
}

inline int ramsey(const Graph& red, const Graph& blue, int max_order) {
    for (int n = 1; n <= max_order; ++n)
        if (count_free(fanram::complete(n), red, blue) == 0) return n;
    return -1;
}

/// Least k such that every coloring of K_{r-1} plus a vertex of degree k
/// contains a red `red` or a blue `blue`.
inline int star_critical(const Graph& red, const Graph& blue, int r) {
    for (int k = 0; k <= r - 1; ++k)
        if (count_free(fanram::star_augmented(r - 1, k), red, blue) == 0) return k;
    return -1;
}

inline Graph random_graph(int order, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<fanram::Edge> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(order, edges);
}

}  // namespace oracle
