#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fanram/graph.hpp"

namespace fanram::detail {

/// Colors used by greedy sequential coloring of g[p]; an upper bound on ω(g[p]).
int greedy_color_bound(GraphView g, Bitset128 p);

/// Iteratively drop vertices with fewer than k neighbors inside the set.
Bitset128 core_reduce(GraphView g, Bitset128 within, int k);

/// Connected components of g[within], ascending by lowest vertex.
std::vector<Bitset128> components(GraphView g, Bitset128 within);

/// Calls visit on every k-clique inside `within` in lexicographic order until
/// visit returns true. Returns whether some visit returned true.
bool enumerate_cliques(GraphView g, Bitset128 within, int k,
                       const std::function<bool(std::span<const int>)>& visit);

using Pin = std::pair<int, int>;  // pattern vertex -> host vertex

/// Enumerates embeddings of `pattern` into g[within] honoring `pins`. visit
/// receives map[pattern vertex] = host vertex and returns true to stop.
bool enumerate_embeddings(GraphView g, Bitset128 within, const Graph& pattern, std::span<const Pin> pins,
                          const std::function<bool(std::span<const int>)>& visit);

}  // namespace fanram::detail
