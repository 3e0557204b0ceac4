#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fanram/bitset.hpp"

namespace fanram {

/// Read-only adjacency view. Oracles work on views so that the search can
/// hand them its mutable partial colorings without copying.
struct GraphView {
    int order = 0;
    std::span<const Bitset128> rows;

    bool adjacent(int u, int v) const { return rows[static_cast<std::size_t>(u)].test(v); }
    const Bitset128& neighbors(int v) const { return rows[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).count(); }
    Bitset128 vertices() const { return Bitset128::prefix(order); }
};

using Edge = std::pair<int, int>;

/// Undirected simple graph on at most 128 vertices. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws OrderCap if order > 128, BadParam on loops or out-of-range endpoints.
    static Graph from_edges(int order, std::span<const Edge> edges);
    static Graph from_rows(int order, std::vector<Bitset128> rows);

    int order() const { return order_; }
    std::size_t size() const;

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    const Bitset128& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).count(); }
    Bitset128 vertices() const { return Bitset128::prefix(order_); }

    GraphView view() const { return GraphView{order_, rows_}; }
    std::span<const Bitset128> rows() const { return rows_; }

    /// Edges (u,v), u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep`, relabeled 0..|keep|-1 in ascending vertex order.
    Graph induced(const VertexSet& keep) const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int order_ = 0;
    std::vector<Bitset128> rows_;
};

/// Mutable adjacency, used by constructors and by search state.
class GraphBuilder {
public:
    explicit GraphBuilder(int order);

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    int order() const { return order_; }
    GraphView view() const { return GraphView{order_, rows_}; }
    Graph build() const { return Graph::from_rows(order_, rows_); }

private:
    int order_;
    std::vector<Bitset128> rows_;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degrees;
};

Graph complete(int n);
Graph empty_graph(int n);
Graph cycle(int n);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph copies(int s, const Graph& g);
/// K_1 + nK_t with the center at vertex 0 and blade i on 1+it .. (i+1)t.
Graph generalized_fan(int t, int n);
Graph complete_multipartite(std::span<const int> parts);
/// K_base plus vertex `base` joined to vertices 0..k-1.
Graph star_augmented(int base, int k);
Graph complement(const Graph& g);
DegreeProfile degree_profile(const Graph& g);

}  // namespace fanram
