#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fanram/graph.hpp"

namespace fanram {

struct CliqueTarget {
    int m;
};
struct FanTarget {
    int t;
    int n;
};
struct MatchingTarget {
    int s;
};
struct ExplicitTarget {
    Graph graph;
};
/// s vertex-disjoint copies of a clique, fan, or explicit graph.
struct CopiesTarget {
    int s;
    std::variant<CliqueTarget, FanTarget, ExplicitTarget> inner;
};

/// What a red or blue side must avoid. Constructed only through the factories,
/// which normalize Copies(a, Copies(b, x)) to Copies(ab, x), Copies(a, M_b) to
/// M_ab and Copies(1, x) to x.
class TargetPattern {
public:
    using Variant = std::variant<CliqueTarget, FanTarget, MatchingTarget, CopiesTarget, ExplicitTarget>;

    static TargetPattern clique(int m);
    static TargetPattern fan(int t, int n);
    static TargetPattern matching(int s);
    static TargetPattern explicit_graph(Graph g);
    static TargetPattern copies(int s, const TargetPattern& inner);

    const Variant& variant() const { return v_; }

    /// Number of vertices of the underlying graph.
    int order() const;
    /// The pattern as a labeled graph, matching EmbeddingWitness::flat() order.
    Graph graph() const;
    std::string to_string() const;

    friend bool operator==(const TargetPattern& a, const TargetPattern& b) { return a.to_string() == b.to_string(); }

private:
    explicit TargetPattern(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Grammar: "K<m>" | "F:<t>,<n>" | "M:<s>" | "G6:<graph6>" | "<s>x" prefix on
/// any of the above. Throws ParseError (zero counts included).
TargetPattern parse_target(std::string_view text);

/// Host vertices grouped by pattern component (fan: center then blades;
/// matching: edges; packing: cliques). flat() follows TargetPattern::graph() labels.
struct EmbeddingWitness {
    std::vector<std::vector<int>> groups;

    int pattern_order() const;
    std::vector<int> flat() const;
};

/// Injective, in range, and every pattern edge lands on a host edge.
bool validate_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& w);

std::optional<EmbeddingWitness> contains_clique(GraphView g, int m);
std::optional<EmbeddingWitness> contains_clique(const Graph& g, int m);
/// A maximum clique, lexicographically first among maximum ones found by branch and bound.
std::vector<int> max_clique(GraphView g, const Bitset128& within);
int clique_number(const Graph& g);
int independence_number(const Graph& g);

EmbeddingWitness max_matching(GraphView g);
EmbeddingWitness max_matching(const Graph& g);

std::optional<EmbeddingWitness> kt_packing(GraphView g, const Bitset128& within, int t, int n);
std::optional<EmbeddingWitness> kt_packing(const Graph& g, int t, int n);

std::optional<EmbeddingWitness> contains_fan(GraphView g, const Bitset128& within, int t, int n);
std::optional<EmbeddingWitness> contains_fan(const Graph& g, int t, int n);

/// Throws BadParam for Matching or Copies inner patterns.
std::optional<EmbeddingWitness> contains_copies(const Graph& g, int s, const TargetPattern& inner);
std::optional<EmbeddingWitness> contains_copies(GraphView g, int s, const TargetPattern& inner);

/// Generic backtracking (non-induced) subgraph embedding.
std::optional<EmbeddingWitness> embed_explicit(GraphView g, const Graph& pattern);
std::optional<EmbeddingWitness> embed_explicit(const Graph& g, const Graph& pattern);

std::optional<EmbeddingWitness> contains_target(GraphView g, const TargetPattern& p);
std::optional<EmbeddingWitness> contains_target(const Graph& g, const TargetPattern& p);

/// True iff g contains p through an embedding that uses edge (u,v). Exact
/// when g minus (u,v) does not contain p; used for incremental search checks.
bool contains_target_through_edge(GraphView g, const TargetPattern& p, int u, int v);

}  // namespace fanram
