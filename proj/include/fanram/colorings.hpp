#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "fanram/graph.hpp"
#include "fanram/patterns.hpp"

namespace fanram {

/// Red/blue coloring of the edges of a host graph. Blue is host minus red.
class TwoColoring {
public:
    /// Throws BadParam unless red is a spanning subgraph of host.
    TwoColoring(Graph host, Graph red);

    /// Red = all host edges (or none).
    static TwoColoring all_red(Graph host);
    static TwoColoring all_blue(Graph host);

    const Graph& host() const { return host_; }
    const Graph& red_graph() const { return red_; }
    const Graph& blue_graph() const { return blue_; }
    int order() const { return host_.order(); }

    friend bool operator==(const TwoColoring& a, const TwoColoring& b) { return a.host_ == b.host_ && a.red_ == b.red_; }

private:
    Graph host_;
    Graph red_;
    Graph blue_;
};

/// Result of checking a coloring against a red and a blue target.
struct Certificate {
    TwoColoring coloring;
    TargetPattern red_target;
    TargetPattern blue_target;
    std::optional<EmbeddingWitness> red_violation;
    std::optional<EmbeddingWitness> blue_violation;
    std::string content_hash;

    bool valid() const { return !red_violation && !blue_violation; }

    /// Canonical text: fixed field order, graph6 graphs, trailing hash line.
    std::string serialize() const;

    /// Parses, re-runs check_free and throws CorruptRecord if verdicts or hash differ.
    static Certificate deserialize(std::string_view text);
};

Certificate check_free(const TwoColoring& c, const TargetPattern& red_target, const TargetPattern& blue_target);

/// Blue = (chi-1) K_{h_order-1} plus a trailing K_{surplus-1}; red = complement.
TwoColoring burr_coloring(int chi, int surplus, int h_order);

/// Red = complete multipartite with a leading part of size (tn+1)s-1 and
/// m-2 parts of size tn. Avoids red K_m and blue sF_{t,n}.
TwoColoring multipartite_fan_coloring(int m, int s, int t, int n);

/// Avoids red sK_2 and blue F_{t,n}: red K_{tn,s-1} when n >= s, otherwise
/// red = (t-1)n isolated vertices followed by K_{2s-1}.
TwoColoring matching_fan_coloring(int s, int t, int n);

/// For a (K_3, F_{4,n})-free coloring of K_{8n} with n >= 4, returns two
/// disjoint vertex sets of size 4n that each induce a blue clique.
/// Throws PreconditionViolated on bad input, StructureNotFound otherwise.
std::pair<VertexSet, VertexSet> find_two_blue_cliques(const TwoColoring& c, int n);

}  // namespace fanram
