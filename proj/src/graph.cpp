#include "fanram/graph.hpp"

#include <algorithm>
#include <string>

#include "fanram/error.hpp"

namespace fanram {

namespace {

void check_order(long long n) {
    if (n < 0) throw Error(ErrorCode::BadParam, "negative order");
    if (n > kMaxOrder)
        throw Error(ErrorCode::OrderCap, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

}  // namespace

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OrderCap: return "OrderCap";
        case ErrorCode::BadParam: return "BadParam";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::StructureNotFound: return "StructureNotFound";
        case ErrorCode::UnknownFormula: return "UnknownFormula";
        case ErrorCode::MissingParam: return "MissingParam";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::SamplingFailure: return "SamplingFailure";
        case ErrorCode::CorruptRecord: return "CorruptRecord";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    GraphBuilder b(order);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_rows(int order, std::vector<Bitset128> rows) {
    check_order(order);
    if (rows.size() != static_cast<std::size_t>(order))
        throw Error(ErrorCode::BadParam, "row count does not match order");
    const Bitset128 all = Bitset128::prefix(order);
    for (int v = 0; v < order; ++v) {
        const auto& r = rows[static_cast<std::size_t>(v)];
        if (r.test(v)) throw Error(ErrorCode::BadParam, "self-loop at " + std::to_string(v));
        if (!r.is_subset_of(all)) throw Error(ErrorCode::BadParam, "neighbor out of range");
        for (int u : r.members())
            if (!rows[static_cast<std::size_t>(u)].test(v))
                throw Error(ErrorCode::BadParam, "asymmetric adjacency");
    }
    Graph g;
    g.order_ = order;
    g.rows_ = std::move(rows);
    return g;
}

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::size_t>(r.count());
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order_; ++u)
        for (int v : neighbors(u).members())
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& keep) const {
    const auto vs = (keep & vertices()).members();
    GraphBuilder b(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

bool Graph::is_connected() const {
    if (order_ == 0) return true;
    Bitset128 seen = Bitset128::of({0});
    Bitset128 frontier = seen;
    while (frontier.any()) {
        Bitset128 next;
        frontier.for_each([&](int v) { next |= neighbors(v); });
        next.subtract(seen);
        seen |= next;
        frontier = next;
    }
    return seen.count() == order_;
}

GraphBuilder::GraphBuilder(int order) : order_(order) {
    check_order(order);
    rows_.resize(static_cast<std::size_t>(order));
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw Error(ErrorCode::BadParam, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::BadParam, "self-loop at " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
}

void GraphBuilder::remove_edge(int u, int v) {
    rows_[static_cast<std::size_t>(u)].reset(v);
    rows_[static_cast<std::size_t>(v)].reset(u);
}

Graph complete(int n) {
    check_order(n);
    std::vector<Bitset128> rows(static_cast<std::size_t>(n));
    const Bitset128 all = Bitset128::prefix(n);
    for (int v = 0; v < n; ++v) {
        rows[static_cast<std::size_t>(v)] = all;
        rows[static_cast<std::size_t>(v)].reset(v);
    }
    return Graph::from_rows(n, std::move(rows));
}

Graph empty_graph(int n) {
    check_order(n);
    return Graph::from_rows(n, std::vector<Bitset128>(static_cast<std::size_t>(n)));
}

Graph cycle(int n) {
    if (n < 3) throw Error(ErrorCode::BadParam, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph join(const Graph& g1, const Graph& g2) {
    const int a = g1.order();
    check_order(static_cast<long long>(a) + g2.order());
    GraphBuilder b(a + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(a + u, a + v);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < g2.order(); ++v) b.add_edge(u, a + v);
    return b.build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int a = g1.order();
    check_order(static_cast<long long>(a) + g2.order());
    GraphBuilder b(a + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(a + u, a + v);
    return b.build();
}

Graph copies(int s, const Graph& g) {
    if (s < 0) throw Error(ErrorCode::BadParam, "negative copy count");
    check_order(static_cast<long long>(s) * g.order());
    Graph out = empty_graph(0);
    for (int i = 0; i < s; ++i) out = disjoint_union(out, g);
    return out;
}

Graph generalized_fan(int t, int n) {
    if (t <= 0 || n <= 0) throw Error(ErrorCode::BadParam, "generalized fan needs t >= 1 and n >= 1");
    check_order(static_cast<long long>(t) * n + 1);
    return join(complete(1), copies(n, complete(t)));
}

Graph complete_multipartite(std::span<const int> parts) {
    long long total = 0;
    for (int p : parts) {
        if (p < 1) throw Error(ErrorCode::BadParam, "empty part in complete multipartite graph");
        total += p;
    }
    check_order(total);
    const int n = static_cast<int>(total);
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) b.add_edge(u, v);
    return b.build();
}

Graph star_augmented(int base, int k) {
    if (k < 0 || k > base) throw Error(ErrorCode::BadParam, "star size must satisfy 0 <= k <= base");
    check_order(static_cast<long long>(base) + 1);
    GraphBuilder b(base + 1);
    for (int u = 0; u < base; ++u)
        for (int v = u + 1; v < base; ++v) b.add_edge(u, v);
    for (int v = 0; v < k; ++v) b.add_edge(base, v);
    return b.build();
}

Graph complement(const Graph& g) {
    const int n = g.order();
    const Bitset128 all = Bitset128::prefix(n);
    std::vector<Bitset128> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        rows[static_cast<std::size_t>(v)] = minus(all, g.neighbors(v));
        rows[static_cast<std::size_t>(v)].reset(v);
    }
    return Graph::from_rows(n, std::move(rows));
}

DegreeProfile degree_profile(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::BadParam, "degree profile of the empty graph");
    DegreeProfile p;
    p.degrees.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
    p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    return p;
}

}  // namespace fanram
