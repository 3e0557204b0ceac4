#include <doctest.h>

#include <random>
#include <vector>

#include "corpus.hpp"
#include "fanram/error.hpp"
#include "fanram/graph.hpp"
#include "fanram/graph6.hpp"

using namespace fanram;

namespace {

Graph multipartite(std::vector<int> parts) { return complete_multipartite(parts); }

}  // namespace

TEST_CASE("complete graphs") {
    CHECK(complete(0).order() == 0);
    CHECK(complete(0).size() == 0);
    CHECK(complete(3).size() == 3);
    const Graph k6 = complete(6);
    CHECK(k6.size() == 15);
    CHECK(degree_profile(k6).min_degree == 5);
    CHECK(degree_profile(k6).max_degree == 5);
}

TEST_CASE("order cap") {
    CHECK_NOTHROW(empty_graph(128));
    try {
        (void)complete(129);
        FAIL("expected OrderCap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderCap);
    }
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
    const std::vector<Edge> out_of_range{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), Error);
}

TEST_CASE("join") {
    const Graph f2 = join(complete(1), copies(2, complete(2)));
    CHECK(f2.order() == 5);
    CHECK(f2.size() == 6);
    CHECK(f2 == generalized_fan(2, 2));
    CHECK(join(complete(0), cycle(5)) == cycle(5));
    const Graph star = join(complete(1), complement(complete(3)));
    CHECK(star.order() == 4);
    CHECK(star.size() == 3);
    CHECK(star.degree(0) == 3);
}

TEST_CASE("copies and disjoint union") {
    const Graph m3 = copies(3, complete(2));
    CHECK(m3.order() == 6);
    CHECK(m3.size() == 3);
    CHECK(copies(1, cycle(5)) == cycle(5));
    const Graph u = disjoint_union(complete(9), complete(4));
    CHECK(u.order() == 13);
    CHECK(u.size() == 36 + 6);
    CHECK_FALSE(u.is_connected());
    CHECK(u == complement(multipartite({9, 4})));
}

TEST_CASE("generalized fans") {
    CHECK(generalized_fan(2, 1) == complete(3));
    const Graph f45 = generalized_fan(4, 5);
    CHECK(f45.order() == 21);
    CHECK(f45.size() == 50);
    CHECK(degree_profile(f45).min_degree == 4);
    const Graph f33 = generalized_fan(3, 3);
    CHECK(f33.order() == 10);
    CHECK(f33.degree(0) == 9);
    const auto p = degree_profile(generalized_fan(4, 4));
    CHECK(p.min_degree == 4);
    CHECK(p.max_degree == 16);
}

TEST_CASE("complete multipartite") {
    const Graph k94 = multipartite({9, 4});
    CHECK(k94.order() == 13);
    CHECK(k94.size() == 36);
    CHECK(multipartite({1, 1, 1}) == complete(3));
    const Graph k333 = multipartite({3, 3, 3});
    CHECK(k333.order() == 9);
    for (int v = 0; v < 9; ++v) CHECK(k333.degree(v) == 6);
    const auto p = degree_profile(k94);
    CHECK(p.min_degree == 4);
    CHECK(p.max_degree == 9);
    CHECK_THROWS_AS(multipartite({3, 0}), Error);
}

TEST_CASE("star augmented") {
    const Graph s = star_augmented(5, 4);
    CHECK(s.order() == 6);
    CHECK(s.size() == 14);
    CHECK(star_augmented(5, 5) == complete(6));
    const Graph big = star_augmented(32, 20);
    CHECK(big.order() == 33);
    CHECK(big.degree(32) == 20);
}

TEST_CASE("complement") {
    CHECK(complement(complete(5)) == empty_graph(5));
    CHECK(complement(complement(cycle(5))) == cycle(5));
    CHECK(complement(multipartite({9, 4})) == disjoint_union(complete(9), complete(4)));
}

TEST_CASE("degree profile rejects the empty graph") {
    CHECK_THROWS_AS(degree_profile(complete(0)), Error);
}

TEST_CASE("induced subgraph relabels in ascending order") {
    const Graph c = cycle(6);
    const Graph p = c.induced(VertexSet::of({0, 1, 2, 4}));
    CHECK(p.order() == 4);
    CHECK(p.adjacent(0, 1));
    CHECK(p.adjacent(1, 2));
    CHECK_FALSE(p.adjacent(2, 3));
    CHECK(p.size() == 2);
}

TEST_CASE("graph6 known strings") {
    CHECK(graph6::encode(complete(5)) == "D~{");
    CHECK(graph6::decode("D~{") == complete(5));
    CHECK(graph6::encode(complete(0)) == "?");
    CHECK(graph6::decode("?").order() == 0);
    CHECK(graph6::encode(complete(63)).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 round-trip on the corpus") {
    for (const Graph& g : corpus::graphs(62, 300, 7)) {
        const std::string s = graph6::encode(g);
        CHECK(s.front() != '~');
        CHECK(graph6::decode(s) == g);
    }
    for (const Graph& g : corpus::graphs(128, 100, 8)) CHECK(graph6::decode(graph6::encode(g)) == g);
    for (int n : {63, 100, 128}) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const std::string s = graph6::encode(g);
        CHECK(s.front() == '~');
        CHECK(graph6::decode(s) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(graph6::decode(""), ParseError);
    CHECK_THROWS_AS(graph6::decode("D~"), ParseError);
    CHECK_THROWS_AS(graph6::decode("D~{?"), ParseError);
    CHECK_THROWS_AS(graph6::decode("D~\x01"), ParseError);
    CHECK_THROWS_AS(graph6::decode("D~|"), ParseError);  // nonzero padding
    try {
        (void)graph6::decode("~?BA");
        FAIL("expected OrderCap");
    } catch (const ParseError&) {
        FAIL("wrong error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderCap);
    }
}
