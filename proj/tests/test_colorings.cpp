#include <doctest.h>

#include <vector>

#include "fanram/colorings.hpp"
#include "fanram/error.hpp"
#include "fanram/graph6.hpp"

using namespace fanram;

namespace {

Graph multipartite(std::vector<int> parts) { return complete_multipartite(parts); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("two-colorings") {
    const TwoColoring c(complete(5), cycle(5));
    CHECK(c.blue_graph() == complement(cycle(5)));
    CHECK(TwoColoring::all_red(complete(4)).blue_graph().size() == 0);
    CHECK(TwoColoring::all_blue(complete(4)).red_graph().size() == 0);
    CHECK(code_of([] { TwoColoring bad(cycle(5), complete(5)); }) == ErrorCode::BadParam);
}

TEST_CASE("check_free") {
    const auto k3 = TargetPattern::clique(3);
    CHECK(check_free(TwoColoring(complete(5), cycle(5)), k3, k3).valid());
    const auto red = check_free(TwoColoring::all_red(complete(3)), k3, TargetPattern::fan(4, 4));
    CHECK_FALSE(red.valid());
    REQUIRE(red.red_violation);
    CHECK_FALSE(red.blue_violation);
    CHECK(check_free(burr_coloring(3, 1, 17), k3, TargetPattern::fan(4, 4)).valid());
    CHECK(check_free(burr_coloring(3, 1, 10), k3, TargetPattern::fan(3, 3)).valid());
}

TEST_CASE("burr coloring") {
    const auto c = burr_coloring(3, 1, 17);
    CHECK(c.order() == 32);
    CHECK(c.blue_graph() == copies(2, complete(16)));
    const auto two = burr_coloring(2, 1, 6);
    CHECK(two.order() == 5);
    CHECK(two.red_graph().size() == 0);
    CHECK(burr_coloring(3, 2, 5).order() == 9);
}

TEST_CASE("multipartite fan coloring") {
    const auto c = multipartite_fan_coloring(3, 2, 2, 2);
    CHECK(c.order() == 13);
    CHECK(c.red_graph() == multipartite({9, 4}));
    CHECK(check_free(c, TargetPattern::clique(3), parse_target("2xF:2,2")).valid());
    // Coincides with the Burr coloring at s = 1, t = 4.
    const auto m = multipartite_fan_coloring(3, 1, 4, 4);
    CHECK(m.order() == 32);
    CHECK(m == burr_coloring(3, 1, 17));
    const auto d = multipartite_fan_coloring(4, 1, 2, 3);
    CHECK(d.order() == 18);
    CHECK(check_free(d, TargetPattern::clique(4), TargetPattern::fan(2, 3)).valid());
}

TEST_CASE("matching fan coloring") {
    const auto case1 = matching_fan_coloring(2, 2, 2);
    CHECK(case1.order() == 5);
    CHECK(case1.red_graph() == multipartite({4, 1}));
    CHECK(check_free(case1, TargetPattern::matching(2), TargetPattern::fan(2, 2)).valid());
    const auto case2 = matching_fan_coloring(2, 2, 1);
    CHECK(case2.order() == 4);
    CHECK(case2.red_graph() == disjoint_union(empty_graph(1), complete(3)));
    CHECK(case2.blue_graph() == multipartite({1, 3}));
    CHECK(check_free(case2, TargetPattern::matching(2), TargetPattern::fan(2, 1)).valid());
    const auto trivial = matching_fan_coloring(1, 3, 2);
    CHECK(trivial.order() == 6);
    CHECK(trivial.blue_graph() == complete(6));
    CHECK(check_free(trivial, TargetPattern::matching(1), TargetPattern::fan(3, 2)).valid());
}

TEST_CASE("two blue cliques") {
    const auto [a, b] = find_two_blue_cliques(burr_coloring(3, 1, 17), 4);
    CHECK(a == VertexSet::prefix(16));
    CHECK(b == minus(VertexSet::prefix(32), VertexSet::prefix(16)));
    CHECK(code_of([] { (void)find_two_blue_cliques(TwoColoring::all_red(complete(32)), 4); }) ==
          ErrorCode::PreconditionViolated);
    CHECK(code_of([] { (void)find_two_blue_cliques(burr_coloring(3, 1, 13), 3); }) ==
          ErrorCode::PreconditionViolated);
    CHECK(code_of([] { (void)find_two_blue_cliques(burr_coloring(3, 1, 21), 4); }) ==
          ErrorCode::PreconditionViolated);
}

TEST_CASE("certificate round-trip") {
    const auto cert = check_free(multipartite_fan_coloring(3, 2, 2, 2), TargetPattern::clique(3), parse_target("2xF:2,2"));
    const std::string text = cert.serialize();
    const auto back = Certificate::deserialize(text);
    CHECK(back.content_hash == cert.content_hash);
    CHECK(back.coloring == cert.coloring);
    CHECK(back.serialize() == text);
    CHECK(cert.content_hash.size() == 64);

    const auto bad = check_free(TwoColoring::all_red(complete(4)), TargetPattern::clique(3), TargetPattern::clique(3));
    CHECK(Certificate::deserialize(bad.serialize()).red_violation);

    // Flip one byte of the red graph line.
    std::string corrupt = text;
    const auto pos = corrupt.find("\nred ");
    REQUIRE(pos != std::string::npos);
    corrupt[pos + 6] = corrupt[pos + 6] == '?' ? '@' : '?';
    CHECK(code_of([&] { (void)Certificate::deserialize(corrupt); }) != ErrorCode::IoError);
}
