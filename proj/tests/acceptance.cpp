// One line per acceptance criterion. Tolerances are wall-clock limits and
// exact equalities; nothing here is relaxed relative to the stated targets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "fanram/bounds.hpp"
#include "fanram/cli.hpp"
#include "fanram/colorings.hpp"
#include "fanram/graph6.hpp"
#include "fanram/patterns.hpp"
#include "fanram/search.hpp"

using namespace fanram;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= limit_seconds) o.require(false, "runtime over limit");
    if (!o.ok) ++failures;
    std::printf("%s %d %-36s %8.3fs (limit %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, limit_seconds,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

std::string report(const SearchResult& r) { return cli::search_json(r).dump(); }

long long formula(std::string_view id, std::map<std::string, long long> params) { return closed_formula(id, params).value; }

}  // namespace

int main() {
    criterion(1, "construction grid certification", 300, [](Outcome& o) {
        int certified = 0;
        for (int m : {3, 4})
            for (int s : {1, 2})
                for (int t : {2, 3, 4})
                    for (int n = 1; n <= 4; ++n) {
                        const int order = t * n * (m + s - 2) + s - 1;
                        if (order > kMaxOrder) continue;
                        const auto c = multipartite_fan_coloring(m, s, t, n);
                        const auto cert = check_free(c, TargetPattern::clique(m),
                                                     TargetPattern::copies(s, TargetPattern::fan(t, n)));
                        const std::string tag = std::to_string(m) + "," + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(n);
                        o.require(c.order() == order, "order mismatch at " + tag);
                        o.require(cert.valid(), "not free at " + tag);
                        ++certified;
                    }
        o.require(certified == 48, "grid incomplete");
    });

    criterion(2, "burr coloring certification", 120, [](Outcome& o) {
        for (int n = 4; n <= 15; ++n) {
            const auto c = burr_coloring(3, 1, 4 * n + 1);
            o.require(c.order() == 8 * n, "order at n=" + std::to_string(n));
            o.require(check_free(c, TargetPattern::clique(3), TargetPattern::fan(4, n)).valid(), "not free at n=" + std::to_string(n));
            const auto [a, b] = find_two_blue_cliques(c, n);
            o.require(a.count() == 4 * n && b.count() == 4 * n && (a & b).empty(), "clique audit at n=" + std::to_string(n));
        }
    });

    criterion(3, "exhaustive exact Ramsey values", 60 * 4, [](Outcome& o) {
        SearchConfig cfg;
        cfg.thread_count_hint = 4;
        SearchConfig unseeded = cfg;
        unseeded.seed_from_constructions = false;
        const auto timed = [&](const TargetPattern& red, const TargetPattern& blue, int hi) {
            const auto start = std::chrono::steady_clock::now();
            auto r = ramsey_number(red, blue, 3, hi, cfg);
            // The lower side must also hold without construction seeding.
            o.require(ramsey_number(red, blue, 3, hi, unseeded).value == r.value, "unseeded search disagrees");
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            o.require(secs < 60, red.to_string() + " vs " + blue.to_string() + " over 60s");
            o.require(r.status == SearchStatus::Exact && r.value, "inexact " + red.to_string() + " vs " + blue.to_string());
            return r;
        };
        const auto k33 = timed(TargetPattern::clique(3), TargetPattern::clique(3), 8);
        o.require(k33.value == 6, "R(K3,K3)");
        o.require(k33.witness && k33.witness->order() == 5, "R(K3,K3) witness");
        for (auto [s, t, n] : std::vector<std::array<int, 3>>{{2, 2, 1}, {3, 2, 1}, {2, 2, 2}}) {
            const auto red = TargetPattern::matching(s);
            const auto blue = TargetPattern::fan(t, n);
            const auto r = timed(red, blue, 10);
            const long long expected = formula("lem2.7", {{"s", s}, {"t", t}, {"n", n}});
            o.require(r.value == expected, "value differs from formula for " + red.to_string() + " vs " + blue.to_string());
            const auto construction = matching_fan_coloring(s, t, n);
            o.require(check_free(construction, red, blue).valid(), "construction not free");
            o.require(r.witness && r.witness->order() == construction.order() &&
                          construction.order() == expected - 1 && check_free(*r.witness, red, blue).valid(),
                      "witness order differs from construction for " + red.to_string() + " vs " + blue.to_string());
        }
    });

    criterion(4, "star-critical values", 60, [](Outcome& o) {
        const auto k3 = TargetPattern::clique(3);
        o.require(star_critical(k3, k3, 6).value == 5, "r*(K3,K3)");
        for (int n = 4; n <= 10; ++n) {
            o.require(star_lower_bound(complete(3), generalized_fan(3, n)).value == 3 * n + 3, "3n+3 at n=" + std::to_string(n));
            o.require(star_lower_bound(complete(3), generalized_fan(4, n)).value == 4 * n + 4, "4n+4 at n=" + std::to_string(n));
        }
    });

    criterion(5, "formula consistency", 1, [](Outcome& o) {
        for (long long n = 3; n <= 12; ++n) {
            o.require(formula("cor1.9", {{"t", 3}, {"s", 1}, {"n", n}}) == formula("thm1.4", {{"n", n}}), "cor1.9 vs thm1.4");
            o.require(formula("cor1.9", {{"t", 4}, {"s", 1}, {"n", n}}) == formula("thm1.5", {{"n", n}}), "cor1.9 vs thm1.5");
        }
        for (long long m = 1; m <= 5; ++m)
            for (long long n = 1; n <= 5; ++n)
                o.require(formula("lem2.1", {{"m", m}, {"n", n}}) == 4 * n + 2 * m + 1, "lem2.1 grid");
        // max{m,n} + (t-1)(2m+n) + n + m, worked by hand.
        const std::vector<std::array<long long, 4>> hand{
            {5, 4, 3, 42}, {1, 1, 1, 3},  {2, 3, 2, 15}, {3, 3, 3, 27}, {4, 2, 2, 20},
            {2, 5, 4, 39}, {6, 1, 2, 26}, {3, 7, 5, 69}, {1, 4, 3, 21}, {7, 7, 2, 42},
        };
        for (auto [m, n, t, v] : hand) o.require(formula("thm1.11", {{"m", m}, {"n", n}, {"t", t}}) == v, "thm1.11 arithmetic");
    });

    criterion(6, "packing property", 120, [](Outcome& o) {
        SearchConfig cfg;
        cfg.thread_count_hint = 8;
        for (auto [t, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 3}, {3, 4}}) {
            const auto r = packing_property_check(t, n, 200, cfg);
            o.require(r.trials == 200 && r.found == 200 && r.failures.empty(),
                      "failures at t=" + std::to_string(t) + " n=" + std::to_string(n));
        }
    });

    criterion(7, "oracle equivalence", 120, [](Outcome& o) {
        std::mt19937_64 rng(7);
        int disagreements = 0;
        for (int i = 0; i < 500; ++i) {
            const int order = std::uniform_int_distribution<int>(1, 10)(rng);
            const Graph g = oracle::random_graph(order, std::uniform_real_distribution<double>(0.2, 0.95)(rng), rng);
            const TargetPattern p = corpus::random_pattern(rng);
            const auto fast = contains_target(g, p);
            const bool generic = embed_explicit(g, p.graph()).has_value();
            if (fast.has_value() != generic || (fast && !validate_witness(g, p.graph(), *fast))) ++disagreements;
        }
        o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    });

    criterion(8, "round-trips and determinism", 120, [](Outcome& o) {
        for (const Graph& g : corpus::graphs(62, 200, 1)) o.require(graph6::decode(graph6::encode(g)) == g, "graph6 standard");
        for (const Graph& g : corpus::graphs(128, 50, 2)) o.require(graph6::decode(graph6::encode(g)) == g, "graph6 long");
        const auto k3 = TargetPattern::clique(3);
        for (const auto& c : {multipartite_fan_coloring(3, 2, 2, 2), burr_coloring(3, 1, 33), matching_fan_coloring(2, 2, 1)}) {
            const auto back = cli::load_fr2(cli::save_fr2(c, {{"k", "v"}})).coloring;
            o.require(back == c, "fr2 coloring");
            o.require(check_free(back, k3, k3).content_hash == check_free(c, k3, k3).content_hash, "fr2 hash");
        }
        const std::vector<std::pair<TargetPattern, TargetPattern>> pairs{
            {k3, k3}, {TargetPattern::matching(2), TargetPattern::fan(2, 2)}, {TargetPattern::matching(3), TargetPattern::fan(2, 1)}};
        for (const auto& [red, blue] : pairs) {
            SearchConfig one, eight;
            one.thread_count_hint = 1;
            eight.thread_count_hint = 8;
            const std::string a = report(ramsey_number(red, blue, 3, 9, one));
            const std::string b = report(ramsey_number(red, blue, 3, 9, eight));
            const std::string c = report(ramsey_number(red, blue, 3, 9, eight));
            o.require(a == b && b == c, "reports differ for " + red.to_string() + " vs " + blue.to_string());
        }
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
