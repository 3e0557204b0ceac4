#include <algorithm>
#include <random>

#include "fanram/error.hpp"
#include "fanram/graph6.hpp"
#include "fanram/search.hpp"

namespace fanram {

namespace {

constexpr int kRejectionTries = 20;

// G(N,p) by rejection; the last draw is topped up one edge at a time, always
// at a vertex of currently lowest degree, until every degree meets the floor.
Graph sample_min_degree_graph(int order, int floor, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lo = static_cast<double>(floor) / std::max(1, order - 1);
    std::uniform_real_distribution<double> density(std::max(0.0, lo - 0.15), std::min(1.0, lo + 0.1));
    GraphBuilder b(order);
    for (int attempt = 0; attempt < kRejectionTries; ++attempt) {
        b = GraphBuilder(order);
        const double p = density(rng);
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                if (unit(rng) < p) b.add_edge(u, v);
        const Graph g = b.build();
        if (order == 0 || degree_profile(g).min_degree >= floor) return g;
    }
    for (;;) {
        const Graph g = b.build();
        const auto prof = degree_profile(g);
        if (prof.min_degree >= floor) return g;
        std::vector<int> low;
        for (int v = 0; v < order; ++v)
            if (prof.degrees[static_cast<std::size_t>(v)] == prof.min_degree) low.push_back(v);
        const int v = low[std::uniform_int_distribution<std::size_t>(0, low.size() - 1)(rng)];
        std::vector<int> options;
        int best_deg = order;
        for (int u = 0; u < order; ++u) {
            if (u == v || g.adjacent(u, v)) continue;
            const int d = prof.degrees[static_cast<std::size_t>(u)];
            if (d < best_deg) {
                best_deg = d;
                options.clear();
            }
            if (d == best_deg) options.push_back(u);
        }
        if (options.empty()) throw Error(ErrorCode::SamplingFailure, "degree floor unreachable");
        b.add_edge(v, options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
}

}  // namespace

PackingReport packing_property_check(int t, int n, int trials, const SearchConfig& cfg) {
    if (t < 2 || n < 1 || t * n > 24 || trials < 1)
        throw Error(ErrorCode::BadParam, "packing check needs t >= 2, n >= 1, tn <= 24, trials >= 1");
    PackingReport report;
    report.t = t;
    report.n = n;
    report.trials = trials;
    // (1 - 1/t) * tn is exactly tn - n.
    report.min_degree_floor = t * n - n;
    const int order = t * n;
    if (report.min_degree_floor > order - 1) throw Error(ErrorCode::SamplingFailure, "degree floor exceeds order - 1");

    std::vector<std::string> failure_of(static_cast<std::size_t>(trials));
    std::vector<char> ok(static_cast<std::size_t>(trials), 0);
    const int threads = std::max(1, cfg.thread_count_hint);

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (int trial = 0; trial < trials; ++trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(trial), std::uint32_t{0x7061636b}};
        std::mt19937_64 rng(seq);
        const Graph g = sample_min_degree_graph(order, report.min_degree_floor, rng);
        const auto packing = kt_packing(g, t, n);
        if (packing && validate_witness(g, copies(n, complete(t)), *packing)) ok[static_cast<std::size_t>(trial)] = 1;
        else failure_of[static_cast<std::size_t>(trial)] = graph6::encode(g);
    }
    for (int trial = 0; trial < trials; ++trial) {
        if (ok[static_cast<std::size_t>(trial)]) ++report.found;
        else report.failures.push_back(failure_of[static_cast<std::size_t>(trial)]);
    }
    return report;
}

}  // namespace fanram
