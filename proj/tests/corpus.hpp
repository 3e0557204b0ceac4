#pragma once

#include <random>
#include <vector>

#include "fanram/graph.hpp"
#include "fanram/patterns.hpp"
#include "oracle.hpp"

namespace corpus {

/// Named constructions plus seeded random graphs. `max_order` bounds the random part.
inline std::vector<fanram::Graph> graphs(int max_order, int random_count, std::uint64_t seed) {
    using namespace fanram;
    const std::vector<int> parts94{9, 4};
    const std::vector<int> parts333{3, 3, 3};
    std::vector<Graph> out{complete(0),
                           complete(1),
                           complete(6),
                           empty_graph(7),
                           cycle(5),
                           generalized_fan(4, 5),
                           generalized_fan(3, 3),
                           complete_multipartite(parts94),
                           complete_multipartite(parts333),
                           star_augmented(5, 4),
                           copies(3, complete(2))};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(1, max_order);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int i = 0; i < random_count; ++i) out.push_back(oracle::random_graph(order(rng), density(rng), rng));
    return out;
}

/// Random small pattern from every family the grammar accepts.
inline fanram::TargetPattern random_pattern(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 5);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    switch (kind(rng)) {
        case 0: return fanram::TargetPattern::clique(pick(1, 5));
        case 1: return fanram::TargetPattern::fan(pick(1, 3), pick(1, 3));
        case 2: return fanram::TargetPattern::matching(pick(1, 4));
        case 3: return fanram::TargetPattern::copies(pick(2, 3), fanram::TargetPattern::clique(pick(2, 3)));
        case 4: return fanram::TargetPattern::copies(2, fanram::TargetPattern::fan(pick(1, 2), pick(1, 2)));
        default: {
            const int n = pick(2, 5);
            return fanram::TargetPattern::explicit_graph(oracle::random_graph(n, 0.6, rng));
        }
    }
}

}  // namespace corpus
