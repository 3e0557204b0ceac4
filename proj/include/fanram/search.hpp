#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanram/colorings.hpp"
#include "fanram/graph.hpp"
#include "fanram/patterns.hpp"

namespace fanram {

struct SearchConfig {
    std::uint64_t node_budget = 200'000'000;
    /// Partial colorings are deduplicated up to isomorphism once all edges at
    /// the first `iso_rejection_depth` vertices are colored (complete hosts only).
    int iso_rejection_depth = 2;
    int thread_count_hint = 1;
    std::uint64_t seed = 1;
    /// Lift the lower end of a Ramsey range with a certified construction.
    bool seed_from_constructions = true;
    /// Deduplicate base colorings up to isomorphism in star_critical.
    bool dedup_base_colorings = false;
    /// Re-run the full oracle at every prune and count disagreements.
    bool verify_prunes = false;
};

enum class SearchStatus { Exact, BudgetExhausted };
const char* to_string(SearchStatus s);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t red_prunes = 0;
    std::uint64_t blue_prunes = 0;
    std::uint64_t iso_skips = 0;
    std::uint64_t prune_check_failures = 0;

    SearchStats& operator+=(const SearchStats& o);
};

struct FreeColoringResult {
    std::optional<TwoColoring> coloring;
    SearchStatus status = SearchStatus::Exact;
    SearchStats stats;
};

struct SearchResult {
    std::optional<long long> value;
    std::optional<TwoColoring> witness;
    SearchStatus status = SearchStatus::Exact;
    SearchStats stats;
};

/// DFS over host edges in lexicographic order, red before blue, pruning as
/// soon as a color class contains its target. Deterministic for any thread hint.
FreeColoringResult exists_free_coloring(const Graph& host, const TargetPattern& red_target,
                                        const TargetPattern& blue_target, const SearchConfig& cfg = {});

/// Visits every free coloring of host in DFS order (no isomorph rejection).
/// Returns Exact unless the node budget ran out. Stops early once visit returns true.
SearchStatus for_each_free_coloring(const Graph& host, const TargetPattern& red_target, const TargetPattern& blue_target,
                                    const SearchConfig& cfg, SearchStats& stats,
                                    const std::function<bool(const TwoColoring&)>& visit);

/// Smallest N in [lo, hi] such that K_N has no free coloring. Throws RangeError
/// if every N in range admits one.
SearchResult ramsey_number(const TargetPattern& red_target, const TargetPattern& blue_target, int lo, int hi,
                           const SearchConfig& cfg = {});

/// Star-critical number for a verified Ramsey number r. Witness is a free
/// coloring of K_{r-1} plus a vertex of degree value-1.
SearchResult star_critical(const TargetPattern& red_target, const TargetPattern& blue_target, int r,
                           const SearchConfig& cfg = {});

struct PackingReport {
    int t = 0;
    int n = 0;
    int trials = 0;
    int min_degree_floor = 0;
    int found = 0;
    std::vector<std::string> failures;  // graph6 of samples without a packing
};

/// Samples graphs of order tn with min degree >= tn - n and checks that each
/// has n disjoint K_t. A failure is a bug in the packing oracle.
PackingReport packing_property_check(int t, int n, int trials, const SearchConfig& cfg = {});

namespace reference {

/// Plain recursive DFS with a full containment check at every node. Kept as
/// the oracle for the incremental, parallel search.
FreeColoringResult exists_free_coloring(const Graph& host, const TargetPattern& red_target,
                                        const TargetPattern& blue_target, std::uint64_t node_budget);

}  // namespace reference

}  // namespace fanram
