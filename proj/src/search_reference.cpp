// Serial reference search: no split, no isomorph rejection, no incremental
// checks. Every node re-runs the full containment oracle.
#include "fanram/search.hpp"

namespace fanram::reference {

namespace {

class NaiveSearch {
public:
    NaiveSearch(const Graph& host, const TargetPattern& red_target, const TargetPattern& blue_target, std::uint64_t budget)
        : host_(host), red_target_(red_target), blue_target_(blue_target), budget_(budget), edges_(host.edges()),
          red_(host.order()), blue_(host.order()) {}

    FreeColoringResult run() {
        FreeColoringResult out;
        if (!contains_target(red_.view(), red_target_) && !contains_target(blue_.view(), blue_target_)) dfs(0);
        out.stats = stats_;
        if (aborted_) {
            out.status = SearchStatus::BudgetExhausted;
        } else if (found_) {
            out.coloring = TwoColoring(host_, red_.build());
        }
        return out;
    }

private:
    bool dfs(std::size_t i) {
        if (++stats_.nodes > budget_) {
            aborted_ = true;
            return true;
        }
        if (i == edges_.size()) {
            found_ = true;
            return true;
        }
        auto [u, v] = edges_[i];
        red_.add_edge(u, v);
        if (contains_target(red_.view(), red_target_)) ++stats_.red_prunes;
        else if (dfs(i + 1)) return true;
        red_.remove_edge(u, v);

        blue_.add_edge(u, v);
        if (contains_target(blue_.view(), blue_target_)) ++stats_.blue_prunes;
        else if (dfs(i + 1)) return true;
        blue_.remove_edge(u, v);
        return false;
    }

    const Graph& host_;
    const TargetPattern& red_target_;
    const TargetPattern& blue_target_;
    std::uint64_t budget_;
    std::vector<Edge> edges_;
    GraphBuilder red_;
    GraphBuilder blue_;
    SearchStats stats_;
    bool aborted_ = false;
    bool found_ = false;
};

}  // namespace

FreeColoringResult exists_free_coloring(const Graph& host, const TargetPattern& red_target,
                                        const TargetPattern& blue_target, std::uint64_t node_budget) {
    return NaiveSearch(host, red_target, blue_target, node_budget).run();
}

}  // namespace fanram::reference
