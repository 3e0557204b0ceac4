#include <algorithm>
#include <deque>

#include "fanram/patterns.hpp"

namespace fanram {

namespace {

// Edmonds' blossom algorithm over bitset adjacency.
class BlossomMatcher {
public:
    explicit BlossomMatcher(GraphView g)
        : g_(g), n_(static_cast<std::size_t>(g.order)), match_(n_, -1), parent_(n_), base_(n_) {}

    void run() {
        for (int v = 0; v < g_.order; ++v) {
            if (match_[idx(v)] != -1) continue;
            const int end = find_path(v);
            augment(end);
        }
    }

    std::vector<std::vector<int>> edges() const {
        std::vector<std::vector<int>> out;
        for (int v = 0; v < g_.order; ++v)
            if (match_[idx(v)] > v) out.push_back({v, match_[idx(v)]});
        return out;
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    int lca(int a, int b) {
        std::vector<bool> used(n_, false);
        for (;;) {
            a = base_[idx(a)];
            used[idx(a)] = true;
            if (match_[idx(a)] == -1) break;
            a = parent_[idx(match_[idx(a)])];
        }
        for (;;) {
            b = base_[idx(b)];
            if (used[idx(b)]) return b;
            b = parent_[idx(match_[idx(b)])];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& blossom) {
        while (base_[idx(v)] != b) {
            blossom[idx(base_[idx(v)])] = true;
            blossom[idx(base_[idx(match_[idx(v)])])] = true;
            parent_[idx(v)] = child;
            child = match_[idx(v)];
            v = parent_[idx(match_[idx(v)])];
        }
    }

    int find_path(int root) {
        std::vector<bool> used(n_, false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);
        used[idx(root)] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : g_.neighbors(v).members()) {
                if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
                if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
                    const int cur_base = lca(v, to);
                    std::vector<bool> blossom(n_, false);
                    mark_path(v, cur_base, to, blossom);
                    mark_path(to, cur_base, v, blossom);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (!blossom[idx(base_[i])]) continue;
                        base_[i] = cur_base;
                        if (!used[i]) {
                            used[i] = true;
                            queue.push_back(static_cast<int>(i));
                        }
                    }
                } else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (match_[idx(to)] == -1) return to;
                    used[idx(match_[idx(to)])] = true;
                    queue.push_back(match_[idx(to)]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            const int pv = parent_[idx(v)];
            const int ppv = match_[idx(pv)];
            match_[idx(v)] = pv;
            match_[idx(pv)] = v;
            v = ppv;
        }
    }

    GraphView g_;
    std::size_t n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
};

}  // namespace

EmbeddingWitness max_matching(GraphView g) {
    BlossomMatcher m(g);
    m.run();
    return EmbeddingWitness{m.edges()};
}

EmbeddingWitness max_matching(const Graph& g) { return max_matching(g.view()); }

}  // namespace fanram
