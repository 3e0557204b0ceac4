#include "fanram/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "fanram/error.hpp"
#include "fanram/patterns.hpp"

namespace fanram {

namespace {

void cap(const Graph& g, int limit) {
    if (g.order() > limit)
        throw Error(ErrorCode::OrderCap, "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(limit));
}

// DSATUR backtracking for k-colorability.
class KColorer {
public:
    KColorer(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1) {}

    bool run() { return step(0, 0); }

private:
    int pick() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0) continue;
            std::uint64_t seen = 0;
            int deg = 0;
            for (int u : g_.neighbors(v).members()) {
                const int c = color_[static_cast<std::size_t>(u)];
                if (c >= 0) seen |= std::uint64_t{1} << c;
                else ++deg;
            }
            const int sat = std::popcount(seen);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool step(int colored, int used) {
        if (colored == g_.order()) return true;
        const int v = pick();
        std::uint64_t blocked = 0;
        for (int u : g_.neighbors(v).members())
            if (color_[static_cast<std::size_t>(u)] >= 0) blocked |= std::uint64_t{1} << color_[static_cast<std::size_t>(u)];
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (blocked & (std::uint64_t{1} << c)) continue;
            color_[static_cast<std::size_t>(v)] = c;
            if (step(colored + 1, std::max(used, c + 1))) return true;
        }
        color_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

struct Formula {
    const char* id;
    std::vector<const char*> required;
    BoundKind kind;
    std::function<long long(const std::map<std::string, long long>&)> value;
    std::function<std::vector<ValidityCondition>(const std::map<std::string, long long>&)> validity;
};

ValidityCondition check(std::string text, bool holds) { return {std::move(text), holds, false}; }
ValidityCondition assume(std::string text) { return {std::move(text), true, true}; }

const std::vector<Formula>& formulas() {
    using P = std::map<std::string, long long>;
    static const std::vector<Formula> table = {
        {"thm1.3i", {"n"}, BoundKind::Exact, [](const P& p) { return 4 * p.at("n") + 1; },
         [](const P& p) { return std::vector{check("n >= 3", p.at("n") >= 3)}; }},
        {"thm1.4", {"n"}, BoundKind::Exact, [](const P& p) { return 6 * p.at("n") + 1; },
         [](const P& p) { return std::vector{check("n >= 3", p.at("n") >= 3)}; }},
        {"thm1.4star", {"n"}, BoundKind::Exact, [](const P& p) { return 3 * p.at("n") + 3; },
         [](const P& p) { return std::vector{check("n >= 4", p.at("n") >= 4)}; }},
        {"thm1.5", {"n"}, BoundKind::Exact, [](const P& p) { return 8 * p.at("n") + 1; },
         [](const P& p) { return std::vector{check("n >= 4", p.at("n") >= 4)}; }},
        {"thm1.5star", {"n"}, BoundKind::Exact, [](const P& p) { return 4 * p.at("n") + 4; },
         [](const P& p) { return std::vector{check("n >= 4", p.at("n") >= 4)}; }},
        {"thm1.6", {"s", "m", "t", "n"}, BoundKind::Exact,
         [](const P& p) { return p.at("t") * p.at("n") * (p.at("m") - 1) + p.at("s"); },
         [](const P& p) {
             const long long m = p.at("m"), s = p.at("s"), t = p.at("t"), tn = t * p.at("n");
             return std::vector{
                 check("m >= 3", m >= 3),
                 check("tn >= (m-1)^2/(m-2) * ((s-1)(m-1)+t)", m >= 3 && tn * (m - 2) >= (m - 1) * (m - 1) * ((s - 1) * (m - 1) + t)),
                 assume("tn >= (m+1)(m+C(t,m)+t)+3"),
             };
         }},
        {"thm1.7lo", {"m", "s", "t", "n"}, BoundKind::Lower,
         [](const P& p) { return p.at("t") * p.at("n") * (p.at("m") + p.at("s") - 2) + p.at("s"); },
         [](const P& p) { return std::vector{check("n >= m >= 3", p.at("n") >= p.at("m") && p.at("m") >= 3)}; }},
        {"thm1.7hi", {"m", "s", "t", "n", "base"}, BoundKind::Upper,
         [](const P& p) { return (p.at("t") * p.at("n") + 1) * (p.at("s") - 1) + p.at("base"); },
         [](const P& p) {
             return std::vector{check("n >= m >= 3", p.at("n") >= p.at("m") && p.at("m") >= 3),
                                assume("base = r(K_m, F_{t,n})")};
         }},
        {"thm1.11", {"m", "n", "t"}, BoundKind::Upper,
         [](const P& p) {
             const long long m = p.at("m"), n = p.at("n"), t = p.at("t");
             return std::max(m, n) + (t - 1) * (2 * m + n) + n + m;
         },
         [](const P& p) {
             const long long m = p.at("m"), n = p.at("n"), t = p.at("t");
             return std::vector{
                 check("t >= 3", t >= 3),
                 check("2m >= (t-1)^2/(t-2) * ((n-1)(t-1)+2)", t >= 3 && 2 * m * (t - 2) >= (t - 1) * (t - 1) * ((n - 1) * (t - 1) + 2)),
                 assume("2m >= (t+1)(t+C(t)+2)+3"),
             };
         }},
        {"lem2.1", {"m", "n"}, BoundKind::Exact, [](const P& p) { return 4 * p.at("n") + 2 * p.at("m") + 1; },
         [](const P& p) {
             return std::vector{check("n >= m >= 1", p.at("n") >= p.at("m") && p.at("m") >= 1), check("n >= 2", p.at("n") >= 2)};
         }},
        {"lem2.7", {"s", "t", "n"}, BoundKind::Exact,
         [](const P& p) { return std::max(p.at("s"), p.at("n")) + (p.at("t") - 1) * p.at("n") + p.at("s"); },
         [](const P& p) { return std::vector{check("t >= 2", p.at("t") >= 2)}; }},
        {"cor1.9", {"s", "t", "n"}, BoundKind::Exact,
         [](const P& p) { return p.at("t") * p.at("n") * (p.at("s") + 1) + p.at("s"); },
         [](const P& p) {
             const long long t = p.at("t");
             return std::vector{check("t in {3,4}", t == 3 || t == 4), check("n >= t", p.at("n") >= t)};
         }},
        {"cor1.8", {"m", "s", "n"}, BoundKind::Exact,
         [](const P& p) { return 2 * p.at("n") * (p.at("s") + p.at("m") - 2) + p.at("s"); },
         [](const P& p) {
             const long long m = p.at("m");
             std::vector v{check("n >= m >= 3", p.at("n") >= m && m >= 3)};
             if (m > 6) v.push_back(assume("r(K_m, F_n) = 2n(m-1)+1"));
             return v;
         }},
        {"cor1.10", {"m", "s", "t", "n"}, BoundKind::Exact,
         [](const P& p) { return p.at("t") * p.at("n") * (p.at("m") + p.at("s") - 2) + p.at("s"); },
         [](const P& p) {
             const long long m = p.at("m"), t = p.at("t"), tn = t * p.at("n");
             return std::vector{check("m >= 3", m >= 3),
                                check("tn >= (m-1)^2/(m-2) * t", m >= 3 && tn * (m - 2) >= (m - 1) * (m - 1) * t),
                                assume("tn >= (m+1)(m+C(t,m)+t)+3")};
         }},
        {"conj1.2", {"m", "n"}, BoundKind::Exact, [](const P& p) { return 2 * p.at("n") * (p.at("m") - 1) + 1; },
         [](const P& p) {
             return std::vector{check("n >= m >= 3", p.at("n") >= p.at("m") && p.at("m") >= 3), assume("conjectured value")};
         }},
    };
    return table;
}

}  // namespace

const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::Lower: return "lower";
        case BoundKind::Upper: return "upper";
        case BoundKind::Exact: return "exact";
    }
    return "exact";
}

bool BoundReport::valid() const {
    return std::all_of(validity.begin(), validity.end(), [](const ValidityCondition& c) { return c.holds; });
}

int chromatic_number(const Graph& g) {
    cap(g, kChromaticCap);
    if (g.order() == 0) return 0;
    int k = std::max(1, clique_number(g));
    while (!KColorer(g, k).run()) ++k;
    return k;
}

void for_each_optimal_coloring(const Graph& g, const std::function<void(std::span<const int>)>& visit) {
    cap(g, kEnumerationCap);
    const int n = g.order();
    const int chi = chromatic_number(g);
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (n - v < chi - used) return;
        if (v == n) {
            visit(color);
            return;
        }
        const int limit = std::min(chi, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v).members())
                if (u < v && color[static_cast<std::size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            rec(v + 1, std::max(used, c + 1));
        }
        color[static_cast<std::size_t>(v)] = -1;
    };
    rec(0, 0);
}

namespace {

std::vector<int> class_sizes(std::span<const int> color) {
    std::vector<int> sizes;
    for (int c : color) {
        if (c >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(c) + 1, 0);
        ++sizes[static_cast<std::size_t>(c)];
    }
    return sizes;
}

}  // namespace

int chromatic_surplus(const Graph& g) {
    cap(g, kEnumerationCap);
    if (g.order() == 0) throw Error(ErrorCode::BadParam, "chromatic surplus of the empty graph");
    int best = std::numeric_limits<int>::max();
    for_each_optimal_coloring(g, [&](std::span<const int> color) {
        const auto sizes = class_sizes(color);
        best = std::min(best, *std::min_element(sizes.begin(), sizes.end()));
    });
    return best;
}

int tau(const Graph& g) {
    cap(g, kEnumerationCap);
    if (g.order() == 0 || !g.is_connected()) throw Error(ErrorCode::PreconditionViolated, "tau needs a connected graph");
    const int s = chromatic_surplus(g);
    int best = std::numeric_limits<int>::max();
    for_each_optimal_coloring(g, [&](std::span<const int> color) {
        const auto sizes = class_sizes(color);
        std::vector<Bitset128> classes(sizes.size());
        for (std::size_t v = 0; v < color.size(); ++v) classes[static_cast<std::size_t>(color[v])].set(static_cast<int>(v));
        for (std::size_t first = 0; first < classes.size(); ++first) {
            if (sizes[first] != s) continue;
            classes[first].for_each([&](int v) {
                for (std::size_t other = 0; other < classes.size(); ++other)
                    if (other != first) best = std::min(best, (g.neighbors(v) & classes[other]).count());
            });
        }
    });
    if (best == std::numeric_limits<int>::max()) throw Error(ErrorCode::PreconditionViolated, "tau needs chi >= 2");
    return best;
}

GraphParams graph_params(const Graph& g) {
    GraphParams p;
    p.chi = chromatic_number(g);
    p.surplus = chromatic_surplus(g);
    p.tau = tau(g);
    p.delta = degree_profile(g).min_degree;
    return p;
}

BoundReport burr_bound(const Graph& g, const Graph& h) {
    const int chi = chromatic_number(g);
    const int s = chromatic_surplus(g);
    const int n = h.order();
    if (n < s) throw Error(ErrorCode::PreconditionViolated, "order(h) < s(g)");
    BoundReport r;
    r.formula_id = "burr";
    r.params = {{"chi", chi}, {"surplus", s}, {"order_h", n}};
    r.value = static_cast<long long>(chi - 1) * (n - 1) + s;
    r.kind = BoundKind::Lower;
    r.validity = {check("h connected", h.is_connected()), check("order(h) >= s(g)", true)};
    return r;
}

bool is_good(const Graph& g, const Graph& h, long long r_value, Provenance provenance) {
    if (provenance == Provenance::Unverified)
        throw Error(ErrorCode::PreconditionViolated, "goodness needs a searched or published exact Ramsey value");
    return burr_bound(g, h).value == r_value;
}

BoundReport star_lower_bound(const Graph& g, const Graph& h, bool h_is_good_asserted) {
    const int chi = chromatic_number(g);
    if (chi < 2) throw Error(ErrorCode::PreconditionViolated, "star-critical bound needs chi(g) >= 2");
    const int s = chromatic_surplus(g);
    const int n = h.order();
    if (n < s) throw Error(ErrorCode::PreconditionViolated, "order(h) < s(g)");
    if (!h.is_connected()) throw Error(ErrorCode::PreconditionViolated, "h must be connected");
    const int tg = tau(g);
    const int delta = degree_profile(h).min_degree;
    BoundReport r;
    r.formula_id = "star_lower";
    r.params = {{"chi", chi}, {"tau", tg}, {"delta_h", delta}, {"order_h", n}};
    r.value = static_cast<long long>(chi - 2) * (n - 1) + std::min(n, delta + tg - 1);
    r.kind = BoundKind::Lower;
    r.validity = {check("h connected", true), check("order(h) >= s(g)", true),
                  h_is_good_asserted ? assume("h is g-good") : check("h is g-good", false)};
    return r;
}

BoundReport closed_formula(std::string_view id, const std::map<std::string, long long>& params) {
    const auto& table = formulas();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Formula& f) { return id == f.id; });
    if (it == table.end()) throw Error(ErrorCode::UnknownFormula, std::string(id));
    BoundReport r;
    r.formula_id = it->id;
    for (const char* name : it->required) {
        const auto p = params.find(name);
        if (p == params.end()) throw Error(ErrorCode::MissingParam, std::string(name) + " for " + it->id);
        r.params[name] = p->second;
    }
    r.kind = it->kind;
    r.value = it->value(r.params);
    bool positive = true;
    for (const auto& [name, v] : r.params)
        if (name != "base" && v < 1) positive = false;
    r.validity.push_back(check("parameters are positive integers", positive));
    for (auto& c : it->validity(r.params)) r.validity.push_back(std::move(c));
    return r;
}

std::vector<std::string> formula_ids() {
    std::vector<std::string> out;
    for (const auto& f : formulas()) out.emplace_back(f.id);
    return out;
}

}  // namespace fanram
