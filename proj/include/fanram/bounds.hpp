#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fanram/graph.hpp"

namespace fanram {

inline constexpr int kEnumerationCap = 12;
inline constexpr int kChromaticCap = 40;

struct GraphParams {
    int chi = 0;
    int surplus = 0;
    int tau = 0;
    int delta = 0;
};

/// Exact chromatic number, order <= 40.
int chromatic_number(const Graph& g);

/// Calls visit(color_of_vertex) once per partition into exactly chi(g)
/// nonempty independent classes (colors numbered by first appearance).
/// Order <= 12.
void for_each_optimal_coloring(const Graph& g, const std::function<void(std::span<const int>)>& visit);

/// Minimum class size over all optimal proper colorings. Order <= 12.
int chromatic_surplus(const Graph& g);

/// min over optimal colorings, over classes U_1 of minimum size s(g), over
/// v in U_1 and other classes U_i, of |N(v) ∩ U_i|. Order <= 12, connected.
int tau(const Graph& g);

GraphParams graph_params(const Graph& g);

enum class BoundKind { Lower, Upper, Exact };
const char* to_string(BoundKind k);

struct ValidityCondition {
    std::string condition;
    bool holds = true;
    bool assumed = false;  // not machine-checkable; taken on the caller's word
};

struct BoundReport {
    std::string formula_id;
    std::map<std::string, long long> params;
    long long value = 0;
    BoundKind kind = BoundKind::Exact;
    std::vector<ValidityCondition> validity;

    bool valid() const;
};

/// (chi(g)-1)(|h|-1)+s(g); PreconditionViolated if |h| < s(g).
BoundReport burr_bound(const Graph& g, const Graph& h);

enum class Provenance { Searched, PublishedExact, Unverified };

/// r_value equals the Burr bound. PreconditionViolated for Unverified values.
bool is_good(const Graph& g, const Graph& h, long long r_value, Provenance provenance);

/// (chi(g)-2)(|h|-1) + min{|h|, delta(h)+tau(g)-1}, valid when h is g-good.
BoundReport star_lower_bound(const Graph& g, const Graph& h, bool h_is_good_asserted = true);

/// Evaluate a named closed-form value. Out-of-range parameters produce a
/// report with a failing validity condition; UnknownFormula / MissingParam throw.
BoundReport closed_formula(std::string_view id, const std::map<std::string, long long>& params);

std::vector<std::string> formula_ids();

}  // namespace fanram
