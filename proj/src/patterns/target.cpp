#include <charconv>
#include <set>

#include "detail.hpp"
#include "fanram/error.hpp"
#include "fanram/graph6.hpp"
#include "fanram/patterns.hpp"

namespace fanram {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(int value, const char* what) {
    if (value < 1) throw Error(ErrorCode::BadParam, std::string(what) + " must be >= 1");
}

TargetPattern from_inner(const std::variant<CliqueTarget, FanTarget, ExplicitTarget>& inner) {
    return std::visit(overloaded{
                          [](const CliqueTarget& c) { return TargetPattern::clique(c.m); },
                          [](const FanTarget& f) { return TargetPattern::fan(f.t, f.n); },
                          [](const ExplicitTarget& e) { return TargetPattern::explicit_graph(e.graph); },
                      },
                      inner);
}

}  // namespace

TargetPattern TargetPattern::clique(int m) {
    require_positive(m, "clique size");
    return TargetPattern(CliqueTarget{m});
}

TargetPattern TargetPattern::fan(int t, int n) {
    require_positive(t, "fan blade size");
    require_positive(n, "fan blade count");
    return TargetPattern(FanTarget{t, n});
}

TargetPattern TargetPattern::matching(int s) {
    require_positive(s, "matching size");
    return TargetPattern(MatchingTarget{s});
}

TargetPattern TargetPattern::explicit_graph(Graph g) { return TargetPattern(ExplicitTarget{std::move(g)}); }

TargetPattern TargetPattern::copies(int s, const TargetPattern& inner) {
    require_positive(s, "copy count");
    if (s == 1) return inner;
    return std::visit(overloaded{
                          [&](const CliqueTarget& c) { return TargetPattern(CopiesTarget{s, c}); },
                          [&](const FanTarget& f) { return TargetPattern(CopiesTarget{s, f}); },
                          [&](const ExplicitTarget& e) { return TargetPattern(CopiesTarget{s, e}); },
                          [&](const MatchingTarget& m) { return TargetPattern::matching(s * m.s); },
                          [&](const CopiesTarget& c) { return TargetPattern(CopiesTarget{s * c.s, c.inner}); },
                      },
                      inner.v_);
}

int TargetPattern::order() const {
    return std::visit(overloaded{
                          [](const CliqueTarget& c) { return c.m; },
                          [](const FanTarget& f) { return f.t * f.n + 1; },
                          [](const MatchingTarget& m) { return 2 * m.s; },
                          [](const ExplicitTarget& e) { return e.graph.order(); },
                          [](const CopiesTarget& c) { return c.s * from_inner(c.inner).order(); },
                      },
                      v_);
}

Graph TargetPattern::graph() const {
    return std::visit(overloaded{
                          [](const CliqueTarget& c) { return complete(c.m); },
                          [](const FanTarget& f) { return generalized_fan(f.t, f.n); },
                          [](const MatchingTarget& m) { return fanram::copies(m.s, complete(2)); },
                          [](const ExplicitTarget& e) { return e.graph; },
                          [](const CopiesTarget& c) { return fanram::copies(c.s, from_inner(c.inner).graph()); },
                      },
                      v_);
}

std::string TargetPattern::to_string() const {
    return std::visit(overloaded{
                          [](const CliqueTarget& c) { return "K" + std::to_string(c.m); },
                          [](const FanTarget& f) { return "F:" + std::to_string(f.t) + "," + std::to_string(f.n); },
                          [](const MatchingTarget& m) { return "M:" + std::to_string(m.s); },
                          [](const ExplicitTarget& e) { return "G6:" + graph6::encode(e.graph); },
                          [](const CopiesTarget& c) { return std::to_string(c.s) + "x" + from_inner(c.inner).to_string(); },
                      },
                      v_);
}

namespace {

class TargetParser {
public:
    explicit TargetParser(std::string_view text) : text_(text) {}

    TargetPattern parse() {
        if (text_.empty()) throw ParseError(0, "empty target");
        int copies = 1;
        if (!text_.empty() && isdigit(text_[0])) {
            copies = count();
            expect('x');
        }
        TargetPattern inner = atom();
        if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters in target");
        return TargetPattern::copies(copies, inner);
    }

private:
    static bool isdigit(char c) { return c >= '0' && c <= '9'; }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume(std::string_view prefix) {
        if (text_.substr(pos_).starts_with(prefix)) {
            pos_ += prefix.size();
            return true;
        }
        return false;
    }

    int count() {
        const std::size_t start = pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == text_.data() + pos_) throw ParseError(start, "expected a count");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        if (value < 1) throw ParseError(start, "count must be >= 1");
        return value;
    }

    TargetPattern atom() {
        if (consume("G6:")) {
            const std::size_t start = pos_;
            pos_ = text_.size();
            try {
                return TargetPattern::explicit_graph(graph6::decode(text_.substr(start)));
            } catch (const ParseError& e) {
                throw ParseError(start + e.position(), "bad graph6 in target");
            }
        }
        if (consume("F:")) {
            const int t = count();
            expect(',');
            const int n = count();
            return TargetPattern::fan(t, n);
        }
        if (consume("M:")) return TargetPattern::matching(count());
        if (consume("K")) return TargetPattern::clique(count());
        throw ParseError(pos_, "unknown target form");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

TargetPattern parse_target(std::string_view text) { return TargetParser(text).parse(); }

int EmbeddingWitness::pattern_order() const {
    int n = 0;
    for (const auto& g : groups) n += static_cast<int>(g.size());
    return n;
}

std::vector<int> EmbeddingWitness::flat() const {
    std::vector<int> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

bool validate_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& w) {
    const auto map = w.flat();
    if (static_cast<int>(map.size()) != pattern.order()) return false;
    std::set<int> seen;
    for (int h : map) {
        if (h < 0 || h >= host.order() || !seen.insert(h).second) return false;
    }
    for (auto [a, b] : pattern.edges())
        if (!host.adjacent(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) return false;
    return true;
}

std::optional<EmbeddingWitness> contains_target(GraphView g, const TargetPattern& p) {
    if (p.order() > g.order) return std::nullopt;
    return std::visit(overloaded{
                          [&](const CliqueTarget& c) { return contains_clique(g, c.m); },
                          [&](const FanTarget& f) { return contains_fan(g, g.vertices(), f.t, f.n); },
                          [&](const MatchingTarget& m) -> std::optional<EmbeddingWitness> {
                              auto w = max_matching(g);
                              if (static_cast<int>(w.groups.size()) < m.s) return std::nullopt;
                              w.groups.resize(static_cast<std::size_t>(m.s));
                              return w;
                          },
                          [&](const ExplicitTarget& e) { return embed_explicit(g, e.graph); },
                          [&](const CopiesTarget& c) { return contains_copies(g, c.s, from_inner(c.inner)); },
                      },
                      p.variant());
}

std::optional<EmbeddingWitness> contains_target(const Graph& g, const TargetPattern& p) {
    return contains_target(g.view(), p);
}

namespace {

bool through_edge_generic(GraphView g, const Graph& pattern, std::span<const Edge> reps, int u, int v) {
    for (auto [a, b] : reps) {
        for (int flip = 0; flip < 2; ++flip) {
            const detail::Pin pins[2] = {{a, flip ? v : u}, {b, flip ? u : v}};
            if (detail::enumerate_embeddings(g, g.vertices(), pattern, pins, [](std::span<const int>) { return true; }))
                return true;
        }
    }
    return false;
}

}  // namespace

bool contains_target_through_edge(GraphView g, const TargetPattern& p, int u, int v) {
    if (p.order() > g.order) return false;
    return std::visit(overloaded{
                          [&](const CliqueTarget& c) {
                              if (c.m <= 2) return true;
                              return detail::enumerate_cliques(g, g.neighbors(u) & g.neighbors(v), c.m - 2,
                                                               [](std::span<const int>) { return true; });
                          },
                          [&](const FanTarget& f) {
                              // Fan edges fall in two orbits: spoke and blade edge.
                              std::vector<Edge> reps{{0, 1}};
                              if (f.t >= 2) reps.emplace_back(1, 2);
                              return through_edge_generic(g, generalized_fan(f.t, f.n), reps, u, v);
                          },
                          [&](const ExplicitTarget& e) {
                              const auto edges = e.graph.edges();
                              if (edges.empty()) return contains_target(g, p).has_value();
                              return through_edge_generic(g, e.graph, edges, u, v);
                          },
                          [&](const auto&) { return contains_target(g, p).has_value(); },
                      },
                      p.variant());
}

}  // namespace fanram
