#include "fanram/colorings.hpp"

#include <openssl/evp.h>

#include <array>
#include <sstream>
#include <vector>

#include "fanram/error.hpp"
#include "fanram/graph6.hpp"
#include "patterns/detail.hpp"

namespace fanram {

namespace {

Graph subtract_edges(const Graph& host, const Graph& red) {
    std::vector<Bitset128> rows(host.rows().begin(), host.rows().end());
    for (int v = 0; v < host.order(); ++v) rows[static_cast<std::size_t>(v)].subtract(red.neighbors(v));
    return Graph::from_rows(host.order(), std::move(rows));
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::IoError, "sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

std::string verdict_text(const std::optional<EmbeddingWitness>& w) {
    if (!w) return "absent";
    std::string out = "present ";
    for (std::size_t g = 0; g < w->groups.size(); ++g) {
        if (g) out.push_back(';');
        for (std::size_t i = 0; i < w->groups[g].size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(w->groups[g][i]);
        }
    }
    return out;
}

std::string body_text(const Certificate& c) {
    std::ostringstream os;
    os << "fanram-certificate 1\n"
       << "host " << graph6::encode(c.coloring.host()) << '\n'
       << "red " << graph6::encode(c.coloring.red_graph()) << '\n'
       << "red_target " << c.red_target.to_string() << '\n'
       << "blue_target " << c.blue_target.to_string() << '\n'
       << "red_verdict " << verdict_text(c.red_violation) << '\n'
       << "blue_verdict " << verdict_text(c.blue_violation) << '\n';
    return os.str();
}

}  // namespace

TwoColoring::TwoColoring(Graph host, Graph red) : host_(std::move(host)), red_(std::move(red)) {
    if (host_.order() != red_.order()) throw Error(ErrorCode::BadParam, "red graph order differs from host");
    for (int v = 0; v < host_.order(); ++v)
        if (!red_.neighbors(v).is_subset_of(host_.neighbors(v))) throw Error(ErrorCode::BadParam, "red edge outside host");
    blue_ = subtract_edges(host_, red_);
}

TwoColoring TwoColoring::all_red(Graph host) {
    Graph red = host;
    return TwoColoring(std::move(host), std::move(red));
}

TwoColoring TwoColoring::all_blue(Graph host) {
    const int n = host.order();
    return TwoColoring(std::move(host), empty_graph(n));
}

std::string Certificate::serialize() const { return body_text(*this) + "hash " + content_hash + '\n'; }

Certificate Certificate::deserialize(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<std::pair<std::string, std::string>> fields;
    while (std::getline(is, line)) {
        const auto sp = line.find(' ');
        if (sp == std::string::npos) throw Error(ErrorCode::CorruptRecord, "malformed certificate line");
        fields.emplace_back(line.substr(0, sp), line.substr(sp + 1));
    }
    static const std::array<const char*, 8> keys = {"fanram-certificate", "host", "red", "red_target",
                                                    "blue_target", "red_verdict", "blue_verdict", "hash"};
    if (fields.size() != keys.size()) throw Error(ErrorCode::CorruptRecord, "certificate field count");
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (fields[i].first != keys[i]) throw Error(ErrorCode::CorruptRecord, std::string("expected field ") + keys[i]);
    if (fields[0].second != "1") throw Error(ErrorCode::CorruptRecord, "unsupported certificate version");

    try {
        TwoColoring c(graph6::decode(fields[1].second), graph6::decode(fields[2].second));
        Certificate cert = check_free(c, parse_target(fields[3].second), parse_target(fields[4].second));
        if (verdict_text(cert.red_violation) != fields[5].second || verdict_text(cert.blue_violation) != fields[6].second)
            throw Error(ErrorCode::CorruptRecord, "stored verdicts disagree with re-check");
        if (cert.content_hash != fields[7].second) throw Error(ErrorCode::CorruptRecord, "content hash mismatch");
        return cert;
    } catch (const ParseError& e) {
        throw Error(ErrorCode::CorruptRecord, e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CorruptRecord) throw;
        throw Error(ErrorCode::CorruptRecord, e.what());
    }
}

Certificate check_free(const TwoColoring& c, const TargetPattern& red_target, const TargetPattern& blue_target) {
    Certificate cert{c, red_target, blue_target, contains_target(c.red_graph(), red_target),
                     contains_target(c.blue_graph(), blue_target), {}};
    cert.content_hash = sha256_hex(body_text(cert));
    return cert;
}

TwoColoring burr_coloring(int chi, int surplus, int h_order) {
    if (chi < 2 || surplus < 1 || h_order < surplus)
        throw Error(ErrorCode::BadParam, "burr coloring needs chi >= 2, surplus >= 1, h_order >= surplus");
    const long long order = static_cast<long long>(chi - 1) * (h_order - 1) + surplus - 1;
    if (order > kMaxOrder) throw Error(ErrorCode::OrderCap, "burr coloring order " + std::to_string(order));
    Graph blue = disjoint_union(copies(chi - 1, complete(h_order - 1)), complete(surplus - 1));
    Graph red = complement(blue);
    return TwoColoring(complete(blue.order()), std::move(red));
}

TwoColoring multipartite_fan_coloring(int m, int s, int t, int n) {
    if (m < 3 || s < 1 || t < 1 || n < 1) throw Error(ErrorCode::BadParam, "construction needs m >= 3 and s, t, n >= 1");
    const long long tn = static_cast<long long>(t) * n;
    const long long order = tn * (m + s - 2) + s - 1;
    if (order > kMaxOrder) throw Error(ErrorCode::OrderCap, "construction order " + std::to_string(order));
    std::vector<int> parts{static_cast<int>((tn + 1) * s - 1)};
    parts.insert(parts.end(), static_cast<std::size_t>(m - 2), static_cast<int>(tn));
    Graph red = complete_multipartite(parts);
    return TwoColoring(complete(red.order()), std::move(red));
}

TwoColoring matching_fan_coloring(int s, int t, int n) {
    if (s < 1 || t < 1 || n < 1) throw Error(ErrorCode::BadParam, "construction needs s, t, n >= 1");
    Graph red;
    if (n >= s) {
        const long long order = static_cast<long long>(t) * n + s - 1;
        if (order > kMaxOrder) throw Error(ErrorCode::OrderCap, "construction order " + std::to_string(order));
        if (s == 1) {
            red = empty_graph(t * n);
        } else {
            const std::vector<int> parts{t * n, s - 1};
            red = complete_multipartite(parts);
        }
    } else {
        const long long order = static_cast<long long>(t - 1) * n + 2LL * s - 1;
        if (order > kMaxOrder) throw Error(ErrorCode::OrderCap, "construction order " + std::to_string(order));
        red = disjoint_union(empty_graph((t - 1) * n), complete(2 * s - 1));
    }
    return TwoColoring(complete(red.order()), std::move(red));
}

std::pair<VertexSet, VertexSet> find_two_blue_cliques(const TwoColoring& c, int n) {
    if (n < 4) throw Error(ErrorCode::PreconditionViolated, "blue clique structure is only claimed for n >= 4");
    if (c.order() != 8 * n || c.host() != complete(8 * n))
        throw Error(ErrorCode::PreconditionViolated, "host must be K_{8n}");
    if (!check_free(c, TargetPattern::clique(3), TargetPattern::fan(4, n)).valid())
        throw Error(ErrorCode::PreconditionViolated, "coloring is not (K3, F_{4,n})-free");

    const GraphView blue = c.blue_graph().view();
    const int k = 4 * n;
    std::optional<std::pair<VertexSet, VertexSet>> out;
    detail::enumerate_cliques(blue, blue.vertices(), k, [&](std::span<const int> first) {
        VertexSet a;
        for (int v : first) a.set(v);
        return detail::enumerate_cliques(blue, minus(blue.vertices(), a), k, [&](std::span<const int> second) {
            VertexSet b;
            for (int v : second) b.set(v);
            out = std::pair{a, b};
            return true;
        });
    });
    if (!out) throw Error(ErrorCode::StructureNotFound, "no two disjoint blue K_{4n}");
    return *out;
}

}  // namespace fanram
