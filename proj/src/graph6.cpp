#include "fanram/graph6.hpp"

#include "fanram/error.hpp"

namespace fanram::graph6 {

std::string encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph decode(std::string_view text) {
    auto sextet = [&](std::size_t pos) {
        if (pos >= text.size()) throw ParseError(pos, "truncated graph6");
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError(pos, "invalid graph6 byte");
        return c - 63;
    };
    if (text.empty()) throw ParseError(0, "empty graph6");
    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~') throw ParseError(1, "8-byte graph6 orders are not supported");
        n = (static_cast<long long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
        if (n <= 62) throw ParseError(0, "long-form graph6 for order <= 62");
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n > kMaxOrder) throw Error(ErrorCode::OrderCap, "graph6 order " + std::to_string(n) + " exceeds cap");
    const auto order = static_cast<int>(n);
    const long long pairs = n * (n - 1) / 2;
    const auto expected = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos != expected)
        throw ParseError(text.size() < pos + expected ? text.size() : pos + expected, "graph6 length mismatch");
    GraphBuilder b(order);
    long long k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(pos + static_cast<std::size_t>(k / 6));
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (pairs % 6 != 0) {
        const int last = sextet(text.size() - 1);
        const int pad = static_cast<int>(6 - pairs % 6);
        if (last & ((1 << pad) - 1)) throw ParseError(text.size() - 1, "nonzero graph6 padding");
    }
    return b.build();
}

}  // namespace fanram::graph6
