#include <sstream>

#include "fanram/cli.hpp"
#include "fanram/error.hpp"
#include "fanram/graph6.hpp"

namespace fanram::cli {

std::string save_fr2(const TwoColoring& c, const Metadata& metadata) {
    std::string out = graph6::encode(c.host()) + '\n' + graph6::encode(c.red_graph()) + '\n';
    for (const auto& [k, v] : metadata) out += k + '=' + v + '\n';
    return out;
}

ColoringFile load_fr2(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string host_line;
    std::string red_line;
    if (!std::getline(is, host_line)) throw ParseError(0, "missing host line");
    if (!std::getline(is, red_line)) throw ParseError(host_line.size() + 1, "missing red line");
    Graph host = graph6::decode(host_line);
    Graph red = graph6::decode(red_line);
    Metadata meta;
    std::size_t offset = host_line.size() + red_line.size() + 2;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty()) {
            const auto eq = line.find('=');
            if (eq == std::string::npos || eq == 0) throw ParseError(offset, "metadata line without key=value");
            meta.emplace_back(line.substr(0, eq), line.substr(eq + 1));
        }
        offset += line.size() + 1;
    }
    return ColoringFile{TwoColoring(std::move(host), std::move(red)), std::move(meta)};
}

}  // namespace fanram::cli
