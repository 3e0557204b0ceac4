#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fanram/bounds.hpp"
#include "fanram/colorings.hpp"
#include "fanram/search.hpp"

namespace fanram::cli {

inline constexpr const char* kToolVersion = "fanram 0.1.0";

using Json = nlohmann::ordered_json;
using Metadata = std::vector<std::pair<std::string, std::string>>;

// ---- .fr2 coloring files ---------------------------------------------------
// line 1: host graph6, line 2: red subgraph graph6, then key=value lines.

struct ColoringFile {
    TwoColoring coloring;
    Metadata metadata;
};

std::string save_fr2(const TwoColoring& c, const Metadata& metadata = {});
/// Throws ParseError on malformed text, BadParam if red is not inside host.
ColoringFile load_fr2(std::string_view text);

// ---- reports ---------------------------------------------------------------

Json witness_json(const EmbeddingWitness& w);
Json coloring_json(const TwoColoring& c);
Json certificate_json(const Certificate& c);
Json bound_json(const BoundReport& r);
Json stats_json(const SearchStats& s);
Json search_json(const SearchResult& r);
Json packing_json(const PackingReport& r);

// ---- result cache ----------------------------------------------------------

struct ResultRecord {
    std::string red_target;
    std::string blue_target;
    std::string kind;  // ramsey | star | certificate
    std::string params;
    std::optional<long long> value;
    std::string artifact;  // serialized Certificate, may be empty
    std::string report;    // report document as emitted
    std::string tool_version = kToolVersion;
    std::string timestamp;

    Json to_json() const;
    static ResultRecord from_json(const Json& j);
};

/// Append-only JSON-lines file; single writer assumed.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path, std::ostream* warnings = nullptr);

    /// Newest record matching the key whose embedded certificate (if any)
    /// re-validates. Corrupt lines and failed re-validation are skipped with a warning.
    std::optional<ResultRecord> lookup(std::string_view kind, std::string_view red, std::string_view blue,
                                       std::string_view params) const;
    void store(ResultRecord rec) const;
    std::size_t record_count() const;

private:
    std::vector<ResultRecord> read_all() const;
    void warn(const std::string& msg) const;

    std::filesystem::path path_;
    std::ostream* warnings_;
};

// ---- entry point -----------------------------------------------------------

/// Exit codes: 0 found/true/valid, 1 absent/false/invalid, 2 usage or runtime error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanram::cli
