#include <fstream>
#include <iostream>

#include "fanram/cli.hpp"
#include "fanram/error.hpp"

namespace fanram::cli {

Json ResultRecord::to_json() const {
    Json j;
    j["red_target"] = red_target;
    j["blue_target"] = blue_target;
    j["kind"] = kind;
    j["params"] = params;
    j["value"] = value ? Json(*value) : Json(nullptr);
    j["artifact"] = artifact;
    j["report"] = report;
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    return j;
}

ResultRecord ResultRecord::from_json(const Json& j) {
    try {
        ResultRecord r;
        r.red_target = j.at("red_target").get<std::string>();
        r.blue_target = j.at("blue_target").get<std::string>();
        r.kind = j.at("kind").get<std::string>();
        r.params = j.at("params").get<std::string>();
        if (!j.at("value").is_null()) r.value = j.at("value").get<long long>();
        r.artifact = j.at("artifact").get<std::string>();
        r.report = j.at("report").get<std::string>();
        r.tool_version = j.at("tool_version").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        return r;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::CorruptRecord, e.what());
    }
}

ResultCache::ResultCache(std::filesystem::path path, std::ostream* warnings)
    : path_(std::move(path)), warnings_(warnings) {}

void ResultCache::warn(const std::string& msg) const {
    if (warnings_) *warnings_ << "warning: " << msg << '\n';
}

std::vector<ResultRecord> ResultCache::read_all() const {
    std::vector<ResultRecord> out;
    std::ifstream in(path_);
    if (!in) return out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(ResultRecord::from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            warn("skipping corrupt cache record at line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::optional<ResultRecord> ResultCache::lookup(std::string_view kind, std::string_view red, std::string_view blue,
                                                std::string_view params) const {
    const auto records = read_all();
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        if (it->kind != kind || it->red_target != red || it->blue_target != blue || it->params != params) continue;
        if (!it->artifact.empty()) {
            try {
                const Certificate cert = Certificate::deserialize(it->artifact);
                // Search witnesses must be free; certificate records may carry either verdict.
                if (it->kind != "certificate" && !cert.valid())
                    throw Error(ErrorCode::CorruptRecord, "stored witness is not free");
            } catch (const Error& e) {
                warn(std::string("cached certificate failed re-validation: ") + e.what());
                return std::nullopt;
            }
        }
        return *it;
    }
    return std::nullopt;
}

void ResultCache::store(ResultRecord rec) const {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error(ErrorCode::IoError, "cannot open cache " + path_.string());
    out << rec.to_json().dump() << '\n';
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "cannot write cache " + path_.string());
}

std::size_t ResultCache::record_count() const { return read_all().size(); }

}  // namespace fanram::cli
