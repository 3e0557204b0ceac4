#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fanram/cli.hpp"
#include "fanram/error.hpp"
#include "fanram/graph6.hpp"

namespace fanram::cli {

namespace {

struct Options {
    std::string red;
    std::string blue;
    std::string family;
    std::string graph;
    std::string coloring;
    std::string side = "blue";
    std::string target;
    std::string formula;
    std::string g_target;
    std::string h_target;
    std::string out_path;
    std::string cache_path;
    std::string kind;
    std::string params;
    std::string action = "list";
    int m = 0, s = 0, t = 0, n = 0;
    long long base = 0;
    int chi = 0, surplus = 0, h_order = 0;
    int lo = 1, hi = 12, r = 0;
    int trials = 200;
    std::uint64_t budget = 200'000'000;
    int threads = 1;
    int iso_depth = 2;
    std::uint64_t seed = 1;
    bool dedup = false;
    bool no_seed = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::optional<ResultCache> open_cache(const Options& o, std::ostream& err) {
    std::string path = o.cache_path;
    if (path.empty())
        if (const char* env = std::getenv("FANRAM_CACHE")) path = env;
    if (path.empty()) return std::nullopt;
    return ResultCache(path, &err);
}

Graph graph_argument(const std::string& text) {
    std::string_view g6 = text;
    if (g6.starts_with("G6:")) g6.remove_prefix(3);
    return graph6::decode(g6);
}

/// Pattern grammar or graph6, as the underlying labeled graph.
Graph pattern_graph(const std::string& text) { return parse_target(text).graph(); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

SearchConfig config_from(const Options& o) {
    SearchConfig cfg;
    cfg.node_budget = o.budget;
    cfg.thread_count_hint = o.threads;
    cfg.iso_rejection_depth = o.iso_depth;
    cfg.seed = o.seed;
    cfg.dedup_base_colorings = o.dedup;
    cfg.seed_from_constructions = !o.no_seed;
    return cfg;
}

int cmd_construct(const Options& o, std::ostream& out) {
    TwoColoring c = TwoColoring::all_blue(empty_graph(0));
    TargetPattern red = TargetPattern::clique(1);
    TargetPattern blue = TargetPattern::clique(1);
    if (o.family == "thm17") {
        c = multipartite_fan_coloring(o.m, o.s, o.t, o.n);
        red = TargetPattern::clique(o.m);
        blue = TargetPattern::copies(o.s, TargetPattern::fan(o.t, o.n));
    } else if (o.family == "matching-fan") {
        c = matching_fan_coloring(o.s, o.t, o.n);
        red = TargetPattern::matching(o.s);
        blue = TargetPattern::fan(o.t, o.n);
    } else if (o.family == "burr") {
        c = burr_coloring(o.chi, o.surplus, o.h_order);
        red = TargetPattern::clique(o.chi);
        blue = TargetPattern::clique(o.h_order);
    } else {
        throw Error(ErrorCode::BadParam, "unknown family '" + o.family + "' (thm17, matching-fan, burr)");
    }
    if (!o.red.empty()) red = parse_target(o.red);
    if (!o.blue.empty()) blue = parse_target(o.blue);
    const Certificate cert = check_free(c, red, blue);
    if (!o.out_path.empty())
        write_file(o.out_path, save_fr2(c, {{"family", o.family},
                                            {"red_target", red.to_string()},
                                            {"blue_target", blue.to_string()},
                                            {"content_hash", cert.content_hash}}));
    Json j;
    j["command"] = "construct";
    j["family"] = o.family;
    j["certificate"] = certificate_json(cert);
    emit(out, j);
    return cert.valid() ? 0 : 1;
}

int cmd_check_free(const Options& o, std::ostream& out, std::ostream& err) {
    const ColoringFile file = load_fr2(read_file(o.coloring));
    const TargetPattern red = parse_target(o.red);
    const TargetPattern blue = parse_target(o.blue);
    const std::string params = "host=" + graph6::encode(file.coloring.host()) + ";red=" + graph6::encode(file.coloring.red_graph());
    auto cache = open_cache(o, err);
    if (cache) {
        if (auto hit = cache->lookup("certificate", red.to_string(), blue.to_string(), params)) {
            out << hit->report;
            return hit->value.value_or(0) ? 0 : 1;
        }
    }
    const Certificate cert = check_free(file.coloring, red, blue);
    Json j;
    j["command"] = "check-free";
    j["certificate"] = certificate_json(cert);
    const std::string report = j.dump(2) + '\n';
    out << report;
    if (cache) {
        ResultRecord rec;
        rec.red_target = red.to_string();
        rec.blue_target = blue.to_string();
        rec.kind = "certificate";
        rec.params = params;
        rec.value = cert.valid() ? 1 : 0;
        rec.artifact = cert.serialize();
        rec.report = report;
        rec.timestamp = utc_timestamp();
        cache->store(std::move(rec));
    }
    return cert.valid() ? 0 : 1;
}

int cmd_detect(const Options& o, std::ostream& out) {
    Graph g;
    if (!o.coloring.empty()) {
        const auto file = load_fr2(read_file(o.coloring));
        if (o.side != "red" && o.side != "blue") throw Error(ErrorCode::BadParam, "--side must be red or blue");
        g = o.side == "red" ? file.coloring.red_graph() : file.coloring.blue_graph();
    } else if (!o.graph.empty()) {
        g = graph_argument(o.graph);
    } else {
        throw Error(ErrorCode::BadParam, "detect needs --graph or --coloring");
    }
    const TargetPattern p = parse_target(o.target);
    const auto w = contains_target(g, p);
    Json j;
    j["command"] = "detect";
    j["graph"] = graph6::encode(g);
    j["target"] = p.to_string();
    j["found"] = w.has_value();
    j["witness"] = w ? witness_json(*w) : Json(nullptr);
    emit(out, j);
    return w ? 0 : 1;
}

int cmd_bound(const Options& o, std::ostream& out) {
    BoundReport r;
    if (o.formula == "burr" || o.formula == "star-lower") {
        if (o.g_target.empty() || o.h_target.empty()) throw Error(ErrorCode::BadParam, "--g and --h are required");
        const Graph g = pattern_graph(o.g_target);
        const Graph h = pattern_graph(o.h_target);
        r = o.formula == "burr" ? burr_bound(g, h) : star_lower_bound(g, h);
    } else {
        std::map<std::string, long long> params;
        if (o.m) params["m"] = o.m;
        if (o.s) params["s"] = o.s;
        if (o.t) params["t"] = o.t;
        if (o.n) params["n"] = o.n;
        if (o.base) params["base"] = o.base;
        r = closed_formula(o.formula, params);
    }
    Json j;
    j["command"] = "bound";
    j["report"] = bound_json(r);
    emit(out, j);
    return r.valid() ? 0 : 1;
}

int cmd_search(const Options& o, bool star, std::ostream& out, std::ostream& err) {
    const TargetPattern red = parse_target(o.red);
    const TargetPattern blue = parse_target(o.blue);
    const SearchConfig cfg = config_from(o);
    const std::string kind = star ? "star" : "ramsey";
    std::string params = star ? "r=" + std::to_string(o.r) + ";lo=" + std::to_string(o.lo) + ";hi=" + std::to_string(o.hi)
                              : "lo=" + std::to_string(o.lo) + ";hi=" + std::to_string(o.hi);
    params += ";budget=" + std::to_string(o.budget);
    auto cache = open_cache(o, err);
    if (cache) {
        if (auto hit = cache->lookup(kind, red.to_string(), blue.to_string(), params)) {
            out << hit->report;
            return hit->value ? 0 : 1;
        }
    }

    Json j;
    j["command"] = kind;
    j["red"] = red.to_string();
    j["blue"] = blue.to_string();
    SearchResult result;
    try {
        if (star) {
            int r = o.r;
            if (r == 0) {
                const auto base = ramsey_number(red, blue, o.lo, o.hi, cfg);
                if (!base.value) throw Error(ErrorCode::RangeError, "Ramsey number search ran out of budget");
                r = static_cast<int>(*base.value);
            }
            j["r"] = r;
            result = star_critical(red, blue, r, cfg);
        } else {
            j["lo"] = o.lo;
            j["hi"] = o.hi;
            result = ramsey_number(red, blue, o.lo, o.hi, cfg);
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::RangeError) throw;
        j["status"] = "range_exhausted";
        j["value"] = nullptr;
        j["message"] = e.what();
        emit(out, j);
        return 1;
    }
    const Json body = search_json(result);
    for (const auto& [k, v] : body.items()) j[k] = v;
    if (!o.out_path.empty() && result.witness)
        write_file(o.out_path, save_fr2(*result.witness, {{"red_target", red.to_string()}, {"blue_target", blue.to_string()}}));
    const std::string report = j.dump(2) + '\n';
    out << report;
    const bool exact = result.status == SearchStatus::Exact && result.value;
    if (cache && exact) {
        ResultRecord rec;
        rec.red_target = red.to_string();
        rec.blue_target = blue.to_string();
        rec.kind = kind;
        rec.params = params;
        rec.value = result.value;
        if (result.witness) rec.artifact = check_free(*result.witness, red, blue).serialize();
        rec.report = report;
        rec.timestamp = utc_timestamp();
        cache->store(std::move(rec));
    }
    return exact ? 0 : 1;
}

int cmd_packing(const Options& o, std::ostream& out) {
    SearchConfig cfg = config_from(o);
    const PackingReport r = packing_property_check(o.t, o.n, o.trials, cfg);
    Json j;
    j["command"] = "packing-check";
    j["seed"] = o.seed;
    const Json body = packing_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(out, j);
    return r.failures.empty() ? 0 : 1;
}

int cmd_cache(const Options& o, std::ostream& out, std::ostream& err) {
    auto cache = open_cache(o, err);
    if (!cache) throw Error(ErrorCode::BadParam, "cache needs --cache or FANRAM_CACHE");
    Json j;
    j["command"] = "cache";
    if (o.action == "list") {
        j["records"] = cache->record_count();
        emit(out, j);
        return 0;
    }
    if (o.action != "lookup") throw Error(ErrorCode::BadParam, "cache action must be list or lookup");
    const auto red = o.red.empty() ? std::string{} : parse_target(o.red).to_string();
    const auto blue = o.blue.empty() ? std::string{} : parse_target(o.blue).to_string();
    const auto hit = cache->lookup(o.kind, red, blue, o.params);
    j["hit"] = hit.has_value();
    j["record"] = hit ? hit->to_json() : Json(nullptr);
    emit(out, j);
    return hit ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Certification and exact search for Ramsey numbers of cliques and matchings versus generalized fans",
                 "fanram"};
    app.require_subcommand(1);

    auto add_targets = [&](CLI::App* sub, bool required) {
        auto* r = sub->add_option("--red", o.red, "red target (K3, F:t,n, M:s, <s>xF:t,n, G6:...)");
        auto* b = sub->add_option("--blue", o.blue, "blue target");
        if (required) {
            r->required();
            b->required();
        }
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--lo", o.lo, "lowest order to try");
        sub->add_option("--hi", o.hi, "highest order to try");
        sub->add_option("--budget", o.budget, "DFS node budget per host order");
        sub->add_option("--threads", o.threads, "thread count hint");
        sub->add_option("--iso-depth", o.iso_depth, "isomorph rejection depth");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--cache", o.cache_path, "result cache file");
        sub->add_option("--out", o.out_path, "write the witness coloring (.fr2)");
        sub->add_flag("--no-construction-seed", o.no_seed, "do not lift lo with known constructions");
    };

    auto* construct = app.add_subcommand("construct", "build an extremal coloring and certify it");
    construct->add_option("--family", o.family, "thm17 | matching-fan | burr")->required();
    construct->add_option("--m", o.m);
    construct->add_option("--s", o.s);
    construct->add_option("--t", o.t);
    construct->add_option("--n", o.n);
    construct->add_option("--chi", o.chi);
    construct->add_option("--surplus", o.surplus);
    construct->add_option("--h-order", o.h_order);
    construct->add_option("--out", o.out_path, "write the coloring (.fr2)");
    add_targets(construct, false);

    auto* check = app.add_subcommand("check-free", "certify a coloring file against two targets");
    check->add_option("--coloring", o.coloring, ".fr2 file")->required();
    check->add_option("--cache", o.cache_path, "result cache file");
    add_targets(check, true);

    auto* detect = app.add_subcommand("detect", "look for a target in a graph");
    detect->add_option("--graph", o.graph, "graph6 (optionally prefixed G6:)");
    detect->add_option("--coloring", o.coloring, ".fr2 file");
    detect->add_option("--side", o.side, "red | blue when reading a coloring");
    detect->add_option("--target", o.target, "target pattern")->required();

    auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound");
    bound->set_help_flag("--help", "print this help message and exit");
    bound->add_option("--formula", o.formula, "formula id, burr, or star-lower")->required();
    bound->add_option("--m", o.m);
    bound->add_option("--s", o.s);
    bound->add_option("--t", o.t);
    bound->add_option("--n", o.n);
    bound->add_option("--base", o.base, "r(K_m, F_{t,n}) for thm1.7hi");
    bound->add_option("--g", o.g_target, "graph G as a target pattern");
    bound->add_option("--h", o.h_target, "graph H as a target pattern");

    auto* ramsey = app.add_subcommand("ramsey", "exact Ramsey number by exhaustive search");
    add_targets(ramsey, true);
    add_search(ramsey);

    auto* star = app.add_subcommand("star", "exact star-critical Ramsey number");
    add_targets(star, true);
    add_search(star);
    star->add_option("--r", o.r, "known Ramsey number (searched in [lo, hi] when omitted)");
    star->add_flag("--dedup", o.dedup, "deduplicate base colorings up to isomorphism");

    auto* packing = app.add_subcommand("packing-check", "sample min-degree graphs and look for K_t packings");
    packing->add_option("--t", o.t)->required();
    packing->add_option("--n", o.n)->required();
    packing->add_option("--trials", o.trials);
    packing->add_option("--seed", o.seed);
    packing->add_option("--threads", o.threads);

    auto* cache = app.add_subcommand("cache", "inspect the result cache");
    cache->add_option("action", o.action, "list | lookup");
    cache->add_option("--cache", o.cache_path, "result cache file");
    cache->add_option("--kind", o.kind, "ramsey | star | certificate");
    cache->add_option("--params", o.params, "parameter key as stored");
    add_targets(cache, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*construct) return cmd_construct(o, out);
        if (*check) return cmd_check_free(o, out, err);
        if (*detect) return cmd_detect(o, out);
        if (*bound) return cmd_bound(o, out);
        if (*ramsey) return cmd_search(o, false, out, err);
        if (*star) return cmd_search(o, true, out, err);
        if (*packing) return cmd_packing(o, out);
        if (*cache) return cmd_cache(o, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace fanram::cli
