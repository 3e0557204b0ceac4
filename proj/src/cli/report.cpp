#include "fanram/cli.hpp"
#include "fanram/graph6.hpp"

namespace fanram::cli {

Json witness_json(const EmbeddingWitness& w) {
    Json j;
    j["pattern_order"] = w.pattern_order();
    j["groups"] = w.groups;
    return j;
}

Json coloring_json(const TwoColoring& c) {
    Json j;
    j["order"] = c.order();
    j["host"] = graph6::encode(c.host());
    j["red"] = graph6::encode(c.red_graph());
    j["red_edges"] = c.red_graph().size();
    j["blue_edges"] = c.blue_graph().size();
    return j;
}

Json certificate_json(const Certificate& c) {
    Json j;
    j["red_target"] = c.red_target.to_string();
    j["blue_target"] = c.blue_target.to_string();
    j["coloring"] = coloring_json(c.coloring);
    j["red_verdict"] = c.red_violation ? witness_json(*c.red_violation) : Json("absent");
    j["blue_verdict"] = c.blue_violation ? witness_json(*c.blue_violation) : Json("absent");
    j["valid"] = c.valid();
    j["content_hash"] = c.content_hash;
    return j;
}

Json bound_json(const BoundReport& r) {
    Json j;
    j["formula"] = r.formula_id;
    j["params"] = Json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["value"] = r.value;
    j["kind"] = to_string(r.kind);
    j["validity"] = Json::array();
    for (const auto& c : r.validity)
        j["validity"].push_back(Json{{"condition", c.condition}, {"holds", c.holds}, {"assumed", c.assumed}});
    j["valid"] = r.valid();
    return j;
}

Json stats_json(const SearchStats& s) {
    return Json{{"nodes", s.nodes}, {"red_prunes", s.red_prunes}, {"blue_prunes", s.blue_prunes}, {"iso_skips", s.iso_skips}};
}

Json search_json(const SearchResult& r) {
    Json j;
    j["status"] = to_string(r.status);
    j["value"] = r.value ? Json(*r.value) : Json(nullptr);
    j["witness"] = r.witness ? coloring_json(*r.witness) : Json(nullptr);
    j["stats"] = stats_json(r.stats);
    return j;
}

Json packing_json(const PackingReport& r) {
    Json j;
    j["t"] = r.t;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["min_degree_floor"] = r.min_degree_floor;
    j["found"] = r.found;
    j["failures"] = r.failures;
    return j;
}

}  // namespace fanram::cli
