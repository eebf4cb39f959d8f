#include "dyckpaint/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dyckpaint {

using nlohmann::json;

std::pair<SimpleGraph, TokenMap> Instance::materialize() const {
    return join_instance(graph, tokens, m);
}

Instance parse_instance(const std::string& json_text) {
    json doc = json::parse(json_text);
    if (!doc.is_object() || !doc.contains("graph") || !doc.contains("f")) {
        throw std::invalid_argument("instance must contain \"graph\" and \"f\"");
    }
    const json& jg = doc.at("graph");
    Instance inst;
    inst.kind = graph_kind_from_string(jg.value("kind", std::string("explicit")));
    int n = jg.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    if (jg.contains("edges")) {
        for (const auto& e : jg.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("edges must be pairs [i, j]");
            }
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
    }
    inst.graph = build_graph(inst.kind, n, edges);
    inst.tokens = TokenMap(doc.at("f").get<std::vector<int>>());
    if (inst.tokens.size() != inst.graph.vertex_count()) {
        throw std::invalid_argument("\"f\" must list one token count per vertex");
    }
    inst.m = doc.value("m", 0);
    if (inst.m < 0) throw std::invalid_argument("\"m\" must be nonnegative");
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string instance_to_json(const Instance& inst, int indent) {
    json jg;
    jg["kind"] = to_string(inst.kind);
    jg["n"] = inst.graph.vertex_count();
    if (inst.kind == GraphKind::Explicit) {
        json edges = json::array();
        for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
        jg["edges"] = edges;
    }
    json doc;
    doc["graph"] = jg;
    doc["f"] = inst.tokens.values();
    doc["m"] = inst.m;
    return doc.dump(indent);
}

} // namespace dyckpaint
