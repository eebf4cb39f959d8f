#pragma once

#include <string>
#include <vector>

#include "dyckpaint/graph.hpp"
#include "dyckpaint/tokens.hpp"

namespace dyckpaint {

// A game/colouring instance as stored on disk:
//   {"graph": {"kind": "...", "n": int, "edges": [[i,j],...]}, "f": [ints], "m": int}
// `m` is the size of the joined independent side; zero when absent.
struct Instance {
    GraphKind kind = GraphKind::Explicit;
    SimpleGraph graph;
    TokenMap tokens;
    int m = 0;

    // The materialized join with the extended token map; the plain
    // (graph, tokens) pair when m == 0.
    std::pair<SimpleGraph, TokenMap> materialize() const;
};

Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& inst, int indent = 2);

} // namespace dyckpaint
