#include <doctest.h>

#include <stdexcept>

#include "dyckpaint/instance.hpp"

using namespace dyckpaint;

TEST_CASE("graph builders") {
    CHECK(build_graph(GraphKind::Complete, 3).edge_count() == 3);
    CHECK(build_graph(GraphKind::Edgeless, 4).edge_count() == 0);
    const SimpleGraph p3 = build_graph(GraphKind::Path, 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK_THROWS_AS(SimpleGraph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph::from_edges(2, {{0, 5}}), std::out_of_range);
}

TEST_CASE("join and union instances") {
    auto [k3, f3] = join_instance(SimpleGraph::complete(2), TokenMap({2, 2}), 1);
    CHECK(k3 == SimpleGraph::complete(3));
    CHECK(f3 == TokenMap({2, 2, 2}));

    auto [star, fs] = join_instance(SimpleGraph::complete(1), TokenMap({1}), 2);
    CHECK(star.edge_count() == 2);
    CHECK(star.degree(0) == 2);
    CHECK(fs == TokenMap({1, 1, 1}));

    auto [k24, f24] = join_instance(SimpleGraph::edgeless(2), TokenMap({2, 2}), 4);
    CHECK(k24.vertex_count() == 6);
    CHECK(k24.edge_count() == 8);
    CHECK(f24 == TokenMap({2, 2, 2, 2, 2, 2}));

    auto [u1, g1] = union_instance({{SimpleGraph::complete(1), TokenMap({2})},
                                    {SimpleGraph::complete(1), TokenMap({3})}});
    CHECK(u1 == SimpleGraph::edgeless(2));
    CHECK(g1 == TokenMap({2, 3}));

    auto [u2, g2] = union_instance({{SimpleGraph::complete(2), TokenMap({2, 2})}});
    CHECK(u2 == SimpleGraph::complete(2));
    CHECK(g2 == TokenMap({2, 2}));

    auto [u3, g3] = union_instance({{SimpleGraph::complete(1), TokenMap({1})},
                                    {SimpleGraph::complete(2), TokenMap({1, 2})}});
    CHECK(u3.vertex_count() == 3);
    CHECK(u3.edge_count() == 1);
    CHECK(g3 == TokenMap({1, 1, 2}));

    CHECK_THROWS_AS(union_instance({}), std::invalid_argument);
    CHECK_THROWS_AS(join_instance(SimpleGraph::complete(2), TokenMap({1}), 0),
                    std::invalid_argument);
}

TEST_CASE("join edge and degree arithmetic") {
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const SimpleGraph g = SimpleGraph::path(a);
            const SimpleGraph h = SimpleGraph::complete(b);
            const SimpleGraph j = join(g, h);
            CHECK(j.edge_count() == g.edge_count() + h.edge_count() + a * b);
            const SimpleGraph u = disjoint_union(g, h);
            CHECK(u.edge_count() == g.edge_count() + h.edge_count());
            for (int v = 0; v < a; ++v) CHECK(j.degree(v) == g.degree(v) + b);
        }
    }
}

TEST_CASE("instance files round-trip") {
    const std::string text = R"({
        "graph": {"kind": "explicit", "n": 3, "edges": [[0, 1], [1, 2]]},
        "f": [1, 2, 3],
        "m": 2
    })";
    const Instance inst = parse_instance(text);
    CHECK(inst.graph == SimpleGraph::path(3));
    CHECK(inst.tokens == TokenMap({1, 2, 3}));
    CHECK(inst.m == 2);

    const Instance again = parse_instance(instance_to_json(inst));
    CHECK(again.graph == inst.graph);
    CHECK(again.tokens == inst.tokens);
    CHECK(again.m == inst.m);

    auto [jg, jf] = inst.materialize();
    CHECK(jg.vertex_count() == 5);
    CHECK(jf == TokenMap({1, 2, 3, 3, 3}));

    CHECK_THROWS_AS(parse_instance("{\"graph\": {\"kind\": \"complete\", \"n\": 2}, \"f\": [1]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_instance("{\"graph\": {\"kind\": \"weird\", \"n\": 2}, \"f\": [1, 1]}"),
                    std::invalid_argument);
}
