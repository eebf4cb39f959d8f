#include <doctest.h>

#include <random>

#include "dyckpaint/choosability.hpp"
#include "dyckpaint/errors.hpp"
#include "dyckpaint/paint_solver.hpp"
#include "dyckpaint/pathcount.hpp"
#include "oracles.hpp"

using namespace dyckpaint;

namespace {
ListAssignment la(std::vector<std::vector<int>> lists) { return ListAssignment(std::move(lists)); }
} // namespace

TEST_CASE("list colourability") {
    const SimpleGraph k2 = SimpleGraph::complete(2);
    CHECK_FALSE(is_colorable(k2, la({{1}, {1}})));
    CHECK(is_colorable(k2, la({{1}, {2}})));
    CHECK_FALSE(is_colorable(SimpleGraph::complete(3), la({{1, 2}, {1, 2}, {1, 2}})));
    CHECK_THROWS_AS(la({{}}), std::invalid_argument);
}

TEST_CASE("colour-set families and their count") {
    const SimpleGraph k2 = SimpleGraph::complete(2);
    {
        const PhiKappa pk = phi_kappa(k2, la({{1, 2}, {1, 2}}));
        CHECK(pk.kappa == ExtNat::of(1));
        CHECK(pk.phi == std::vector<std::vector<int>>{{1, 2}});
    }
    {
        const PhiKappa pk = phi_kappa(k2, la({{1}, {1, 2, 3}}));
        CHECK(pk.kappa == ExtNat::of(2));
        CHECK(pk.phi == std::vector<std::vector<int>>{{1, 2}, {1, 3}});
    }
    {
        const SimpleGraph e2 = SimpleGraph::edgeless(2);
        CHECK(phi_kappa(e2, la({{1}, {2}})).kappa == ExtNat::of(1));
        CHECK(phi_kappa(e2, la({{1}, {1}})).kappa == ExtNat::infinity());
    }
    // not colourable at all
    CHECK(phi_kappa(k2, la({{1}, {1}})).kappa == ExtNat::of(0));
}

TEST_CASE("colour permutations do not change the count") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2) g.add_edge(u, v);
            }
        }
        std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
        for (auto& l : lists) {
            const int size = 1 + static_cast<int>(rng() % 3);
            while (static_cast<int>(l.size()) < size) {
                const int c = static_cast<int>(rng() % 5);
                if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
            }
        }
        const ExtNat before = phi_kappa(g, ListAssignment(lists)).kappa;
        std::vector<int> perm = {3, 0, 4, 1, 2};
        for (auto& l : lists) {
            for (auto& c : l) c = perm[static_cast<std::size_t>(c)];
        }
        CHECK(phi_kappa(g, ListAssignment(lists)).kappa == before);
    }
}

TEST_CASE("extendability equals the count comparison") {
    const SimpleGraph k2 = SimpleGraph::complete(2);
    CHECK(is_m_extendable(k2, la({{1, 2}, {1, 2}}), 0));
    CHECK_FALSE(is_m_extendable(k2, la({{1, 2}, {1, 2}}), 1));
    CHECK(is_m_extendable(SimpleGraph::edgeless(2), la({{1}, {1}}), 1000000));
    CHECK(is_m_extendable(SimpleGraph::complete(1), la({{1}}), 0));
    CHECK_FALSE(is_m_extendable(SimpleGraph::complete(1), la({{1}}), 1));
}

TEST_CASE("extendability agrees with direct extension enumeration") {
    const std::vector<std::pair<SimpleGraph, ListAssignment>> instances = {
        {SimpleGraph::complete(1), la({{1}})},
        {SimpleGraph::complete(2), la({{1, 2}, {1, 2}})},
        {SimpleGraph::complete(2), la({{1}, {1, 2, 3}})},
        {SimpleGraph::edgeless(2), la({{1}, {1}})},
        {SimpleGraph::path(3), la({{1, 2}, {1, 3}, {2, 3}})},
    };
    for (const auto& [g, l] : instances) {
        for (int m = 0; m <= 3; ++m) {
            CHECK(is_m_extendable(g, l, static_cast<std::uint64_t>(m)) ==
                  oracles::m_extendable_by_enumeration(g, l, m));
        }
    }
}

TEST_CASE("minimum counts over all assignments") {
    CHECK(m_c_small(SimpleGraph::complete(2), TokenMap({2, 2})) == ExtNat::of(1));
    CHECK(m_c_small(SimpleGraph::edgeless(2), TokenMap({2, 2})) == ExtNat::of(4));
    CHECK(m_c_small(SimpleGraph::complete(2), TokenMap({1, 3})) == ExtNat::of(2));
    CHECK(m_c_small(SimpleGraph::complete(2), TokenMap({1, 1})) == ExtNat::of(0));
    CHECK_THROWS_AS(m_c_small(SimpleGraph::complete(4), TokenMap({1, 1, 1, 1})), cap_exceeded);
    CHECK_THROWS_AS(m_c_small(SimpleGraph::complete(3), TokenMap({4, 4, 4})), cap_exceeded);
}

TEST_CASE("clique minimum counts match the path counts") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        auto gen = [&](auto&& self, int low) -> void {
            if (static_cast<int>(cur.size()) == n) {
                all.push_back(cur);
                return;
            }
            for (int v = low; v <= 3; ++v) {
                cur.push_back(v);
                self(self, v);
                cur.pop_back();
            }
        };
        gen(gen, 1);
        for (const auto& f : all) {
            const ExtNat mc = m_c_small(SimpleGraph::complete(n), TokenMap(f));
            const Count expected = psi(XVector::from_tokens(f));
            REQUIRE_FALSE(mc.is_infinite);
            CHECK(Count(static_cast<unsigned long>(mc.value)) == expected);
        }
    }
}

TEST_CASE("paintable instances are list-colourable") {
    // exhaustive over canonical assignments for up to 3 vertices
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2) g.add_edge(u, v);
            }
        }
        std::vector<int> f(static_cast<std::size_t>(n));
        for (auto& t : f) t = 1 + static_cast<int>(rng() % 3);
        if (!is_paintable(g, TokenMap(f))) continue;
        // every assignment is colourable iff the minimum count is positive
        const ExtNat mc = m_c_small(g, TokenMap(f));
        CHECK((mc.is_infinite || mc.value >= 1));
    }
}

TEST_CASE("the adversarial assignment is never colourable") {
    {
        const BadListInstance bad = bad_list_assignment(TokenMap({1, 3}));
        CHECK(bad.n == 2);
        CHECK(bad.m == 2);
        CHECK(bad.lists.list(0) == std::vector<int>{1});
        CHECK(bad.lists.list(1) == std::vector<int>{1, 2, 3});
        CHECK(bad.lists.list(2) == std::vector<int>{1, 2});
        CHECK(bad.lists.list(3) == std::vector<int>{1, 3});
        CHECK_FALSE(is_colorable(bad.graph, bad.lists));
    }
    {
        // f = 1..n has a single dominated path, listed {1..n}
        const BadListInstance bad = bad_list_assignment(TokenMap({1, 2, 3, 4}));
        CHECK(bad.m == 1);
        CHECK(bad.lists.list(4) == std::vector<int>{1, 2, 3, 4});
        CHECK_FALSE(is_colorable(bad.graph, bad.lists));
    }
    {
        const BadListInstance bad = bad_list_assignment(TokenMap({3, 6, 6, 9}));
        CHECK(bad.m == 72);
        for (int j = 0; j < bad.m; ++j) {
            CHECK(bad.lists.list(bad.n + j).size() == 4);
        }
        CHECK_FALSE(is_colorable(bad.graph, bad.lists));
    }
    // one vertex short of the construction, the instance is colourable
    {
        const BadListInstance bad = bad_list_assignment(TokenMap({1, 3}));
        std::vector<std::vector<int>> lists = bad.lists.lists();
        lists.pop_back();
        std::vector<int> keep = {0, 1, 2};
        CHECK(is_colorable(bad.graph.induced(keep), ListAssignment(lists)));
    }
}

TEST_CASE("game value never exceeds the colouring value") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2) g.add_edge(u, v);
            }
        }
        std::vector<int> f(static_cast<std::size_t>(n));
        for (auto& t : f) t = 1 + static_cast<int>(rng() % 3);
        const int mp = m_p(g, TokenMap(f));
        const ExtNat mc = m_c_small(g, TokenMap(f));
        if (!mc.is_infinite) CHECK(static_cast<std::uint64_t>(mp) <= mc.value);
    }
}
