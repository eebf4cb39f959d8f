#pragma once

// Test-only oracles, deliberately independent of the library's algorithms:
// a step-by-step path counter with no reduction or memoisation, a cofactor
// determinant, a factorial binomial, and an extension enumerator for the
// m-extendability check.

#include <vector>

#include "dyckpaint/bigint.hpp"
#include "dyckpaint/choosability.hpp"
#include "dyckpaint/graph.hpp"
#include "dyckpaint/xvector.hpp"

namespace oracles {

using dyckpaint::Count;

// Counts x-dominated paths by walking the grid vertex by vertex against the
// raw (unreduced) vector.
inline Count brute_force_psi_rec(const dyckpaint::XVector& x, int a, int b) {
    const int n = x.size();
    if (b < n && a > x.at(b + 1)) return Count(0);
    if (b > n || (n > 0 && a > x.at(n))) return Count(0);
    if (b == n && a == (n == 0 ? 0 : x.at(n))) return Count(1);
    Count total = brute_force_psi_rec(x, a, b + 1);
    total += brute_force_psi_rec(x, a + 1, b);
    return total;
}

inline Count brute_force_psi(const dyckpaint::XVector& x) {
    if (x.size() == 0) return Count(1);
    return brute_force_psi_rec(x, 0, 0);
}

// Cofactor expansion along the first row; fine up to 4x4.
inline Count cofactor_det(const std::vector<std::vector<Count>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Count(1);
    if (n == 1) return m[0][0];
    Count total(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Count>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Count> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        Count term = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0) total += term; else total -= term;
    }
    return total;
}

inline Count factorial_binomial(int n, int k) {
    if (k < 0 || k > n) return Count(0);
    Count num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= Count(n - i);
        den *= Count(i + 1);
    }
    return num / den;
}

// Combinations with repetition over `items`, size m, fed to `visit`;
// returns false as soon as visit does.
template <typename T, typename Visit>
bool for_each_multiset(const std::vector<T>& items, int m, Visit&& visit,
                       std::vector<T>& current, std::size_t from) {
    if (m == 0) return visit(current);
    for (std::size_t i = from; i < items.size(); ++i) {
        current.push_back(items[i]);
        if (!for_each_multiset(items, m - 1, visit, current, i)) return false;
        current.pop_back();
    }
    return true;
}

// Direct m-extendability check: enumerate every way (up to reordering) of
// listing m joined vertices with |V|-subsets of the universe made of the
// assignment's colours plus |V| fresh ones; true iff every extension stays
// colourable.
inline bool m_extendable_by_enumeration(const dyckpaint::SimpleGraph& g,
                                        const dyckpaint::ListAssignment& l, int m) {
    using dyckpaint::ListAssignment;
    using dyckpaint::SimpleGraph;
    const int n = g.vertex_count();
    std::vector<int> universe = l.colour_universe();
    int fresh = universe.empty() ? 1000 : universe.back() + 1;
    for (int i = 0; i < n; ++i) universe.push_back(fresh + i);

    // all n-subsets of the universe
    std::vector<std::vector<int>> candidate_lists;
    std::vector<int> pick;
    auto combos = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == n) {
            candidate_lists.push_back(pick);
            return;
        }
        for (std::size_t i = from; i < universe.size(); ++i) {
            pick.push_back(universe[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    combos(combos, 0);

    SimpleGraph joined = dyckpaint::join(g, SimpleGraph::edgeless(m));
    std::vector<std::vector<int>> current;
    auto check = [&](const std::vector<std::vector<int>>& block_lists) {
        std::vector<std::vector<int>> all = l.lists();
        for (const auto& bl : block_lists) all.push_back(bl);
        return dyckpaint::is_colorable(joined, ListAssignment(all));
    };
    return for_each_multiset(candidate_lists, m, check, current, 0);
}

} // namespace oracles
