#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyckpaint/graph.hpp"
#include "dyckpaint/tokens.hpp"

namespace dyckpaint {

// Per-vertex colour lists; colours are small nonnegative integers, lists are
// nonempty sets.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> lists);

    int size() const { return static_cast<int>(lists_.size()); }
    const std::vector<int>& list(int v) const;
    const std::vector<std::vector<int>>& lists() const { return lists_; }
    std::vector<int> colour_universe() const; // sorted distinct colours

private:
    std::vector<std::vector<int>> lists_; // each sorted, distinct
};

// Proper colouring with each colour drawn from its vertex's list; decided by
// backtracking over a fixed order (largest degree first).
bool is_colorable(const SimpleGraph& g, const ListAssignment& l);

// Natural number extended with infinity; infinity compares above everything
// and prints as "inf".
struct ExtNat {
    static ExtNat infinity() { return ExtNat{true, 0}; }
    static ExtNat of(std::uint64_t v) { return ExtNat{false, v}; }

    bool is_infinite = false;
    std::uint64_t value = 0;

    bool operator==(const ExtNat& o) const {
        return is_infinite == o.is_infinite && (is_infinite || value == o.value);
    }
    bool operator<(const ExtNat& o) const {
        if (is_infinite) return false;
        if (o.is_infinite) return true;
        return value < o.value;
    }
    std::string str() const { return is_infinite ? "inf" : std::to_string(value); }
};

// phi: the family of colour sets used by list colourings (meaningful only
// when kappa is finite). kappa: infinity when some colouring repeats a
// colour, zero when no colouring exists, |phi| otherwise.
struct PhiKappa {
    std::vector<std::vector<int>> phi; // sorted sets, sorted family
    ExtNat kappa;
};
PhiKappa phi_kappa(const SimpleGraph& g, const ListAssignment& l);

// True iff m < kappa(g, l); every way of attaching m independent vertices
// with |V(g)|-colour lists still admits a colouring.
bool is_m_extendable(const SimpleGraph& g, const ListAssignment& l, std::uint64_t m);

// min kappa over all f-list assignments, enumerated over a universe of
// sum(f) colours up to colour renaming. Requires |V| <= 3 and sum(f) <= 9.
ExtNat m_c_small(const SimpleGraph& g, const TokenMap& f);

// The adversarial instance for a clique with token counts f: the join of
// K_n with one independent vertex per dominated path, clique vertex i
// listed {1..f_i} and each independent vertex listed with its path's
// vertical-edge positions. The result is never list-colourable.
struct BadListInstance {
    int n = 0;
    int m = 0;
    SimpleGraph graph;   // the join
    TokenMap tokens;     // f extended by n per independent vertex
    ListAssignment lists;
};
BadListInstance bad_list_assignment(const TokenMap& f);

} // namespace dyckpaint
