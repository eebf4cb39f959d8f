#pragma once

#include <string>
#include <vector>

#include "dyckpaint/graph.hpp"
#include "dyckpaint/tokens.hpp"

namespace dyckpaint {

// One sweep row. Count columns hold exact decimals, "inf", or "-" when not
// computed. status is "ok", "cap" (a resource limit stopped the row; not a
// failure) or "FAIL: <why>" (an identity violation).
struct ReportRow {
    std::string instance;
    std::string psi_dp = "-";
    std::string psi_rec = "-";
    std::string psi_det = "-";
    std::string m_p = "-";
    std::string m_c = "-";
    std::string status = "ok";
};

struct Report {
    std::string title;
    std::vector<ReportRow> rows;

    int failures() const;
    int cap_skips() const;
    bool ok() const { return failures() == 0; }
    std::string tsv() const;
    std::string json_text(int indent = 2) const;
};

// m_p(K_n, f) must equal the dominated-path count of x(f) for every
// monotone f with n <= n_max and values <= f_max; the list-colouring value
// is cross-checked where its enumeration is feasible.
Report verify_clique_join(int n_max, int f_max);

// On edgeless graphs both game values equal prod f.
Report verify_edgeless(int n_max, int f_max);

// Disjoint unions multiply the game values. The default catalog keeps every
// pairwise product small enough for exhaustive search.
struct CatalogPart {
    std::string name;
    SimpleGraph graph;
    TokenMap tokens;
};
std::vector<CatalogPart> default_union_catalog();
Report verify_union_product(const std::vector<CatalogPart>& catalog, bool include_triples = true);

// Data for the open P_3 question: the game value for every f in
// {1..f_max}^3, with the colouring value beside it where feasible. No
// identity is asserted beyond m_p <= m_c.
Report explore_path3(int f_max);

} // namespace dyckpaint
