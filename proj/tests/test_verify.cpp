#include <doctest.h>

#include "dyckpaint/verify.hpp"

using namespace dyckpaint;

TEST_CASE("clique sweep at a small budget") {
    const Report r = verify_clique_join(2, 3);
    CHECK(r.rows.size() == 3 + 6);
    CHECK(r.ok());
    CHECK(r.cap_skips() == 0);
    // first rows are the single-vertex cliques
    CHECK(r.rows[0].instance == "K1 f=(1)");
    CHECK(r.rows[0].m_p == "1");
    CHECK(r.rows[0].m_c == "1");
    CHECK(r.rows[0].psi_dp == "1");
}

TEST_CASE("edgeless sweep gives token products") {
    const Report r = verify_edgeless(2, 2);
    CHECK(r.ok());
    for (const auto& row : r.rows) {
        CHECK(row.status == "ok");
        CHECK(row.psi_dp == row.m_p);
    }
}

TEST_CASE("union products at a small budget") {
    std::vector<CatalogPart> catalog = {
        {"K1(1)", SimpleGraph::complete(1), TokenMap({1})},
        {"K1(2)", SimpleGraph::complete(1), TokenMap({2})},
        {"K2(1,1)", SimpleGraph::complete(2), TokenMap({1, 1})},
    };
    const Report r = verify_union_product(catalog, false);
    CHECK(r.ok());
    CHECK(r.rows.size() == 6);
    bool saw_zero = false;
    for (const auto& row : r.rows) {
        if (row.instance.find("K2(1,1)") != std::string::npos) {
            CHECK(row.m_p == "0");
            saw_zero = true;
        }
    }
    CHECK(saw_zero);
}

TEST_CASE("reports are deterministic and well-formed") {
    const Report a = explore_path3(2);
    const Report b = explore_path3(2);
    CHECK(a.tsv() == b.tsv());
    CHECK(a.json_text() == b.json_text());
    CHECK(a.rows.size() == 8);
    CHECK(a.ok());
    const std::string tsv = a.tsv();
    CHECK(tsv.rfind("instance\tpsi_dp\tpsi_rec\tpsi_det\tm_p\tm_c\tstatus\n", 0) == 0);
    // every row has a colouring value at this budget, and the game value
    // never exceeds it
    for (const auto& row : a.rows) {
        CHECK(row.m_c != "-");
        CHECK(row.m_p != "-");
    }
}
