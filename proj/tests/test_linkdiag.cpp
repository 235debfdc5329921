// Diagram layer: PD parsing, orientation and signs, presentations, corpus.
#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "skein/bracket_oracle.hpp"
#include "skein/corpus.hpp"
#include "skein/linkdiag.hpp"

using namespace skein;

static Laurent table_jones(const std::map<int, int>& vt, bool mirrored) {
    // Published reduced Jones V(t) -> multiplicative convention: substitute
    // t = s^{-4} (t = s^{4} when our diagram mirrors the tabulated one) and
    // multiply by the unknot value [2].
    Laurent acc;
    for (auto& [e, c] : vt) acc += Laurent::var_pow(VAR_S, int32_t((mirrored ? 4 : -4) * e), Int(c));
    return acc * qint_laurent(2);
}

TEST_CASE("PD parse and print round-trip") {
    for (const CorpusEntry& e : corpus()) {
        LinkDiagram d = LinkDiagram::parse_pd(e.pd);
        CHECK(d.pd_string() == e.pd);
        // parsing the printed form again is stable
        CHECK(LinkDiagram::parse_pd(d.pd_string()).pd_string() == e.pd);
    }
    CHECK(LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").crossing_count() == 3);
    CHECK(LinkDiagram::parse_pd("PD[U, U]").component_count() == 2);
    CHECK_THROWS(LinkDiagram::parse_pd("PD[X[1,1,1,1], X[1,2,3,4]]"));
    CHECK_THROWS(LinkDiagram::parse_pd("PD[Y[1,2,3,4]]"));
}

TEST_CASE("braid and plat tracing basics") {
    LinkDiagram tref = LinkDiagram::from_braid(2, {1, 1, 1});
    CHECK(tref.component_count() == 1);
    CHECK(tref.writhe() == 3);
    for (const Crossing& c : tref.crossings()) CHECK(c.sign == 1);

    LinkDiagram fig8 = LinkDiagram::from_braid(3, {1, -2, 1, -2});
    CHECK(fig8.component_count() == 1);
    CHECK(fig8.writhe() == 0);

    CHECK(LinkDiagram::from_braid(3, {}).component_count() == 3);
    CHECK(LinkDiagram::from_plat(4, {}).component_count() == 2);
    CHECK(LinkDiagram::from_plat(2, {}).component_count() == 1);
    CHECK_THROWS(LinkDiagram::from_braid(2, {2}));
    CHECK_THROWS(LinkDiagram::from_plat(3, {1}));
}

TEST_CASE("corpus: presentations agree and metadata is accurate") {
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        LinkDiagram pd = corpus_diagram(e);
        LinkDiagram br = BraidWord::parse(e.braid).diagram();
        LinkDiagram pl = PlatWord::parse(e.plat).diagram();
        CHECK(pd.component_count() == e.components);
        CHECK(br.component_count() == e.components);
        CHECK(pl.component_count() == e.components);
        CHECK(pd.writhe() == e.writhe);
        CHECK(br.writhe() == e.writhe);
        Laurent j = jones_statesum(pd);
        CHECK(j == jones_statesum(br));
        CHECK(j == jones_statesum(pl));
    }
}

TEST_CASE("corpus knots match published Jones tables") {
    // Reduced Jones polynomials in t of the commonly tabulated chirality.
    std::map<std::string, std::map<int, int>> tables = {
        {"unknot", {{0, 1}}},
        {"3_1", {{-4, -1}, {-3, 1}, {-1, 1}}},
        {"4_1", {{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}},
        {"5_1", {{-7, -1}, {-6, 1}, {-5, -1}, {-4, 1}, {-2, 1}}},
        {"5_2", {{-6, -1}, {-5, 1}, {-4, -1}, {-3, 2}, {-2, -1}, {-1, 1}}},
        {"6_1", {{-4, 1}, {-3, -1}, {-2, 1}, {-1, -2}, {0, 2}, {1, -1}, {2, 1}}},
        {"6_2", {{-5, 1}, {-4, -2}, {-3, 2}, {-2, -2}, {-1, 2}, {0, -1}, {1, 1}}},
        {"6_3", {{-3, -1}, {-2, 2}, {-1, -2}, {0, 3}, {1, -2}, {2, 2}, {3, -1}}},
    };
    for (const CorpusEntry* e : corpus_knots()) {
        CAPTURE(e->name);
        Laurent j = jones_statesum(corpus_diagram(*e));
        CHECK(j == table_jones(tables.at(e->name), e->mirror_of_table));
    }
}

TEST_CASE("mirror flips writhe and inverts the Jones variable") {
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        LinkDiagram d = corpus_diagram(e);
        LinkDiagram m = d.mirror();
        CHECK(m.writhe() == -d.writhe());
        CHECK(m.mirror().pd_string() == d.pd_string());
        Laurent j = jones_statesum(d);
        Laurent::UnitSub inv_s;  // s -> s^{-1}
        inv_s.e[VAR_S] = -1;
        CHECK(jones_statesum(m) == j.substitute_units({inv_s, std::nullopt, std::nullopt, std::nullopt}));
    }
}

TEST_CASE("linking matrix") {
    auto lk_hopf = corpus_diagram(*corpus_find("hopf")).linking_matrix();
    CHECK(lk_hopf[0][1] == 1);
    CHECK(lk_hopf[0][0] == 0);  // each component individually unknotted
    int n = 4;
    for (const char* name : {"T(2,4)", "T(2,6)", "T(2,8)"}) {
        auto lk = corpus_diagram(*corpus_find(name)).linking_matrix();
        CHECK(lk[0][1] == n / 2);
        CHECK(lk[1][0] == n / 2);
        CHECK(lk[0][0] == 0);
        n += 2;
    }
    // negative Hopf link
    auto lkm = LinkDiagram::from_braid(2, {-1, -1}).linking_matrix();
    CHECK(lkm[0][1] == -1);
}

TEST_CASE("cabling a braid word") {
    CHECK(cable_word({1}, 2) == std::vector<int>{2, 1, 3, 2});
    BraidWord tref{2, {1, 1, 1}};
    for (int k : {2, 3}) {
        BraidWord c = cable(tref, k);
        LinkDiagram d = c.diagram();
        CHECK(d.component_count() == k);  // cable of a knot: k parallel strands
        CHECK(d.writhe() == k * k * 3);   // blackboard framing scales writhe by k^2
    }
    BraidWord fig8{3, {1, -2, 1, -2}};
    CHECK(cable(fig8, 2).diagram().writhe() == 0);
}

TEST_CASE("corpus lookup") {
    CHECK(corpus_find("HOPF") != nullptr);
    CHECK(corpus_find("t(2,6)") != nullptr);
    CHECK(corpus_find("9_99") == nullptr);
    CHECK(corpus_knots().size() == 8);
}
