#include <catch2/catch_amalgamated.hpp>

#include "skein/corpus.hpp"
#include "skein/hk.hpp"
#include "skein/invariants_tl.hpp"
#include "skein/qint.hpp"

using namespace skein;

namespace {

Laurent apow(int e) { return Laurent::var_pow(VAR_A, e); }
Laurent zpow(int e) { return Laurent::var_pow(VAR_Z, e); }

LinkDiagram disjoint_union(const LinkDiagram& A, const LinkDiagram& B) {
    std::ostringstream os;
    os << "PD[";
    bool first = true;
    int shift = A.arc_count();
    auto emit = [&](const Crossing& c, int off) {
        if (!first) os << ", ";
        first = false;
        os << "X[" << c.end[0] + 1 + off << "," << c.end[1] + 1 + off << "," << c.end[2] + 1 + off << ","
           << c.end[3] + 1 + off << "]";
    };
    for (const Crossing& c : A.crossings()) emit(c, 0);
    for (const Crossing& c : B.crossings()) emit(c, shift);
    for (int u = 0; u < A.extra_unknots() + B.extra_unknots(); ++u) {
        if (!first) os << ", ";
        first = false;
        os << "U";
    }
    os << "]";
    return LinkDiagram::parse_pd(os.str());
}

}  // namespace

TEST_CASE("unknot values of the three polynomials") {
    LinkDiagram U = corpus_diagram(corpus()[0]);
    CHECK(homflypt(U) == (apow(1) - apow(-1)) * zpow(-1));
    CHECK(kauffman_poly(U) == (apow(1) + apow(-1)) * zpow(-1) - Laurent::from_int(1));
    CHECK(dubrovnik_poly(U) == (apow(1) - apow(-1)) * zpow(-1) + Laurent::from_int(1));
}

TEST_CASE("kink diagrams: framed kink factor a^{+-1}, unframed R1 invariance") {
    LinkDiagram pos = LinkDiagram::from_braid(2, {1});   // unknot diagram, writhe +1
    LinkDiagram neg = LinkDiagram::from_braid(2, {-1});  // unknot diagram, writhe -1
    Laurent dP = hk_detail::delta_homflypt();
    Laurent dK = hk_detail::delta_kauffman();
    Laurent dD = hk_detail::delta_dubrovnik();
    CHECK(homflypt(pos, true) == apow(1) * dP);
    CHECK(kauffman_poly(pos, true) == apow(1) * dK);
    CHECK(dubrovnik_poly(pos, true) == apow(1) * dD);
    CHECK(dubrovnik_poly(neg, true) == apow(-1) * dD);
    CHECK(homflypt(pos) == dP);
    CHECK(kauffman_poly(pos) == dK);
    CHECK(dubrovnik_poly(pos) == dD);
    CHECK(dubrovnik_poly(neg) == dD);
}

TEST_CASE("multiplicative under disjoint union") {
    LinkDiagram T = corpus_diagram(corpus()[1]);   // 3_1
    LinkDiagram F = corpus_diagram(corpus()[2]);   // 4_1
    LinkDiagram TF = disjoint_union(T, F);
    CHECK(homflypt(TF) == homflypt(T) * homflypt(F));
    CHECK(kauffman_poly(TF) == kauffman_poly(T) * kauffman_poly(F));
    CHECK(dubrovnik_poly(TF) == dubrovnik_poly(T) * dubrovnik_poly(F));
}

TEST_CASE("trefoil polynomials, pinned") {
    LinkDiagram T = corpus_diagram(corpus()[1]);  // left-handed trefoil (writhe -3)
    Laurent P = apow(-5) * zpow(-1) - Laurent::from_int(3) * apow(-3) * zpow(-1) - apow(-3) * zpow(1) +
                Laurent::from_int(2) * apow(-1) * zpow(-1) + apow(-1) * zpow(1);
    CHECK(homflypt(T) == P);
    // Cross-checked below against an independent engine through the rank-one
    // specializations; also reproducible by hand in three recursion steps.
    Laurent D = apow(-6) + apow(-5) * zpow(-1) - Laurent::from_int(3) * apow(-4) - apow(-4) * zpow(2) -
                Laurent::from_int(3) * apow(-3) * zpow(-1) - apow(-3) * zpow(1) + Laurent::from_int(3) * apow(-2) +
                apow(-2) * zpow(2) + Laurent::from_int(2) * apow(-1) * zpow(-1) + apow(-1) * zpow(1);
    CHECK(dubrovnik_poly(T) == D);
}

TEST_CASE("same link, different diagrams: pd, braid closure, and plat agree") {
    for (const CorpusEntry& e : corpus()) {
        INFO(e.name);
        LinkDiagram pd = corpus_diagram(e);
        LinkDiagram bd = BraidWord::parse(e.braid).diagram();
        LinkDiagram pl = PlatWord::parse(e.plat).diagram();
        CHECK(homflypt(pd) == homflypt(bd));
        CHECK(homflypt(pd) == homflypt(pl));
        CHECK(kauffman_poly(pd) == kauffman_poly(bd));
        CHECK(kauffman_poly(pd) == kauffman_poly(pl));
        CHECK(dubrovnik_poly(pd) == dubrovnik_poly(bd));
        CHECK(dubrovnik_poly(pd) == dubrovnik_poly(pl));
    }
}

TEST_CASE("i-twisted transform between Dubrovnik and Kauffman") {
    CHECK(lickorish_transform_check(corpus_diagram(corpus()[0])));  // unknot
    CHECK(lickorish_transform_check(corpus_diagram(corpus()[8])));  // hopf
    for (const CorpusEntry& e : corpus()) {
        INFO(e.name);
        CHECK(lickorish_transform_check(corpus_diagram(e)));
    }
}

TEST_CASE("mirror images: a -> 1/a (and z -> -z for the oriented and Dubrovnik cases)") {
    std::array<std::optional<Laurent::UnitSub>, kNumVars> ainv_zneg{};
    ainv_zneg[VAR_A] = Laurent::UnitSub{{0, -1, 0, 0}, 0, 1};
    ainv_zneg[VAR_Z] = Laurent::UnitSub{{0, 0, 1, 0}, 0, -1};
    std::array<std::optional<Laurent::UnitSub>, kNumVars> ainv{};
    ainv[VAR_A] = Laurent::UnitSub{{0, -1, 0, 0}, 0, 1};
    for (const CorpusEntry& e : corpus()) {
        INFO(e.name);
        LinkDiagram L = corpus_diagram(e);
        LinkDiagram M = L.mirror();
        CHECK(homflypt(M) == homflypt(L).substitute_units(ainv_zneg));
        CHECK(kauffman_poly(M) == kauffman_poly(L).substitute_units(ainv));
        CHECK(dubrovnik_poly(M) == dubrovnik_poly(L).substitute_units(ainv_zneg));
    }
}

TEST_CASE("crossing-selection order and memoization do not change the result") {
    for (const CorpusEntry& e : corpus()) {
        INFO(e.name);
        LinkDiagram L = corpus_diagram(e);
        Laurent p = homflypt(L);
        CHECK(p == homflypt(L, false, SkeinOrder::LastBad));
        CHECK(p == homflypt(L, false, SkeinOrder::FirstBad, false));
        Laurent d = dubrovnik_poly(L);
        CHECK(d == dubrovnik_poly(L, false, SkeinOrder::LastBad));
        CHECK(d == dubrovnik_poly(L, false, SkeinOrder::FirstBad, false));
        Laurent k = kauffman_poly(L);
        CHECK(k == kauffman_poly(L, false, SkeinOrder::LastBad));
        CHECK(k == kauffman_poly(L, false, SkeinOrder::FirstBad, false));
    }
}

TEST_CASE("rank-one specialization reproduces the Jones polynomial exactly") {
    // The bridge fixed on the unknot and trefoil turns out to be the
    // identity: substituting a = q^2, z = q - q^{-1} (with q = s^2) gives
    // the unreduced Jones polynomial on the nose, corpus-wide.
    std::array<std::optional<Laurent::UnitSub>, kNumVars> dbl{};
    dbl[VAR_S] = Laurent::UnitSub{{2, 0, 0, 0}, 0, 1};
    for (const CorpusEntry& e : corpus()) {
        INFO(e.name);
        LinkDiagram L = corpus_diagram(e);
        RatFunc rf = specialize_standard(L, LieFamily::SL, 2);
        auto lau = rf.as_laurent(VAR_S);
        REQUIRE(lau.has_value());
        CHECK(lau->substitute_units(dbl) == jones(L));
    }
}

TEST_CASE("low-rank coincidences tie the unoriented engine to the braid engines") {
    FieldPtr F = CycloField::get(40);
    Cyclo s = Cyclo::zeta_pow(F, 1);
    Cyclo q = s * s;
    for (const CorpusEntry& e : corpus()) {
        INFO(e.name);
        LinkDiagram L = corpus_diagram(e);
        // C1 = A1 with the variable doubled
        CHECK(specialize_standard(L, LieFamily::Sp, 1, q) == specialize_standard(L, LieFamily::SL, 2, q * q));
        // B1 = A1 on the adjoint: the 2-colored unreduced Jones polynomial
        std::array<std::optional<Cyclo>, kNumVars> at_s{};
        at_s[VAR_S] = s;
        Cyclo cj2 = colored_jones(PlatWord::parse(e.plat), 2).eval(F, at_s);
        CHECK(specialize_standard(L, LieFamily::SO_odd, 1, q) == cj2);
    }
}

TEST_CASE("unknot specializations are the quantum dimensions") {
    LinkDiagram U = corpus_diagram(corpus()[0]);
    for (long n = 2; n <= 5; ++n) {
        INFO("n = " << n);
        CHECK(specialize_standard(U, LieFamily::SL, n) == qint_rf(n, 1));
        CHECK(specialize_standard(U, LieFamily::SO_even, n) == qint_rf(2 * n - 1, 1) + RatFunc::from_int(1));
    }
    CHECK(specialize_standard(U, LieFamily::SO_odd, 1) == qint_rf(3, 1));
    // Sp(4): [5] - 1
    CHECK(specialize_standard(U, LieFamily::Sp, 2) == qint_rf(5, 1) - RatFunc::from_int(1));
}

TEST_CASE("generic and cyclotomic specializations agree at a root of unity") {
    // q = -exp(-2 pi i/18) = zeta_9^4 = zeta_36^16, the point used for the
    // D4 evaluation of the trefoil downstream.
    FieldPtr F = CycloField::get(36);
    Cyclo q = Cyclo::zeta_pow(F, 16);
    LinkDiagram T = corpus_diagram(corpus()[1]);
    RatFunc gen = specialize_standard(T, LieFamily::SO_even, 4);
    Cyclo direct = specialize_standard(T, LieFamily::SO_even, 4, q);
    CHECK(gen.eval(q) == direct);
    CHECK(!direct.is_zero());
}
