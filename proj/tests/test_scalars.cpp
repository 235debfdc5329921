// Exactness tests for the scalar layer: cyclotomic fields, Laurent
// polynomials with a formal i, quantum integers, rational functions.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/qint.hpp"

using namespace skein;

TEST_CASE("cyclotomic polynomials, small orders") {
    auto coeffs = [](unsigned M) {
        std::vector<long> v;
        for (const Int& c : cyclotomic_polynomial(M)) v.push_back(c.get_si());
        return v;
    };
    CHECK(coeffs(1) == std::vector<long>{-1, 1});
    CHECK(coeffs(2) == std::vector<long>{1, 1});
    CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
    CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(coeffs(20) == std::vector<long>{1, 0, -1, 0, 1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(105).size() == 49);  // first order with coefficient -2
    CHECK(cyclotomic_polynomial(105)[7] == -2);
}

TEST_CASE("field degrees match Euler phi") {
    CHECK(CycloField::get(24)->degree() == 8);
    CHECK(CycloField::get(36)->degree() == 12);
    CHECK(CycloField::get(40)->degree() == 16);
    CHECK(CycloField::get(52)->degree() == 24);
    CHECK(CycloField::get(56)->degree() == 24);
    CHECK(CycloField::get(72)->degree() == 24);
    CHECK(CycloField::get(104)->degree() == 48);
}

TEST_CASE("roots of unity behave") {
    for (unsigned M : {5u, 12u, 20u, 36u, 52u}) {
        auto F = CycloField::get(M);
        Cyclo z = Cyclo::zeta_pow(F, 1);
        CHECK(z.pow(long(M)) == Cyclo::one(F));
        if (M % 2 == 0) CHECK(z.pow(long(M) / 2) == -Cyclo::one(F));
        for (long j = 1; j < long(M); ++j) CHECK(z.pow(j) != Cyclo::one(F));
    }
}

TEST_CASE("cyclotomic ring axioms on pseudorandom elements") {
    auto F = CycloField::get(20);
    std::mt19937 rng(12345);
    auto rnd = [&]() {
        Cyclo x = Cyclo::zero(F);
        for (int t = 0; t < 5; ++t) {
            long e = long(rng() % 20);
            long c = long(rng() % 11) - 5;
            Cyclo term = Cyclo::zeta_pow(F, e);
            term *= c;
            if (rng() & 1) term *= Rat(1, long(rng() % 6) + 1);
            x += term;
        }
        return x;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Cyclo a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Cyclo::zero(F));
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo::one(F));
    }
}

TEST_CASE("inverse of rationals and phases") {
    auto F = CycloField::get(36);
    Cyclo r = Cyclo::from_rat(F, Rat(-3, 7));
    CHECK(r * r.inverse() == Cyclo::one(F));
    Cyclo z = Cyclo::zeta_pow(F, 5);
    CHECK(z.inverse() == Cyclo::zeta_pow(F, -5));
    Cyclo mix = Cyclo::one(F) + Cyclo::zeta_pow(F, 4);
    CHECK((mix / mix) == Cyclo::one(F));
}

TEST_CASE("galois conjugation and reality") {
    auto F = CycloField::get(20);
    Cyclo q = Cyclo::zeta_pow(F, 2);
    Cyclo two_cos = q + q.inverse();
    CHECK(two_cos.is_real());
    CHECK(!Cyclo::zeta_pow(F, 3).is_real());
    CHECK(qint_at(q, 3).is_real());
}

TEST_CASE("lift to a larger field") {
    auto F12 = CycloField::get(12), F24 = CycloField::get(24);
    Cyclo z12 = Cyclo::zeta_pow(F12, 1);
    CHECK(z12.lift_to(F24) == Cyclo::zeta_pow(F24, 2));
    Cyclo v = qint_at(Cyclo::zeta_pow(F12, 1), 2);
    CHECK(v.lift_to(F24) == qint_at(Cyclo::zeta_pow(F24, 2), 2));
    // equality across fields compares through the compositum
    CHECK(z12 == Cyclo::zeta_pow(F24, 2));
}

TEST_CASE("root-of-unity recognition") {
    auto F = CycloField::get(20);
    CHECK(Cyclo::zeta_pow(F, 13).root_of_unity_log() == 13);
    CHECK(!(Cyclo::one(F) + Cyclo::one(F)).root_of_unity_log().has_value());
}

TEST_CASE("numeric approximation") {
    auto F = CycloField::get(5);
    std::complex<double> z = Cyclo::zeta_pow(F, 1).approx();
    double two_pi = 6.283185307179586;
    CHECK(std::abs(z - std::polar(1.0, two_pi / 5)) < 1e-12);
    auto F12 = CycloField::get(12);
    // [2] at q = zeta_12 is sqrt(3)
    CHECK(std::abs(qint_at(Cyclo::zeta_pow(F12, 1), 2).approx() - std::complex<double>(std::sqrt(3.0), 0)) < 1e-12);
}

TEST_CASE("serialization round trip") {
    auto F = CycloField::get(20);
    Cyclo x = Cyclo::zeta_pow(F, 7) * Rat(22, 7) - Cyclo::from_rat(F, Rat(1, 3));
    CHECK(Cyclo::parse(x.serialize()) == x);
}

TEST_CASE("addmul fused op agrees with separate ops") {
    auto F = CycloField::get(36);
    Cyclo a = Cyclo::zeta_pow(F, 3) * Rat(2, 5);
    Cyclo b = Cyclo::one(F) + Cyclo::zeta_pow(F, 10);
    Cyclo c = Cyclo::zeta_pow(F, 31) - Cyclo::from_rat(F, Rat(4, 3));
    Cyclo expect = a + b * c;
    std::vector<Int> scratch;
    Cyclo got = a;
    Cyclo::addmul(got, b, c, scratch);
    CHECK(got == expect);
}

// --------------------------------------------------------------------------

TEST_CASE("Laurent: formal i squares to -1") {
    Laurent i = Laurent::i_unit();
    CHECK(i * i == Laurent::from_int(-1));
    CHECK(i * i * i * i == Laurent::from_int(1));
    CHECK(i.pow(-1) == -i);
}

TEST_CASE("Laurent arithmetic and substitution") {
    Laurent s = Laurent::var_pow(VAR_S, 1);
    Laurent sinv = Laurent::var_pow(VAR_S, -1);
    CHECK(s * sinv == Laurent::from_int(1));
    Laurent two_bracket = qint_laurent(2);
    CHECK(two_bracket == Laurent::var_pow(VAR_S, 2) + Laurent::var_pow(VAR_S, -2));
    // [3] = [2]^2 - 1 generically
    CHECK(qint_laurent(3) == two_bracket * two_bracket - Laurent::from_int(1));
    CHECK(qint_laurent(-4) == -qint_laurent(4));

    // mirror s -> s^-1 fixes [n]
    std::array<std::optional<Laurent::UnitSub>, kNumVars> subs{};
    Laurent::UnitSub mirror;
    mirror.e = {-1, 0, 0, 0};
    subs[VAR_S] = mirror;
    CHECK(qint_laurent(5).substitute_units(subs) == qint_laurent(5));

    // a -> i*a on a^2 gives -a^2
    std::array<std::optional<Laurent::UnitSub>, kNumVars> ia{};
    Laurent::UnitSub rot;
    rot.e = {0, 1, 0, 0};
    rot.iexp = 1;
    ia[VAR_A] = rot;
    CHECK(Laurent::var_pow(VAR_A, 2).substitute_units(ia) == -Laurent::var_pow(VAR_A, 2));
    CHECK(Laurent::var_pow(VAR_A, 1).substitute_units(ia) == Laurent::var_pow(VAR_A, 1) * Laurent::i_unit());
}

TEST_CASE("Laurent exact evaluation in a cyclotomic field") {
    auto F = CycloField::get(24);
    Cyclo s = Cyclo::zeta_pow(F, 1);
    std::array<std::optional<Cyclo>, kNumVars> vals{};
    vals[VAR_S] = s;
    CHECK(qint_laurent(2).eval(F, vals) == qint_at(s * s, 2));
    CHECK(qint_laurent(7).eval(F, vals) == qint_at(s * s, 7));
    // i evaluates to zeta_4
    Laurent p = Laurent::i_unit() * qint_laurent(2);
    CHECK(p.eval(F, vals) == Cyclo::zeta_pow(F, 6) * qint_at(s * s, 2));
}

TEST_CASE("Laurent serialization is canonical") {
    Laurent p = Laurent::var_pow(VAR_S, -2) + Laurent::var_pow(VAR_S, 2);
    CHECK(p.serialize() == "s^-2 + s^2");
    Laurent q = Laurent::var_pow(VAR_A, 1, Int(-3)) * Laurent::var_pow(VAR_Z, -1) + Laurent::i_unit();
    CHECK(q.serialize() == "i - 3*a*z^-1");
}

// --------------------------------------------------------------------------

TEST_CASE("RatFunc basic identities") {
    RatFunc x = RatFunc::x_pow(1);
    RatFunc one = RatFunc::from_int(1);
    CHECK((x.pow(2) - one) / (x - one) == x + one);
    CHECK(x.pow(-3) * x.pow(3) == one);
    CHECK((one / (x + one) + one / (x - one)) == (x + x) / (x.pow(2) - one));
    CHECK(RatFunc::from_rat(Rat(2, 3)) * RatFunc::from_int(3) == RatFunc::from_int(2));
}

TEST_CASE("RatFunc variable inversion") {
    // [n](s) is symmetric under s -> 1/s
    CHECK(qint_rf(6).invert_variable() == qint_rf(6));
    RatFunc x = RatFunc::x_pow(1);
    CHECK(x.invert_variable() == RatFunc::x_pow(-1));
    RatFunc f = (x.pow(2) + RatFunc::from_int(3)) / (x - RatFunc::from_int(2));
    RatFunc g = f.invert_variable();
    // check by evaluating at a rational point
    CHECK(g.eval_rational(Rat(5)) == f.eval_rational(Rat(1, 5)));
}

TEST_CASE("RatFunc evaluation matches quantum integers at roots") {
    auto F = CycloField::get(40);
    Cyclo s = Cyclo::zeta_pow(F, 1);
    CHECK(qint_rf(5).eval(s) == qint_at(s * s, 5));
    CHECK(qfact_rf(4).eval(s) == qfact_at(s * s, 4));
}

TEST_CASE("RatFunc to Laurent") {
    RatFunc p = qint_rf(3) * RatFunc::from_rat(Rat(1, 2));
    auto l = p.as_laurent();
    REQUIRE(!l.has_value());  // 1/2 coefficients are not integral
    auto l2 = (qint_rf(3) * RatFunc::from_int(2)).as_laurent();
    REQUIRE(l2.has_value());
    CHECK(*l2 == qint_laurent(3) * Int(2));
}
