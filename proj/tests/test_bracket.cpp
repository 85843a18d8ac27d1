#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "homlie/bracket.hpp"

using namespace homlie;

namespace {

ParamSetPtr qa() {
    static ParamSetPtr ps = ParamSet::make({"q", "alpha"});
    return ps;
}

Scalar q() { return Scalar::param(qa(), "q"); }

/// Context of the scaling family: D(t^m) = {m} t^m, compatibility factor 1.
BracketContext scaling_context() {
    return BracketContext::from_derivation(TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q(), 1), MonomialEndo::identity(1),
        LaurentPoly::constant(1, q() - Scalar::one(qa())), Scalar(Int(-1))));
}

/// Context of a power family: sigma(t) = q t^2, divisor t, so that
/// the compatibility factor is the non-constant q t.
BracketContext power_context() {
    return BracketContext::from_derivation(TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q(), 2), MonomialEndo::identity(1),
        LaurentPoly::t_power(1), Scalar(Int(1))));
}

std::vector<LaurentPoly> sample_polys() {
    return {
        LaurentPoly::one(1),
        LaurentPoly::t_power(2),
        LaurentPoly::t_power(-1, q()) + LaurentPoly::one(1),
        LaurentPoly::t_power(3) - LaurentPoly::t_power(-2),
    };
}

std::vector<LaurentPoly> monomial_probes(int radius) {
    std::vector<LaurentPoly> probes = {LaurentPoly::one(1)};
    for (const LExp& v : window_exponents(1, radius)) {
        probes.push_back(LaurentPoly::monomial(Scalar(Int(1)), v));
    }
    return probes;
}

} // namespace

TEST_CASE("bracket coefficient is skew and bilinear") {
    const BracketContext ctx = scaling_context();
    const std::vector<LaurentPoly> pool = sample_polys();
    for (const LaurentPoly& a : pool) {
        for (const LaurentPoly& b : pool) {
            CHECK(ctx.bracket(a, b) == -ctx.bracket(b, a));
            for (const LaurentPoly& c : pool) {
                CHECK(ctx.bracket(a + b.scaled(q()), c) ==
                      ctx.bracket(a, c) + ctx.bracket(b, c).scaled(q()));
            }
        }
    }
    CHECK(ctx.bracket(pool[1], pool[1]).is_zero());
}

TEST_CASE("free bracket agrees with the context bracket") {
    const BracketContext ctx = power_context();
    for (const LaurentPoly& a : sample_polys()) {
        for (const LaurentPoly& b : sample_polys()) {
            CHECK(bracket_coefficient(ctx.generator(), a, b) == ctx.bracket(a, b));
        }
    }
}

TEST_CASE("operator-composition oracle certifies the product-rule bracket") {
    for (const BracketContext& ctx : {scaling_context(), power_context()}) {
        const std::vector<LaurentPoly> probes = monomial_probes(5);
        for (const LaurentPoly& a : sample_polys()) {
            for (const LaurentPoly& b : sample_polys()) {
                CHECK(ctx.oracle_check(a, b, probes));
            }
        }
    }
}

TEST_CASE("six-term identity holds when the second twist is the identity") {
    for (const BracketContext& ctx : {scaling_context(), power_context()}) {
        for (int n = -2; n <= 2; ++n) {
            for (int m = -2; m <= 2; ++m) {
                for (int r = -2; r <= 2; ++r) {
                    CHECK(ctx.six_term_defect(LaurentPoly::t_power(n),
                                              LaurentPoly::t_power(m),
                                              LaurentPoly::t_power(r))
                              .is_zero());
                }
            }
        }
    }
}

TEST_CASE("six-term identity fails with a corrupted compatibility factor") {
    // Inject factor q t (the true factor is 1) through the unchecked door.
    const BracketContext bad = BracketContext::with_delta_unchecked(
        scaling_context().generator(), LaurentPoly::t_power(1, q()));
    CHECK_FALSE(bad.six_term_defect(LaurentPoly::t_power(1),
                                    LaurentPoly::t_power(2),
                                    LaurentPoly::t_power(-3))
                    .is_zero());
}

TEST_CASE("injected compatibility factors are certified") {
    const TwistedDerivation gen = scaling_context().generator();
    // The correct factor passes.
    const BracketContext ok = BracketContext::with_delta(gen, LaurentPoly::one(1));
    CHECK(ok.delta() == LaurentPoly::one(1));
    // A wrong factor is rejected.
    CHECK_THROWS_AS(
        BracketContext::with_delta(gen, LaurentPoly::constant(1, q())),
        CompatFailed);
    // from_derivation requires the second twist to be the identity.
    const TwistedDerivation skewed = TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q(), 1), MonomialEndo::univariate(q().pow(-1), 1),
        LaurentPoly::constant(1, q().pow(-1) - q()), Scalar(Int(1)));
    CHECK_THROWS_AS(BracketContext::from_derivation(skewed), InternalError);
}

TEST_CASE("rescaling the module generator transforms the bracket consistently") {
    const BracketContext ctx = power_context();
    const LaurentPoly a = LaurentPoly::t_power(2);
    const LaurentPoly b = LaurentPoly::t_power(-1) + LaurentPoly::one(1);
    CHECK(base_change_check(ctx, LaurentPoly::t_power(2), a, b));
    CHECK(base_change_check(ctx, LaurentPoly::constant(1, Scalar(Int(5))), a, b));
    CHECK(base_change_check(ctx, LaurentPoly::t_power(-1, q()), a, b));
    CHECK_THROWS_AS(base_change_check(
                        ctx, LaurentPoly::t_power(1) + LaurentPoly::one(1), a, b),
                    NotAUnit);
}

TEST_CASE("elements convert to and from operator coefficients") {
    // The basis element with index v stands for -t^v times the generator, so
    // a coefficient c t^v converts to -c d_v.
    const LaurentPoly c =
        LaurentPoly::t_power(2, q()) - LaurentPoly::t_power(-1);
    const HomLieElement e = HomLieElement::from_coefficient(c);
    CHECK(e == HomLieElement::basis({2}, -q()) + HomLieElement::basis({-1}));
    CHECK(e.to_coefficient(1) == c);
    // Round trip in both directions.
    const HomLieElement x =
        HomLieElement::basis({0}, q() + Scalar::one(qa())) -
        HomLieElement::basis({3});
    CHECK(HomLieElement::from_coefficient(x.to_coefficient(1)) == x);
    // Central parts have no coefficient picture.
    CHECK_THROWS_AS(HomLieElement::central(q()).to_coefficient(1), InternalError);
}

TEST_CASE("element arithmetic drops cancelled terms and prints canonically") {
    const HomLieElement a = HomLieElement::basis({1}, q());
    const HomLieElement b = HomLieElement::basis({1}, -q());
    CHECK((a + b).is_zero());
    const HomLieElement sum = HomLieElement::basis({0}, q() + Scalar::one(qa())) +
                              HomLieElement::central(Scalar(Int(2)));
    CHECK(sum.to_string("d") == "(q+1)*d(0)+2*c");
    CHECK(sum.has_central_part());
    CHECK(sum.coeff_or_zero(BasisIndex::central_element()) == Scalar(Int(2)));
    CHECK(sum.coeff_or_zero(BasisIndex::basis({5})).is_zero());
    CHECK(sum.scaled(Scalar::zero(qa())).is_zero());
}

TEST_CASE("element evaluation specializes coefficients exactly") {
    const HomLieElement e =
        HomLieElement::basis({1}, q_number(qa(), 3)) +
        HomLieElement::basis({2}, q() - Scalar::one(qa()));
    const auto at2 = e.evaluate({{"q", Rat(2)}});
    CHECK(at2.at(BasisIndex::basis({1})) == Rat(7));
    CHECK(at2.at(BasisIndex::basis({2})) == Rat(1));
    // Terms that vanish at the point are dropped entirely.
    const auto at1 = e.evaluate({{"q", Rat(1)}});
    CHECK(at1.count(BasisIndex::basis({2})) == 0);
    CHECK(at1.at(BasisIndex::basis({1})) == Rat(3));
}

TEST_CASE("basis bracket extends bilinearly with central elements inert") {
    const ParamSetPtr ps = qa();
    // Toy bracket [e_n, e_m] = (n - m) e_{n+m}; central labels give zero.
    const BasisBracket toy = [ps](const BasisIndex& x, const BasisIndex& y) {
        if (x.central || y.central) return HomLieElement::zero();
        const int n = x.index.at(0), m = y.index.at(0);
        return HomLieElement::basis({n + m}, Scalar::integer(ps, Int(n - m)));
    };
    const HomLieElement x =
        HomLieElement::basis({1}, q()) + HomLieElement::central(Scalar(Int(1)));
    const HomLieElement y = HomLieElement::basis({2});
    // Only the non-central part contributes: q * [e_1, e_2] = -q e_3.
    CHECK(bilinear_bracket(toy, x, y) == HomLieElement::basis({3}, -q()));
    CHECK(bilinear_bracket(toy, x, x).is_zero());
}

TEST_CASE("three-term twisted identity detects the right twist") {
    const ParamSetPtr ps = qa();
    const BasisBracket scaling = [ps](const BasisIndex& x, const BasisIndex& y) {
        if (x.central || y.central) return HomLieElement::zero();
        const int n = x.index.at(0), m = y.index.at(0);
        return HomLieElement::basis({n + m},
                                    q_number(ps, n) - q_number(ps, m));
    };
    const BasisTwist scaling_twist = [ps](const BasisIndex& x) {
        if (x.central) return HomLieElement::central(Scalar::one(ps));
        return HomLieElement::basis(x.index,
                                    Scalar::param(ps, "q").pow(x.index.at(0)));
    };
    const BasisTwist identity_twist = [ps](const BasisIndex& x) {
        if (x.central) return HomLieElement::central(Scalar::one(ps));
        return HomLieElement::basis(x.index, Scalar::one(ps));
    };
    for (int n = -3; n <= 3; ++n) {
        for (int m = -3; m <= 3; ++m) {
            for (int r = -3; r <= 3; ++r) {
                CHECK(homlie_jacobi_defect(scaling, scaling_twist,
                                           HomLieElement::basis({n}),
                                           HomLieElement::basis({m}),
                                           HomLieElement::basis({r}))
                          .is_zero());
            }
        }
    }
    // The untwisted identity fails for this bracket.
    CHECK_FALSE(homlie_jacobi_defect(scaling, identity_twist,
                                     HomLieElement::basis({1}),
                                     HomLieElement::basis({2}),
                                     HomLieElement::basis({-3}))
                    .is_zero());
}
