#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "homlie/derivation.hpp"

using namespace homlie;

namespace {

ParamSetPtr qa() {
    static ParamSetPtr ps = ParamSet::make({"q", "alpha"});
    return ps;
}

Scalar q() { return Scalar::param(qa(), "q"); }

/// Scaling-twist generator with D(t^m) = {m} t^m.
TwistedDerivation scaling_generator() {
    return TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q(), 1), MonomialEndo::identity(1),
        LaurentPoly::constant(1, q() - Scalar::one(qa())), Scalar(Int(-1)));
}

std::vector<LaurentPoly> sample_polys() {
    return {
        LaurentPoly::one(1),
        LaurentPoly::t_power(2),
        LaurentPoly::t_power(-1, q()) + LaurentPoly::one(1),
        LaurentPoly::t_power(3) - LaurentPoly::t_power(-2),
        LaurentPoly::t_power(1, q() + Scalar::one(qa())) + LaurentPoly::t_power(4),
    };
}

} // namespace

TEST_CASE("certification windows enumerate nonzero exponents in lex order") {
    CHECK(window_exponents(1, 3) ==
          std::vector<LExp>{{-3}, {-2}, {-1}, {1}, {2}, {3}});
    const std::vector<LExp> w2 = window_exponents(2, 1);
    CHECK(w2.size() == 8); // 3^2 - 1
    CHECK(w2.front() == LExp{-1, -1});
    CHECK(w2.back() == LExp{1, 1});
    CHECK(window_exponents(1, 0).empty());
}

TEST_CASE("scaling generator acts diagonally with q-integer eigenvalues") {
    const TwistedDerivation d = scaling_generator();
    for (int m = -8; m <= 8; ++m) {
        CHECK(d.apply(LaurentPoly::t_power(m)) ==
              LaurentPoly::t_power(m, q_number(qa(), m)));
    }
    CHECK(d.apply(LaurentPoly::one(1)).is_zero());
}

TEST_CASE("twisted product rule holds for every sample pair") {
    const std::vector<TwistedDerivation> gens = {
        scaling_generator(),
        TwistedDerivation::canonical_generator(MonomialEndo::univariate(q(), 2),
                                               MonomialEndo::identity(1)),
        TwistedDerivation::with_divisor(MonomialEndo::univariate(q(), 1),
                                        MonomialEndo::univariate(q().pow(-1), 1),
                                        LaurentPoly::constant(1, q().pow(-1) - q()),
                                        Scalar(Int(1))),
    };
    for (const TwistedDerivation& d : gens) {
        for (const LaurentPoly& f : sample_polys()) {
            for (const LaurentPoly& g : sample_polys()) {
                CHECK(d.leibniz_check(f, g));
            }
        }
    }
}

TEST_CASE("a corrupted map fails the product rule") {
    const TwistedDerivation d = scaling_generator();
    const LaurentMap corrupted = [&d](const LaurentPoly& f) {
        return d.apply(f) + f; // adding the identity breaks the rule
    };
    const LaurentPoly t = LaurentPoly::t_power(1);
    CHECK_FALSE(leibniz_pair_holds(corrupted, d.sigma(), d.tau(), t, t));
    // The genuine action passes the same free-standing check.
    const LaurentMap genuine = [&d](const LaurentPoly& f) { return d.apply(f); };
    CHECK(leibniz_pair_holds(genuine, d.sigma(), d.tau(), t, t));
}

TEST_CASE("canonical generator for the scaling twist has unit divisor") {
    const TwistedDerivation d = TwistedDerivation::canonical_generator(
        MonomialEndo::univariate(q(), 1), MonomialEndo::identity(1));
    CHECK(d.divisor() == LaurentPoly::one(1));
    CHECK(d.prescale() == Scalar(Int(1)));
    // With divisor 1 the action is tau - sigma itself.
    CHECK(d.apply(LaurentPoly::t_power(3)) ==
          LaurentPoly::t_power(3, Scalar::one(qa()) - q().pow(3)));
}

TEST_CASE("canonical divisor equals the canonical associate of t - sigma(t)") {
    for (int s : {-2, -1, 0, 2, 3}) {
        CAPTURE(s);
        const MonomialEndo sigma = MonomialEndo::univariate(q(), s);
        const TwistedDerivation d = TwistedDerivation::canonical_generator(
            sigma, MonomialEndo::identity(1));
        const LaurentPoly expected =
            (LaurentPoly::t_power(1) - LaurentPoly::t_power(s, q()))
                .unit_normalize()
                .core;
        CHECK(d.divisor() == expected);
        // Stability: enlarging the window by one returns the same divisor.
        const TwistedDerivation wider = TwistedDerivation::canonical_generator(
            sigma, MonomialEndo::identity(1), 5);
        CHECK(wider.divisor() == d.divisor());
    }
}

TEST_CASE("divisor certification rejects a non-divisor honestly") {
    CHECK_THROWS_AS(TwistedDerivation::with_divisor(
                        MonomialEndo::univariate(q(), 1), MonomialEndo::identity(1),
                        LaurentPoly::t_power(1) + LaurentPoly::one(1),
                        Scalar(Int(1))),
                    NotDivisible);
}

TEST_CASE("construction rejects degenerate inputs") {
    const MonomialEndo s = MonomialEndo::univariate(q(), 1);
    CHECK_THROWS_AS(TwistedDerivation::with_divisor(s, s, LaurentPoly::one(1),
                                                    Scalar(Int(1))),
                    EqualTwists);
    CHECK_THROWS_AS(TwistedDerivation::with_divisor(
                        s, MonomialEndo::identity(1), LaurentPoly::zero(1),
                        Scalar(Int(1))),
                    ZeroInput);
    CHECK_THROWS_AS(TwistedDerivation::with_divisor(
                        s, MonomialEndo::identity(1), LaurentPoly::one(1),
                        Scalar()),
                    ZeroInput);
    CHECK_THROWS_AS(TwistedDerivation::canonical_generator(s, s), EqualTwists);
}

TEST_CASE("scaling compatibility factor is computed and certified") {
    // Scaling twist: the divisor is constant, so the factor is 1.
    CHECK(scaling_generator().delta_of() == LaurentPoly::one(1));

    // Power twist t -> q t^2 with divisor t: factor sigma(t)/t = q t.
    const TwistedDerivation d = TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q(), 2), MonomialEndo::identity(1),
        LaurentPoly::t_power(1), Scalar(Int(1)));
    CHECK(d.delta_of() == LaurentPoly::t_power(1, q()));
}

TEST_CASE("module coordinates round-trip through the action on t") {
    const TwistedDerivation d = scaling_generator();
    const std::vector<LaurentPoly> coefficients = {
        LaurentPoly::one(1),
        LaurentPoly::t_power(-2, q()),
        LaurentPoly::t_power(2) + LaurentPoly::constant(1, q()),
    };
    for (const LaurentPoly& a : coefficients) {
        const LaurentPoly value_on_t = a * d.apply(LaurentPoly::t_power(1));
        CHECK(d.coordinatize(value_on_t) == a);
    }
    // With divisor 1 the generator sends t to the two-term t - q t^3, so a
    // value outside its multiples has no coordinate.
    const TwistedDerivation wide = TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q(), 3), MonomialEndo::identity(1),
        LaurentPoly::one(1), Scalar(Int(1)));
    const LaurentPoly b = LaurentPoly::t_power(-1) + LaurentPoly::one(1);
    CHECK(wide.coordinatize(b * wide.apply(LaurentPoly::t_power(1))) == b);
    CHECK_THROWS_AS(
        wide.coordinatize(LaurentPoly::t_power(1) + LaurentPoly::one(1)),
        NotDivisible);
}

TEST_CASE("module action scales the generator by the coefficient") {
    const TwistedDerivation d = scaling_generator();
    const LaurentPoly a = LaurentPoly::t_power(2) + LaurentPoly::one(1);
    const LaurentPoly f = LaurentPoly::t_power(3) - LaurentPoly::t_power(-1);
    CHECK(apply_module(d, a, f) == a * d.apply(f));
}

TEST_CASE("kernel of tau minus sigma is annihilated by the generator") {
    CHECK(kernel_lemma_check(scaling_generator()));
    CHECK(kernel_lemma_check(TwistedDerivation::canonical_generator(
        MonomialEndo::univariate(q(), 2), MonomialEndo::identity(1))));
    // A map that moves constants fails: it does not kill ker(tau - sigma).
    const LaurentMap not_killing = [](const LaurentPoly& f) { return f; };
    CHECK_FALSE(kernel_lemma_check(not_killing, MonomialEndo::univariate(q(), 1),
                                   MonomialEndo::identity(1)));
}

TEST_CASE("monomial images are consistent with whole-polynomial application") {
    const TwistedDerivation d = TwistedDerivation::canonical_generator(
        MonomialEndo::univariate(q(), 2), MonomialEndo::identity(1));
    for (int m = -5; m <= 5; ++m) {
        CHECK(d.monomial_image(LExp{m}) == d.apply(LaurentPoly::t_power(m)));
    }
    // Linearity over a two-term polynomial.
    const LaurentPoly p = LaurentPoly::t_power(2, q()) + LaurentPoly::t_power(-1);
    CHECK(d.apply(p) ==
          d.monomial_image(LExp{2}).scaled(q()) + d.monomial_image(LExp{-1}));
}
