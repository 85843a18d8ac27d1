#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "homlie/scalar.hpp"

using namespace homlie;

namespace {

ParamSetPtr qa() {
    static ParamSetPtr ps = ParamSet::make({"q", "alpha"});
    return ps;
}

/// A deterministic pool of rational functions exercising every constructor.
std::vector<Scalar> sample_pool() {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar a = Scalar::param(ps, "alpha");
    const Scalar one = Scalar::one(ps);
    return {
        Scalar::zero(ps),
        one,
        -one,
        Scalar::integer(ps, Int(2)),
        Scalar::rational(ps, Rat(1, 2)),
        q,
        q * q,
        q.pow(-1),
        a,
        q + one,
        (q - one) / (q + Scalar::integer(ps, Int(2))),
        a * q - Scalar::integer(ps, Int(3)),
    };
}

} // namespace

TEST_CASE("parameter sets expose their names in declaration order") {
    const ParamSetPtr ps = qa();
    CHECK(ps->size() == 2);
    CHECK(ps->names() == std::vector<std::string>{"q", "alpha"});
    CHECK(ps->index_of("q") == std::size_t{0});
    CHECK(ps->index_of("alpha") == std::size_t{1});
    CHECK_FALSE(ps->index_of("beta").has_value());
}

TEST_CASE("field axioms hold on a sample pool") {
    const std::vector<Scalar> pool = sample_pool();
    const Scalar zero = Scalar::zero(qa());
    const Scalar one = Scalar::one(qa());
    for (const Scalar& x : pool) {
        CHECK(x + zero == x);
        CHECK(x * one == x);
        CHECK(x + (-x) == zero);
        CHECK(x - x == zero);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == one);
            CHECK(x / x == one);
        }
        for (const Scalar& y : pool) {
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            for (const Scalar& z : pool) {
                CHECK((x + y) + z == x + (y + z));
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
    }
}

TEST_CASE("integer powers agree with repeated multiplication and inversion") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar c = (q + Scalar::one(ps)) / q;
    CHECK(c.pow(0) == Scalar::one(ps));
    CHECK(c.pow(1) == c);
    CHECK(c.pow(3) == c * c * c);
    CHECK(c.pow(-2) == (c * c).inverse());
    CHECK(c.pow(4) * c.pow(-4) == Scalar::one(ps));
    CHECK_THROWS_AS(Scalar::zero(ps).pow(-1), DivisionByZero);
}

TEST_CASE("q-number satisfies the splitting identity on a window") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    CHECK(q_number(ps, 0).is_zero());
    CHECK(q_number(ps, 1) == Scalar::one(ps));
    for (int n = -6; n <= 6; ++n) {
        for (int m = -6; m <= 6; ++m) {
            CHECK(q_number(ps, n + m) == q_number(ps, n) + q.pow(n) * q_number(ps, m));
        }
    }
}

TEST_CASE("symmetric q-number is odd and matches its defining fraction") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    CHECK(sym_q_number(ps, 0).is_zero());
    CHECK(sym_q_number(ps, 1) == Scalar::one(ps));
    for (int k = -6; k <= 6; ++k) {
        CHECK(sym_q_number(ps, -k) == -sym_q_number(ps, k));
        CHECK(sym_q_number(ps, k) * (q - q.pow(-1)) == q.pow(k) - q.pow(-k));
    }
}

TEST_CASE("frozen special values") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar one = Scalar::one(ps);

    // {2} = q + 1 and its square expands exactly.
    CHECK(q_number(ps, 2) == q + one);
    CHECK(q_number(ps, 2) * q_number(ps, 2) ==
          q * q + Scalar::integer(ps, Int(2)) * q + one);

    // [3] at q = 2 equals 21/4.
    CHECK(sym_q_number(ps, 3).evaluate({{"q", Rat(2)}}) == Rat(21, 4));

    // {5} at q = 1 equals 5 (the pole of the defining fraction cancels).
    CHECK(q_number(ps, 5).evaluate({{"q", Rat(1)}}) == Rat(5));
}

TEST_CASE("canonicalization identifies equal fractions") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar one = Scalar::one(ps);
    // (q^2 - 1)/(q - 1) reduces to q + 1.
    CHECK((q * q - one) / (q - one) == q + one);
    // The denominator is normalized with positive leading coefficient.
    CHECK((one / (one - q)).to_string() == "-1/(q-1)");
    CHECK((-q / q).to_string() == "-1");
}

TEST_CASE("rendering binds safely before a following product") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar one = Scalar::one(ps);
    CHECK(product_form(q) == "q");
    CHECK(product_form(q + one) == "(q+1)");
    CHECK(product_form((q + one) / q) == "(q+1)/q");
    CHECK(product_form(Scalar::rational(ps, Rat(-1, 2))) == "-1/2");
}

TEST_CASE("evaluation substitutes points and reports poles and gaps") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar one = Scalar::one(ps);
    const Scalar c = (q + one) / (q - one);

    CHECK(c.evaluate({{"q", Rat(3)}}) == Rat(2));
    CHECK_THROWS_AS(c.evaluate({{"q", Rat(1)}}), PoleAtPoint);
    CHECK_THROWS_AS(c.evaluate({}), MissingAssignment);
    // Constants need no assignment at all.
    CHECK(Scalar::rational(ps, Rat(7, 3)).evaluate({}) == Rat(7, 3));
}

TEST_CASE("plain literals combine with any parameter set") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar lit(Int(2));
    CHECK(lit.params() == nullptr);
    CHECK(lit + q == Scalar::integer(ps, Int(2)) + q);
    CHECK((Scalar(Rat(1, 2)) * q) * Scalar(Int(2)) == q);
}

TEST_CASE("genuinely different parameter sets refuse to combine") {
    const ParamSetPtr p1 = ParamSet::make({"q"});
    const ParamSetPtr p2 = ParamSet::make({"p"});
    const Scalar a = Scalar::param(p1, "q");
    const Scalar b = Scalar::param(p2, "p");
    CHECK_THROWS_AS(a + b, ArityMismatch);
}

TEST_CASE("division by zero is rejected everywhere it can arise") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    CHECK_THROWS_AS(q / Scalar::zero(ps), DivisionByZero);
    CHECK_THROWS_AS(Scalar::zero(ps).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::from_fraction(MPoly::constant(1, Int(1)), MPoly(1),
                                          ParamSet::make({"q"})),
                    DivisionByZero);
}

TEST_CASE("constant detection and extraction") {
    const ParamSetPtr ps = qa();
    const Scalar q = Scalar::param(ps, "q");
    const Scalar half = Scalar::rational(ps, Rat(1, 2));
    CHECK(half.is_constant());
    CHECK(half.constant_value() == Rat(1, 2));
    CHECK_FALSE(q.is_constant());
    // q/q collapses back to a constant.
    CHECK((q / q).is_constant());
}
