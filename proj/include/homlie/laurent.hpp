#pragma once

#include <map>
#include <string>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

/// Laurent exponent vector; entries may be negative.
using LExp = std::vector<int>;

/// Names used for printing and parsing: "t" for one variable,
/// "z1".."zn" for several.
std::vector<std::string> default_var_names(std::size_t nvars);

struct UnitNormalForm;

/// A Laurent polynomial: finitely many monomials z^v with Scalar
/// coefficients, exponents in Z^nvars. Terms are stored (and printed) in
/// ascending lexicographic order of the exponent vector, with no zero
/// coefficients retained.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly zero(std::size_t nvars) { return LaurentPoly(nvars); }
    static LaurentPoly one(std::size_t nvars);
    static LaurentPoly constant(std::size_t nvars, Scalar c);
    static LaurentPoly monomial(Scalar coeff, LExp exp);
    /// Univariate shortcut: c * t^k.
    static LaurentPoly t_power(int k, Scalar c = Scalar(Int(1)));

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    const std::map<LExp, Scalar>& terms() const { return terms_; }
    Scalar coeff_or_zero(const LExp& exp) const;
    /// Componentwise minimum exponent over all terms; requires nonzero.
    LExp min_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// Coefficient-wise scaling.
    LaurentPoly scaled(const Scalar& c) const;
    /// Multiplication by the monomial z^delta.
    LaurentPoly shifted(const LExp& delta) const;
    /// Integer powers; negative exponents require the base to divide 1.
    LaurentPoly pow(int e) const;

    /// Quotient a/b when b divides a exactly in the Laurent ring.
    /// Throws DivisionByZero if b == 0 and NotDivisible otherwise on failure.
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

    /// Decomposition  original == unit_scalar * z^unit_exponents * core,
    /// where core has minimum exponent 0 in every variable and its
    /// lexicographically least term has coefficient 1.
    /// Throws ZeroInput for the zero polynomial.
    UnitNormalForm unit_normalize() const;

    /// Greatest common divisor of the items, canonicalized as the core of
    /// its own unit normal form. One variable only (MultivariateUnsupported
    /// otherwise); throws AllZero when every item is zero. The result is
    /// verified to divide every item.
    static LaurentPoly gcd_up_to_unit(const std::vector<LaurentPoly>& items);

    std::string to_string() const;
    std::string to_latex() const;

private:
    std::size_t nvars_;
    std::map<LExp, Scalar> terms_; // ascending lex; no zero coefficients

    void insert_term(LExp exp, Scalar c);
    friend LaurentPoly parse_laurent(const std::string&, std::size_t,
                                     const ParamSetPtr&);
};

/// Decomposition  original == unit_scalar * z^unit_exponents * core,  where
/// core has minimum exponent 0 in every variable and its lexicographically
/// least term has coefficient 1.
struct UnitNormalForm {
    Scalar unit_scalar;
    LExp unit_exponents;
    LaurentPoly core;
};

/// Parse `text` as a Laurent polynomial in the default variable names over
/// the given parameters. Grammar: sums/differences of products/quotients of
/// powers of variables, parameters, integers, and parenthesized
/// subexpressions ('/' is exact division). Throws SyntaxError with a
/// position, ArityMismatch for unknown identifiers, NotDivisible for inexact
/// quotients.
LaurentPoly parse_laurent(const std::string& text, std::size_t nvars,
                          const ParamSetPtr& params);

/// Parse `text` as a Scalar (no ring variables, parameters only).
Scalar parse_scalar(const std::string& text, const ParamSetPtr& params);

} // namespace homlie
