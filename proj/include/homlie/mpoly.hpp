#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlie/numbers.hpp"

namespace homlie {

/// Exponent vector; one entry per variable, entries >= 0 inside MPoly.
using Expo = std::vector<int>;

/// One monomial term of a polynomial with integer coefficients.
struct MTerm {
    Expo exp;  ///< size == nvars, entries >= 0
    Int coeff; ///< never zero inside a normalized MPoly
};

/// Multivariate polynomial over the integers.
///
/// Terms are kept sorted in strictly descending graded-lexicographic order
/// (total degree first, then lexicographic with earlier variables ranked
/// higher), with no zero coefficients and no duplicate exponent vectors.
class MPoly {
public:
    /// The zero polynomial in `nvars` variables.
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, Int c);
    /// c * x_index^power, power >= 0.
    static MPoly variable_power(std::size_t nvars, std::size_t index, int power = 1,
                                Int c = 1);
    static MPoly monomial(Int coeff, Expo exp);
    static MPoly from_terms(std::size_t nvars, std::vector<MTerm> terms);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Exactly one term.
    bool is_monomial() const { return terms_.size() == 1; }
    const std::vector<MTerm>& terms() const { return terms_; }

    /// Leading (grlex-greatest) term; polynomial must be nonzero.
    const MTerm& leading_term() const;

    /// Degree in the given variable; -1 for the zero polynomial.
    int deg_in(std::size_t var) const;
    /// Sum of all terms whose exponent of `var` equals e, with that exponent
    /// set to zero (the coefficient of var^e viewed in the remaining vars).
    MPoly coeff_of_power(std::size_t var, int e) const;
    /// Componentwise minimum exponent over all terms; zero vector if empty.
    Expo min_exponents() const;

    /// GCD of all coefficients, >= 0; 0 for the zero polynomial.
    Int content() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& rhs) const;
    MPoly operator-(const MPoly& rhs) const;
    MPoly operator*(const MPoly& rhs) const;
    MPoly& operator+=(const MPoly& rhs) { return *this = *this + rhs; }
    MPoly& operator-=(const MPoly& rhs) { return *this = *this - rhs; }
    MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }
    bool operator==(const MPoly& rhs) const;
    bool operator!=(const MPoly& rhs) const { return !(*this == rhs); }

    MPoly pow(unsigned e) const;

    /// Quotient a/b when b exactly divides a over the integers, else nullopt.
    static std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

    /// Polynomial GCD over the integers, including the integer content.
    /// Normalized so the grlex-leading coefficient is positive.
    /// gcd(0, 0) == 0.
    static MPoly gcd(const MPoly& a, const MPoly& b);

    /// Substitute rationals for the variables. An entry may be disengaged
    /// only for variables the polynomial does not actually use.
    Rat evaluate(const std::vector<std::optional<Rat>>& assignment) const;

    /// Render using the supplied variable names, terms in stored order.
    std::string to_string(const std::vector<std::string>& names) const;
    /// Same content with `^{}` exponents suitable for LaTeX.
    std::string to_latex(const std::vector<std::string>& names) const;

    /// true when a precedes b in graded-lexicographic order.
    static bool grlex_less(const Expo& a, const Expo& b);

private:
    std::size_t nvars_;
    std::vector<MTerm> terms_; // descending grlex, nonzero coefficients

    void normalize();
    std::string render(const std::vector<std::string>& names, bool latex) const;
};

} // namespace homlie
