#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homlie/mpoly.hpp"

namespace homlie {

class ParamSet;
/// Parameter sets are immutable and shared.
using ParamSetPtr = std::shared_ptr<const ParamSet>;

/// An ordered list of distinct formal parameter names (e.g. {"q", "alpha"}).
/// The list order fixes the variable order of every polynomial built over it.
class ParamSet {
public:
    static ParamSetPtr make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    bool operator==(const ParamSet& rhs) const { return names_ == rhs.names_; }
    bool operator!=(const ParamSet& rhs) const { return !(*this == rhs); }

private:
    explicit ParamSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

/// An element of the field of rational functions in the parameters, with
/// exact integer-polynomial numerator and denominator.
///
/// Invariants: the denominator is nonzero; numerator and denominator have
/// polynomial GCD 1 (including integer content); the denominator's
/// grlex-leading coefficient is positive; the zero element has denominator 1.
///
/// A Scalar built from a plain number carries no parameter set (params() is
/// null) and combines freely with scalars over any parameter set.
class Scalar {
public:
    /// The literal zero, usable with any parameter set.
    Scalar() : Scalar(Int(0)) {}
    explicit Scalar(Int value);
    explicit Scalar(long long value) : Scalar(Int(value)) {}
    explicit Scalar(const Rat& value);

    static Scalar zero(const ParamSetPtr& ps);
    static Scalar one(const ParamSetPtr& ps);
    static Scalar integer(const ParamSetPtr& ps, Int value);
    static Scalar rational(const ParamSetPtr& ps, const Rat& value);
    /// The parameter with the given name; the name must be declared in ps.
    static Scalar param(const ParamSetPtr& ps, const std::string& name);
    /// num/den reduced to canonical form. Throws DivisionByZero if den == 0.
    static Scalar from_fraction(MPoly num, MPoly den, ParamSetPtr ps);

    const ParamSetPtr& params() const { return params_; }
    const MPoly& numerator() const { return num_; }
    const MPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when no parameter actually occurs (a rational constant).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// The value of a constant scalar. Requires is_constant().
    Rat constant_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const; ///< DivisionByZero if rhs == 0
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    Scalar inverse() const; ///< DivisionByZero if zero
    /// Integer power; negative exponents invert (DivisionByZero if zero).
    Scalar pow(int e) const;

    /// Substitute rational values for the parameters that occur. Throws
    /// PoleAtPoint when the denominator vanishes at the point and
    /// MissingAssignment when an occurring parameter has no value.
    Rat evaluate(const std::map<std::string, Rat>& point) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    Scalar(MPoly num, MPoly den, ParamSetPtr ps);
    void canonicalize();
    /// Rewrite both operands over a common parameter set (constants lift to
    /// either side); throws ArityMismatch for genuinely different sets.
    static std::pair<Scalar, Scalar> aligned(const Scalar& a, const Scalar& b);

    ParamSetPtr params_; // null for plain rational literals
    MPoly num_;
    MPoly den_;
};

/// Rendering of a scalar that can safely be followed by "*...": multi-term
/// numerators over a trivial denominator are parenthesized; every other
/// canonical form already binds tighter than '*' under left association.
std::string product_form(const Scalar& c);

/// (q^n - 1)/(q - 1) as an exact rational function; "q" must be declared.
/// Satisfies value(0) == 0, value(n+m) == value(n) + q^n * value(m).
Scalar q_number(const ParamSetPtr& ps, int n);

/// (q^k - q^-k)/(q - q^-1) as an exact rational function; "q" must be
/// declared. Odd in k, with value(0) == 0 and value(1) == 1.
Scalar sym_q_number(const ParamSetPtr& ps, int k);

} // namespace homlie
