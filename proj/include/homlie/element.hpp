#pragma once

#include <map>
#include <string>
#include <vector>

#include "homlie/laurent.hpp"

namespace homlie {

/// Label of one basis element of a bracket algebra: either a generator
/// indexed by an integer tuple, or the distinguished central element.
struct BasisIndex {
    std::vector<int> index; ///< empty for the central element
    bool central = false;

    static BasisIndex basis(std::vector<int> idx) {
        return BasisIndex{std::move(idx), false};
    }
    static BasisIndex central_element() { return BasisIndex{{}, true}; }

    bool operator==(const BasisIndex& rhs) const {
        return central == rhs.central && index == rhs.index;
    }
    bool operator!=(const BasisIndex& rhs) const { return !(*this == rhs); }
    /// Generators in lexicographic index order first, central element last.
    bool operator<(const BasisIndex& rhs) const {
        if (central != rhs.central) return !central;
        return index < rhs.index;
    }
};

/// A finite linear combination of basis elements with Scalar coefficients.
class HomLieElement {
public:
    HomLieElement() = default; ///< zero

    static HomLieElement zero() { return HomLieElement(); }
    static HomLieElement basis(std::vector<int> idx, Scalar c = Scalar(Int(1)));
    static HomLieElement central(Scalar c = Scalar(Int(1)));

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisIndex, Scalar>& terms() const { return terms_; }
    Scalar coeff_or_zero(const BasisIndex& idx) const;
    bool has_central_part() const;

    HomLieElement operator-() const;
    HomLieElement operator+(const HomLieElement& rhs) const;
    HomLieElement operator-(const HomLieElement& rhs) const;
    HomLieElement& operator+=(const HomLieElement& rhs) { return *this = *this + rhs; }
    HomLieElement& operator-=(const HomLieElement& rhs) { return *this = *this - rhs; }
    HomLieElement scaled(const Scalar& c) const;
    bool operator==(const HomLieElement& rhs) const;
    bool operator!=(const HomLieElement& rhs) const { return !(*this == rhs); }

    /// Interpret a Laurent coefficient C (standing for the operator C·Δ) in
    /// the generator basis d_v = -z^v·Δ: each term c·z^v contributes -c·d_v.
    static HomLieElement from_coefficient(const LaurentPoly& C);
    /// Inverse of from_coefficient; requires no central part.
    LaurentPoly to_coefficient(std::size_t nvars) const;

    /// Evaluate every coefficient at a parameter point; exact zeros are
    /// dropped. Throws PoleAtPoint / MissingAssignment as Scalar::evaluate.
    std::map<BasisIndex, Rat> evaluate(const std::map<std::string, Rat>& point) const;

    /// e.g. "(q+1)/q*d(0)-d(2)+c" with the given generator symbol.
    std::string to_string(const std::string& symbol = "d") const;
    /// e.g. "\frac{q+1}{q} \, d_{0}" with the given generator symbol.
    std::string to_latex(const std::string& symbol = "d") const;

private:
    std::map<BasisIndex, Scalar> terms_; // no zero coefficients

    void insert(BasisIndex idx, Scalar c);
};

} // namespace homlie
