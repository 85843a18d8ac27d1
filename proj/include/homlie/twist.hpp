#pragma once

#include <vector>

#include "homlie/laurent.hpp"

namespace homlie {

/// A ring endomorphism of the Laurent ring determined by sending each
/// variable to a nonzero scalar multiple of a monomial:
///
///     z_i  |->  scale_i * z^(row i of matrix)
///
/// Scalars are fixed pointwise. Univariate case: t |-> c * t^s.
class MonomialEndo {
public:
    /// Throws ZeroInput if any scale is zero, ArityMismatch on shape errors.
    MonomialEndo(std::vector<Scalar> scale, std::vector<std::vector<int>> matrix);

    static MonomialEndo identity(std::size_t nvars);
    /// t |-> c * t^s on one variable.
    static MonomialEndo univariate(Scalar c, int s);

    std::size_t nvars() const { return scale_.size(); }
    const std::vector<Scalar>& scales() const { return scale_; }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }

    bool is_identity() const;
    bool operator==(const MonomialEndo& rhs) const;
    bool operator!=(const MonomialEndo& rhs) const { return !(*this == rhs); }

    /// Exponent of the image of the monomial z^v (the matrix acting as
    /// v |-> S^T v, since row i of S is the image exponent of z_i).
    LExp image_exponent(const LExp& v) const;
    /// Scale of the image of z^v: prod_i scale_i^(v_i).
    Scalar image_scale(const LExp& v) const;

    /// Apply to a whole Laurent polynomial (coefficients are fixed).
    LaurentPoly apply(const LaurentPoly& f) const;

    /// this ∘ inner: first apply `inner`, then this endomorphism.
    MonomialEndo compose_after(const MonomialEndo& inner) const;

    /// Two-sided inverse; exists iff det(matrix) is +1 or -1
    /// (NotInvertible otherwise).
    MonomialEndo inverse() const;

private:
    std::vector<Scalar> scale_;
    std::vector<std::vector<int>> matrix_;
};

} // namespace homlie
