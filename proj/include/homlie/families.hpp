#pragma once

#include "homlie/bracket.hpp"

namespace homlie {

/// Parameter set {"q", "alpha"} shared by the one-variable families, so that
/// elements of different families can be compared directly.
ParamSetPtr univariate_params();

/// Parameter set {"q1", ..., "qn", "Q"} for the n-variable family.
ParamSetPtr multivariate_params(std::size_t n);

// ---------------------------------------------------------------------------
// Closed-form structure constants. All families use the basis d_v = -z^v * D,
// where D is the family's generating twisted derivation.
// ---------------------------------------------------------------------------

/// Scaling family: sigma(t) = q*t, D = -(id - sigma)/(q - 1), so that
/// D(t^m) = {m} t^m with {m} = (q^m - 1)/(q - 1). Closed form:
///     [d_n, d_m] = ({n} - {m}) d_{n+m}.
HomLieElement qwitt_bracket(int n, int m, const ParamSetPtr& ps);

/// Power family: sigma(t) = q*t^s with s >= 1,
/// D = alpha*(id - sigma)/(t^k - q*t^{k+s-1}). Four-case closed form split by
/// the signs of n and m. Throws DomainError when s < 1.
HomLieElement nonlinear_bracket(int n, int m, int s, int k, const Scalar& alpha,
                                const ParamSetPtr& ps);

/// Monomial-divisor family: sigma(t) = q*t^s, D = alpha*(id - sigma)/t^k.
/// Closed form:
///     [d_n, d_m] = alpha*q^m d_{m*s+n-k} - alpha*q^n d_{n*s+m-k}.
HomLieElement submodule_bracket(int n, int m, int s, int k, const Scalar& alpha,
                                const ParamSetPtr& ps);

/// n-variable monomial family: sigma(z_i) = scale_i * z^{S_{i,.}},
/// D = Q*(id - sigma)/z^G. Closed form:
///     [d_k, d_l] = Q*q^l d_{a(l)+k-G} - Q*q^k d_{a(k)+l-G},
/// where q^v = prod_i scale_i^{v_i} and a(v) = S^T v.
HomLieElement multivariate_bracket(const std::vector<int>& k,
                                   const std::vector<int>& l,
                                   const std::vector<std::vector<int>>& S,
                                   const std::vector<int>& G, const Scalar& Q,
                                   const std::vector<Scalar>& scales);

/// Symmetric-difference family: sigma(t) = q*t, tau(t) = q^{-1}*t,
/// D = (tau - sigma)/(q^{-1} - q), so that D(t^m) = [m] t^m with the
/// symmetric number [m] = (q^m - q^{-m})/(q - q^{-1}). Closed form:
///     [d_n, d_m] = [n - m] d_{n+m}.
HomLieElement symqdiff_bracket(int n, int m, const ParamSetPtr& ps);

// ---------------------------------------------------------------------------
// Bracket contexts whose stored generators match the closed forms above
// term for term (same divisor, same prescale).
// ---------------------------------------------------------------------------

BracketContext qwitt_context(const ParamSetPtr& ps);
BracketContext nonlinear_context(int s, int k, const Scalar& alpha,
                                 const ParamSetPtr& ps);
BracketContext submodule_context(int s, int k, const Scalar& alpha,
                                 const ParamSetPtr& ps);
BracketContext multivariate_context(const std::vector<std::vector<int>>& S,
                                    const std::vector<int>& G, const Scalar& Q,
                                    const std::vector<Scalar>& scales);
BracketContext symqdiff_context(const ParamSetPtr& ps);

/// Primitive basis of the integer solution lattice of S^T v = v, i.e. the
/// exact integer kernel of S^T - I. Vectors are normalized so the first
/// nonzero entry is positive, and are ordered by their defining free column.
std::vector<std::vector<int>> integer_eigenvectors(
    const std::vector<std::vector<int>>& S);

} // namespace homlie
