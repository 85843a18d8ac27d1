#pragma once

#include <functional>
#include <vector>

#include "homlie/derivation.hpp"
#include "homlie/element.hpp"

namespace homlie {

/// Coefficient of the bracket of two module elements a·Δ and b·Δ:
///     [a·Δ, b·Δ] = (σ(a)·Δ(b) − σ(b)·Δ(a))·Δ.
/// Needs no scaling factor; it is the product rule itself.
LaurentPoly bracket_coefficient(const TwistedDerivation& generator,
                                const LaurentPoly& a, const LaurentPoly& b);

/// A generator bundled with the scaling factor delta that enters the
/// six-term twisted Jacobi identity. Invariant: delta is either computed
/// from the generator (tau = id) or injected under the certified
/// compatibility law Δ∘σ == δ·σ∘Δ; the unchecked factory exists solely for
/// negative-control experiments.
class BracketContext {
public:
    /// tau must be the identity; delta := delta_of(window).
    static BracketContext from_derivation(TwistedDerivation generator,
                                          int window = 8);
    /// Injected delta, certified on monomials |v|_inf <= window
    /// (CompatFailed on violation).
    static BracketContext with_delta(TwistedDerivation generator,
                                     LaurentPoly delta, int window = 8);
    /// Injected delta with no certification; for negative controls only.
    static BracketContext with_delta_unchecked(TwistedDerivation generator,
                                               LaurentPoly delta);

    const TwistedDerivation& generator() const { return generator_; }
    const LaurentPoly& delta() const { return delta_; }

    /// Coefficient of [a·Δ, b·Δ].
    LaurentPoly bracket(const LaurentPoly& a, const LaurentPoly& b) const;

    /// Operator-composition oracle, independent of delta: checks
    ///   σ(a)·Δ(b·Δ(x)) − σ(b)·Δ(a·Δ(x)) == bracket(a,b)·τ(Δ(x))
    /// for every probe x (with τ = id the right side is bracket(a,b)·Δ(x)).
    bool oracle_check(const LaurentPoly& a, const LaurentPoly& b,
                      const std::vector<LaurentPoly>& probes) const;

    /// Defect of the six-term twisted Jacobi identity,
    ///   Σ_cyc ( bracket(σ(a), w) + δ·bracket(a, w) ),  w = bracket(b, c),
    /// summed over the cyclic rotations of (a, b, c). Zero iff the identity
    /// holds for the triple.
    LaurentPoly six_term_defect(const LaurentPoly& a, const LaurentPoly& b,
                                const LaurentPoly& c) const;

private:
    BracketContext(TwistedDerivation generator, LaurentPoly delta)
        : generator_(std::move(generator)), delta_(std::move(delta)) {}
    TwistedDerivation generator_;
    LaurentPoly delta_;
};

/// Rescaling consistency for a unit monomial u (NotAUnit otherwise):
///     σ(u)·u²·bracket(a, b) == u·bracket(a·u, b·u).
/// Relates the bracket taken with respect to the generator u·Δ to the
/// bracket of the rescaled coefficients with respect to Δ.
bool base_change_check(const BracketContext& ctx, const LaurentPoly& u,
                       const LaurentPoly& a, const LaurentPoly& b);

/// Bracket / twist given on basis labels and extended (bi)linearly.
using BasisBracket =
    std::function<HomLieElement(const BasisIndex&, const BasisIndex&)>;
using BasisTwist = std::function<HomLieElement(const BasisIndex&)>;

HomLieElement bilinear_bracket(const BasisBracket& bracket_on_basis,
                               const HomLieElement& x, const HomLieElement& y);

HomLieElement linear_extend(const BasisTwist& map_on_basis,
                            const HomLieElement& x);

/// Defect of the twisted three-term Jacobi identity
///     Σ_cyc [ x + ς(x), [y, z] ]
/// for an abstract bracket and twist ς given on basis labels.
HomLieElement homlie_jacobi_defect(const BasisBracket& bracket_on_basis,
                                   const BasisTwist& twist_on_basis,
                                   const HomLieElement& x,
                                   const HomLieElement& y,
                                   const HomLieElement& z);

} // namespace homlie
