#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "homlie/twist.hpp"

namespace homlie {

/// A map on Laurent polynomials used by the verification helpers; allows
/// substituting deliberately corrupted maps as negative controls.
using LaurentMap = std::function<LaurentPoly(const LaurentPoly&)>;

/// All nonzero exponent vectors with |v|_inf <= radius, in lexicographic
/// order: the deterministic sweep order of every certification window.
std::vector<LExp> window_exponents(std::size_t nvars, int radius);

/// The generator  Δ = prescale * (tau - sigma) / divisor  of a cyclic module
/// of (sigma, tau)-derivations, applied term by term with memoized monomial
/// images.
///
/// Construction certifies that the divisor exactly divides
/// (tau - sigma)(z^v) for every monomial in the certification window
/// (|v|_inf <= window, v != 0); outside the window the divisibility is a
/// consequence of the GCD property for canonical divisors, and apply() would
/// surface NotDivisible honestly if an injected divisor fails it.
class TwistedDerivation {
public:
    /// Explicit divisor and prescale. Throws ZeroInput (zero divisor or
    /// prescale), EqualTwists (sigma == tau), ArityMismatch, NotDivisible
    /// (certification failure).
    static TwistedDerivation with_divisor(MonomialEndo sigma, MonomialEndo tau,
                                          LaurentPoly divisor, Scalar prescale,
                                          int window = 8);

    /// One variable only: the divisor is the canonical (unit-normalized) GCD
    /// of (tau - sigma)(t^r) over 0 < |r| <= window, certified stable
    /// against enlarging the window by one (Unstable otherwise); prescale 1.
    static TwistedDerivation canonical_generator(MonomialEndo sigma,
                                                 MonomialEndo tau,
                                                 int window = 4);

    const MonomialEndo& sigma() const { return sigma_; }
    const MonomialEndo& tau() const { return tau_; }
    const LaurentPoly& divisor() const { return divisor_; }
    const Scalar& prescale() const { return prescale_; }
    std::size_t nvars() const { return sigma_.nvars(); }

    /// Δ(f), computed term by term from cached monomial images.
    LaurentPoly apply(const LaurentPoly& f) const;

    /// Δ(z^v) including the prescale (memoized).
    LaurentPoly monomial_image(const LExp& v) const;

    /// The twisted Leibniz law  Δ(fg) == Δ(f)τ(g) + σ(f)Δ(g)  for the pair.
    bool leibniz_check(const LaurentPoly& f, const LaurentPoly& g) const;

    /// Requires tau == id (InternalError otherwise). Returns
    /// delta = sigma(divisor)/divisor (NotDivisible if inexact), verified to
    /// satisfy Δ(σ(z^v)) == delta * σ(Δ(z^v)) for |v|_inf <= window
    /// (CompatFailed otherwise).
    LaurentPoly delta_of(int window = 8) const;

    /// One variable only. Given the value D(t) of a (sigma, tau)-derivation
    /// D on t, return the unique coefficient a with D == a·Δ:
    ///     a = D(t) * divisor / (prescale * (tau - sigma)(t)).
    /// A second, independent route recomputes D(t^r) for |r| <= window by
    /// the Leibniz recursions from D(t) alone and checks a·Δ(t^r) == D(t^r);
    /// disagreement raises InternalError. Throws NotDivisible when D(t) is
    /// not a multiple of Δ(t), EqualTwists when sigma == tau.
    LaurentPoly coordinatize(const LaurentPoly& value_on_t, int window = 8) const;

private:
    TwistedDerivation(MonomialEndo sigma, MonomialEndo tau, LaurentPoly divisor,
                      Scalar prescale);

    MonomialEndo sigma_;
    MonomialEndo tau_;
    LaurentPoly divisor_;
    Scalar prescale_;

    struct Cache {
        std::mutex mutex;
        std::map<LExp, LaurentPoly> images;
    };
    std::shared_ptr<Cache> cache_;
};

/// a * Δ applied to f (the action of the module element with coefficient a).
LaurentPoly apply_module(const TwistedDerivation& generator,
                         const LaurentPoly& coefficient, const LaurentPoly& f);

/// The twisted Leibniz law for an arbitrary map claimed to be a
/// (sigma, tau)-derivation, on one pair.
bool leibniz_pair_holds(const LaurentMap& D, const MonomialEndo& sigma,
                        const MonomialEndo& tau, const LaurentPoly& f,
                        const LaurentPoly& g);

/// Every element annihilated by (tau - sigma) must be annihilated by D.
/// The probe set is built from the window |v|_inf <= window: the constant 1,
/// monomials with (tau - sigma)(z^v) == 0, and differences z^v - λ z^w for
/// probe pairs with proportional nonzero images.
bool kernel_lemma_check(const LaurentMap& D, const MonomialEndo& sigma,
                        const MonomialEndo& tau, int window = 8);

/// Same check applied to a generator's own action.
bool kernel_lemma_check(const TwistedDerivation& generator, int window = 8);

} // namespace homlie
