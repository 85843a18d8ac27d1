#include "homlie/bracket.hpp"

#include "homlie/errors.hpp"

namespace homlie {

LaurentPoly bracket_coefficient(const TwistedDerivation& generator,
                                const LaurentPoly& a, const LaurentPoly& b) {
    const MonomialEndo& sigma = generator.sigma();
    return sigma.apply(a) * generator.apply(b) -
           sigma.apply(b) * generator.apply(a);
}

BracketContext BracketContext::from_derivation(TwistedDerivation generator,
                                               int window) {
    LaurentPoly delta = generator.delta_of(window);
    return BracketContext(std::move(generator), std::move(delta));
}

BracketContext BracketContext::with_delta(TwistedDerivation generator,
                                          LaurentPoly delta, int window) {
    if (delta.nvars() != generator.nvars()) {
        throw ArityMismatch("scaling factor arity does not match the generator");
    }
    const MonomialEndo& sigma = generator.sigma();
    for (const LExp& v : window_exponents(generator.nvars(), window)) {
        const LaurentPoly mono = LaurentPoly::monomial(Scalar(Int(1)), v);
        const LaurentPoly lhs = generator.apply(sigma.apply(mono));
        const LaurentPoly rhs = delta * sigma.apply(generator.apply(mono));
        if (lhs != rhs) {
            throw CompatFailed(
                "injected scaling factor fails the compatibility law at " +
                mono.to_string());
        }
    }
    return BracketContext(std::move(generator), std::move(delta));
}

BracketContext BracketContext::with_delta_unchecked(TwistedDerivation generator,
                                                    LaurentPoly delta) {
    return BracketContext(std::move(generator), std::move(delta));
}

LaurentPoly BracketContext::bracket(const LaurentPoly& a,
                                    const LaurentPoly& b) const {
    return bracket_coefficient(generator_, a, b);
}

bool BracketContext::oracle_check(const LaurentPoly& a, const LaurentPoly& b,
                                  const std::vector<LaurentPoly>& probes) const {
    // Expanding the compositions by the twisted product rule on a commutative
    // ring leaves tau applied to the inner image, so the right-hand side is
    // the bracket coefficient times (tau o D)(x); with tau = id this is the
    // familiar coefficient-times-D(x) form.
    const MonomialEndo& sigma = generator_.sigma();
    const MonomialEndo& tau = generator_.tau();
    const LaurentPoly product = bracket(a, b);
    for (const LaurentPoly& x : probes) {
        const LaurentPoly dx = generator_.apply(x);
        const LaurentPoly lhs = sigma.apply(a) * generator_.apply(b * dx) -
                                sigma.apply(b) * generator_.apply(a * dx);
        if (lhs != product * tau.apply(dx)) return false;
    }
    return true;
}

LaurentPoly BracketContext::six_term_defect(const LaurentPoly& a,
                                            const LaurentPoly& b,
                                            const LaurentPoly& c) const {
    const MonomialEndo& sigma = generator_.sigma();
    LaurentPoly defect(generator_.nvars());
    const LaurentPoly* triple[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        const LaurentPoly& x = *triple[i];
        const LaurentPoly& y = *triple[(i + 1) % 3];
        const LaurentPoly& z = *triple[(i + 2) % 3];
        const LaurentPoly inner = bracket(y, z);
        defect += bracket(sigma.apply(x), inner) + delta_ * bracket(x, inner);
    }
    return defect;
}

bool base_change_check(const BracketContext& ctx, const LaurentPoly& u,
                       const LaurentPoly& a, const LaurentPoly& b) {
    if (!u.is_monomial()) {
        throw NotAUnit("the rescaling element must be a single nonzero term");
    }
    const MonomialEndo& sigma = ctx.generator().sigma();
    const LaurentPoly lhs = sigma.apply(u) * u * u * ctx.bracket(a, b);
    const LaurentPoly rhs = u * ctx.bracket(a * u, b * u);
    return lhs == rhs;
}

HomLieElement bilinear_bracket(const BasisBracket& bracket_on_basis,
                               const HomLieElement& x, const HomLieElement& y) {
    HomLieElement out;
    for (const auto& [ix, cx] : x.terms()) {
        for (const auto& [iy, cy] : y.terms()) {
            out += bracket_on_basis(ix, iy).scaled(cx * cy);
        }
    }
    return out;
}

HomLieElement linear_extend(const BasisTwist& map_on_basis,
                            const HomLieElement& x) {
    HomLieElement out;
    for (const auto& [ix, cx] : x.terms()) {
        out += map_on_basis(ix).scaled(cx);
    }
    return out;
}

HomLieElement homlie_jacobi_defect(const BasisBracket& bracket_on_basis,
                                   const BasisTwist& twist_on_basis,
                                   const HomLieElement& x,
                                   const HomLieElement& y,
                                   const HomLieElement& z) {
    HomLieElement defect;
    const HomLieElement* triple[3] = {&x, &y, &z};
    for (int i = 0; i < 3; ++i) {
        const HomLieElement& u = *triple[i];
        const HomLieElement& v = *triple[(i + 1) % 3];
        const HomLieElement& w = *triple[(i + 2) % 3];
        const HomLieElement inner = bilinear_bracket(bracket_on_basis, v, w);
        defect += bilinear_bracket(bracket_on_basis,
                                   u + linear_extend(twist_on_basis, u), inner);
    }
    return defect;
}

} // namespace homlie
