#include "homlie/derivation.hpp"

#include <algorithm>

#include "homlie/errors.hpp"

namespace homlie {

std::vector<LExp> window_exponents(std::size_t nvars, int radius) {
    std::vector<LExp> out;
    LExp v(nvars, -radius);
    while (true) {
        if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) {
            out.push_back(v);
        }
        std::size_t i = nvars;
        while (i > 0) {
            --i;
            if (v[i] < radius) {
                ++v[i];
                break;
            }
            v[i] = -radius;
            if (i == 0) return out;
        }
        if (nvars == 0) return out;
    }
}

namespace {

LaurentPoly monomial_one(const LExp& v) {
    return LaurentPoly::monomial(Scalar(Int(1)), v);
}

} // namespace

TwistedDerivation::TwistedDerivation(MonomialEndo sigma, MonomialEndo tau,
                                     LaurentPoly divisor, Scalar prescale)
    : sigma_(std::move(sigma)), tau_(std::move(tau)), divisor_(std::move(divisor)),
      prescale_(std::move(prescale)), cache_(std::make_shared<Cache>()) {}

TwistedDerivation TwistedDerivation::with_divisor(MonomialEndo sigma,
                                                  MonomialEndo tau,
                                                  LaurentPoly divisor,
                                                  Scalar prescale, int window) {
    if (sigma.nvars() != tau.nvars() || sigma.nvars() != divisor.nvars()) {
        throw ArityMismatch("endomorphisms and divisor over different arities");
    }
    if (sigma == tau) {
        throw EqualTwists("the two endomorphisms must be distinct");
    }
    if (divisor.is_zero()) throw ZeroInput("zero divisor");
    if (prescale.is_zero()) throw ZeroInput("zero prescale");

    TwistedDerivation d(std::move(sigma), std::move(tau), std::move(divisor),
                        std::move(prescale));
    for (const LExp& v : window_exponents(d.nvars(), window)) {
        const LaurentPoly mono = monomial_one(v);
        const LaurentPoly image = d.tau_.apply(mono) - d.sigma_.apply(mono);
        LaurentPoly::exact_div(image, d.divisor_); // NotDivisible on failure
    }
    return d;
}

TwistedDerivation TwistedDerivation::canonical_generator(MonomialEndo sigma,
                                                         MonomialEndo tau,
                                                         int window) {
    if (sigma.nvars() != 1 || tau.nvars() != 1) {
        throw MultivariateUnsupported(
            "canonical divisor search is implemented for one variable only");
    }
    if (sigma == tau) {
        throw EqualTwists("the two endomorphisms must be distinct");
    }
    const auto gcd_over = [&](int radius) {
        std::vector<LaurentPoly> images;
        for (int r = -radius; r <= radius; ++r) {
            if (r == 0) continue;
            const LaurentPoly mono = LaurentPoly::t_power(r);
            images.push_back(tau.apply(mono) - sigma.apply(mono));
        }
        return LaurentPoly::gcd_up_to_unit(images);
    };
    const LaurentPoly g = gcd_over(window);
    if (g != gcd_over(window + 1)) {
        throw Unstable("canonical divisor changed when the window grew from " +
                       std::to_string(window) + " to " + std::to_string(window + 1));
    }
    return with_divisor(std::move(sigma), std::move(tau), g, Scalar(Int(1)),
                        window + 1);
}

LaurentPoly TwistedDerivation::monomial_image(const LExp& v) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        const auto it = cache_->images.find(v);
        if (it != cache_->images.end()) return it->second;
    }
    const LaurentPoly mono = monomial_one(v);
    const LaurentPoly numer = tau_.apply(mono) - sigma_.apply(mono);
    LaurentPoly image = LaurentPoly::exact_div(numer, divisor_).scaled(prescale_);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return cache_->images.emplace(v, std::move(image)).first->second;
}

LaurentPoly TwistedDerivation::apply(const LaurentPoly& f) const {
    if (f.nvars() != nvars()) {
        throw ArityMismatch("polynomial arity does not match the generator");
    }
    LaurentPoly out(nvars());
    for (const auto& [v, c] : f.terms()) {
        out += monomial_image(v).scaled(c);
    }
    return out;
}

bool TwistedDerivation::leibniz_check(const LaurentPoly& f,
                                      const LaurentPoly& g) const {
    return leibniz_pair_holds([this](const LaurentPoly& x) { return apply(x); },
                              sigma_, tau_, f, g);
}

LaurentPoly TwistedDerivation::delta_of(int window) const {
    if (!tau_.is_identity()) {
        throw InternalError(
            "the scaling factor is defined for generators with tau = id");
    }
    const LaurentPoly delta = LaurentPoly::exact_div(sigma_.apply(divisor_), divisor_);
    for (const LExp& v : window_exponents(nvars(), window)) {
        const LaurentPoly mono = monomial_one(v);
        const LaurentPoly lhs = apply(sigma_.apply(mono));
        const LaurentPoly rhs = delta * sigma_.apply(apply(mono));
        if (lhs != rhs) {
            throw CompatFailed("scaling law fails at monomial exponent " +
                               mono.to_string());
        }
    }
    return delta;
}

LaurentPoly TwistedDerivation::coordinatize(const LaurentPoly& value_on_t,
                                            int window) const {
    if (nvars() != 1) {
        throw MultivariateUnsupported(
            "coordinatization is implemented for one variable only");
    }
    if (sigma_ == tau_) {
        throw EqualTwists("coordinatization requires distinct endomorphisms");
    }
    const LaurentPoly t = LaurentPoly::t_power(1);
    const LaurentPoly image_t = tau_.apply(t) - sigma_.apply(t);
    // Route 1: direct division  a = D(t)·divisor / (prescale·(tau-sigma)(t)).
    const LaurentPoly a =
        LaurentPoly::exact_div(value_on_t * divisor_, image_t.scaled(prescale_));

    // Route 2: rebuild D(t^r) from D(t) alone via the Leibniz recursions
    //   D(t^r)    = D(t)·tau(t^(r-1)) + sigma(t)·D(t^(r-1)),
    //   D(t^(-r)) = -sigma(t^(-r))·D(t^r)·tau(t^(-r)),
    // and require a·Δ(t^r) == D(t^r) across the window.
    std::vector<LaurentPoly> up; // up[r] = D(t^r), r >= 0
    up.push_back(LaurentPoly::zero(1));
    up.push_back(value_on_t);
    for (int r = 2; r <= window; ++r) {
        const LaurentPoly prev_power = LaurentPoly::t_power(r - 1);
        up.push_back(value_on_t * tau_.apply(prev_power) +
                     sigma_.apply(t) * up[r - 1]);
    }
    for (int r = -window; r <= window; ++r) {
        LaurentPoly expected(1);
        if (r >= 0) {
            expected = up[r];
        } else {
            const LaurentPoly neg_power = LaurentPoly::t_power(r);
            expected = -(sigma_.apply(neg_power) * up[-r] * tau_.apply(neg_power));
        }
        if (a * monomial_image(LExp{r}) != expected) {
            throw InternalError(
                "coordinatization routes disagree at power " + std::to_string(r));
        }
    }
    return a;
}

LaurentPoly apply_module(const TwistedDerivation& generator,
                         const LaurentPoly& coefficient, const LaurentPoly& f) {
    return coefficient * generator.apply(f);
}

bool leibniz_pair_holds(const LaurentMap& D, const MonomialEndo& sigma,
                        const MonomialEndo& tau, const LaurentPoly& f,
                        const LaurentPoly& g) {
    const LaurentPoly lhs = D(f * g);
    const LaurentPoly rhs = D(f) * tau.apply(g) + sigma.apply(f) * D(g);
    return lhs == rhs;
}

bool kernel_lemma_check(const LaurentMap& D, const MonomialEndo& sigma,
                        const MonomialEndo& tau, int window) {
    const std::size_t nv = sigma.nvars();
    // The constant 1 always lies in the kernel of (tau - sigma).
    if (!D(LaurentPoly::one(nv)).is_zero()) return false;

    // Group window monomials by the unit-normal core and shift of their
    // (tau - sigma)-image; zero images give kernel monomials directly, and
    // within a group consecutive pairs give kernel binomials
    // z^v - (u_v/u_w) z^w.
    struct Probe {
        LExp v;
        Scalar unit;
    };
    std::map<std::string, std::vector<Probe>> groups;
    for (const LExp& v : window_exponents(nv, window)) {
        const LaurentPoly mono = LaurentPoly::monomial(Scalar(Int(1)), v);
        const LaurentPoly image = tau.apply(mono) - sigma.apply(mono);
        if (image.is_zero()) {
            if (!D(mono).is_zero()) return false;
            continue;
        }
        const auto unf = image.unit_normalize();
        std::string key = unf.core.to_string() + "|";
        for (int e : unf.unit_exponents) key += std::to_string(e) + ",";
        groups[key].push_back({v, unf.unit_scalar});
    }
    for (const auto& [key, probes] : groups) {
        for (std::size_t i = 1; i < probes.size(); ++i) {
            const Scalar lambda = probes[i].unit / probes[0].unit;
            const LaurentPoly kernel_elem =
                LaurentPoly::monomial(Scalar(Int(1)), probes[i].v) -
                LaurentPoly::monomial(lambda, probes[0].v);
            if (!D(kernel_elem).is_zero()) return false;
        }
    }
    return true;
}

bool kernel_lemma_check(const TwistedDerivation& generator, int window) {
    return kernel_lemma_check(
        [&generator](const LaurentPoly& x) { return generator.apply(x); },
        generator.sigma(), generator.tau(), window);
}

} // namespace homlie
