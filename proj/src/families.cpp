#include "homlie/families.hpp"

#include "homlie/errors.hpp"

#include <algorithm>

namespace homlie {

ParamSetPtr univariate_params() {
    static const ParamSetPtr ps = ParamSet::make({"q", "alpha"});
    return ps;
}

ParamSetPtr multivariate_params(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n + 1);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("q" + std::to_string(i));
    names.push_back("Q");
    return ParamSet::make(std::move(names));
}

HomLieElement qwitt_bracket(int n, int m, const ParamSetPtr& ps) {
    return HomLieElement::basis({n + m}, q_number(ps, n) - q_number(ps, m));
}

namespace {

// Mixed-sign case of the power family, valid for n >= 0, m < 0:
//   alpha * ( sum_{l=0}^{-m-1} q^{n+m+l} d_{(m+l)(s-1)+n*s+m-k}
//           + sum_{l=0}^{n-1}  q^{m+l} d_{(s-1)l+n+m*s-k} ).
HomLieElement nonlinear_mixed(int n, int m, int s, int k, const Scalar& alpha,
                              const ParamSetPtr& ps) {
    const Scalar q = Scalar::param(ps, "q");
    HomLieElement out = HomLieElement::zero();
    for (int l = 0; l <= -m - 1; ++l) {
        out = out + HomLieElement::basis({(m + l) * (s - 1) + n * s + m - k},
                                         alpha * q.pow(n + m + l));
    }
    for (int l = 0; l <= n - 1; ++l) {
        out = out + HomLieElement::basis({(s - 1) * l + n + m * s - k},
                                         alpha * q.pow(m + l));
    }
    return out;
}

} // namespace

HomLieElement nonlinear_bracket(int n, int m, int s, int k,
                                const Scalar& alpha, const ParamSetPtr& ps) {
    if (s < 1)
        throw DomainError(
            "the power-family closed form requires exponent s >= 1, got s = " +
            std::to_string(s));
    const Scalar q = Scalar::param(ps, "q");
    if (n >= 0 && m >= 0) {
        if (n == m) return HomLieElement::zero();
        const bool flip = n < m;
        const int lo = std::min(n, m), hi = std::max(n, m);
        HomLieElement out = HomLieElement::zero();
        for (int l = lo; l <= hi - 1; ++l) {
            Scalar c = alpha * q.pow(n + m - 1 - l);
            if (flip) c = -c;
            out = out + HomLieElement::basis(
                            {(n + m - 1) * s - (s - 1) * l - (k - 1)}, c);
        }
        return out;
    }
    if (n >= 0 && m < 0) return nonlinear_mixed(n, m, s, k, alpha, ps);
    if (n < 0 && m >= 0)
        return HomLieElement::zero() - nonlinear_mixed(m, n, s, k, alpha, ps);
    // n < 0 and m < 0.
    if (n == m) return HomLieElement::zero();
    const bool flip = n < m;
    const int lo = std::min(-n, -m), hi = std::max(-n, -m);
    HomLieElement out = HomLieElement::zero();
    for (int l = lo; l <= hi - 1; ++l) {
        Scalar c = alpha * q.pow(n + m + l);
        if (flip) c = -c;
        out = out + HomLieElement::basis({(m + n) * s + (s - 1) * l - k}, c);
    }
    return out;
}

HomLieElement submodule_bracket(int n, int m, int s, int k,
                                const Scalar& alpha, const ParamSetPtr& ps) {
    const Scalar q = Scalar::param(ps, "q");
    return HomLieElement::basis({m * s + n - k}, alpha * q.pow(m)) -
           HomLieElement::basis({n * s + m - k}, alpha * q.pow(n));
}

namespace {

void require_square(const std::vector<std::vector<int>>& S, std::size_t n) {
    if (S.size() != n)
        throw ArityMismatch("exponent matrix must be square of the arity");
    for (const auto& row : S)
        if (row.size() != n)
            throw ArityMismatch("exponent matrix must be square of the arity");
}

// a(v) = S^T v, the exponent tuple of the image sigma(z^v) up to scale.
std::vector<int> transpose_apply(const std::vector<std::vector<int>>& S,
                                 const std::vector<int>& v) {
    const std::size_t n = v.size();
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) out[r] += S[i][r] * v[i];
    return out;
}

Scalar scale_power(const std::vector<Scalar>& scales,
                   const std::vector<int>& v) {
    Scalar out(Int(1));
    for (std::size_t i = 0; i < v.size(); ++i) out = out * scales[i].pow(v[i]);
    return out;
}

std::vector<int> add_sub(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& c) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i] - c[i];
    return out;
}

} // namespace

HomLieElement multivariate_bracket(const std::vector<int>& k,
                                   const std::vector<int>& l,
                                   const std::vector<std::vector<int>>& S,
                                   const std::vector<int>& G, const Scalar& Q,
                                   const std::vector<Scalar>& scales) {
    const std::size_t n = k.size();
    if (l.size() != n || G.size() != n || scales.size() != n)
        throw ArityMismatch("index tuples, G, and scales must share one arity");
    require_square(S, n);
    return HomLieElement::basis(add_sub(transpose_apply(S, l), k, G),
                                Q * scale_power(scales, l)) -
           HomLieElement::basis(add_sub(transpose_apply(S, k), l, G),
                                Q * scale_power(scales, k));
}

HomLieElement symqdiff_bracket(int n, int m, const ParamSetPtr& ps) {
    return HomLieElement::basis({n + m}, sym_q_number(ps, n - m));
}

BracketContext qwitt_context(const ParamSetPtr& ps) {
    const Scalar q = Scalar::param(ps, "q");
    auto gen = TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q, 1), MonomialEndo::identity(1),
        LaurentPoly::constant(1, q - Scalar(Int(1))), Scalar(Int(-1)));
    return BracketContext::from_derivation(std::move(gen));
}

BracketContext nonlinear_context(int s, int k, const Scalar& alpha,
                                 const ParamSetPtr& ps) {
    const Scalar q = Scalar::param(ps, "q");
    LaurentPoly divisor =
        LaurentPoly::t_power(k) - LaurentPoly::t_power(k + s - 1, q);
    auto gen = TwistedDerivation::with_divisor(MonomialEndo::univariate(q, s),
                                               MonomialEndo::identity(1),
                                               std::move(divisor), alpha);
    return BracketContext::from_derivation(std::move(gen));
}

BracketContext submodule_context(int s, int k, const Scalar& alpha,
                                 const ParamSetPtr& ps) {
    const Scalar q = Scalar::param(ps, "q");
    auto gen = TwistedDerivation::with_divisor(MonomialEndo::univariate(q, s),
                                               MonomialEndo::identity(1),
                                               LaurentPoly::t_power(k), alpha);
    return BracketContext::from_derivation(std::move(gen));
}

BracketContext multivariate_context(const std::vector<std::vector<int>>& S,
                                    const std::vector<int>& G, const Scalar& Q,
                                    const std::vector<Scalar>& scales) {
    const std::size_t n = G.size();
    if (scales.size() != n)
        throw ArityMismatch("G and scales must share one arity");
    require_square(S, n);
    auto gen = TwistedDerivation::with_divisor(
        MonomialEndo(scales, S), MonomialEndo::identity(n),
        LaurentPoly::monomial(Scalar(Int(1)), G), Q,
        /*window=*/4);
    return BracketContext::from_derivation(std::move(gen), /*window=*/4);
}

BracketContext symqdiff_context(const ParamSetPtr& ps) {
    const Scalar q = Scalar::param(ps, "q");
    const Scalar qi = q.inverse();
    auto gen = TwistedDerivation::with_divisor(
        MonomialEndo::univariate(q, 1), MonomialEndo::univariate(qi, 1),
        LaurentPoly::constant(1, qi - q), Scalar(Int(1)));
    return BracketContext::with_delta(std::move(gen), LaurentPoly::one(1));
}

std::vector<std::vector<int>> integer_eigenvectors(
    const std::vector<std::vector<int>>& S) {
    const std::size_t n = S.size();
    require_square(S, n);

    // Row-reduce M = S^T - I over the rationals.
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            M[r][c] = Rat(Int(S[c][r]) - Int(r == c ? 1 : 0));

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t pivot = rank;
        while (pivot < n && M[pivot][c] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(M[rank], M[pivot]);
        const Rat inv = Rat(1) / M[rank][c];
        for (std::size_t j = 0; j < n; ++j) M[rank][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const Rat f = M[r][c];
            for (std::size_t j = 0; j < n; ++j) M[r][j] -= f * M[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    std::vector<std::vector<int>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), f) !=
            pivot_cols.end())
            continue;
        // Solution with free coordinate f set to 1, other free coords 0.
        std::vector<Rat> x(n, Rat(0));
        x[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = -M[r][f];

        Int lcm_den(1);
        for (const Rat& e : x) {
            const Int d = boost::multiprecision::denominator(e);
            lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
        }
        std::vector<Int> w(n);
        Int content(0);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = boost::multiprecision::numerator(x[i] * Rat(lcm_den));
            content = boost::multiprecision::gcd(content, w[i]);
        }
        if (content == 0)
            throw InternalError("kernel basis vector came out zero");
        for (Int& e : w) e /= content;
        for (const Int& e : w) {
            if (e == 0) continue;
            if (e < 0)
                for (Int& u : w) u = -u;
            break;
        }
        std::vector<int> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = static_cast<int>(w[i].convert_to<long long>());
        basis.push_back(std::move(out));
    }
    return basis;
}

} // namespace homlie
