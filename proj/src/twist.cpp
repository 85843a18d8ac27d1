#include "homlie/twist.hpp"

#include "homlie/errors.hpp"

namespace homlie {

namespace {

/// Determinant of a small integer matrix by cofactor expansion.
Int det(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<int>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<int> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        const Int cof = det(minor);
        sum += (j % 2 == 0 ? Int(m[0][j]) : Int(-m[0][j])) * cof;
    }
    return sum;
}

} // namespace

MonomialEndo::MonomialEndo(std::vector<Scalar> scale,
                           std::vector<std::vector<int>> matrix)
    : scale_(std::move(scale)), matrix_(std::move(matrix)) {
    const std::size_t n = scale_.size();
    if (matrix_.size() != n) {
        throw ArityMismatch("endomorphism matrix row count differs from scale count");
    }
    for (const auto& row : matrix_) {
        if (row.size() != n) {
            throw ArityMismatch("endomorphism matrix is not square");
        }
    }
    for (const Scalar& c : scale_) {
        if (c.is_zero()) throw ZeroInput("endomorphism scale is zero");
    }
}

MonomialEndo MonomialEndo::identity(std::size_t nvars) {
    std::vector<Scalar> scale(nvars, Scalar(Int(1)));
    std::vector<std::vector<int>> matrix(nvars, std::vector<int>(nvars, 0));
    for (std::size_t i = 0; i < nvars; ++i) matrix[i][i] = 1;
    return MonomialEndo(std::move(scale), std::move(matrix));
}

MonomialEndo MonomialEndo::univariate(Scalar c, int s) {
    return MonomialEndo({std::move(c)}, {{s}});
}

bool MonomialEndo::is_identity() const {
    const std::size_t n = nvars();
    for (std::size_t i = 0; i < n; ++i) {
        if (!scale_[i].is_one()) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (matrix_[i][j] != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

bool MonomialEndo::operator==(const MonomialEndo& rhs) const {
    if (nvars() != rhs.nvars() || matrix_ != rhs.matrix_) return false;
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (!(scale_[i] == rhs.scale_[i])) return false;
    }
    return true;
}

LExp MonomialEndo::image_exponent(const LExp& v) const {
    const std::size_t n = nvars();
    if (v.size() != n) throw ArityMismatch("exponent arity does not match endomorphism");
    LExp w(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        int acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += matrix_[i][r] * v[i];
        w[r] = acc;
    }
    return w;
}

Scalar MonomialEndo::image_scale(const LExp& v) const {
    const std::size_t n = nvars();
    if (v.size() != n) throw ArityMismatch("exponent arity does not match endomorphism");
    Scalar s(Int(1));
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] != 0) s *= scale_[i].pow(v[i]);
    }
    return s;
}

LaurentPoly MonomialEndo::apply(const LaurentPoly& f) const {
    if (f.nvars() != nvars()) {
        throw ArityMismatch("polynomial arity does not match endomorphism");
    }
    LaurentPoly out(f.nvars());
    for (const auto& [v, c] : f.terms()) {
        out += LaurentPoly::monomial(c * image_scale(v), image_exponent(v));
    }
    return out;
}

MonomialEndo MonomialEndo::compose_after(const MonomialEndo& inner) const {
    const std::size_t n = nvars();
    if (inner.nvars() != n) {
        throw ArityMismatch("composition of endomorphisms over different arities");
    }
    // (this ∘ inner)(z_i) = this(inner_scale_i * z^(inner row i)).
    std::vector<Scalar> scale;
    std::vector<std::vector<int>> matrix;
    scale.reserve(n);
    matrix.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        scale.push_back(inner.scale_[i] * image_scale(inner.matrix_[i]));
        matrix.push_back(image_exponent(inner.matrix_[i]));
    }
    return MonomialEndo(std::move(scale), std::move(matrix));
}

MonomialEndo MonomialEndo::inverse() const {
    const std::size_t n = nvars();
    const Int d = det(matrix_);
    if (d != 1 && d != -1) {
        throw NotInvertible("endomorphism matrix determinant is " + d.str() +
                            ", not +1 or -1");
    }
    // Integer inverse T = adj(S)/det(S).
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<int>> minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<int> row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != i) row.push_back(matrix_[r][c]);
                }
                minor.push_back(std::move(row));
            }
            Int cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            const Int entry = cof * d; // divide by det = multiply, det = ±1
            inv[i][j] = static_cast<int>(entry);
        }
    }
    // Inverse scales: the inverse must send z_i to scale'_i z^(row i of T)
    // with scale'_i * prod_j scale_j^(T_ij) == 1.
    std::vector<Scalar> scale;
    scale.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar s(Int(1));
        for (std::size_t j = 0; j < n; ++j) {
            if (inv[i][j] != 0) s *= scale_[j].pow(inv[i][j]);
        }
        scale.push_back(s.inverse());
    }
    return MonomialEndo(std::move(scale), std::move(inv));
}

} // namespace homlie
