#include "homlie/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

int total_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

struct GrlexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        return MPoly::grlex_less(b, a);
    }
};

void check_same_arity(const MPoly& a, const MPoly& b, const char* op) {
    if (a.nvars() != b.nvars()) {
        throw ArityMismatch(std::string("polynomial ") + op + ": operands have " +
                            std::to_string(a.nvars()) + " and " +
                            std::to_string(b.nvars()) + " variables");
    }
}

} // namespace

bool MPoly::grlex_less(const Expo& a, const Expo& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

void MPoly::normalize() {
    for (const MTerm& t : terms_) {
        if (t.exp.size() != nvars_) {
            throw ArityMismatch("term exponent arity does not match polynomial");
        }
        for (int e : t.exp) {
            if (e < 0) throw InternalError("negative exponent in polynomial term");
        }
    }
    std::sort(terms_.begin(), terms_.end(), [](const MTerm& x, const MTerm& y) {
        return grlex_less(y.exp, x.exp);
    });
    std::vector<MTerm> merged;
    merged.reserve(terms_.size());
    for (MTerm& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff == 0) merged.pop_back();
        } else if (t.coeff != 0) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

MPoly MPoly::constant(std::size_t nvars, Int c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.push_back({Expo(nvars, 0), std::move(c)});
    return p;
}

MPoly MPoly::variable_power(std::size_t nvars, std::size_t index, int power, Int c) {
    if (index >= nvars) throw ArityMismatch("variable index out of range");
    if (power < 0) throw InternalError("negative power in polynomial monomial");
    MPoly p(nvars);
    if (c != 0) {
        Expo e(nvars, 0);
        e[index] = power;
        p.terms_.push_back({std::move(e), std::move(c)});
    }
    return p;
}

MPoly MPoly::monomial(Int coeff, Expo exp) {
    MPoly p(exp.size());
    if (coeff != 0) {
        for (int e : exp) {
            if (e < 0) throw InternalError("negative exponent in polynomial monomial");
        }
        p.terms_.push_back({std::move(exp), std::move(coeff)});
    }
    return p;
}

MPoly MPoly::from_terms(std::size_t nvars, std::vector<MTerm> terms) {
    MPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && total_degree(terms_[0].exp) == 0 &&
           terms_[0].coeff == 1;
}

const MTerm& MPoly::leading_term() const {
    if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
    return terms_.front();
}

int MPoly::deg_in(std::size_t var) const {
    if (var >= nvars_) throw ArityMismatch("variable index out of range");
    int d = -1;
    for (const MTerm& t : terms_) d = std::max(d, t.exp[var]);
    return d;
}

MPoly MPoly::coeff_of_power(std::size_t var, int e) const {
    if (var >= nvars_) throw ArityMismatch("variable index out of range");
    std::vector<MTerm> out;
    for (const MTerm& t : terms_) {
        if (t.exp[var] == e) {
            MTerm u = t;
            u.exp[var] = 0;
            out.push_back(std::move(u));
        }
    }
    return from_terms(nvars_, std::move(out));
}

Expo MPoly::min_exponents() const {
    Expo m(nvars_, 0);
    bool first = true;
    for (const MTerm& t : terms_) {
        if (first) {
            m = t.exp;
            first = false;
        } else {
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.exp[i]);
        }
    }
    return m;
}

Int MPoly::content() const {
    Int g = 0;
    for (const MTerm& t : terms_) {
        g = gcd_int(g, t.coeff);
        if (g == 1) break;
    }
    return g;
}

MPoly MPoly::operator-() const {
    MPoly p(*this);
    for (MTerm& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

MPoly MPoly::operator+(const MPoly& rhs) const {
    check_same_arity(*this, rhs, "addition");
    std::vector<MTerm> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        const Expo& a = terms_[i].exp;
        const Expo& b = rhs.terms_[j].exp;
        if (a == b) {
            Int c = terms_[i].coeff + rhs.terms_[j].coeff;
            if (c != 0) out.push_back({a, std::move(c)});
            ++i;
            ++j;
        } else if (grlex_less(b, a)) {
            out.push_back(terms_[i]);
            ++i;
        } else {
            out.push_back(rhs.terms_[j]);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
    MPoly p(nvars_);
    p.terms_ = std::move(out);
    return p;
}

MPoly MPoly::operator-(const MPoly& rhs) const { return *this + (-rhs); }

MPoly MPoly::operator*(const MPoly& rhs) const {
    check_same_arity(*this, rhs, "multiplication");
    std::map<Expo, Int, GrlexGreater> acc;
    for (const MTerm& a : terms_) {
        for (const MTerm& b : rhs.terms_) {
            Expo e(nvars_);
            for (std::size_t k = 0; k < nvars_; ++k) e[k] = a.exp[k] + b.exp[k];
            acc[std::move(e)] += a.coeff * b.coeff;
        }
    }
    MPoly p(nvars_);
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (c != 0) p.terms_.push_back({e, std::move(c)});
    }
    return p;
}

bool MPoly::operator==(const MPoly& rhs) const {
    if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exp != rhs.terms_[i].exp || terms_[i].coeff != rhs.terms_[i].coeff)
            return false;
    }
    return true;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = constant(nvars_, 1);
    MPoly base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& a, const MPoly& b) {
    check_same_arity(a, b, "division");
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly rem = a;
    std::vector<MTerm> quotient;
    const MTerm& lb = b.leading_term();
    while (!rem.is_zero()) {
        const MTerm& lr = rem.leading_term();
        Expo qe(a.nvars_);
        for (std::size_t k = 0; k < a.nvars_; ++k) {
            qe[k] = lr.exp[k] - lb.exp[k];
            if (qe[k] < 0) return std::nullopt;
        }
        Int qc = lr.coeff / lb.coeff;
        if (qc * lb.coeff != lr.coeff) return std::nullopt;
        MPoly qterm = monomial(qc, qe);
        quotient.push_back({std::move(qe), std::move(qc)});
        rem = rem - qterm * b;
    }
    return from_terms(a.nvars_, std::move(quotient));
}

namespace {

MPoly exact_divide_checked(const MPoly& a, const MPoly& b) {
    auto q = MPoly::exact_divide(a, b);
    if (!q) throw InternalError("exact polynomial division failed unexpectedly");
    return *q;
}

MPoly normalize_sign(MPoly p) {
    if (!p.is_zero() && p.leading_term().coeff < 0) return -p;
    return p;
}

/// GCD of the coefficients of `p` viewed as a polynomial in `var`.
MPoly content_in_var(const MPoly& p, std::size_t var) {
    MPoly c(p.nvars());
    const int d = p.deg_in(var);
    for (int e = 0; e <= d; ++e) {
        MPoly ce = p.coeff_of_power(var, e);
        if (!ce.is_zero()) c = MPoly::gcd(c, ce);
    }
    return c;
}

/// Pseudo-remainder of a by b with respect to `var`; deg_var(b) >= 1.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
    const int db = b.deg_in(var);
    const MPoly lb = b.coeff_of_power(var, db);
    MPoly r = a;
    int steps = a.deg_in(var) - db + 1;
    while (!r.is_zero() && r.deg_in(var) >= db) {
        const int dr = r.deg_in(var);
        MPoly lr = r.coeff_of_power(var, dr);
        MPoly shift = MPoly::variable_power(a.nvars(), var, dr - db);
        r = lb * r - lr * shift * b;
        --steps;
    }
    for (int i = 0; i < steps; ++i) r = r * lb;
    return r;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    check_same_arity(a, b, "gcd");
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);

    if (a.is_monomial() || b.is_monomial()) {
        const Int c = gcd_int(a.content(), b.content());
        const Expo ma = a.min_exponents();
        const Expo mb = b.min_exponents();
        Expo e(a.nvars_);
        for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = std::min(ma[k], mb[k]);
        return monomial(c, std::move(e));
    }

    // Main variable: the highest-index variable occurring in either operand.
    std::size_t var = 0;
    bool found = false;
    for (std::size_t k = a.nvars_; k-- > 0;) {
        if (a.deg_in(k) > 0 || b.deg_in(k) > 0) {
            var = k;
            found = true;
            break;
        }
    }
    if (!found) {
        // Both are nonzero constants.
        return constant(a.nvars_, gcd_int(a.content(), b.content()));
    }
    if (a.deg_in(var) == 0) return gcd(a, content_in_var(b, var));
    if (b.deg_in(var) == 0) return gcd(content_in_var(a, var), b);

    const MPoly ca = content_in_var(a, var);
    const MPoly cb = content_in_var(b, var);
    const MPoly c = gcd(ca, cb);
    MPoly u = exact_divide_checked(a, ca);
    MPoly v = exact_divide_checked(b, cb);
    if (u.deg_in(var) < v.deg_in(var)) std::swap(u, v);
    while (!v.is_zero()) {
        MPoly r = pseudo_remainder(u, v, var);
        u = std::move(v);
        if (r.is_zero()) {
            v = std::move(r);
        } else {
            v = exact_divide_checked(r, content_in_var(r, var));
        }
    }
    u = exact_divide_checked(u, content_in_var(u, var));
    return normalize_sign(c * u);
}

Rat MPoly::evaluate(const std::vector<std::optional<Rat>>& assignment) const {
    if (assignment.size() != nvars_) {
        throw ArityMismatch("assignment arity does not match polynomial");
    }
    Rat sum = 0;
    for (const MTerm& t : terms_) {
        Rat prod = Rat(t.coeff);
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (t.exp[k] == 0) continue;
            if (!assignment[k]) {
                throw MissingAssignment("variable " + std::to_string(k) +
                                        " is used but has no assigned value");
            }
            prod *= rat_pow(*assignment[k], t.exp[k]);
        }
        sum += prod;
    }
    return sum;
}

std::string MPoly::render(const std::vector<std::string>& names, bool latex) const {
    if (terms_.empty()) return "0";
    if (names.size() != nvars_) {
        throw ArityMismatch("name list arity does not match polynomial");
    }
    std::ostringstream out;
    bool first = true;
    for (const MTerm& t : terms_) {
        const bool negative = t.coeff < 0;
        Int mag = negative ? Int(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? '-' : '+');
        }
        std::string vars;
        for (std::size_t k = 0; k < nvars_; ++k) {
            const int e = t.exp[k];
            if (e == 0) continue;
            if (!vars.empty()) vars += latex ? " " : "*";
            vars += names[k];
            if (e != 1) {
                if (latex) {
                    vars += (e >= 0 && e <= 9) ? "^" + std::to_string(e)
                                               : "^{" + std::to_string(e) + "}";
                } else {
                    vars += "^" + std::to_string(e);
                }
            }
        }
        if (vars.empty()) {
            out << mag;
        } else if (mag == 1) {
            out << vars;
        } else {
            out << mag << (latex ? " " : "*") << vars;
        }
    }
    return out.str();
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    return render(names, false);
}

std::string MPoly::to_latex(const std::vector<std::string>& names) const {
    return render(names, true);
}

} // namespace homlie
