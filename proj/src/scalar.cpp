#include "homlie/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

bool valid_param_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::size_t nvars_of(const ParamSetPtr& ps) { return ps ? ps->size() : 0; }

/// Re-express a constant polynomial over a wider variable set.
MPoly lift_constant(const MPoly& p, std::size_t nvars) {
    if (!p.is_constant()) {
        throw InternalError("attempted to lift a non-constant polynomial");
    }
    Int c = p.is_zero() ? Int(0) : p.leading_term().coeff;
    return MPoly::constant(nvars, std::move(c));
}

} // namespace

ParamSetPtr ParamSet::make(std::vector<std::string> names) {
    for (const std::string& n : names) {
        if (!valid_param_name(n)) {
            throw SyntaxError("invalid parameter name '" + n + "'", 0);
        }
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) {
                throw ArityMismatch("duplicate parameter name '" + names[i] + "'");
            }
        }
    }
    return ParamSetPtr(new ParamSet(std::move(names)));
}

std::optional<std::size_t> ParamSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

Scalar::Scalar(MPoly num, MPoly den, ParamSetPtr ps)
    : params_(std::move(ps)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

Scalar::Scalar(Int value)
    : params_(nullptr), num_(MPoly::constant(0, std::move(value))),
      den_(MPoly::constant(0, 1)) {}

Scalar::Scalar(const Rat& value)
    : params_(nullptr),
      num_(MPoly::constant(0, Int(boost::multiprecision::numerator(value)))),
      den_(MPoly::constant(0, Int(boost::multiprecision::denominator(value)))) {}

Scalar Scalar::zero(const ParamSetPtr& ps) { return integer(ps, 0); }

Scalar Scalar::one(const ParamSetPtr& ps) { return integer(ps, 1); }

Scalar Scalar::integer(const ParamSetPtr& ps, Int value) {
    const std::size_t n = nvars_of(ps);
    return Scalar(MPoly::constant(n, std::move(value)), MPoly::constant(n, 1), ps);
}

Scalar Scalar::rational(const ParamSetPtr& ps, const Rat& value) {
    const std::size_t n = nvars_of(ps);
    return Scalar(MPoly::constant(n, Int(boost::multiprecision::numerator(value))),
                  MPoly::constant(n, Int(boost::multiprecision::denominator(value))),
                  ps);
}

Scalar Scalar::param(const ParamSetPtr& ps, const std::string& name) {
    if (!ps) throw ArityMismatch("parameter '" + name + "' requested without a parameter set");
    const auto idx = ps->index_of(name);
    if (!idx) throw ArityMismatch("parameter '" + name + "' is not declared");
    return Scalar(MPoly::variable_power(ps->size(), *idx),
                  MPoly::constant(ps->size(), 1), ps);
}

Scalar Scalar::from_fraction(MPoly num, MPoly den, ParamSetPtr ps) {
    const std::size_t n = nvars_of(ps);
    if (num.nvars() != n || den.nvars() != n) {
        throw ArityMismatch("fraction arity does not match the parameter set");
    }
    return Scalar(std::move(num), std::move(den), std::move(ps));
}

void Scalar::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(den_.nvars(), 1);
        return;
    }
    const MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_one()) {
        auto qn = MPoly::exact_divide(num_, g);
        auto qd = MPoly::exact_divide(den_, g);
        if (!qn || !qd) throw InternalError("GCD does not divide its arguments");
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    if (den_.leading_term().coeff < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rat Scalar::constant_value() const {
    if (!is_constant()) throw InternalError("constant_value of a non-constant scalar");
    const Int n = num_.is_zero() ? Int(0) : num_.leading_term().coeff;
    const Int d = den_.leading_term().coeff;
    return Rat(n, d);
}

std::pair<Scalar, Scalar> Scalar::aligned(const Scalar& a, const Scalar& b) {
    if (a.params_ == b.params_) return {a, b};
    if (!a.params_) {
        const std::size_t n = nvars_of(b.params_);
        return {Scalar(lift_constant(a.num_, n), lift_constant(a.den_, n), b.params_), b};
    }
    if (!b.params_) {
        const std::size_t n = nvars_of(a.params_);
        return {a, Scalar(lift_constant(b.num_, n), lift_constant(b.den_, n), a.params_)};
    }
    if (*a.params_ == *b.params_) return {a, b};
    throw ArityMismatch("scalars over different parameter sets");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    auto [a, b] = aligned(*this, rhs);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.params_);
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    auto [a, b] = aligned(*this, rhs);
    return Scalar(a.num_ * b.num_, a.den_ * b.den_, a.params_);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    if (rhs.is_zero()) throw DivisionByZero("scalar division by zero");
    auto [a, b] = aligned(*this, rhs);
    return Scalar(a.num_ * b.den_, a.den_ * b.num_, a.params_);
}

bool Scalar::operator==(const Scalar& rhs) const {
    auto [a, b] = aligned(*this, rhs);
    return a.num_ == b.num_ && a.den_ == b.den_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Scalar(den_, num_, params_);
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    const auto ue = static_cast<unsigned>(e);
    return Scalar(num_.pow(ue), den_.pow(ue), params_);
}

Rat Scalar::evaluate(const std::map<std::string, Rat>& point) const {
    const std::size_t n = num_.nvars();
    std::vector<std::optional<Rat>> assignment(n);
    if (params_) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto it = point.find(params_->names()[i]);
            if (it != point.end()) assignment[i] = it->second;
        }
    }
    const Rat d = den_.evaluate(assignment);
    if (d == 0) {
        throw PoleAtPoint("denominator " + to_string() + " vanishes at the point");
    }
    return num_.evaluate(assignment) / d;
}

std::string Scalar::to_string() const {
    const std::vector<std::string> empty;
    const std::vector<std::string>& names = params_ ? params_->names() : empty;
    if (num_.is_zero()) return "0";
    const std::string numstr = num_.to_string(names);
    if (den_.is_one()) return numstr;
    const std::string numpart =
        num_.is_monomial() ? numstr : "(" + numstr + ")";
    // A denominator may appear bare only when `/den` cannot be re-associated:
    // a positive integer or a single variable power with coefficient one.
    bool bare = false;
    if (den_.is_monomial()) {
        const MTerm& t = den_.leading_term();
        int used = 0;
        for (int e : t.exp) used += (e > 0) ? 1 : 0;
        bare = (used == 0) || (used == 1 && t.coeff == 1);
    }
    const std::string denstr = den_.to_string(names);
    return numpart + "/" + (bare ? denstr : "(" + denstr + ")");
}

std::string Scalar::to_latex() const {
    const std::vector<std::string> empty;
    const std::vector<std::string>& names = params_ ? params_->names() : empty;
    if (num_.is_zero()) return "0";
    if (den_.is_one()) return num_.to_latex(names);
    return "\\frac{" + num_.to_latex(names) + "}{" + den_.to_latex(names) + "}";
}

std::string product_form(const Scalar& c) {
    const std::string s = c.to_string();
    const bool needs_parens =
        c.denominator().is_one() && !c.numerator().is_monomial() && !c.is_zero();
    return needs_parens ? "(" + s + ")" : s;
}

Scalar q_number(const ParamSetPtr& ps, int n) {
    if (!ps || !ps->index_of("q")) {
        throw ArityMismatch("q_number requires a declared parameter 'q'");
    }
    const std::size_t qi = *ps->index_of("q");
    const std::size_t nv = ps->size();
    if (n >= 0) {
        std::vector<MTerm> terms;
        for (int j = 0; j < n; ++j) {
            Expo e(nv, 0);
            e[qi] = j;
            terms.push_back({std::move(e), 1});
        }
        return Scalar::from_fraction(MPoly::from_terms(nv, std::move(terms)),
                                     MPoly::constant(nv, 1), ps);
    }
    const int m = -n;
    std::vector<MTerm> terms;
    for (int j = 0; j < m; ++j) {
        Expo e(nv, 0);
        e[qi] = j;
        terms.push_back({std::move(e), -1});
    }
    return Scalar::from_fraction(MPoly::from_terms(nv, std::move(terms)),
                                 MPoly::variable_power(nv, qi, m), ps);
}

Scalar sym_q_number(const ParamSetPtr& ps, int k) {
    if (!ps || !ps->index_of("q")) {
        throw ArityMismatch("sym_q_number requires a declared parameter 'q'");
    }
    if (k == 0) return Scalar::zero(ps);
    if (k < 0) return -sym_q_number(ps, -k);
    const std::size_t qi = *ps->index_of("q");
    const std::size_t nv = ps->size();
    std::vector<MTerm> terms;
    for (int j = 0; j < k; ++j) {
        Expo e(nv, 0);
        e[qi] = 2 * j;
        terms.push_back({std::move(e), 1});
    }
    return Scalar::from_fraction(MPoly::from_terms(nv, std::move(terms)),
                                 MPoly::variable_power(nv, qi, k - 1), ps);
}

} // namespace homlie
