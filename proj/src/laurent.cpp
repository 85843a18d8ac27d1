#include "homlie/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "homlie/errors.hpp"

namespace homlie {

std::vector<std::string> default_var_names(std::size_t nvars) {
    if (nvars == 1) return {"t"};
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 1; i <= nvars; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

void LaurentPoly::insert_term(LExp exp, Scalar c) {
    if (exp.size() != nvars_) {
        throw ArityMismatch("term exponent arity does not match Laurent polynomial");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exp), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::one(std::size_t nvars) {
    return constant(nvars, Scalar(Int(1)));
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, Scalar c) {
    LaurentPoly p(nvars);
    p.insert_term(LExp(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(Scalar coeff, LExp exp) {
    LaurentPoly p(exp.size());
    p.insert_term(std::move(exp), std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::t_power(int k, Scalar c) {
    return monomial(std::move(c), LExp{k});
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == LExp(nvars_, 0) &&
           terms_.begin()->second.is_one();
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == LExp(nvars_, 0));
}

Scalar LaurentPoly::coeff_or_zero(const LExp& exp) const {
    const auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar() : it->second;
}

LExp LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw ZeroInput("minimum exponents of the zero polynomial");
    LExp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (nvars_ != rhs.nvars_) {
        throw ArityMismatch("Laurent addition over different variable counts");
    }
    LaurentPoly p = *this;
    for (const auto& [e, c] : rhs.terms_) p.insert_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (nvars_ != rhs.nvars_) {
        throw ArityMismatch("Laurent multiplication over different variable counts");
    }
    LaurentPoly p(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            LExp e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            p.insert_term(std::move(e), ca * cb);
        }
    }
    return p;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, coeff * c);
    return p;
}

LaurentPoly LaurentPoly::shifted(const LExp& delta) const {
    if (delta.size() != nvars_) {
        throw ArityMismatch("shift arity does not match Laurent polynomial");
    }
    LaurentPoly p(nvars_);
    for (const auto& [e, c] : terms_) {
        LExp f(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) f[i] = e[i] + delta[i];
        p.terms_.emplace(std::move(f), c);
    }
    return p;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) return exact_div(one(nvars_), pow(-e));
    LaurentPoly result = one(nvars_);
    LaurentPoly base = *this;
    unsigned u = static_cast<unsigned>(e);
    while (u != 0) {
        if (u & 1u) result *= base;
        base *= base;
        u >>= 1u;
    }
    return result;
}

namespace {

/// Iterator to the grlex-greatest exponent among the terms; requires nonzero.
std::map<LExp, Scalar>::const_iterator grlex_lead(const std::map<LExp, Scalar>& m) {
    auto best = m.begin();
    for (auto it = std::next(m.begin()); it != m.end(); ++it) {
        if (MPoly::grlex_less(best->first, it->first)) best = it;
    }
    return best;
}

} // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) {
        throw ArityMismatch("Laurent division over different variable counts");
    }
    if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (a.is_zero()) return zero(a.nvars_);
    const std::size_t nv = a.nvars_;

    // Shift both operands into the polynomial cone; the quotient of the
    // shifted parts, shifted back by the exponent difference, is exact iff
    // the original quotient is (minimum exponents add under multiplication).
    const LExp sa = a.min_exponents();
    const LExp sb = b.min_exponents();
    LExp neg_sa(nv), neg_sb(nv), back(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        neg_sa[i] = -sa[i];
        neg_sb[i] = -sb[i];
        back[i] = sa[i] - sb[i];
    }
    std::map<LExp, Scalar> rem = a.shifted(neg_sa).terms_;
    const std::map<LExp, Scalar> div = b.shifted(neg_sb).terms_;
    const auto lead_b = grlex_lead(div);

    LaurentPoly quotient(nv);
    while (!rem.empty()) {
        const auto lead_r = grlex_lead(rem);
        LExp qe(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            qe[i] = lead_r->first[i] - lead_b->first[i];
            if (qe[i] < 0) {
                throw NotDivisible("Laurent division is not exact: " +
                                   b.to_string() + " does not divide " +
                                   a.to_string());
            }
        }
        const Scalar qc = lead_r->second / lead_b->second;
        // rem -= qc * z^qe * divisor
        for (const auto& [e, c] : div) {
            LExp f(nv);
            for (std::size_t i = 0; i < nv; ++i) f[i] = e[i] + qe[i];
            auto it = rem.find(f);
            const Scalar delta = qc * c;
            if (it == rem.end()) {
                if (!delta.is_zero()) rem.emplace(std::move(f), -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        for (std::size_t i = 0; i < nv; ++i) qe[i] += back[i];
        quotient.insert_term(std::move(qe), qc);
    }
    return quotient;
}

UnitNormalForm LaurentPoly::unit_normalize() const {
    if (is_zero()) throw ZeroInput("unit normal form of the zero polynomial");
    const LExp shift = min_exponents();
    LExp neg(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) neg[i] = -shift[i];
    LaurentPoly core = shifted(neg);
    const Scalar unit = core.terms_.begin()->second; // lex-least coefficient
    core = core.scaled(unit.inverse());
    return UnitNormalForm{unit, shift, std::move(core)};
}

namespace {

/// Dense univariate polynomial over Scalar, index == degree.
struct Dense {
    std::vector<Scalar> c;
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

Dense to_dense(const LaurentPoly& shifted_poly) {
    Dense d;
    for (const auto& [e, coeff] : shifted_poly.terms()) {
        const int k = e[0];
        if (k >= static_cast<int>(d.c.size())) d.c.resize(k + 1);
        d.c[k] = coeff;
    }
    d.trim();
    return d;
}

/// Remainder of a modulo b over the Scalar field; b nonzero.
Dense dense_mod(Dense a, const Dense& b) {
    const Scalar lead = b.c.back();
    while (!a.zero() && a.deg() >= b.deg()) {
        const Scalar f = a.c.back() / lead;
        const int shift = a.deg() - b.deg();
        for (int i = 0; i <= b.deg(); ++i) {
            a.c[i + shift] -= f * b.c[i];
        }
        a.trim();
    }
    return a;
}

} // namespace

LaurentPoly LaurentPoly::gcd_up_to_unit(const std::vector<LaurentPoly>& items) {
    std::vector<const LaurentPoly*> nonzero;
    std::size_t nv = 1;
    for (const LaurentPoly& p : items) {
        nv = p.nvars();
        if (p.nvars() != 1) {
            throw MultivariateUnsupported(
                "Laurent GCD is implemented for one variable only");
        }
        if (!p.is_zero()) nonzero.push_back(&p);
    }
    if (nonzero.empty()) throw AllZero("Laurent GCD of all-zero inputs");

    Dense g = to_dense(nonzero.front()->unit_normalize().core);
    for (std::size_t i = 1; i < nonzero.size() && g.deg() > 0; ++i) {
        Dense h = to_dense(nonzero[i]->unit_normalize().core);
        while (!h.zero()) {
            Dense r = dense_mod(g, h);
            g = std::move(h);
            h = std::move(r);
        }
    }

    LaurentPoly result(nv);
    for (int k = 0; k <= g.deg(); ++k) {
        result.insert_term(LExp{k}, g.c[k]);
    }
    result = result.unit_normalize().core;
    for (const LaurentPoly* p : nonzero) {
        try {
            exact_div(*p, result);
        } catch (const NotDivisible&) {
            throw InternalError("computed GCD fails to divide an input");
        }
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    const std::vector<std::string> names = default_var_names(nvars_);
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string vars;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        std::string piece;
        if (vars.empty()) {
            piece = product_form(c);
        } else if (c.is_one()) {
            piece = vars;
        } else if (c.is_constant() && c.constant_value() == -1) {
            piece = "-" + vars;
        } else {
            piece = product_form(c) + "*" + vars;
        }
        if (first) {
            out << piece;
            first = false;
        } else {
            if (piece.empty() || piece[0] != '-') out << "+";
            out << piece;
        }
    }
    return out.str();
}

std::string LaurentPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names;
    if (nvars_ == 1) {
        names = {"t"};
    } else {
        for (std::size_t i = 1; i <= nvars_; ++i) {
            names.push_back("z_{" + std::to_string(i) + "}");
        }
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string vars;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += " ";
            vars += names[i];
            if (e[i] != 1) {
                vars += (e[i] >= 0 && e[i] <= 9) ? "^" + std::to_string(e[i])
                                                 : "^{" + std::to_string(e[i]) + "}";
            }
        }
        std::string piece;
        if (vars.empty()) {
            piece = c.to_latex();
        } else if (c.is_one()) {
            piece = vars;
        } else if (c.is_constant() && c.constant_value() == -1) {
            piece = "-" + vars;
        } else {
            std::string s = c.to_latex();
            if (!c.denominator().is_one() || !c.numerator().is_monomial()) {
                if (s.rfind("\\frac", 0) != 0) s = "\\left(" + s + "\\right)";
            }
            piece = s + " \\, " + vars;
        }
        if (first) {
            first = false;
        } else {
            out << ((piece.empty() || piece[0] != '-') ? " + " : " ");
        }
        out << piece;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Integer, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, "", start};
            return;
        }
        const char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[end]))) {
                ++end;
            }
            current_ = {Token::Kind::Integer, text_.substr(pos_, end - pos_), start};
            pos_ = end;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                    text_[end] == '_')) {
                ++end;
            }
            current_ = {Token::Kind::Name, text_.substr(pos_, end - pos_), start};
            pos_ = end;
            return;
        }
        Token::Kind kind;
        switch (ch) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch + "'",
                                  start);
        }
        current_ = {kind, std::string(1, ch), start};
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& text, std::size_t nvars, ParamSetPtr params)
        : lexer_(text), nvars_(nvars), params_(std::move(params)),
          var_names_(default_var_names(nvars)) {}

    LaurentPoly parse() {
        LaurentPoly value = expression();
        const Token& t = lexer_.peek();
        if (t.kind != Token::Kind::End) {
            throw SyntaxError("unexpected trailing input '" + t.text + "'", t.pos);
        }
        return value;
    }

private:
    LaurentPoly expression() {
        bool negate = false;
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.take();
            negate = true;
        }
        LaurentPoly value = term();
        if (negate) value = -value;
        while (true) {
            const Token::Kind k = lexer_.peek().kind;
            if (k == Token::Kind::Plus) {
                lexer_.take();
                value += term();
            } else if (k == Token::Kind::Minus) {
                lexer_.take();
                value -= term();
            } else {
                break;
            }
        }
        return value;
    }

    LaurentPoly term() {
        LaurentPoly value = factor();
        while (true) {
            const Token::Kind k = lexer_.peek().kind;
            if (k == Token::Kind::Star) {
                lexer_.take();
                value *= factor();
            } else if (k == Token::Kind::Slash) {
                lexer_.take();
                value = LaurentPoly::exact_div(value, factor());
            } else {
                break;
            }
        }
        return value;
    }

    LaurentPoly factor() {
        LaurentPoly base = atom();
        if (lexer_.peek().kind == Token::Kind::Caret) {
            lexer_.take();
            base = base.pow(integer_literal());
        }
        return base;
    }

    int integer_literal() {
        bool negate = false;
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.take();
            negate = true;
        }
        const Token t = lexer_.take();
        if (t.kind != Token::Kind::Integer) {
            throw SyntaxError("expected an integer exponent", t.pos);
        }
        try {
            const int v = std::stoi(t.text);
            return negate ? -v : v;
        } catch (const std::exception&) {
            throw SyntaxError("exponent out of range", t.pos);
        }
    }

    LaurentPoly atom() {
        const Token t = lexer_.take();
        switch (t.kind) {
            case Token::Kind::Integer:
                return LaurentPoly::constant(nvars_, Scalar(Int(t.text)));
            case Token::Kind::Name: {
                for (std::size_t i = 0; i < var_names_.size(); ++i) {
                    if (var_names_[i] == t.text) {
                        LExp e(nvars_, 0);
                        e[i] = 1;
                        return LaurentPoly::monomial(Scalar(Int(1)), std::move(e));
                    }
                }
                if (params_ && params_->index_of(t.text)) {
                    return LaurentPoly::constant(nvars_,
                                                 Scalar::param(params_, t.text));
                }
                throw ArityMismatch("unknown identifier '" + t.text + "'");
            }
            case Token::Kind::LParen: {
                LaurentPoly inner = expression();
                const Token close = lexer_.take();
                if (close.kind != Token::Kind::RParen) {
                    throw SyntaxError("expected ')'", close.pos);
                }
                return inner;
            }
            default:
                throw SyntaxError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Lexer lexer_;
    std::size_t nvars_;
    ParamSetPtr params_;
    std::vector<std::string> var_names_;
};

} // namespace

LaurentPoly parse_laurent(const std::string& text, std::size_t nvars,
                          const ParamSetPtr& params) {
    return Parser(text, nvars, params).parse();
}

Scalar parse_scalar(const std::string& text, const ParamSetPtr& params) {
    const LaurentPoly p = Parser(text, 0, params).parse();
    if (p.is_zero()) return Scalar::zero(params);
    return p.terms().begin()->second;
}

} // namespace homlie
