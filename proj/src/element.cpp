#include "homlie/element.hpp"

#include <sstream>

#include "homlie/errors.hpp"

namespace homlie {

void HomLieElement::insert(BasisIndex idx, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomLieElement HomLieElement::basis(std::vector<int> idx, Scalar c) {
    HomLieElement e;
    e.insert(BasisIndex::basis(std::move(idx)), std::move(c));
    return e;
}

HomLieElement HomLieElement::central(Scalar c) {
    HomLieElement e;
    e.insert(BasisIndex::central_element(), std::move(c));
    return e;
}

Scalar HomLieElement::coeff_or_zero(const BasisIndex& idx) const {
    const auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar() : it->second;
}

bool HomLieElement::has_central_part() const {
    return terms_.find(BasisIndex::central_element()) != terms_.end();
}

HomLieElement HomLieElement::operator-() const {
    HomLieElement e;
    for (const auto& [idx, c] : terms_) e.terms_.emplace(idx, -c);
    return e;
}

HomLieElement HomLieElement::operator+(const HomLieElement& rhs) const {
    HomLieElement e = *this;
    for (const auto& [idx, c] : rhs.terms_) e.insert(idx, c);
    return e;
}

HomLieElement HomLieElement::operator-(const HomLieElement& rhs) const {
    return *this + (-rhs);
}

HomLieElement HomLieElement::scaled(const Scalar& c) const {
    HomLieElement e;
    if (c.is_zero()) return e;
    for (const auto& [idx, coeff] : terms_) e.terms_.emplace(idx, coeff * c);
    return e;
}

bool HomLieElement::operator==(const HomLieElement& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
}

HomLieElement HomLieElement::from_coefficient(const LaurentPoly& C) {
    HomLieElement e;
    for (const auto& [v, c] : C.terms()) {
        e.insert(BasisIndex::basis(v), -c);
    }
    return e;
}

LaurentPoly HomLieElement::to_coefficient(std::size_t nvars) const {
    LaurentPoly out(nvars);
    for (const auto& [idx, c] : terms_) {
        if (idx.central) {
            throw InternalError(
                "an element with a central part has no Laurent coefficient");
        }
        if (idx.index.size() != nvars) {
            throw ArityMismatch("basis index arity does not match variable count");
        }
        out += LaurentPoly::monomial(-c, idx.index);
    }
    return out;
}

std::map<BasisIndex, Rat>
HomLieElement::evaluate(const std::map<std::string, Rat>& point) const {
    std::map<BasisIndex, Rat> out;
    for (const auto& [idx, c] : terms_) {
        Rat v = c.evaluate(point);
        if (v != 0) out.emplace(idx, std::move(v));
    }
    return out;
}

namespace {

std::string index_label(const BasisIndex& idx, const std::string& symbol,
                        bool latex) {
    if (idx.central) return latex ? "\\mathbf{c}" : "c";
    std::string inner;
    for (std::size_t i = 0; i < idx.index.size(); ++i) {
        if (i > 0) inner += ",";
        inner += std::to_string(idx.index[i]);
    }
    if (latex) return symbol + "_{" + inner + "}";
    return symbol + "(" + inner + ")";
}

} // namespace

std::string HomLieElement::to_string(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        const std::string label = index_label(idx, symbol, false);
        std::string piece;
        if (c.is_one()) {
            piece = label;
        } else if (c.is_constant() && c.constant_value() == -1) {
            piece = "-" + label;
        } else {
            piece = product_form(c) + "*" + label;
        }
        if (first) {
            first = false;
        } else if (piece.empty() || piece[0] != '-') {
            out << "+";
        }
        out << piece;
    }
    return out.str();
}

std::string HomLieElement::to_latex(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        const std::string label = index_label(idx, symbol, true);
        std::string piece;
        if (c.is_one()) {
            piece = label;
        } else if (c.is_constant() && c.constant_value() == -1) {
            piece = "-" + label;
        } else {
            std::string s = c.to_latex();
            if (c.denominator().is_one() && !c.numerator().is_monomial()) {
                s = "\\left(" + s + "\\right)";
            }
            piece = s + " \\, " + label;
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

} // namespace homlie
