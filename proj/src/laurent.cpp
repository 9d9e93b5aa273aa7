#include "freecert/laurent.hpp"

#include <sstream>

namespace freecert {

Rational rational_from_string(const std::string& text) {
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw Error("invalid rational literal: '" + text + "'");
    if (sgn(value.get_den()) == 0)
        throw Error("zero denominator in rational literal: '" + text + "'");
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (!freecert::is_zero(constant)) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& coefficient) {
    LaurentPoly p;
    if (!freecert::is_zero(coefficient)) p.terms_.emplace(exponent, coefficient);
    return p;
}

LaurentPoly LaurentPoly::t(long exponent) { return monomial(exponent, Rational(1)); }

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Valuation LaurentPoly::valuation() const {
    if (terms_.empty()) return Valuation::infinite();
    return Valuation::of(terms_.begin()->first);
}

Rational LaurentPoly::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::eval_at_zero() const {
    Valuation v = valuation();
    if (v.finite && v.order < 0)
        throw NegativeValuation("cannot evaluate at t=0: valuation " + std::to_string(v.order));
    return coefficient(0);
}

LaurentPoly LaurentPoly::shifted(long shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
}

void LaurentPoly::add_term(long exponent, const Rational& coefficient) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        if (!freecert::is_zero(coefficient)) terms_.emplace(exponent, coefficient);
        return;
    }
    it->second += coefficient;
    if (freecert::is_zero(it->second)) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::add_mul(const LaurentPoly& a, const LaurentPoly& b) {
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) add_term(ea + eb, ca * cb);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [el, cl] : lhs.terms_)
        for (const auto& [er, cr] : rhs.terms_) out.add_term(el + er, cl * cr);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (sgn(coeff) < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (sgn(coeff) < 0 ? " - " : " + ");
            if (sgn(coeff) < 0) coeff = -coeff;
        }
        first = false;
        if (e == 0) {
            os << coeff.get_str();
        } else {
            if (coeff != 1) os << coeff.get_str() << " ";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace freecert
