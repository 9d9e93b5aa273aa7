#pragma once

#include <map>
#include <string>
#include <vector>

#include "freecert/rational.hpp"

namespace freecert {

/// Order of vanishing at t = 0, extended by a +infinity value for the zero
/// polynomial. Kept as its own type so the sentinel can never be confused
/// with a finite order.
struct Valuation {
    bool finite = true;
    long order = 0;

    static Valuation infinite() { return Valuation{false, 0}; }
    static Valuation of(long order) { return Valuation{true, order}; }

    bool operator==(const Valuation& other) const {
        return finite == other.finite && (!finite || order == other.order);
    }
    bool operator!=(const Valuation& other) const { return !(*this == other); }

    /// +infinity compares greater than every finite order.
    bool operator<(const Valuation& other) const {
        if (!finite) return false;
        if (!other.finite) return true;
        return order < other.order;
    }
};

/// Laurent polynomial in one variable t with exact rational coefficients.
///
/// Terms are stored sorted by exponent with no zero coefficients, so two
/// values are equal iff their term maps are equal. All operations are pure;
/// values may be shared freely across threads.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Rational& constant);

    static LaurentPoly monomial(long exponent, const Rational& coefficient);
    /// t^exponent
    static LaurentPoly t(long exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Minimum exponent with nonzero coefficient; +infinity for zero.
    Valuation valuation() const;

    /// Coefficient of t^exponent (zero if absent).
    Rational coefficient(long exponent) const;

    /// The coefficient of t^0. Throws NegativeValuation unless the
    /// valuation is >= 0.
    Rational eval_at_zero() const;

    /// Multiplication by t^shift.
    LaurentPoly shifted(long shift) const;

    const std::map<long, Rational>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);

    /// this += a * b without materializing the product.
    LaurentPoly& add_mul(const LaurentPoly& a, const LaurentPoly& b);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

    bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    /// Human-readable form, e.g. "t^-1 + 3/2 t^2"; "0" for zero.
    std::string str() const;

private:
    void add_term(long exponent, const Rational& coefficient);

    std::map<long, Rational> terms_;
};

}  // namespace freecert
