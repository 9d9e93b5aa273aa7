#pragma once

#include <vector>

#include "freecert/matrix.hpp"

namespace freecert {

/// Point of projective space over the residue field (exact rationals).
/// Canonical form: the first nonzero coordinate is 1, so equality of points
/// is equality of coordinate vectors.
class ProjPointC {
public:
    static ProjPointC canonical(std::vector<Rational> raw);

    const std::vector<Rational>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    bool operator==(const ProjPointC& other) const { return coords_ == other.coords_; }
    bool operator!=(const ProjPointC& other) const { return !(*this == other); }

    std::string str() const;

private:
    explicit ProjPointC(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    std::vector<Rational> coords_;
};

/// Point of projective space over the Laurent field, stored normalized:
/// every coordinate has valuation >= 0 and at least one has valuation
/// exactly 0. Under this invariant, coordinatewise evaluation at t = 0 is
/// well defined and never produces the zero vector.
class ProjPointL {
public:
    /// Scales the raw tuple by t^-m (m the minimum valuation) to establish
    /// the invariant. Throws ZeroVector when every entry is zero.
    static ProjPointL normalize(std::vector<LaurentPoly> raw);

    /// Constant lift of a residue point.
    static ProjPointL lift(const ProjPointC& point);

    const std::vector<LaurentPoly>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }

private:
    explicit ProjPointL(std::vector<LaurentPoly> coords) : coords_(std::move(coords)) {}
    std::vector<LaurentPoly> coords_;
};

/// Row functional with exact rational coordinates, not all zero.
class CovectorQ {
public:
    explicit CovectorQ(std::vector<Rational> coords);

    const std::vector<Rational>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    Rational pair(const ProjPointC& point) const;
    LaurentPoly pair(const ProjPointL& point) const;

private:
    std::vector<Rational> coords_;
};

/// Coordinatewise evaluation at t = 0 followed by canonicalization.
ProjPointC reduce_pi(const ProjPointL& point);

/// True iff the reduction of `point` is the residue point of `target`.
bool in_ball(const ProjPointL& point, const std::vector<Rational>& target);

/// True iff the reduction of `point` avoids the hyperplane of `functional`.
/// Computed two ways — residue pairing nonzero, and valuation of the
/// Laurent pairing equal to 0 — which must agree for a normalized point;
/// disagreement means a broken invariant and throws InternalError.
bool off_hyperplane(const ProjPointL& point, const CovectorQ& functional);

/// Matrix action followed by re-normalization.
ProjPointL apply_matrix(const MatL& m, const ProjPointL& point);

/// Rescales by the rational content so every coefficient becomes an
/// integer and the integer coefficients have no common factor. A pure
/// change of representative; keeps point arithmetic from dragging common
/// denominators through long traces.
ProjPointL make_primitive(const ProjPointL& point);

/// Projective equality over the Laurent field (all 2x2 minors vanish).
bool proj_equal(const ProjPointL& a, const ProjPointL& b);

}  // namespace freecert
