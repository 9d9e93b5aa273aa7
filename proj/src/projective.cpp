#include "freecert/projective.hpp"

#include <sstream>

namespace freecert {

ProjPointC ProjPointC::canonical(std::vector<Rational> raw) {
    int first = -1;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (!is_zero(raw[i])) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) throw ZeroVector("projective point needs a nonzero coordinate");
    Rational scale = raw[first];
    for (auto& c : raw) c /= scale;
    return ProjPointC(std::move(raw));
}

std::string ProjPointC::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? " : " : "") << coords_[i].get_str();
    os << "]";
    return os.str();
}

ProjPointL ProjPointL::normalize(std::vector<LaurentPoly> raw) {
    Valuation min = Valuation::infinite();
    for (const auto& c : raw) {
        Valuation v = c.valuation();
        if (v < min) min = v;
    }
    if (!min.finite) throw ZeroVector("projective point needs a nonzero coordinate");
    if (min.order != 0)
        for (auto& c : raw) c = c.shifted(-min.order);
    return ProjPointL(std::move(raw));
}

ProjPointL ProjPointL::lift(const ProjPointC& point) {
    std::vector<LaurentPoly> coords;
    coords.reserve(point.coords().size());
    for (const auto& c : point.coords()) coords.emplace_back(c);
    return ProjPointL(std::move(coords));
}

CovectorQ::CovectorQ(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (!is_zero(c)) return;
    throw ZeroVector("covector must be nonzero");
}

Rational CovectorQ::pair(const ProjPointC& point) const {
    if (point.dim() != dim()) throw DimensionMismatch("covector/point dimension mismatch");
    Rational acc(0);
    for (int i = 0; i < dim(); ++i) acc += coords_[i] * point.coords()[i];
    return acc;
}

LaurentPoly CovectorQ::pair(const ProjPointL& point) const {
    if (point.dim() != dim()) throw DimensionMismatch("covector/point dimension mismatch");
    LaurentPoly acc;
    for (int i = 0; i < dim(); ++i)
        acc += LaurentPoly(coords_[i]) * point.coords()[i];
    return acc;
}

ProjPointC reduce_pi(const ProjPointL& point) {
    std::vector<Rational> residue;
    residue.reserve(point.coords().size());
    for (const auto& c : point.coords()) residue.push_back(c.eval_at_zero());
    return ProjPointC::canonical(std::move(residue));
}

bool in_ball(const ProjPointL& point, const std::vector<Rational>& target) {
    return reduce_pi(point) == ProjPointC::canonical(target);
}

bool off_hyperplane(const ProjPointL& point, const CovectorQ& functional) {
    bool residue_route = !is_zero(functional.pair(reduce_pi(point)));
    bool valuation_route = functional.pair(point).valuation() == Valuation::of(0);
    if (residue_route != valuation_route)
        throw InternalError("hyperplane routes disagree on a normalized point");
    return residue_route;
}

ProjPointL apply_matrix(const MatL& m, const ProjPointL& point) {
    return ProjPointL::normalize(m.apply(point.coords()));
}

ProjPointL make_primitive(const ProjPointL& point) {
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& coord : point.coords())
        for (const auto& [e, q] : coord.terms()) {
            mpz_class num = q.get_num();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
            mpz_class den = q.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        }
    if (num_gcd == 1 && den_lcm == 1) return point;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    std::vector<LaurentPoly> out;
    out.reserve(point.coords().size());
    for (const auto& coord : point.coords()) {
        LaurentPoly scaled;
        for (const auto& [e, q] : coord.terms())
            scaled += LaurentPoly::monomial(e, q * scale);
        out.push_back(std::move(scaled));
    }
    return ProjPointL::normalize(std::move(out));
}

bool proj_equal(const ProjPointL& a, const ProjPointL& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("projective comparison dimension mismatch");
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            LaurentPoly minor =
                a.coords()[i] * b.coords()[j] - a.coords()[j] * b.coords()[i];
            if (!minor.is_zero()) return false;
        }
    return true;
}

}  // namespace freecert
