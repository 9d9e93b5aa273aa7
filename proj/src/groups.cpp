#include "freecert/groups.hpp"

#include <array>
#include <sstream>

namespace freecert {

GroupSpec GroupSpec::SL(int n) {
    if (n < 2) throw Error("SL(n) requires n >= 2");
    return GroupSpec{Family::SL, n};
}

GroupSpec GroupSpec::SO(int k) {
    if (k < 2) throw Error("SO(2k+1) requires k >= 2");
    return GroupSpec{Family::SO, k};
}

GroupSpec GroupSpec::G2() { return GroupSpec{Family::G2, 0}; }

int GroupSpec::rep_dim() const {
    switch (family) {
        case Family::SL: return param;
        case Family::SO: return 2 * param + 1;
        case Family::G2: return 7;
    }
    throw InternalError("unhandled family");
}

std::string GroupSpec::name() const {
    switch (family) {
        case Family::SL: return "SL(" + std::to_string(param) + ")";
        case Family::SO: return "SO(" + std::to_string(2 * param + 1) + ")";
        case Family::G2: return "G2";
    }
    throw InternalError("unhandled family");
}

int highest_weight_index(const GroupSpec&) { return 0; }
int lowest_weight_index(const GroupSpec& spec) { return spec.rep_dim() - 1; }

MatQ gram_matrix(int dim) {
    MatQ j(dim);
    for (int i = 0; i < dim; ++i) j.at(i, dim - 1 - i) = 1;
    return j;
}

namespace {

bool preserves_gram(const MatQ& m) {
    const MatQ j = gram_matrix(m.dim());
    return m.transpose() * j * m == j;
}

// Dense 7x7x7 copy of the structure tensor for membership checks.
const std::vector<long>& g2_dense_tensor() {
    static const std::vector<long> dense = [] {
        std::vector<long> t(343, 0);
        for (const auto& e : g2_structure_tensor()) t[(e.i * 7 + e.j) * 7 + e.k] = e.value;
        return t;
    }();
    return dense;
}

// T(Mx, My, Mz) == T(x, y, z) for all basis triples, via staged
// contractions of the sparse entry list.
bool preserves_g2_tensor(const MatQ& m) {
    const auto& entries = g2_structure_tensor();
    // u[a][b][k] = sum_c T[a][b][c] m(c,k)
    std::vector<Rational> u(343), v(343), w(343);
    for (const auto& e : entries) {
        const Rational val(e.value);
        for (int k = 0; k < 7; ++k) {
            if (is_zero(m.at(e.k, k))) continue;
            u[(e.i * 7 + e.j) * 7 + k] += val * m.at(e.k, k);
        }
    }
    // v[a][j][k] = sum_b u[a][b][k] m(b,j)
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int k = 0; k < 7; ++k) {
                const Rational& x = u[(a * 7 + b) * 7 + k];
                if (is_zero(x)) continue;
                for (int j = 0; j < 7; ++j) {
                    if (is_zero(m.at(b, j))) continue;
                    v[(a * 7 + j) * 7 + k] += x * m.at(b, j);
                }
            }
    // w[i][j][k] = sum_a v[a][j][k] m(a,i)
    for (int a = 0; a < 7; ++a)
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k) {
                const Rational& x = v[(a * 7 + j) * 7 + k];
                if (is_zero(x)) continue;
                for (int i = 0; i < 7; ++i) {
                    if (is_zero(m.at(a, i))) continue;
                    w[(i * 7 + j) * 7 + k] += x * m.at(a, i);
                }
            }
    const auto& dense = g2_dense_tensor();
    for (int idx = 0; idx < 343; ++idx)
        if (w[idx] != dense[idx]) return false;
    return true;
}

}  // namespace

MembershipCheck membership(const GroupSpec& spec, const MatQ& m) {
    if (m.dim() != spec.rep_dim())
        throw DimensionMismatch("matrix dimension " + std::to_string(m.dim()) +
                                " does not match " + spec.name());
    Rational det = determinant(m);
    if (det != 1)
        return {false, "determinant is " + det.get_str() + ", want 1"};
    if (spec.family == Family::SO || spec.family == Family::G2) {
        if (!preserves_gram(m)) return {false, "Gram form J is not preserved"};
    }
    if (spec.family == Family::G2) {
        if (!preserves_g2_tensor(m)) return {false, "structure tensor is not preserved"};
    }
    return {true, ""};
}

Element make_element(const GroupSpec& spec, MatQ m) {
    MembershipCheck check = membership(spec, m);
    if (!check.ok) throw MembershipViolation(spec.name() + ": " + check.reason);
    return Element{spec, std::move(m)};
}

Element identity_element(const GroupSpec& spec) {
    return Element{spec, MatQ::identity(spec.rep_dim())};
}

Element multiply(const Element& a, const Element& b) {
    if (a.spec != b.spec) throw DimensionMismatch("elements of different groups");
    return Element{a.spec, a.matrix * b.matrix};
}

Element inverse_element(const Element& a) { return Element{a.spec, inverse(a.matrix)}; }

int positive_root_count(const GroupSpec& spec) {
    switch (spec.family) {
        case Family::SL: return spec.param * (spec.param - 1) / 2;
        case Family::SO: return spec.param * spec.param;
        case Family::G2: return 6;
    }
    throw InternalError("unhandled family");
}

MatQ exp_nilpotent(const MatQ& x, const Rational& s) {
    MatQ acc = MatQ::identity(x.dim());
    MatQ power = MatQ::identity(x.dim());
    Rational spow(1);
    Rational factorial(1);
    for (int k = 1; k <= x.dim() + 1; ++k) {
        power = power * x;
        if (power == MatQ(x.dim())) return acc;
        spow *= s;
        factorial *= k;
        Rational coeff = spow / factorial;
        for (int i = 0; i < x.dim(); ++i)
            for (int j = 0; j < x.dim(); ++j) acc.at(i, j) += coeff * power.at(i, j);
    }
    throw InternalError("exp_nilpotent called on a non-nilpotent matrix");
}

namespace {

// Nilpotent root-space matrix for the positive root `index`; negatives are
// handled by the caller.
MatQ positive_nilpotent(const GroupSpec& spec, int index) {
    const int n = spec.rep_dim();
    MatQ x(n);
    if (spec.family == Family::SL) {
        int at = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++at)
                if (at == index) {
                    x.at(i, j) = 1;
                    return x;
                }
    } else if (spec.family == Family::SO) {
        const int k = spec.param;
        int at = 0;
        // roots lambda_a - lambda_b, a < b < k
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b, ++at)
                if (at == index) {
                    x.at(a, b) = 1;
                    x.at(n - 1 - b, n - 1 - a) = -1;
                    return x;
                }
        // roots lambda_a + lambda_b, a < b < k
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b, ++at)
                if (at == index) {
                    x.at(a, n - 1 - b) = 1;
                    x.at(b, n - 1 - a) = -1;
                    return x;
                }
        // short roots lambda_a
        for (int a = 0; a < k; ++a, ++at)
            if (at == index) {
                x.at(a, k) = 1;
                x.at(k, n - 1 - a) = -1;
                return x;
            }
    } else {
        return g2_positive_nilpotents()[static_cast<std::size_t>(index)];
    }
    throw InternalError("positive root index out of range");
}

}  // namespace

Element root_element(const GroupSpec& spec, int root_id, const Rational& s) {
    const int count = positive_root_count(spec);
    if (root_id < 0 || root_id >= 2 * count)
        throw UnknownRoot(spec.name() + " has no root with id " + std::to_string(root_id));
    MatQ x(spec.rep_dim());
    if (root_id < count) {
        x = positive_nilpotent(spec, root_id);
    } else if (spec.family == Family::G2) {
        x = g2_negative_nilpotents()[static_cast<std::size_t>(root_id - count)];
    } else {
        x = positive_nilpotent(spec, root_id - count).transpose();
    }
    return make_element(spec, exp_nilpotent(x, s));
}

namespace {

const std::array<Rational, 8>& root_param_pool() {
    static const std::array<Rational, 8> pool = {
        Rational(1),     Rational(-1),    Rational(2),     Rational(-2),
        Rational(1, 2),  Rational(-1, 2), Rational(3),     Rational(-3)};
    return pool;
}

const std::array<Rational, 8>& torus_param_pool() {
    static const std::array<Rational, 8> pool = {
        Rational(2),    Rational(3),    Rational(5),    Rational(1, 2),
        Rational(1, 3), Rational(3, 2), Rational(2, 3), Rational(5, 2)};
    return pool;
}

}  // namespace

Element random_element(const GroupSpec& spec, SplitMix64& rng, int complexity) {
    if (complexity < 1) throw Error("complexity must be >= 1");
    const int count = 2 * positive_root_count(spec);
    Element acc = identity_element(spec);
    for (int step = 0; step < complexity; ++step) {
        int id = static_cast<int>(rng.below(static_cast<std::uint64_t>(count)));
        const Rational& s = root_param_pool()[rng.below(root_param_pool().size())];
        acc = multiply(acc, root_element(spec, id, s));
    }
    if (!membership(spec, acc.matrix).ok)
        throw InternalError("random element escaped the group");
    return acc;
}

Element random_element(const GroupSpec& spec, std::uint64_t seed, int complexity) {
    SplitMix64 rng(seed);
    return random_element(spec, rng, complexity);
}

Element random_torus_element(const GroupSpec& spec, SplitMix64& rng) {
    const auto& pool = torus_param_pool();
    const int n = spec.rep_dim();
    MatQ d(n);
    if (spec.family == Family::SL) {
        Rational prod(1);
        for (int i = 0; i + 1 < n; ++i) {
            d.at(i, i) = pool[rng.below(pool.size())];
            prod *= d.at(i, i);
        }
        d.at(n - 1, n - 1) = 1 / prod;
    } else if (spec.family == Family::SO) {
        const int k = spec.param;
        for (int a = 0; a < k; ++a) {
            d.at(a, a) = pool[rng.below(pool.size())];
            d.at(n - 1 - a, n - 1 - a) = 1 / d.at(a, a);
        }
        d.at(k, k) = 1;
    } else {
        // Weight basis (v1, 2w3, 2w2, u, v2, v3, 2w1) under the torus
        // (a1, a2, a3), a1 a2 a3 = 1: v_i scales by a_i, w_i by 1/a_i.
        Rational a1 = pool[rng.below(pool.size())];
        Rational a2 = pool[rng.below(pool.size())];
        Rational a3 = 1 / (a1 * a2);
        const Rational diag[7] = {a1, 1 / a3, 1 / a2, Rational(1), a2, a3, 1 / a1};
        for (int i = 0; i < 7; ++i) d.at(i, i) = diag[i];
    }
    return make_element(spec, std::move(d));
}

Element random_torus_conjugate(const GroupSpec& spec, SplitMix64& rng, int complexity) {
    Element u = random_element(spec, rng, complexity);
    Element d = random_torus_element(spec, rng);
    return multiply(multiply(u, d), inverse_element(u));
}

Cocharacter default_cocharacter(const GroupSpec& spec) {
    Cocharacter c;
    const int n = spec.rep_dim();
    if (spec.family == Family::SL && n % 2 == 0) {
        for (long e = -n / 2; e <= n / 2; ++e)
            if (e != 0) c.exponents.push_back(e);
    } else {
        for (long e = -(n - 1) / 2; e <= (n - 1) / 2; ++e) c.exponents.push_back(e);
    }
    return c;
}

void validate_cocharacter(const GroupSpec& spec, const Cocharacter& c) {
    const int n = spec.rep_dim();
    const auto& k = c.exponents;
    if (static_cast<int>(k.size()) != n)
        throw InvalidCocharacter("expected " + std::to_string(n) + " exponents, got " +
                                 std::to_string(k.size()));
    for (int i = 0; i + 1 < n; ++i)
        if (k[i] >= k[i + 1])
            throw InvalidCocharacter("exponents must be strictly increasing (position " +
                                     std::to_string(i) + ")");
    if (spec.family == Family::SL) {
        long sum = 0;
        for (long e : k) sum += e;
        if (sum != 0)
            throw InvalidCocharacter("SL exponents must sum to zero, sum is " +
                                     std::to_string(sum));
    } else {
        for (int i = 0; i < n; ++i)
            if (k[i] != -k[n - 1 - i])
                throw InvalidCocharacter(
                    "exponents must be antisymmetric under index reversal (position " +
                    std::to_string(i) + ")");
    }
    if (spec.family == Family::G2) {
        for (const auto& e : g2_structure_tensor())
            if (k[e.i] + k[e.j] + k[e.k] != 0)
                throw InvalidCocharacter(
                    "exponents violate the structure-tensor grading at entry (" +
                    std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                    std::to_string(e.k) + ")");
    }
}

MatL build_tau(const GroupSpec& spec, const Cocharacter& c) {
    validate_cocharacter(spec, c);
    MatL tau(spec.rep_dim());
    for (int i = 0; i < spec.rep_dim(); ++i) tau.at(i, i) = LaurentPoly::t(c.exponents[i]);
    return tau;
}

MatL build_tau_inverse(const GroupSpec& spec, const Cocharacter& c) {
    validate_cocharacter(spec, c);
    MatL tau(spec.rep_dim());
    for (int i = 0; i < spec.rep_dim(); ++i) tau.at(i, i) = LaurentPoly::t(-c.exponents[i]);
    return tau;
}

}  // namespace freecert
