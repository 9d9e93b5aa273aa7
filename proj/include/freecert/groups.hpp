#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freecert/matrix.hpp"
#include "freecert/rng.hpp"

namespace freecert {

enum class Family { SL, SO, G2 };

/// Declaration of one of the supported split groups:
///   SL(n)      natural representation, dimension n (n >= 2)
///   SO(2k+1)   split odd orthogonal group, Gram matrix J = anti-diagonal
///              ones, natural representation of dimension 2k+1 (k >= 2)
///   G2         7-dimensional fundamental representation, preserving J and
///              a fixed integer trilinear structure tensor
///
/// The representation basis is a weight basis ordered so that the torus
/// exponents produced by build_tau are strictly increasing; the highest
/// weight line is index 0 and the lowest is index rep_dim()-1.
struct GroupSpec {
    Family family;
    int param = 0;  // SL: n, SO: k, G2: unused

    static GroupSpec SL(int n);
    static GroupSpec SO(int k);
    static GroupSpec G2();

    int rep_dim() const;
    std::string name() const;

    bool operator==(const GroupSpec& other) const {
        return family == other.family && param == other.param;
    }
    bool operator!=(const GroupSpec& other) const { return !(*this == other); }
};

/// Shared basis convention consumed by both the certifier and the span
/// checks; kept as functions so the agreement is testable in one place.
int highest_weight_index(const GroupSpec& spec);
int lowest_weight_index(const GroupSpec& spec);

/// Anti-diagonal ones.
MatQ gram_matrix(int dim);

struct MembershipCheck {
    bool ok = true;
    std::string reason;
};

/// Exact test of the defining identities (dimension, determinant, Gram
/// form, structure tensor as applicable). Throws DimensionMismatch when the
/// matrix size does not match the spec; everything else is a reasoned
/// pass/fail.
MembershipCheck membership(const GroupSpec& spec, const MatQ& m);

/// A group element: a matrix that passed the membership test at
/// construction. Products and inverses stay in the group, so they are not
/// re-checked.
struct Element {
    GroupSpec spec = GroupSpec{Family::SL, 2};
    MatQ matrix = MatQ::identity(2);
};

Element make_element(const GroupSpec& spec, MatQ m);  // throws MembershipViolation
Element identity_element(const GroupSpec& spec);
Element multiply(const Element& a, const Element& b);
Element inverse_element(const Element& a);

/// Number of positive roots: SL(n): n(n-1)/2, SO(2k+1): k^2, G2: 6.
int positive_root_count(const GroupSpec& spec);

/// One-parameter root element exp(s X), with X the nilpotent root-space
/// matrix; the exponential is an exact polynomial. Roots are indexed
/// 0 .. 2*positive_root_count(spec)-1, the second half being the negatives
/// aligned with the first.
Element root_element(const GroupSpec& spec, int root_id, const Rational& s);

/// Seeded product of `complexity` root elements with parameters from a
/// fixed rational pool. Deterministic per seed.
Element random_element(const GroupSpec& spec, std::uint64_t seed, int complexity);
Element random_element(const GroupSpec& spec, SplitMix64& rng, int complexity);

/// Diagonal torus element with entries from a fixed nonzero pool
/// (semisimple by construction).
Element random_torus_element(const GroupSpec& spec, SplitMix64& rng);

/// u D u^{-1} with D a random torus element and u a random element;
/// semisimple by construction.
Element random_torus_conjugate(const GroupSpec& spec, SplitMix64& rng, int complexity);

/// Torus exponent vector for tau = diag(t^{k_0}, ..., t^{k_n}).
struct Cocharacter {
    std::vector<long> exponents;
};

/// Smallest valid exponent vector per family: SL(n) symmetric around 0,
/// SO(2k+1): (-k..k), G2: (-3..3).
Cocharacter default_cocharacter(const GroupSpec& spec);

/// Throws InvalidCocharacter naming the violated constraint. Requirements:
/// strictly increasing (hence pairwise distinct); SL: sum zero; SO/G2:
/// antisymmetric under index reversal; G2 additionally compatible with the
/// structure-tensor grading (k_i + k_j + k_k = 0 on every nonzero entry).
void validate_cocharacter(const GroupSpec& spec, const Cocharacter& c);

MatL build_tau(const GroupSpec& spec, const Cocharacter& c);
MatL build_tau_inverse(const GroupSpec& spec, const Cocharacter& c);

/// Frozen split-G2 data in the fixed weight basis (see data/g2_structure.json
/// and tools/gen_g2_data.cpp, which re-derives it from scratch).
struct G2TensorEntry {
    int i, j, k;
    long value;
};
const std::vector<G2TensorEntry>& g2_structure_tensor();
const std::vector<MatQ>& g2_positive_nilpotents();
const std::vector<MatQ>& g2_negative_nilpotents();
int g2_data_version();

/// exp(s X) for nilpotent X, summed exactly until the power vanishes.
MatQ exp_nilpotent(const MatQ& x, const Rational& s);

}  // namespace freecert
