#pragma once

#include <string>

#include "freecert/groups.hpp"

namespace freecert {

/// Exact-rank sampling experiment: the span of conjugates
/// rho(h) (v vstar) rho(h)^-1 over random h, where v is the highest-weight
/// basis column and vstar the lowest-weight covector of the dual — the
/// same index-0 / index-(n) convention the certifier pairings use.
struct RankExperiment {
    GroupSpec spec = GroupSpec::SL(2);
    int samples = 0;
    std::uint64_t seed = 1;
    int complexity = 6;

    int v_index() const { return highest_weight_index(spec); }
    int vstar_index() const { return highest_weight_index(spec); }
    int wstar_index() const { return lowest_weight_index(spec); }
};

struct RankReport {
    int achieved = 0;
    int target = 0;
    int samples = 0;
    std::string samples_digest;  // FNV-1a over the sample matrices
};

/// Full span for SL (the representation is minuscule); for SO and G2 the
/// span must contain the traceless endomorphisms, so the target is one
/// below the full square.
int rank_target(const GroupSpec& spec);

/// (dim V)^2 + 5: the rank can be at most (dim V)^2, plus margin for
/// unlucky draws.
int default_rank_samples(const GroupSpec& spec);

RankReport span_rank(const RankExperiment& experiment);

struct PairingSearchOutcome {
    bool found = false;
    Element h;
    int attempts = 0;
    Rational value;  // (rho(h) v)^T J (rho(gamma h) v) at success
};

/// Searches h with (rho(h) v)^T J (rho(gamma h) v) != 0, identity first.
/// Only meaningful for the orthogonal families (SO, G2); gamma must not be
/// the identity.
PairingSearchOutcome diagonal_pairing_search(const GroupSpec& spec, const Element& gamma,
                                             int budget, std::uint64_t seed);

/// True iff o = I or o + J^-1 o^T J is not a scalar matrix, i.e. o is not
/// the sum of a scalar and a J-skew matrix. The witness must reproduce
/// o = u d u^-1 with d a diagonal torus element, certifying semisimplicity;
/// otherwise InvalidWitness.
bool scalar_plus_skew_exclusion(const GroupSpec& spec, const Element& o, const MatQ& witness_u,
                                const MatQ& witness_d);

}  // namespace freecert
