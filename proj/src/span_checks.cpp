#include "freecert/span_checks.hpp"

#include <sstream>

#include "freecert/linalg.hpp"
#include "freecert/util.hpp"

namespace freecert {

int rank_target(const GroupSpec& spec) {
    const int d = spec.rep_dim();
    return spec.family == Family::SL ? d * d : d * d - 1;
}

int default_rank_samples(const GroupSpec& spec) {
    const int d = spec.rep_dim();
    return d * d + 5;
}

RankReport span_rank(const RankExperiment& experiment) {
    if (experiment.samples < 1) throw Error("need at least one sample");
    const GroupSpec& spec = experiment.spec;
    const int d = spec.rep_dim();
    const int v = experiment.v_index();
    const int vstar = experiment.vstar_index();

    SplitMix64 rng(experiment.seed);
    std::vector<RowVec> rows;
    std::ostringstream digest_input;
    for (int s = 0; s < experiment.samples; ++s) {
        Element h = random_element(spec, rng, experiment.complexity);
        MatQ h_inv = inverse(h.matrix);
        // rho(h) (e_v e_vstar^T) rho(h)^-1 = column_v(h) x row_vstar(h^-1)
        RowVec flat(static_cast<std::size_t>(d) * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                flat[static_cast<std::size_t>(i) * d + j] = h.matrix.at(i, v) * h_inv.at(vstar, j);
        rows.push_back(std::move(flat));
        digest_input << matrix_str(h.matrix) << "\n";
    }

    RankReport report;
    report.samples = experiment.samples;
    report.achieved = rank_of_rows(std::move(rows));
    report.target = rank_target(spec);
    report.samples_digest = to_hex(fnv1a64(digest_input.str()));
    if (report.achieved > d * d) throw InternalError("rank exceeded the ambient dimension");
    return report;
}

PairingSearchOutcome diagonal_pairing_search(const GroupSpec& spec, const Element& gamma,
                                             int budget, std::uint64_t seed) {
    if (spec.family == Family::SL)
        throw Error("the pairing search needs an orthogonal family (SO or G2)");
    if (gamma.spec != spec) throw DimensionMismatch("gamma is not in the declared group");
    if (gamma.matrix.is_identity())
        throw Error("gamma must differ from the identity");

    const int d = spec.rep_dim();
    const int v = highest_weight_index(spec);
    const MatQ j = gram_matrix(d);

    PairingSearchOutcome outcome;
    outcome.h = identity_element(spec);
    SplitMix64 rng(seed);
    for (int attempt = 1; attempt <= budget; ++attempt) {
        Element h = attempt == 1 ? identity_element(spec) : random_element(spec, rng, 4);
        MatQ gh = gamma.matrix * h.matrix;
        // (rho(h) v)^T J (rho(gamma h) v)
        Rational value(0);
        for (int a = 0; a < d; ++a) value += h.matrix.at(a, v) * gh.at(d - 1 - a, v);
        if (!is_zero(value)) {
            outcome.found = true;
            outcome.h = h;
            outcome.attempts = attempt;
            outcome.value = value;
            return outcome;
        }
    }
    outcome.attempts = budget;
    return outcome;
}

bool scalar_plus_skew_exclusion(const GroupSpec& spec, const Element& o, const MatQ& witness_u,
                                const MatQ& witness_d) {
    if (spec.family != Family::SO)
        throw Error("the scalar-plus-skew exclusion is about SO(2k+1)");
    if (o.spec != spec) throw DimensionMismatch("element is not in the declared group");
    const int d = spec.rep_dim();
    if (witness_u.dim() != d || witness_d.dim() != d)
        throw InvalidWitness("witness dimensions do not match");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j && !is_zero(witness_d.at(i, j)))
                throw InvalidWitness("witness d is not diagonal");
    for (int i = 0; i < d; ++i)
        if (witness_d.at(i, i) * witness_d.at(d - 1 - i, d - 1 - i) != 1)
            throw InvalidWitness("witness d is not a torus element");
    if (witness_u * witness_d * inverse(witness_u) != o.matrix)
        throw InvalidWitness("witness does not reproduce the element");

    if (o.matrix.is_identity()) return true;
    const MatQ j = gram_matrix(d);
    MatQ symmetrized = o.matrix + j * o.matrix.transpose() * j;  // J^-1 = J
    return !symmetrized.is_scalar();
}

}  // namespace freecert
