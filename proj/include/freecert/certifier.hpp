#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freecert/projective.hpp"
#include "freecert/words.hpp"

namespace freecert {

/// The conjugated family eta_i = h^-1 gamma_i h with cached exact
/// inverses. The attracting data of eta_i are the columns eta_i e_first
/// and eta_i e_last; its forbidden hyperplanes are the kernels of the
/// covectors e_first^T eta_i^-1 and e_last^T eta_i^-1, where e_first/e_last
/// are the basis vectors at the highest/lowest weight indices.
struct EtaFamily {
    GroupSpec spec;
    std::vector<MatQ> etas;
    std::vector<MatQ> eta_invs;
    bool membership_checked = false;

    int rank() const { return static_cast<int>(etas.size()); }
    int dim() const { return spec.rep_dim(); }

    /// eta_i applied to the attracting basis vector; i is 0-based here,
    /// sign +1 selects the highest weight index, -1 the lowest.
    std::vector<Rational> column(int i, int sign) const;
    /// The covector whose kernel is the forbidden hyperplane of eta_i.
    CovectorQ covector(int i, int sign) const;
};

/// Conjugates the gammas by h. Throws DuplicateGamma unless the gammas are
/// pairwise distinct modulo the center (scalar-multiple test for SL; exact
/// equality for SO and G2, whose centers act trivially here).
EtaFamily build_etas(const std::vector<Element>& gammas, const Element& h);

/// Low-level entry: arbitrary invertible matrices, no membership
/// guarantees. Exists so hypothesis violations can be probed on purpose.
EtaFamily eta_family_from_gl(const GroupSpec& spec, std::vector<MatQ> etas);

/// One cross pairing value: covector of eta_j (sign_j) applied to the
/// column of eta_i (sign_i). Indices are 1-based in reports.
struct PairingEntry {
    int i = 0, j = 0;
    int sign_i = 1, sign_j = 1;
    Rational value;
};

struct SelfPairing {
    int i = 0;
    int sign = 1;
    Rational value;
};

struct ZPairing {
    int i = 0;
    int sign = 1;
    Rational value;
};

struct VerificationRecord {
    std::size_t max_len = 0;
    unsigned long long words = 0;
    unsigned long long failures = 0;
    unsigned long long direct_eval_words = 0;
    bool all_ok = true;
};

/// Everything needed to re-validate the non-incidence hypothesis from the
/// matrices alone: the family, the pairing table (all nonzero), the base
/// point z with its hyperplane pairings, and bookkeeping.
struct Certificate {
    GroupSpec spec = GroupSpec::SL(2);
    std::vector<long> exponents;
    MatQ h = MatQ::identity(2);
    std::vector<MatQ> etas;
    std::vector<PairingEntry> pairings;       // i != j, all four sign combinations
    std::vector<SelfPairing> self_pairings;   // equal index, equal sign
    std::vector<Rational> z;                  // canonical residue point
    std::vector<ZPairing> z_pairings;
    std::optional<VerificationRecord> verification;
    std::map<std::string, std::string> metadata;
    int schema_version = 1;
};

struct ViolationReport {
    std::vector<PairingEntry> vanishing;
    std::string describe() const;
};

using CheckResult = std::variant<Certificate, ViolationReport>;

/// Computes every cross pairing (4 per ordered pair i != j) and the 2r
/// self pairings; all nonzero yields a Certificate (with the base point
/// filled in via find_z), otherwise a ViolationReport listing every
/// vanishing pairing. Exponents, h and metadata of the Certificate are
/// left for the caller to fill.
CheckResult check_nonincidence(const EtaFamily& family);

struct ZSearch {
    std::vector<Rational> z;
    std::vector<ZPairing> pairings;
    long m = 0;  // the successful parameter of (1, m, m^2, ...)
};

/// Deterministic sweep z_m = (1, m, m^2, ..., m^n), m = 1, 2, ...; each of
/// the 2r covectors kills at most n values of m (Vandermonde), so some
/// m <= 2 r n + 1 works; exceeding the bound throws InternalError.
ZSearch find_z(const EtaFamily& family);

struct GeneratorSet {
    std::vector<MatL> gens;
    std::vector<MatL> gen_invs;
};

/// g_i = eta_i tau eta_i^-1 and g_i^-1 = eta_i tau^-1 eta_i^-1, with
/// g_i g_i^-1 = I asserted.
GeneratorSet make_generators(const EtaFamily& family, const MatL& tau, const MatL& tau_inv);

/// One step of a word trace: the point after applying the letter at
/// (1-based) position j, the ball membership check for that letter, and —
/// when a letter at position j-1 remains to be applied — the hyperplane
/// precondition check for it.
struct TraceStep {
    int position = 0;
    Letter letter;
    bool in_ball_ok = false;
    bool has_off_check = false;
    bool off_hyperplane_ok = true;
    std::vector<LaurentPoly> point;  // normalized coordinates after the step
};

struct WordTrace {
    FreeWord word;
    bool initial_off_ok = false;  // base point avoids the last letter's hyperplane
    std::vector<TraceStep> steps;
    bool moved_base_point = false;
    bool ok = false;
    int failed_position = 0;   // 0 when ok
    std::string failure;       // empty when ok
};

/// Applies the word's letters right to left to a lift of z and checks the
/// ball / hyperplane conditions after every application; any failed check
/// is reported with its step. Requires a nonempty reduced word.
WordTrace trace_word(const FreeWord& word, const GeneratorSet& gens, const EtaFamily& family,
                     const ProjPointC& z);

struct WordFailure {
    FreeWord word;
    int position = 0;
    std::string what;
};

struct VerifySummary {
    std::size_t max_len = 0;
    unsigned long long words = 0;
    unsigned long long failures = 0;
    unsigned long long direct_eval_words = 0;
    bool all_ok = true;
    std::optional<WordFailure> first_failure;
};

/// Traces every reduced word of length 1..max_len. Words of length up to
/// direct_eval_limit are additionally multiplied out over the Laurent ring
/// and compared against the identity matrix. jobs > 1 partitions the word
/// stream by first letter; the merge is deterministic.
VerifySummary verify_free_up_to(const EtaFamily& family, const GeneratorSet& gens,
                                const ProjPointC& z, std::size_t max_len, int jobs = 1,
                                std::size_t direct_eval_limit = 4);

struct HSearchOutcome {
    bool found = false;
    Element h;
    int attempts = 0;  // 1-based index of the successful attempt
    std::optional<Certificate> certificate;
    std::vector<std::string> attempt_failures;  // diagnostics when exhausted
};

/// Tries h = identity first, then seeded random elements whose complexity
/// starts at 4 and grows by 2 every 10 failures, until check_nonincidence
/// accepts or the budget runs out.
HSearchOutcome search_h(const std::vector<Element>& gammas, const GroupSpec& spec, int budget,
                        std::uint64_t seed);

struct RecheckResult {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Re-derives every stored scalar of the certificate from the matrices
/// alone — pairings, self pairings, z pairings — and re-validates the
/// exponents; stored values must match exactly and be nonzero.
RecheckResult recheck_certificate(const Certificate& cert);

/// Convenience used by the CLI: family from gammas and h, non-incidence
/// check, exponents validated and recorded.
CheckResult certify(const std::vector<Element>& gammas, const Element& h,
                    const Cocharacter& cocharacter);

}  // namespace freecert
