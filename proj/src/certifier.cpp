#include "freecert/certifier.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace freecert {

std::vector<Rational> EtaFamily::column(int i, int sign) const {
    const int idx = sign > 0 ? highest_weight_index(spec) : lowest_weight_index(spec);
    std::vector<Rational> col(dim());
    for (int r = 0; r < dim(); ++r) col[r] = etas[i].at(r, idx);
    return col;
}

CovectorQ EtaFamily::covector(int i, int sign) const {
    const int idx = sign > 0 ? highest_weight_index(spec) : lowest_weight_index(spec);
    std::vector<Rational> row(dim());
    for (int c = 0; c < dim(); ++c) row[c] = eta_invs[i].at(idx, c);
    return CovectorQ(std::move(row));
}

EtaFamily build_etas(const std::vector<Element>& gammas, const Element& h) {
    if (gammas.empty()) throw Error("need at least one gamma");
    const GroupSpec spec = h.spec;
    for (const Element& g : gammas)
        if (g.spec != spec) throw DimensionMismatch("gamma and h live in different groups");
    for (std::size_t i = 0; i < gammas.size(); ++i)
        for (std::size_t j = i + 1; j < gammas.size(); ++j) {
            bool duplicate;
            if (spec.family == Family::SL)
                duplicate = (gammas[i].matrix * inverse(gammas[j].matrix)).is_scalar();
            else
                duplicate = gammas[i].matrix == gammas[j].matrix;
            if (duplicate)
                throw DuplicateGamma("gamma " + std::to_string(i + 1) + " and gamma " +
                                     std::to_string(j + 1) +
                                     " coincide modulo the center");
        }
    EtaFamily family;
    family.spec = spec;
    family.membership_checked = true;
    MatQ h_inv = inverse(h.matrix);
    for (const Element& g : gammas) {
        MembershipCheck check = membership(spec, g.matrix);
        if (!check.ok) throw MembershipViolation("gamma: " + check.reason);
        family.etas.push_back(h_inv * g.matrix * h.matrix);
        family.eta_invs.push_back(h_inv * inverse(g.matrix) * h.matrix);
    }
    return family;
}

EtaFamily eta_family_from_gl(const GroupSpec& spec, std::vector<MatQ> etas) {
    if (etas.empty()) throw Error("need at least one eta");
    EtaFamily family;
    family.spec = spec;
    family.membership_checked = false;
    for (const MatQ& m : etas) {
        if (m.dim() != spec.rep_dim())
            throw DimensionMismatch("eta dimension does not match the declared group");
        family.eta_invs.push_back(inverse(m));
    }
    family.etas = std::move(etas);
    return family;
}

std::string ViolationReport::describe() const {
    std::ostringstream os;
    os << vanishing.size() << " vanishing pairing(s):";
    for (const auto& p : vanishing)
        os << " (i=" << p.i << ", j=" << p.j << ", " << (p.sign_i > 0 ? "+" : "-") << ", "
           << (p.sign_j > 0 ? "+" : "-") << ")";
    return os.str();
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

ZSearch find_z(const EtaFamily& family) {
    const int n = family.dim() - 1;
    const long bound = 2L * family.rank() * n + 1;
    std::vector<CovectorQ> covectors;
    for (int i = 0; i < family.rank(); ++i) {
        covectors.push_back(family.covector(i, +1));
        covectors.push_back(family.covector(i, -1));
    }
    for (long m = 1; m <= bound; ++m) {
        std::vector<Rational> z(family.dim());
        Rational power(1);
        for (int c = 0; c < family.dim(); ++c) {
            z[c] = power;
            power *= m;
        }
        ZSearch result;
        result.z = z;
        result.m = m;
        bool ok = true;
        for (int i = 0; i < family.rank() && ok; ++i)
            for (int s = 0; s < 2 && ok; ++s) {
                const int sign = s == 0 ? +1 : -1;
                Rational value = dot(covectors[2 * i + s].coords(), z);
                if (is_zero(value)) {
                    ok = false;
                    break;
                }
                result.pairings.push_back(ZPairing{i + 1, sign, value});
            }
        if (ok) return result;
    }
    throw InternalError("base-point sweep exhausted the Vandermonde bound");
}

CheckResult check_nonincidence(const EtaFamily& family) {
    const int r = family.rank();
    std::vector<PairingEntry> pairings;
    std::vector<PairingEntry> vanishing;
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            if (i == j) continue;
            for (int si : {+1, -1})
                for (int sj : {+1, -1}) {
                    Rational value =
                        dot(family.covector(j, sj).coords(), family.column(i, si));
                    PairingEntry entry{i + 1, j + 1, si, sj, value};
                    if (is_zero(value))
                        vanishing.push_back(entry);
                    else
                        pairings.push_back(entry);
                }
        }
    if (!vanishing.empty()) return ViolationReport{std::move(vanishing)};

    std::vector<SelfPairing> selfs;
    for (int i = 0; i < r; ++i)
        for (int sign : {+1, -1}) {
            Rational value = dot(family.covector(i, sign).coords(), family.column(i, sign));
            if (is_zero(value))
                throw InternalError("self pairing vanished; eta inverse is inconsistent");
            selfs.push_back(SelfPairing{i + 1, sign, value});
        }

    ZSearch z = find_z(family);

    Certificate cert;
    cert.spec = family.spec;
    cert.h = MatQ::identity(family.dim());
    cert.etas = family.etas;
    cert.pairings = std::move(pairings);
    cert.self_pairings = std::move(selfs);
    cert.z = std::move(z.z);
    cert.z_pairings = std::move(z.pairings);
    return cert;
}

GeneratorSet make_generators(const EtaFamily& family, const MatL& tau, const MatL& tau_inv) {
    GeneratorSet out;
    const MatL id = MatL::identity(family.dim());
    for (int i = 0; i < family.rank(); ++i) {
        MatL eta = to_laurent(family.etas[i]);
        MatL eta_inv = to_laurent(family.eta_invs[i]);
        out.gens.push_back(eta * tau * eta_inv);
        out.gen_invs.push_back(eta * tau_inv * eta_inv);
        if (out.gens.back() * out.gen_invs.back() != id)
            throw InternalError("generator times claimed inverse is not the identity");
    }
    return out;
}

namespace {

// Positive rational multiple of m with primitive integer coefficients.
// Scaled generators act identically on projective points but keep every
// coefficient an integer, which makes the long traces cheap.
MatL primitive_scaled(const MatL& m) {
    mpz_class num_gcd(0), den_lcm(1);
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            for (const auto& [e, q] : m.at(i, j).terms()) {
                mpz_class num = q.get_num();
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
                mpz_class den = q.get_den();
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
            }
    if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return m;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    MatL out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            for (const auto& [e, q] : m.at(i, j).terms())
                out.at(i, j) += LaurentPoly::monomial(e, q * scale);
    return out;
}

// Precomputed per-family data shared by every trace.
struct TraceContext {
    std::vector<std::vector<Rational>> columns;  // [2i + (sign<0)]
    std::vector<CovectorQ> covectors;
    std::vector<ProjPointC> ball_classes;
    std::vector<MatL> fast_gens;  // [2i + (sign<0)], integer rescalings
    ProjPointL base;
    ProjPointC base_class;

    TraceContext(const EtaFamily& family, const GeneratorSet& gens, const ProjPointC& z)
        : base(ProjPointL::lift(z)), base_class(z) {
        for (int i = 0; i < family.rank(); ++i) {
            columns.push_back(family.column(i, +1));
            columns.push_back(family.column(i, -1));
            covectors.push_back(family.covector(i, +1));
            covectors.push_back(family.covector(i, -1));
            ball_classes.push_back(ProjPointC::canonical(family.column(i, +1)));
            ball_classes.push_back(ProjPointC::canonical(family.column(i, -1)));
            fast_gens.push_back(primitive_scaled(gens.gens[i]));
            fast_gens.push_back(primitive_scaled(gens.gen_invs[i]));
        }
    }

    static int slot(const Letter& l) { return 2 * (l.index - 1) + (l.sign < 0 ? 1 : 0); }

    const std::vector<Rational>& column(const Letter& l) const { return columns[slot(l)]; }
    const CovectorQ& covector(const Letter& l) const { return covectors[slot(l)]; }
    const ProjPointC& ball_class(const Letter& l) const { return ball_classes[slot(l)]; }

    /// Fused matrix action, normalized to the primitive representative.
    ProjPointL apply(const Letter& l, const ProjPointL& point) const {
        const MatL& g = fast_gens[slot(l)];
        const int n = g.dim();
        std::vector<LaurentPoly> out(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const LaurentPoly& entry = g.at(i, j);
                if (!entry.is_zero()) out[i].add_mul(entry, point.coords()[j]);
            }
        return make_primitive(ProjPointL::normalize(std::move(out)));
    }
};

// off_hyperplane with the point's residue already at hand; keeps the
// two-route agreement contract.
bool off_hyperplane_cached(const ProjPointL& point, const ProjPointC& residue,
                           const CovectorQ& functional) {
    bool residue_route = !is_zero(functional.pair(residue));
    bool valuation_route = functional.pair(point).valuation() == Valuation::of(0);
    if (residue_route != valuation_route)
        throw InternalError("hyperplane routes disagree on a normalized point");
    return residue_route;
}

WordTrace trace_with_context(const FreeWord& word, const TraceContext& ctx) {
    if (word.empty()) throw Error("cannot trace the empty word");
    if (!word.is_reduced()) throw NotReduced("word is not reduced: " + word.str());
    WordTrace trace;
    trace.word = word;

    const auto& letters = word.letters();
    const int len = static_cast<int>(letters.size());

    trace.initial_off_ok = off_hyperplane(ctx.base, ctx.covector(letters.back()));
    if (!trace.initial_off_ok) {
        trace.ok = false;
        trace.failed_position = len;
        trace.failure = "base point lies in the forbidden hyperplane of the last letter";
        return trace;
    }

    ProjPointL point = ctx.base;
    for (int j = len; j >= 1; --j) {
        const Letter& l = letters[j - 1];
        point = ctx.apply(l, point);

        TraceStep step;
        step.position = j;
        step.letter = l;
        step.in_ball_ok = in_ball(point, ctx.column(l));
        if (j > 1) {
            step.has_off_check = true;
            step.off_hyperplane_ok = off_hyperplane(point, ctx.covector(letters[j - 2]));
        }
        step.point = point.coords();
        bool in_ball_failed = !step.in_ball_ok;
        bool off_failed = step.has_off_check && !step.off_hyperplane_ok;
        trace.steps.push_back(std::move(step));
        if (in_ball_failed || off_failed) {
            trace.ok = false;
            trace.failed_position = j;
            trace.failure = in_ball_failed
                                ? "image escaped the expected ball at position " +
                                      std::to_string(j)
                                : "image lies in the forbidden hyperplane of position " +
                                      std::to_string(j - 1);
            return trace;
        }
    }

    trace.moved_base_point = !proj_equal(point, ctx.base);
    if (!trace.moved_base_point) {
        trace.ok = false;
        trace.failed_position = 1;
        trace.failure = "word fixed the base point";
        return trace;
    }
    trace.ok = true;
    return trace;
}

struct PartialSummary {
    unsigned long long words = 0;
    unsigned long long failures = 0;
    unsigned long long direct_eval_words = 0;
    std::optional<WordFailure> first_failure;

    void merge(const PartialSummary& other) {
        words += other.words;
        failures += other.failures;
        direct_eval_words += other.direct_eval_words;
        if (other.first_failure &&
            (!first_failure || word_order_less(other.first_failure->word, first_failure->word)))
            first_failure = other.first_failure;
    }
};

// Words applied right-to-left share suffixes, so the verification walks the
// suffix tree: the path from the root lists the letters in application
// order (last letter first) and each node's point is computed once. Every
// node is itself one enumerated word; its trace outcome equals the first
// failed check along its ancestor chain, which reproduces trace_word's
// per-word semantics exactly (a property test holds the two routes
// together).
struct SuffixWalker {
    const GeneratorSet& gens;
    const TraceContext& ctx;
    std::size_t max_len;
    std::size_t direct_eval_limit;
    int rank;
    PartialSummary out;

    enum class Kind { InBall, OffHyperplane, FixedBase, DirectEval };

    struct Failure {
        std::size_t check_depth;  // depth of the node whose check failed
        Kind kind;
    };

    std::vector<Letter> applied;  // letters in application order (word reversed)

    FreeWord word_here() const {
        return FreeWord(std::vector<Letter>(applied.rbegin(), applied.rend()));
    }

    void register_word(const std::optional<Failure>& failure) {
        ++out.words;
        if (!failure) return;
        ++out.failures;
        FreeWord word = word_here();
        if (out.first_failure && !word_order_less(word, out.first_failure->word)) return;
        const std::size_t len = applied.size();
        // trace positions count from the left of the word; the check at
        // node depth d sits at position len - d + 1 of this word's trace
        int position = static_cast<int>(len - failure->check_depth + 1);
        std::string what;
        switch (failure->kind) {
            case Kind::InBall:
                what = "image escaped the expected ball at position " + std::to_string(position);
                break;
            case Kind::OffHyperplane:
                if (failure->check_depth == 0) {
                    position = static_cast<int>(len);
                    what = "base point lies in the forbidden hyperplane of the last letter";
                } else {
                    what = "image lies in the forbidden hyperplane of position " +
                           std::to_string(position - 1);
                }
                break;
            case Kind::FixedBase:
                position = 1;
                what = "word fixed the base point";
                break;
            case Kind::DirectEval:
                position = 0;
                what = "word evaluated to the identity matrix";
                break;
        }
        out.first_failure = WordFailure{std::move(word), position, what};
    }

    // `failure` is the shallowest failed check inherited from the ancestors.
    void visit(const ProjPointL& point, const MatL* acc, std::optional<Failure> failure,
               Letter last) {
        const std::size_t depth = applied.size();
        const ProjPointC residue = reduce_pi(point);

        if (!failure && !(residue == ctx.ball_class(last)))
            failure = Failure{depth, Kind::InBall};
        // residues differing already separates the points projectively
        bool moved = failure ? true
                             : (!(residue == ctx.base_class) || !proj_equal(point, ctx.base));

        std::optional<Failure> word_failure = failure;
        if (!word_failure && !moved) word_failure = Failure{depth, Kind::FixedBase};
        if (!word_failure && acc && depth <= direct_eval_limit) {
            ++out.direct_eval_words;
            if (*acc == MatL::identity(acc->dim()))
                word_failure = Failure{depth, Kind::DirectEval};
        }
        register_word(word_failure);

        if (depth == max_len) return;
        for (int code = 0; code < 2 * rank; ++code) {
            Letter next = letter_from_code(code);
            if (cancels(next, last)) continue;
            std::optional<Failure> child_failure = failure;
            if (!child_failure && !off_hyperplane_cached(point, residue, ctx.covector(next)))
                child_failure = Failure{depth, Kind::OffHyperplane};
            ProjPointL moved_point = ctx.apply(next, point);
            std::optional<MatL> next_acc;
            if (acc && depth + 1 <= direct_eval_limit) {
                const MatL& g = next.sign > 0 ? gens.gens[next.index - 1]
                                              : gens.gen_invs[next.index - 1];
                next_acc = g * *acc;
            }
            applied.push_back(next);
            visit(moved_point, next_acc ? &*next_acc : nullptr, child_failure, next);
            applied.pop_back();
        }
    }

    void run(Letter first) {
        std::optional<Failure> failure;
        if (!off_hyperplane(ctx.base, ctx.covector(first)))
            failure = Failure{0, Kind::OffHyperplane};
        ProjPointL point = ctx.apply(first, ctx.base);
        std::optional<MatL> acc;
        if (direct_eval_limit >= 1)
            acc = first.sign > 0 ? gens.gens[first.index - 1] : gens.gen_invs[first.index - 1];
        applied.push_back(first);
        visit(point, acc ? &*acc : nullptr, failure, first);
        applied.pop_back();
    }
};

PartialSummary verify_stream(const GeneratorSet& gens, const TraceContext& ctx, int rank,
                             std::size_t max_len, std::size_t direct_eval_limit, int code) {
    SuffixWalker walker{gens, ctx, max_len, direct_eval_limit, rank, {}, {}};
    walker.run(letter_from_code(code));
    return walker.out;
}

}  // namespace

WordTrace trace_word(const FreeWord& word, const GeneratorSet& gens, const EtaFamily& family,
                     const ProjPointC& z) {
    TraceContext ctx(family, gens, z);
    return trace_with_context(word, ctx);
}

VerifySummary verify_free_up_to(const EtaFamily& family, const GeneratorSet& gens,
                                const ProjPointC& z, std::size_t max_len, int jobs,
                                std::size_t direct_eval_limit) {
    VerifySummary summary;
    summary.max_len = max_len;
    if (max_len == 0) return summary;

    TraceContext ctx(family, gens, z);
    const int r = family.rank();
    const int streams = 2 * r;
    jobs = std::max(1, std::min(jobs, streams));

    // one stream per final letter (the first letter applied)
    std::vector<PartialSummary> partials(streams);
    if (jobs == 1) {
        for (int c = 0; c < streams; ++c)
            partials[c] = verify_stream(gens, ctx, r, max_len, direct_eval_limit, c);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (int c = w; c < streams; c += jobs)
                    partials[c] = verify_stream(gens, ctx, r, max_len, direct_eval_limit, c);
            });
        for (auto& t : workers) t.join();
    }

    PartialSummary total;
    for (const auto& p : partials) total.merge(p);
    summary.words = total.words;
    summary.failures = total.failures;
    summary.direct_eval_words = total.direct_eval_words;
    summary.first_failure = total.first_failure;
    summary.all_ok = total.failures == 0;
    return summary;
}

HSearchOutcome search_h(const std::vector<Element>& gammas, const GroupSpec& spec, int budget,
                        std::uint64_t seed) {
    HSearchOutcome outcome;
    outcome.h = identity_element(spec);
    SplitMix64 rng(seed);
    for (int attempt = 1; attempt <= budget; ++attempt) {
        Element h = attempt == 1
                        ? identity_element(spec)
                        : random_element(spec, rng, 4 + 2 * ((attempt - 2) / 10));
        EtaFamily family = build_etas(gammas, h);
        CheckResult result = check_nonincidence(family);
        if (std::holds_alternative<Certificate>(result)) {
            outcome.found = true;
            outcome.h = h;
            outcome.attempts = attempt;
            Certificate cert = std::get<Certificate>(std::move(result));
            cert.h = h.matrix;
            outcome.certificate = std::move(cert);
            return outcome;
        }
        outcome.attempt_failures.push_back(
            "attempt " + std::to_string(attempt) + ": " +
            std::get<ViolationReport>(result).describe());
    }
    outcome.attempts = budget;
    return outcome;
}

RecheckResult recheck_certificate(const Certificate& cert) {
    RecheckResult result;
    auto problem = [&](const std::string& what) {
        result.ok = false;
        result.problems.push_back(what);
    };

    const int dim = cert.spec.rep_dim();
    for (const MatQ& eta : cert.etas)
        if (eta.dim() != dim) {
            problem("eta dimension does not match the group");
            return result;
        }
    if (cert.etas.empty()) {
        problem("certificate has no etas");
        return result;
    }

    try {
        validate_cocharacter(cert.spec, Cocharacter{cert.exponents});
    } catch (const InvalidCocharacter& e) {
        problem(std::string("exponents: ") + e.what());
    }

    if (cert.h.dim() != dim) {
        problem("h dimension does not match the group");
        return result;
    }
    MembershipCheck h_check = membership(cert.spec, cert.h);
    if (!h_check.ok) problem("h: " + h_check.reason);

    EtaFamily family;
    try {
        family = eta_family_from_gl(cert.spec, cert.etas);
    } catch (const SingularMatrix&) {
        problem("an eta is singular");
        return result;
    }

    const int r = family.rank();
    // cross pairings
    std::size_t expected_cross = static_cast<std::size_t>(4) * r * (r - 1);
    if (cert.pairings.size() != expected_cross)
        problem("expected " + std::to_string(expected_cross) + " cross pairings, found " +
                std::to_string(cert.pairings.size()));
    for (const auto& p : cert.pairings) {
        if (p.i < 1 || p.i > r || p.j < 1 || p.j > r || p.i == p.j) {
            problem("pairing with bad indices");
            continue;
        }
        Rational value =
            dot(family.covector(p.j - 1, p.sign_j).coords(), family.column(p.i - 1, p.sign_i));
        if (is_zero(value))
            problem("pairing (i=" + std::to_string(p.i) + ", j=" + std::to_string(p.j) +
                    ") recomputes to zero");
        if (value != p.value)
            problem("pairing (i=" + std::to_string(p.i) + ", j=" + std::to_string(p.j) +
                    ", " + (p.sign_i > 0 ? "+" : "-") + (p.sign_j > 0 ? "+" : "-") +
                    ") does not match the stored value");
    }
    for (const auto& s : cert.self_pairings) {
        if (s.i < 1 || s.i > r) {
            problem("self pairing with bad index");
            continue;
        }
        Rational value =
            dot(family.covector(s.i - 1, s.sign).coords(), family.column(s.i - 1, s.sign));
        if (is_zero(value) || value != s.value)
            problem("self pairing i=" + std::to_string(s.i) + " is wrong");
    }

    // base point
    if (static_cast<int>(cert.z.size()) != dim) {
        problem("z has the wrong dimension");
        return result;
    }
    bool z_nonzero = false;
    for (const auto& c : cert.z) z_nonzero = z_nonzero || !is_zero(c);
    if (!z_nonzero) {
        problem("z is the zero vector");
        return result;
    }
    if (cert.z_pairings.size() != static_cast<std::size_t>(2 * r))
        problem("expected " + std::to_string(2 * r) + " z pairings, found " +
                std::to_string(cert.z_pairings.size()));
    for (const auto& zp : cert.z_pairings) {
        if (zp.i < 1 || zp.i > r) {
            problem("z pairing with bad index");
            continue;
        }
        Rational value = dot(family.covector(zp.i - 1, zp.sign).coords(), cert.z);
        if (is_zero(value))
            problem("z pairing i=" + std::to_string(zp.i) + " recomputes to zero");
        if (value != zp.value)
            problem("z pairing i=" + std::to_string(zp.i) + " does not match the stored value");
    }
    return result;
}

CheckResult certify(const std::vector<Element>& gammas, const Element& h,
                    const Cocharacter& cocharacter) {
    validate_cocharacter(h.spec, cocharacter);
    EtaFamily family = build_etas(gammas, h);
    CheckResult result = check_nonincidence(family);
    if (std::holds_alternative<Certificate>(result)) {
        Certificate& cert = std::get<Certificate>(result);
        cert.exponents = cocharacter.exponents;
        cert.h = h.matrix;
    }
    return result;
}

}  // namespace freecert
