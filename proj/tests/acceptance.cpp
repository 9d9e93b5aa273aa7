// Acceptance suite: one criterion per command-line argument (1..8), all of
// them without arguments. Prints one [PASS]/[FAIL] line per criterion.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>

#include "cli_support.hpp"
#include "freecert/json_io.hpp"
#include "freecert/span_checks.hpp"
#include "freecert/word_parser.hpp"

using namespace freecert;

namespace {

struct Criterion {
    int id;
    std::string description;
    bool passed = true;
    std::string detail;

    Criterion(int id_, std::string description_)
        : id(id_), description(std::move(description_)) {}

    void require(bool condition, const std::string& what) {
        if (!condition && passed) {
            passed = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const GroupSpec kSL2 = GroupSpec::SL(2);
const GroupSpec kSL3 = GroupSpec::SL(3);
const GroupSpec kSO5 = GroupSpec::SO(2);
const GroupSpec kG2 = GroupSpec::G2();

MatQ mat2(long a, long b, long c, long d) {
    MatQ m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

std::vector<Element> golden_gammas() {
    return {identity_element(kSL2), make_element(kSL2, mat2(1, 1, 1, 2))};
}

// --- criterion 1: SL(2) golden run -----------------------------------------

void criterion_sl2_golden(Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    CheckResult result = certify(golden_gammas(), identity_element(kSL2), Cocharacter{{-1, 1}});
    c.require(std::holds_alternative<Certificate>(result), "non-incidence must hold");
    if (!c.passed) return;
    const Certificate& cert = std::get<Certificate>(result);

    // the eight hand-derived cross pairings
    std::multiset<std::string> values;
    for (const auto& p : cert.pairings) values.insert(rational_to_string(p.value));
    std::multiset<std::string> expected{"1", "1", "1", "2", "2", "-1", "-1", "1"};
    c.require(values == expected, "pairing multiset must be {1,1,1,2} u {2,-1,-1,1}");
    c.require(cert.z == std::vector<Rational>{Rational(1), Rational(3)}, "z must be (1, 3)");

    EtaFamily family = eta_family_from_gl(kSL2, cert.etas);
    Cocharacter tau{{-1, 1}};
    GeneratorSet gens = make_generators(family, build_tau(kSL2, tau), build_tau_inverse(kSL2, tau));
    ProjPointC z = ProjPointC::canonical(cert.z);
    VerifySummary summary = verify_free_up_to(family, gens, z, 8, /*jobs=*/1);

    // count oracle: sum over lengths of 2r (2r-1)^(l-1), r = 2
    unsigned long long by_formula = 0;
    for (std::size_t l = 1; l <= 8; ++l) by_formula += 4ULL * (1ULL << 0) * [](std::size_t n) {
        unsigned long long p = 1;
        for (std::size_t i = 1; i < n; ++i) p *= 3;
        return p;
    }(l);
    c.require(by_formula == 13120ULL, "formula sanity");
    c.require(reduced_word_count_up_to(2, 8) == by_formula, "enumeration oracle agrees");
    c.require(summary.words == by_formula, "every reduced word of length <= 8 is traced");
    c.require(summary.failures == 0, "zero trace failures");
    c.require(summary.direct_eval_words == reduced_word_count_up_to(2, 4),
              "all 160 words of length <= 4 evaluated directly");
    c.require(summary.all_ok, "direct evaluations are never the identity");

    double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "runtime exceeded 60 s");
    c.detail = "traced " + std::to_string(summary.words) + " words in " +
               std::to_string(elapsed) + " s";
}

// --- criterion 2: ball mapping ----------------------------------------------

void criterion_ball_mapping(Criterion& c) {
    SplitMix64 rng(2026);
    for (GroupSpec spec : {kSL2, kSO5, kG2}) {
        const int dim = spec.rep_dim();
        Cocharacter coch = default_cocharacter(spec);
        MatL tau = build_tau(spec, coch);
        MatL tau_inv = build_tau_inverse(spec, coch);
        std::vector<Rational> e_first(dim, Rational(0)), e_last(dim, Rational(0));
        e_first[0] = 1;
        e_last[dim - 1] = 1;
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<LaurentPoly> coords(dim);
            for (int i = 1; i < dim; ++i) {
                int terms = static_cast<int>(rng.below(3));
                for (int t = 0; t < terms; ++t)
                    coords[i] += LaurentPoly::monomial(
                        static_cast<long>(rng.below(4)),
                        Rational(static_cast<long>(rng.below(19)) - 9));
            }
            // unit 0-th coordinate: nonzero constant, higher terms only
            coords[0] = LaurentPoly(Rational(1 + static_cast<long>(rng.below(7))));
            for (int t = 0; t < 2; ++t)
                coords[0] += LaurentPoly::monomial(
                    1 + static_cast<long>(rng.below(3)),
                    Rational(static_cast<long>(rng.below(19)) - 9));
            ProjPointL p = ProjPointL::normalize(coords);
            if (!in_ball(apply_matrix(tau, p), e_first)) {
                c.require(false, spec.name() + ": tau missed the attracting ball");
                return;
            }
            // dual: unit last coordinate under tau^-1
            std::reverse(coords.begin(), coords.end());
            ProjPointL q = ProjPointL::normalize(coords);
            if (!in_ball(apply_matrix(tau_inv, q), e_last)) {
                c.require(false, spec.name() + ": tau^-1 missed the repelling ball");
                return;
            }
        }
    }
    c.detail = "500 points per family (SL(2), SO(5), G2), both directions, exact";
}

// --- criterion 3: word algebra round trip ------------------------------------

void criterion_word_round_trip(Criterion& c) {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 1 + static_cast<int>(rng.below(3));
        int len = 1 + static_cast<int>(rng.below(10));
        std::vector<FreeProductWord::Part> parts;
        for (int i = 0; i < len; ++i) {
            if (rng.below(2) == 0) parts.emplace_back(random_element(kSL3, rng, 3));
            parts.emplace_back(
                Letter{1 + static_cast<int>(rng.below(d)), rng.below(2) == 0 ? 1 : -1});
        }
        FreeProductWord w = FreeProductWord::reduce(parts).normalized(kSL3);
        std::vector<BasicWord> basics = w.decompose_basic(kSL3);
        FreeProductWord rebuilt = compose_basic(basics);
        if (!(rebuilt == w)) {
            c.require(false, "decomposition product failed to reduce to the input");
            return;
        }
        for (int a = 0; a < 5; ++a) {
            std::vector<Element> assignment;
            for (int v = 0; v < d; ++v) assignment.push_back(random_element(kSL3, rng, 3));
            if (w.evaluate(assignment, kSL3).matrix != rebuilt.evaluate(assignment, kSL3).matrix) {
                c.require(false, "evaluations diverged");
                return;
            }
        }
    }
    c.detail = "200 normalized words (d <= 3, length <= 10), 5 assignments each";
}

// --- criterion 4: rank targets ----------------------------------------------

void criterion_rank_targets(Criterion& c) {
    auto start = std::chrono::steady_clock::now();

    RankReport sl = span_rank({kSL3, default_rank_samples(kSL3), 1, 6});
    c.require(sl.achieved == 9, "SL(3) span must be the full 9");

    RankReport so = span_rank({kSO5, default_rank_samples(kSO5), 1, 6});
    c.require(so.achieved >= 24, "SO(5) span must contain the traceless part (>= 24)");

    RankReport g2 = span_rank({kG2, default_rank_samples(kG2), 1, 6});
    c.require(g2.achieved >= 48, "G2 span must contain the traceless part (>= 48)");

    double elapsed = seconds_since(start);
    c.require(elapsed < 120.0, "runtime exceeded 120 s");
    c.detail = "achieved SL(3): " + std::to_string(sl.achieved) +
               ", SO(5): " + std::to_string(so.achieved) + ", G2: " + std::to_string(g2.achieved) +
               " in " + std::to_string(elapsed) + " s";
}

// --- criterion 5: SO(5) end to end -------------------------------------------

void criterion_so5_end_to_end(Criterion& c) {
    SplitMix64 gamma_rng(42);
    std::vector<Element> gammas;
    for (int i = 0; i < 3; ++i) gammas.push_back(random_torus_conjugate(kSO5, gamma_rng, 4));

    HSearchOutcome outcome = search_h(gammas, kSO5, 50, 42);
    c.require(outcome.found, "h search must succeed within budget 50");
    if (!c.passed) return;

    Certificate cert = *outcome.certificate;
    cert.exponents = default_cocharacter(kSO5).exponents;
    c.require(recheck_certificate(cert).ok, "certificate must recheck");

    // golden record of the seeded run
    Json golden = load_json_file(std::string(FREECERT_GOLDEN_DIR) + "/so5_search_golden.json");
    c.require(outcome.attempts == golden.at("attempt").get<int>(),
              "search attempt index changed from the golden record");
    c.require(rational_vector_json(cert.z) == golden.at("z"),
              "base point changed from the golden record");

    EtaFamily family = eta_family_from_gl(kSO5, cert.etas);
    Cocharacter coch{cert.exponents};
    GeneratorSet gens =
        make_generators(family, build_tau(kSO5, coch), build_tau_inverse(kSO5, coch));
    VerifySummary summary =
        verify_free_up_to(family, gens, ProjPointC::canonical(cert.z), 6, /*jobs=*/4);
    c.require(summary.words == reduced_word_count_up_to(3, 6),
              "every reduced word of length <= 6 is traced");
    c.require(summary.failures == 0, "zero failures at L = 6");
    c.detail = "h found on attempt " + std::to_string(outcome.attempts) + "; traced " +
               std::to_string(summary.words) + " words";
}

// --- criterion 6: negative control -------------------------------------------

void criterion_negative_control(Criterion& c) {
    MatQ diag(2);
    diag.at(0, 0) = 1;
    diag.at(1, 1) = 2;
    EtaFamily family = eta_family_from_gl(kSL2, {MatQ::identity(2), diag});

    CheckResult result = check_nonincidence(family);
    c.require(std::holds_alternative<ViolationReport>(result),
              "diagonal eta must violate non-incidence");
    if (!c.passed) return;
    c.require(!std::get<ViolationReport>(result).vanishing.empty(),
              "the report must name a vanishing pairing");

    Cocharacter coch{{-1, 1}};
    GeneratorSet gens = make_generators(family, build_tau(kSL2, coch), build_tau_inverse(kSL2, coch));
    c.require(gens.gens[0] * gens.gens[1] * gens.gen_invs[0] * gens.gen_invs[1] ==
                  MatL::identity(2),
              "the commutator [g1, g2] must be the identity");

    ZSearch z = find_z(family);
    VerifySummary forced = verify_free_up_to(family, gens, ProjPointC::canonical(z.z), 2);
    c.require(!forced.all_ok, "forced tracing must fail");
    c.require(forced.first_failure && forced.first_failure->word.size() == 2,
              "the first failing word must have length 2");
    c.detail = "violations: " + std::get<ViolationReport>(result).describe() +
               "; first failing word " + forced.first_failure->word.str();
}

// --- criterion 7: scalar plus skew exclusion ----------------------------------

void criterion_scalar_plus_skew(Criterion& c) {
    c.require(scalar_plus_skew_exclusion(kSO5, identity_element(kSO5), MatQ::identity(5),
                                         MatQ::identity(5)),
              "the identity branch must return true");
    SplitMix64 rng(7);
    int checked = 0;
    while (checked < 100) {
        Element u = random_element(kSO5, rng, 4);
        Element d = random_torus_element(kSO5, rng);
        if (d.matrix.is_identity()) continue;
        Element o = multiply(multiply(u, d), inverse_element(u));
        if (!scalar_plus_skew_exclusion(kSO5, o, u.matrix, d.matrix)) {
            c.require(false, "a diagonalizable non-identity element summed to scalar plus skew");
            return;
        }
        ++checked;
    }
    c.detail = "100 seeded diagonalizable SO(5) elements excluded; identity branch true";
}

// --- criterion 8: determinism and recheck -------------------------------------

void criterion_determinism(Criterion& c) {
    std::string dir = test::make_temp_dir("acceptance8");
    test::write_file(dir + "/gammas.json",
                     R"({"gammas": [[["1","0"],["0","1"]], [["1","1"],["1","2"]]]})");
    const std::string base = "certify --group '{\"family\":\"SL\",\"n\":2}' --gammas gammas.json "
                             "--h identity --exponents -1,1 --seed 5 --out ";
    c.require(test::run_cli(base + "one.json", dir).exit_code == 0, "first golden run failed");
    c.require(test::run_cli(base + "two.json", dir).exit_code == 0, "second golden run failed");
    Json one = load_json_file(dir + "/one.json");
    Json two = load_json_file(dir + "/two.json");
    one.erase("metadata");
    two.erase("metadata");
    c.require(one.dump(2) == two.dump(2),
              "identical seeds must reproduce certificates byte for byte");

    c.require(test::run_cli("recheck one.json", dir).exit_code == 0,
              "recheck must accept the golden certificate");

    // every single stored scalar, tampered one at a time, must be rejected
    Certificate cert = certificate_from_json(load_json_file(dir + "/one.json"));
    int tampered_total = 0;
    auto expect_reject = [&](const Certificate& bad) {
        ++tampered_total;
        if (recheck_certificate(bad).ok)
            c.require(false, "a tampered scalar slipped through recheck");
    };
    for (std::size_t k = 0; k < cert.pairings.size(); ++k) {
        Certificate bad = cert;
        bad.pairings[k].value += 1;
        expect_reject(bad);
    }
    for (std::size_t k = 0; k < cert.self_pairings.size(); ++k) {
        Certificate bad = cert;
        bad.self_pairings[k].value = 0;
        expect_reject(bad);
    }
    for (std::size_t k = 0; k < cert.z_pairings.size(); ++k) {
        Certificate bad = cert;
        bad.z_pairings[k].value += 1;
        expect_reject(bad);
    }
    for (std::size_t k = 0; k < cert.z.size(); ++k) {
        Certificate bad = cert;
        bad.z[k] += 1;  // desynchronizes the stored z pairings
        expect_reject(bad);
    }

    // the CLI surfaces tampering as exit 3
    Json raw = load_json_file(dir + "/one.json");
    raw["pairings"][3]["value"] = "17";
    write_json_file(dir + "/tampered.json", raw);
    c.require(test::run_cli("recheck tampered.json", dir).exit_code == 3,
              "CLI recheck must exit 3 on tampering");

    // the other golden jobs reproduce byte for byte as well
    const std::string search = "search-h --group '{\"family\":\"SL\",\"n\":2}' --gammas "
                               "gammas.json --seed 5 --budget 10 --out ";
    c.require(test::run_cli(search + "s1.json", dir).exit_code == 0, "search-h run failed");
    c.require(test::run_cli(search + "s2.json", dir).exit_code == 0, "search-h rerun failed");
    Json s1 = load_json_file(dir + "/s1.json");
    Json s2 = load_json_file(dir + "/s2.json");
    s1.erase("metadata");
    s2.erase("metadata");
    c.require(s1.dump(2) == s2.dump(2), "search-h must reproduce byte for byte");

    const std::string rank = "rank --group '{\"family\":\"SO\",\"k\":2}' --seed 3 --out ";
    c.require(test::run_cli(rank + "r1.json", dir).exit_code == 0, "rank run failed");
    c.require(test::run_cli(rank + "r2.json", dir).exit_code == 0, "rank rerun failed");
    c.require(test::read_file(dir + "/r1.json") == test::read_file(dir + "/r2.json"),
              "rank reports must be byte-identical");

    c.detail = "byte-identical reruns (certify, search-h, rank); " +
               std::to_string(tampered_total) + " single-scalar tamperings all rejected";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "SL(2) golden run: pairings, z, 13120 traces at L=8, direct evaluation to length 4"},
        {2, "tau maps unit-coordinate points into the attracting balls (500 per family)"},
        {3, "word-algebra round trip: decompose, recompose, evaluate (200 words)"},
        {4, "rank targets: SL(3) = 9, SO(5) >= 24, G2 >= 48"},
        {5, "SO(5) end to end: seeded gammas, h search, certificate, L=6 verification"},
        {6, "negative control: diagonal eta violates, forced trace fails at length 2"},
        {7, "scalar-plus-skew exclusion on 100 diagonalizable SO(5) elements"},
        {8, "determinism of certificates and recheck tamper rejection"},
    };

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        try {
            switch (c.id) {
                case 1: criterion_sl2_golden(c); break;
                case 2: criterion_ball_mapping(c); break;
                case 3: criterion_word_round_trip(c); break;
                case 4: criterion_rank_targets(c); break;
                case 5: criterion_so5_end_to_end(c); break;
                case 6: criterion_negative_control(c); break;
                case 7: criterion_scalar_plus_skew(c); break;
                case 8: criterion_determinism(c); break;
                default: c.require(false, "unknown criterion");
            }
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
                  << c.description;
        if (!c.detail.empty()) std::cout << " — " << c.detail;
        std::cout << "\n";
        if (!c.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
