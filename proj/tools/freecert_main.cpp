// freecert: construct and certify free subgroups of SL(n), SO(2k+1) and G2
// over the field of rational Laurent polynomials, exactly.
//
// Exit codes: 0 success, 1 malformed input, 2 hypothesis violation (or
// search exhausted / trace failure), 3 certificate integrity failure.
#include <CLI11.hpp>

#include <iostream>

#include "freecert/json_io.hpp"
#include "freecert/util.hpp"
#include "freecert/word_parser.hpp"

namespace fc = freecert;

namespace {

constexpr const char* kToolVersion = "freecert 1.0.0";
constexpr std::uint64_t kDefaultSeed = 1;

fc::GroupSpec parse_group_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return fc::group_from_json(fc::Json::parse(arg));
    return fc::group_from_json(fc::load_json_file(arg));
}

std::vector<fc::Element> load_gammas(const std::string& path, const fc::GroupSpec& spec) {
    fc::Json j = fc::load_json_file(path);
    const fc::Json* list = nullptr;
    if (j.is_array()) {
        list = &j;
    } else if (j.is_object() && j.contains("gammas")) {
        if (j.contains("group") && fc::group_from_json(j["group"]) != spec)
            throw fc::Error("group in '" + path + "' does not match --group");
        list = &j["gammas"];
    } else {
        throw fc::Error("'" + path + "' must be an array of matrices or {\"gammas\": [...]}");
    }
    std::vector<fc::Element> gammas;
    for (const auto& m : *list) gammas.push_back(fc::make_element(spec, fc::matrix_from_json(m)));
    if (gammas.empty()) throw fc::Error("'" + path + "' contains no matrices");
    return gammas;
}

fc::Cocharacter parse_exponents(const std::string& text, const fc::GroupSpec& spec) {
    if (text.empty()) return fc::default_cocharacter(spec);
    fc::Cocharacter c;
    std::size_t at = 0;
    while (at <= text.size()) {
        std::size_t comma = text.find(',', at);
        std::string item = text.substr(at, comma == std::string::npos ? comma : comma - at);
        try {
            c.exponents.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw fc::Error("bad exponent '" + item + "' in --exponents");
        }
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return c;
}

std::map<std::string, std::string> make_metadata(std::uint64_t seed) {
    return {{"created", fc::iso8601_utc_now()},
            {"seed", std::to_string(seed)},
            {"tool", kToolVersion}};
}

struct CertifyArgs {
    std::string group, gammas_path, h_arg = "identity", exponents, out = "certificate.json";
    std::uint64_t seed = kDefaultSeed;
    int budget = 50;
};

int run_certify(const CertifyArgs& args, bool force_search) {
    fc::GroupSpec spec = parse_group_arg(args.group);
    std::vector<fc::Element> gammas = load_gammas(args.gammas_path, spec);
    fc::Cocharacter cocharacter = parse_exponents(args.exponents, spec);
    fc::validate_cocharacter(spec, cocharacter);

    fc::Certificate cert;
    if (force_search || args.h_arg == "search") {
        fc::HSearchOutcome outcome = fc::search_h(gammas, spec, args.budget, args.seed);
        if (!outcome.found) {
            fc::Json report{{"schema", "freecert.search-exhausted/1"},
                            {"budget", args.budget},
                            {"attempts", outcome.attempt_failures}};
            fc::write_json_file(args.out, report);
            std::cerr << "no h found within budget " << args.budget << "; report written to "
                      << args.out << "\n";
            return 2;
        }
        cert = std::move(*outcome.certificate);
        cert.exponents = cocharacter.exponents;
        std::cout << "h found on attempt " << outcome.attempts << "\n";
    } else {
        fc::Element h = args.h_arg == "identity"
                            ? fc::identity_element(spec)
                            : fc::make_element(spec, fc::matrix_from_json([&] {
                                  fc::Json j = fc::load_json_file(args.h_arg);
                                  return j.is_object() && j.contains("h") ? j["h"] : j;
                              }()));
        fc::CheckResult result = fc::certify(gammas, h, cocharacter);
        if (std::holds_alternative<fc::ViolationReport>(result)) {
            const auto& report = std::get<fc::ViolationReport>(result);
            fc::write_json_file(args.out, fc::violation_json(report));
            std::cerr << "non-incidence fails: " << report.describe() << "\nreport written to "
                      << args.out << "\n";
            return 2;
        }
        cert = std::get<fc::Certificate>(std::move(result));
    }
    cert.metadata = make_metadata(args.seed);
    fc::write_json_file(args.out, fc::certificate_json(cert));
    std::cout << "certificate written to " << args.out << ": " << cert.pairings.size()
              << " cross pairings, " << cert.self_pairings.size()
              << " self pairings, all nonzero; z = " << fc::rational_vector_json(cert.z).dump()
              << "\n";
    return 0;
}

int run_verify(const std::string& cert_path, std::size_t max_len, int jobs,
               const std::string& out, const std::string& update_path) {
    fc::Certificate cert = fc::certificate_from_json(fc::load_json_file(cert_path));
    fc::RecheckResult recheck = fc::recheck_certificate(cert);
    if (!recheck.ok) {
        std::cerr << "certificate integrity failure:\n";
        for (const auto& p : recheck.problems) std::cerr << "  - " << p << "\n";
        return 3;
    }
    fc::EtaFamily family = fc::eta_family_from_gl(cert.spec, cert.etas);
    fc::Cocharacter c{cert.exponents};
    fc::GeneratorSet gens = fc::make_generators(family, fc::build_tau(cert.spec, c),
                                                fc::build_tau_inverse(cert.spec, c));
    fc::ProjPointC z = fc::ProjPointC::canonical(cert.z);
    fc::VerifySummary summary = fc::verify_free_up_to(family, gens, z, max_len, jobs);
    std::cout << "traced " << summary.words << " reduced words of length <= " << max_len << ", "
              << summary.failures << " failure(s); " << summary.direct_eval_words
              << " words cross-checked by direct evaluation\n";
    if (!out.empty()) fc::write_json_file(out, fc::verify_summary_json(summary));
    if (!update_path.empty()) {
        fc::VerificationRecord record;
        record.max_len = summary.max_len;
        record.words = summary.words;
        record.failures = summary.failures;
        record.direct_eval_words = summary.direct_eval_words;
        record.all_ok = summary.all_ok;
        cert.verification = record;
        fc::write_json_file(update_path, fc::certificate_json(cert));
    }
    if (!summary.all_ok) {
        std::cerr << "FIRST FAILURE: word " << summary.first_failure->word.str() << " at position "
                  << summary.first_failure->position << ": " << summary.first_failure->what
                  << "\n";
        return 2;
    }
    return 0;
}

int run_recheck(const std::string& cert_path) {
    fc::Certificate cert = fc::certificate_from_json(fc::load_json_file(cert_path));
    fc::RecheckResult result = fc::recheck_certificate(cert);
    if (result.ok) {
        std::cout << "certificate integrity confirmed: " << cert.pairings.size()
                  << " cross pairings, " << cert.self_pairings.size() << " self pairings, "
                  << cert.z_pairings.size() << " z pairings re-derived and nonzero\n";
        return 0;
    }
    std::cerr << "certificate integrity failure:\n";
    for (const auto& p : result.problems) std::cerr << "  - " << p << "\n";
    return 3;
}

int run_word(const std::string& text, const std::string& group_arg,
             const std::string& constants_path, const std::string& assignment_path,
             const std::string& out) {
    fc::GroupSpec spec = parse_group_arg(group_arg);
    fc::WordEnv env{spec, {}};
    if (!constants_path.empty()) {
        fc::Json j = fc::load_json_file(constants_path);
        const fc::Json& table = j.is_object() && j.contains("constants") ? j["constants"] : j;
        if (!table.is_object())
            throw fc::Error("constants file must map names to matrices");
        for (const auto& [name, m] : table.items())
            env.constants.emplace(name, fc::make_element(spec, fc::matrix_from_json(m)));
    }

    fc::FreeProductWord word = fc::parse_word(text, env);
    fc::FreeProductWord normalized = word.normalized(spec);
    std::vector<fc::BasicWord> basics = normalized.decompose_basic(spec);

    std::cout << "reduced:    " << fc::format_word(word, env) << "\n";
    std::cout << "normalized: " << fc::format_word(normalized, env) << "\n";
    std::cout << "basic decomposition (" << basics.size() << " word(s)):\n";
    for (std::size_t i = 0; i < basics.size(); ++i)
        std::cout << "  [" << i + 1 << "] x" << basics[i].index
                  << (basics[i].sign > 0 ? "" : "^-1") << " conjugated by "
                  << fc::matrix_str(basics[i].coefficient.matrix) << "\n";

    fc::Json j{{"schema", "freecert.word/1"},
               {"group", fc::group_json(spec)},
               {"input", text},
               {"reduced", fc::format_word(word, env)},
               {"normalized", fc::format_word(normalized, env)}};
    fc::Json basics_json = fc::Json::array();
    for (const auto& b : basics)
        basics_json.push_back(fc::Json{{"index", b.index},
                                       {"sign", b.sign > 0 ? "+" : "-"},
                                       {"coefficient", fc::matrix_json(b.coefficient.matrix)}});
    j["basic_decomposition"] = std::move(basics_json);

    if (!assignment_path.empty()) {
        fc::Json a = fc::load_json_file(assignment_path);
        const fc::Json& list = a.is_object() && a.contains("assignment") ? a["assignment"] : a;
        if (!list.is_array()) throw fc::Error("assignment file must be an array of matrices");
        std::vector<fc::Element> assignment;
        for (const auto& m : list) assignment.push_back(fc::make_element(spec, fc::matrix_from_json(m)));
        fc::Element value = word.evaluate(assignment, spec);
        std::cout << "evaluation: " << fc::matrix_str(value.matrix) << "\n";
        j["evaluation"] = fc::matrix_json(value.matrix);
    }
    if (!out.empty()) fc::write_json_file(out, j);
    return 0;
}

int run_rank(const std::string& group_arg, int samples, std::uint64_t seed, int complexity,
             const std::string& out) {
    fc::GroupSpec spec = parse_group_arg(group_arg);
    fc::RankExperiment experiment;
    experiment.spec = spec;
    experiment.samples = samples > 0 ? samples : fc::default_rank_samples(spec);
    experiment.seed = seed;
    experiment.complexity = complexity;
    fc::RankReport report = fc::span_rank(experiment);
    std::cout << spec.name() << ": achieved rank " << report.achieved << ", target "
              << report.target << " (" << report.samples << " samples)\n";
    if (!out.empty()) fc::write_json_file(out, fc::rank_report_json(report, spec, seed));
    return report.achieved >= report.target ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ping-pong certificates for free subgroups over rational Laurent "
                 "polynomials"};
    app.require_subcommand(1);

    CertifyArgs certify_args;
    CLI::App* certify = app.add_subcommand("certify", "check non-incidence and emit a certificate");
    certify->set_help_flag("--help", "print help");  // frees --h for the conjugator flag
    certify->add_option("--group", certify_args.group, "group spec JSON (inline or a file path)")
        ->required();
    certify->add_option("--gammas", certify_args.gammas_path, "JSON file with the gamma matrices")
        ->required();
    certify->add_option("--h", certify_args.h_arg, "matrix file, 'identity', or 'search'");
    certify->add_option("--exponents", certify_args.exponents,
                        "comma-separated tau exponents (default per family)");
    certify->add_option("--seed", certify_args.seed, "seed for the h search");
    certify->add_option("--budget", certify_args.budget, "h-search attempt budget");
    certify->add_option("--out", certify_args.out, "output path");

    CertifyArgs search_args;
    CLI::App* search = app.add_subcommand("search-h", "search an h that makes non-incidence hold");
    search->add_option("--group", search_args.group, "group spec JSON (inline or a file path)")
        ->required();
    search->add_option("--gammas", search_args.gammas_path, "JSON file with the gamma matrices")
        ->required();
    search->add_option("--exponents", search_args.exponents,
                       "comma-separated tau exponents (default per family)");
    search->add_option("--seed", search_args.seed, "search seed");
    search->add_option("--budget", search_args.budget, "attempt budget");
    search->add_option("--out", search_args.out, "output path");

    std::string verify_cert;
    std::size_t verify_len = 6;
    int verify_jobs = 1;
    std::string verify_out, verify_update;
    CLI::App* verify = app.add_subcommand("verify", "trace every reduced word up to a length");
    verify->add_option("certificate", verify_cert, "certificate JSON path")->required();
    verify->add_option("--max-len", verify_len, "maximum word length");
    verify->add_option("--jobs", verify_jobs, "worker threads");
    verify->add_option("--out", verify_out, "write the summary JSON here");
    verify->add_option("--update-certificate", verify_update,
                       "write the certificate with the verification record embedded");

    std::string recheck_cert;
    CLI::App* recheck = app.add_subcommand("recheck", "re-derive every stored certificate scalar");
    recheck->add_option("certificate", recheck_cert, "certificate JSON path")->required();

    std::string word_text, word_group, word_constants, word_assignment, word_out;
    CLI::App* word = app.add_subcommand("word", "reduce, normalize, decompose and evaluate a word");
    word->add_option("expression", word_text, "word expression, e.g. \"g x1 g^-1\"")->required();
    word->add_option("--group", word_group, "group spec JSON (inline or a file path)")->required();
    word->add_option("--constants", word_constants, "JSON file mapping constant names to matrices");
    word->add_option("--assignment", word_assignment, "JSON array of matrices for x1, x2, ...");
    word->add_option("--out", word_out, "write the results JSON here");

    std::string rank_group, rank_out;
    int rank_samples = 0;
    int rank_complexity = 6;
    std::uint64_t rank_seed = kDefaultSeed;
    CLI::App* rank = app.add_subcommand("rank", "exact rank of the sampled conjugate span");
    rank->add_option("--group", rank_group, "group spec JSON (inline or a file path)")->required();
    rank->add_option("--samples", rank_samples, "sample count (default (dim V)^2 + 5)");
    rank->add_option("--seed", rank_seed, "sampling seed");
    rank->add_option("--complexity", rank_complexity, "random-element word length");
    rank->add_option("--out", rank_out, "write the rank report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (certify->parsed()) return run_certify(certify_args, false);
        if (search->parsed()) return run_certify(search_args, true);
        if (verify->parsed())
            return run_verify(verify_cert, verify_len, verify_jobs, verify_out, verify_update);
        if (recheck->parsed()) return run_recheck(recheck_cert);
        if (word->parsed())
            return run_word(word_text, word_group, word_constants, word_assignment, word_out);
        if (rank->parsed())
            return run_rank(rank_group, rank_samples, rank_seed, rank_complexity, rank_out);
    } catch (const fc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const fc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
