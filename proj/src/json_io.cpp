#include "freecert/json_io.hpp"

#include <fstream>

#include "freecert/util.hpp"

namespace freecert {

namespace {

std::string sign_str(int sign) { return sign > 0 ? "+" : "-"; }

int sign_from_json(const Json& j) {
    std::string s = j.get<std::string>();
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw Error("bad sign '" + s + "', want \"+\" or \"-\"");
}

}  // namespace

Json rational_json(const Rational& value) { return rational_to_string(value); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error("rational must be a string like \"3/2\"");
    return rational_from_string(j.get<std::string>());
}

Json laurent_json(const LaurentPoly& value) {
    Json j = Json::object();
    for (const auto& [e, c] : value.terms()) j[std::to_string(e)] = rational_to_string(c);
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object()) throw Error("Laurent polynomial must be an object of exponent:coefficient");
    LaurentPoly out;
    for (const auto& [key, value] : j.items()) {
        long exponent = 0;
        try {
            exponent = std::stol(key);
        } catch (const std::exception&) {
            throw Error("bad exponent key '" + key + "'");
        }
        out += LaurentPoly::monomial(exponent, rational_from_json(value));
    }
    return out;
}

Json matrix_json(const MatQ& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatQ matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix must be a nonempty array of rows");
    const int dim = static_cast<int>(j.size());
    MatQ m(dim);
    for (int r = 0; r < dim; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
            throw Error("matrix row " + std::to_string(r) + " must have " + std::to_string(dim) +
                        " entries");
        for (int c = 0; c < dim; ++c) m.at(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

Json group_json(const GroupSpec& spec) {
    Json j = Json::object();
    switch (spec.family) {
        case Family::SL:
            j["family"] = "SL";
            j["n"] = spec.param;
            break;
        case Family::SO:
            j["family"] = "SO";
            j["k"] = spec.param;
            break;
        case Family::G2:
            j["family"] = "G2";
            break;
    }
    return j;
}

GroupSpec group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw Error("group spec must be an object with a \"family\"");
    std::string family = j["family"].get<std::string>();
    if (family == "SL") {
        if (!j.contains("n")) throw Error("SL spec needs \"n\"");
        return GroupSpec::SL(j["n"].get<int>());
    }
    if (family == "SO") {
        if (!j.contains("k")) throw Error("SO spec needs \"k\"");
        return GroupSpec::SO(j["k"].get<int>());
    }
    if (family == "G2") return GroupSpec::G2();
    throw Error("unknown family '" + family + "'");
}

Json rational_vector_json(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& c : v) j.push_back(rational_to_string(c));
    return j;
}

std::vector<Rational> rational_vector_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& c : j) out.push_back(rational_from_json(c));
    return out;
}

Json laurent_point_json(const ProjPointL& p) {
    Json j = Json::array();
    for (const auto& c : p.coords()) j.push_back(laurent_json(c));
    return j;
}

ProjPointL laurent_point_from_json(const Json& j) {
    if (!j.is_array()) throw Error("projective point must be an array of Laurent polynomials");
    std::vector<LaurentPoly> coords;
    coords.reserve(j.size());
    for (const auto& c : j) coords.push_back(laurent_from_json(c));
    return ProjPointL::normalize(std::move(coords));
}

Json certificate_json(const Certificate& cert) {
    Json j;
    j["schema"] = "freecert.certificate/" + std::to_string(cert.schema_version);
    j["group"] = group_json(cert.spec);
    j["exponents"] = cert.exponents;
    j["h"] = matrix_json(cert.h);
    Json etas = Json::array();
    for (const auto& m : cert.etas) etas.push_back(matrix_json(m));
    j["etas"] = std::move(etas);

    Json pairings = Json::array();
    for (const auto& p : cert.pairings)
        pairings.push_back(Json{{"i", p.i},
                                {"j", p.j},
                                {"sign_i", sign_str(p.sign_i)},
                                {"sign_j", sign_str(p.sign_j)},
                                {"value", rational_to_string(p.value)}});
    j["pairings"] = std::move(pairings);

    Json selfs = Json::array();
    for (const auto& s : cert.self_pairings)
        selfs.push_back(Json{{"i", s.i},
                             {"sign", sign_str(s.sign)},
                             {"value", rational_to_string(s.value)}});
    j["self_pairings"] = std::move(selfs);

    j["z"] = rational_vector_json(cert.z);
    Json zp = Json::array();
    for (const auto& p : cert.z_pairings)
        zp.push_back(Json{{"i", p.i},
                          {"sign", sign_str(p.sign)},
                          {"value", rational_to_string(p.value)}});
    j["z_pairings"] = std::move(zp);

    if (cert.verification) {
        const auto& v = *cert.verification;
        j["verification"] = Json{{"max_len", v.max_len},
                                 {"words", v.words},
                                 {"failures", v.failures},
                                 {"direct_eval_words", v.direct_eval_words},
                                 {"all_ok", v.all_ok}};
    } else {
        j["verification"] = nullptr;
    }
    j["metadata"] = cert.metadata;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw Error("certificate must be a JSON object");
    for (const char* key : {"schema", "group", "exponents", "h", "etas", "pairings",
                            "self_pairings", "z", "z_pairings"})
        if (!j.contains(key)) throw Error(std::string("certificate is missing \"") + key + "\"");
    std::string schema = j["schema"].get<std::string>();
    if (schema.rfind("freecert.certificate/", 0) != 0)
        throw Error("unrecognized certificate schema '" + schema + "'");

    Certificate cert;
    cert.schema_version = std::stoi(schema.substr(schema.rfind('/') + 1));
    cert.spec = group_from_json(j["group"]);
    cert.exponents = j["exponents"].get<std::vector<long>>();
    cert.h = matrix_from_json(j["h"]);
    for (const auto& m : j["etas"]) cert.etas.push_back(matrix_from_json(m));
    for (const auto& p : j["pairings"])
        cert.pairings.push_back(PairingEntry{p.at("i").get<int>(), p.at("j").get<int>(),
                                             sign_from_json(p.at("sign_i")),
                                             sign_from_json(p.at("sign_j")),
                                             rational_from_json(p.at("value"))});
    for (const auto& s : j["self_pairings"])
        cert.self_pairings.push_back(SelfPairing{s.at("i").get<int>(),
                                                 sign_from_json(s.at("sign")),
                                                 rational_from_json(s.at("value"))});
    cert.z = rational_vector_from_json(j["z"]);
    for (const auto& p : j["z_pairings"])
        cert.z_pairings.push_back(ZPairing{p.at("i").get<int>(), sign_from_json(p.at("sign")),
                                           rational_from_json(p.at("value"))});
    if (j.contains("verification") && !j["verification"].is_null()) {
        const Json& v = j["verification"];
        VerificationRecord record;
        record.max_len = v.at("max_len").get<std::size_t>();
        record.words = v.at("words").get<unsigned long long>();
        record.failures = v.at("failures").get<unsigned long long>();
        record.direct_eval_words = v.at("direct_eval_words").get<unsigned long long>();
        record.all_ok = v.at("all_ok").get<bool>();
        cert.verification = record;
    }
    if (j.contains("metadata") && j["metadata"].is_object())
        cert.metadata = j["metadata"].get<std::map<std::string, std::string>>();
    return cert;
}

Json violation_json(const ViolationReport& report) {
    Json vanishing = Json::array();
    for (const auto& p : report.vanishing)
        vanishing.push_back(Json{{"i", p.i},
                                 {"j", p.j},
                                 {"sign_i", sign_str(p.sign_i)},
                                 {"sign_j", sign_str(p.sign_j)}});
    return Json{{"schema", "freecert.violation/1"}, {"vanishing", std::move(vanishing)}};
}

Json verify_summary_json(const VerifySummary& summary) {
    Json j{{"schema", "freecert.verify/1"},
           {"max_len", summary.max_len},
           {"words", summary.words},
           {"failures", summary.failures},
           {"direct_eval_words", summary.direct_eval_words},
           {"all_ok", summary.all_ok}};
    if (summary.first_failure)
        j["first_failure"] = Json{{"word", summary.first_failure->word.str()},
                                  {"position", summary.first_failure->position},
                                  {"what", summary.first_failure->what}};
    else
        j["first_failure"] = nullptr;
    return j;
}

Json rank_report_json(const RankReport& report, const GroupSpec& spec, std::uint64_t seed) {
    return Json{{"schema", "freecert.rank/1"},
                {"group", group_json(spec)},
                {"samples", report.samples},
                {"seed", std::to_string(seed)},
                {"target", report.target},
                {"achieved", report.achieved},
                {"samples_digest", report.samples_digest},
                {"passed", report.achieved >= report.target}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error("cannot parse '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace freecert
