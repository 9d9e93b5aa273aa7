#pragma once

#include <json.hpp>

#include "freecert/certifier.hpp"
#include "freecert/span_checks.hpp"

namespace freecert {

using Json = nlohmann::json;

// Scalars. Rationals travel as "p/q" strings; Laurent polynomials as
// objects mapping exponent strings to rational strings, e.g.
// {"-1":"1","2":"3/2"}; matrices as row-major arrays of arrays.
Json rational_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json laurent_json(const LaurentPoly& value);
LaurentPoly laurent_from_json(const Json& j);

Json matrix_json(const MatQ& m);
MatQ matrix_from_json(const Json& j);

Json group_json(const GroupSpec& spec);
GroupSpec group_from_json(const Json& j);

Json rational_vector_json(const std::vector<Rational>& v);
std::vector<Rational> rational_vector_from_json(const Json& j);

Json laurent_point_json(const ProjPointL& p);
/// Ingest re-normalizes, so any nonzero tuple is accepted.
ProjPointL laurent_point_from_json(const Json& j);

Json certificate_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json violation_json(const ViolationReport& report);

Json verify_summary_json(const VerifySummary& summary);

Json rank_report_json(const RankReport& report, const GroupSpec& spec, std::uint64_t seed);

/// Parses a file, mapping I/O and JSON syntax errors to freecert::Error
/// with the path in the message.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace freecert
