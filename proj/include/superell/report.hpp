#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "superell/criteria.hpp"
#include "superell/curve.hpp"
#include "superell/engine.hpp"
#include "superell/galois.hpp"
#include "superell/meataxe.hpp"

namespace superell {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Big integers are serialized as decimal strings throughout.
Json to_json(const GaloisCertificate& cert);
Json to_json(const CriteriaVerdict& v);
Json to_json(const SimplicityVerdict& v);
Json to_json(const DifferentialBasis& basis);
Json to_json(const MultiplicityProfile& profile);
Json to_json(const CurveReport& report);
Json to_json(const EndoVerdict& v);

// The fixed top-level report envelope:
// {input, p, n, genus, galois, module, curve, conclusions, warnings,
//  schema_version}. Sections a subcommand does not compute are null.
struct ReportSections {
  Json input;
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::optional<std::size_t> genus;
  std::optional<Json> galois;
  std::optional<Json> module;
  std::optional<Json> curve;
  std::optional<Json> conclusions;
  std::vector<std::string> warnings;
};

Json assemble_report(const ReportSections& sections);

// The published JSON schema for the report (also shipped as a file).
const std::string& report_schema_text();

}  // namespace superell
