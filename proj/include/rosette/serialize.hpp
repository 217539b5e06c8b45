#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rosette/boundary.hpp"
#include "rosette/verification.hpp"

namespace rosette {

inline constexpr int kSchemaVersion = 1;

nlohmann::json feature_report_json(const FeatureReport& rep, double beta_input,
                                   const BetaReduction& red);
nlohmann::json checks_json(const std::vector<Check>& checks);
nlohmann::json verification_report_json(const VerificationReport& rep, double beta_input,
                                        const BetaReduction& red, const std::string& level);
nlohmann::json decomposition_json(const DecompositionResult& res);

// RFC 4180: CRLF line endings, fields quoted when they contain separators or quotes
std::string csv_field(const std::string& s);
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);
std::string format_number(double v);

void write_feature_csv(std::ostream& os, const FeatureReport& rep);
void write_boundary_csv(std::ostream& os, const RosetteParams& p, int count);
void write_radial_csv(std::ostream& os, const RosetteParams& p, int count);

} // namespace rosette
