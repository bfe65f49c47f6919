#pragma once

#include <string>

#include <json.hpp>

#include "hypergon/analysis_kit.hpp"
#include "hypergon/report.hpp"

namespace hypergon {

inline constexpr int kReportSchema = 1;

// Flat report object: schema, lemma_id, params, passed, worst_margin,
// tolerance, witness, notes. Non-finite numbers are written as the strings
// "inf", "-inf" and "nan".
nlohmann::json report_to_json(const VerificationReport& report);

// Throws ParameterError on a malformed object or unknown lemma id.
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json root_to_json(const RootResult& root);

nlohmann::json encode_number(double v);
double decode_number(const nlohmann::json& j);

// 17 significant digits, '.' decimal point, no grouping.
std::string format_number(double v);

}  // namespace hypergon
