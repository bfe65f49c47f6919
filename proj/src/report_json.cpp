#include "hypergon/report_json.hpp"

#include <cmath>
#include <limits>
#include <locale>
#include <sstream>

#include "hypergon/errors.hpp"

namespace hypergon {

nlohmann::json encode_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

double decode_number(const nlohmann::json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw ParameterError("report: expected a number, got " + j.dump());
}

namespace {

nlohmann::json encode_map(const std::map<std::string, double>& values) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : values) {
        out[key] = encode_number(value);
    }
    return out;
}

std::map<std::string, double> decode_map(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ParameterError("report: expected an object");
    }
    std::map<std::string, double> out;
    for (const auto& [key, value] : j.items()) {
        out[key] = decode_number(value);
    }
    return out;
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
    return nlohmann::json{
        {"schema", kReportSchema},
        {"lemma_id", to_string(report.lemma_id)},
        {"params", encode_map(report.params)},
        {"passed", report.passed},
        {"worst_margin", encode_number(report.worst_margin)},
        {"tolerance", encode_number(report.tolerance)},
        {"witness", encode_map(report.witness)},
        {"notes", report.notes},
    };
}

VerificationReport report_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema").get<int>() != kReportSchema) {
            throw ParameterError("report: unsupported schema version");
        }
        const auto id = lemma_id_from_string(j.at("lemma_id").get<std::string>());
        if (!id) {
            throw ParameterError("report: unknown lemma id");
        }
        VerificationReport r;
        r.lemma_id = *id;
        r.params = decode_map(j.at("params"));
        r.passed = j.at("passed").get<bool>();
        r.worst_margin = decode_number(j.at("worst_margin"));
        r.tolerance = decode_number(j.at("tolerance"));
        r.witness = decode_map(j.at("witness"));
        r.notes = j.at("notes").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("report: ") + e.what());
    }
}

nlohmann::json root_to_json(const RootResult& root) {
    return nlohmann::json{
        {"bracket_lo", root.bracket_lo}, {"bracket_hi", root.bracket_hi}, {"root", root.root},
        {"residual", root.residual},     {"iterations", root.iterations},
    };
}

std::string format_number(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace hypergon
