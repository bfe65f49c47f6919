#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace hypergon {

enum class LemmaId {
    L4_2,
    L4_3,
    P4_1,
    C4_4,
    L5_1,
    T5_2_instance,
    L5_3,
    P6_1,
    L6_2_phi,
    L6_3,
    L7_1,
    PSI_ENDPOINTS,
    ANGLE_BALANCE,
    MAIN_THEOREM,
};

std::string to_string(LemmaId id);
std::optional<LemmaId> lemma_id_from_string(std::string_view name);

// Outcome of one check. Margins are oriented so that positive means the
// property holds; passed <=> worst_margin > -tolerance. Grid certificates
// use tolerance 0, comparisons of computed perimeters use 1e-9.
struct VerificationReport {
    LemmaId lemma_id = LemmaId::L4_2;
    std::map<std::string, double> params;
    bool passed = false;
    double worst_margin = 0.0;
    double tolerance = 0.0;
    std::map<std::string, double> witness;
    std::string notes;

    bool operator==(const VerificationReport&) const = default;
};

// Sets passed from worst_margin and tolerance.
inline void settle(VerificationReport& report) { report.passed = report.worst_margin > -report.tolerance; }

}  // namespace hypergon
