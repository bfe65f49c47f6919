#include "hypergon/report.hpp"

#include <array>
#include <utility>

namespace hypergon {
namespace {

constexpr std::array<std::pair<LemmaId, std::string_view>, 14> kNames{{
    {LemmaId::L4_2, "L4_2"},
    {LemmaId::L4_3, "L4_3"},
    {LemmaId::P4_1, "P4_1"},
    {LemmaId::C4_4, "C4_4"},
    {LemmaId::L5_1, "L5_1"},
    {LemmaId::T5_2_instance, "T5_2_instance"},
    {LemmaId::L5_3, "L5_3"},
    {LemmaId::P6_1, "P6_1"},
    {LemmaId::L6_2_phi, "L6_2_phi"},
    {LemmaId::L6_3, "L6_3"},
    {LemmaId::L7_1, "L7_1"},
    {LemmaId::PSI_ENDPOINTS, "PSI_ENDPOINTS"},
    {LemmaId::ANGLE_BALANCE, "ANGLE_BALANCE"},
    {LemmaId::MAIN_THEOREM, "MAIN_THEOREM"},
}};

}  // namespace

std::string to_string(LemmaId id) {
    for (const auto& [value, name] : kNames) {
        if (value == id) {
            return std::string(name);
        }
    }
    return "UNKNOWN";
}

std::optional<LemmaId> lemma_id_from_string(std::string_view name) {
    for (const auto& [value, label] : kNames) {
        if (label == name) {
            return value;
        }
    }
    return std::nullopt;
}

}  // namespace hypergon
