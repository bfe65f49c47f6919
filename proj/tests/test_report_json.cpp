#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hypergon/errors.hpp"
#include "hypergon/lemma_verifier.hpp"
#include "hypergon/report_json.hpp"

namespace hypergon {
namespace {

TEST(ReportJson, SchemaFields) {
    const auto j = report_to_json(verify_lemma_6_3());
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("lemma_id"), "L6_3");
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_TRUE(j.at("params").is_object());
    EXPECT_TRUE(j.at("witness").contains("x0"));
}

TEST(ReportJson, RoundTripVerifiers) {
    for (const auto& r : {verify_lemma_6_3(), verify_prop_4_1(8, 64), verify_angle_balance(3, 10, 5),
                          verify_lemma_4_2(16, 16)}) {
        EXPECT_EQ(report_from_json(nlohmann::json::parse(report_to_json(r).dump())), r);
    }
}

TEST(ReportJson, RoundTripRandomReports) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    const double specials[] = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::denorm_min(), 0.0, -0.0, 1e-300};
    for (int trial = 0; trial < 300; ++trial) {
        VerificationReport r;
        r.lemma_id = static_cast<LemmaId>(trial % 14);
        r.worst_margin = trial % 7 == 0 ? specials[trial % 6] : u(rng);
        r.tolerance = trial % 2 ? 1e-9 : 0.0;
        for (int i = 0; i < trial % 5; ++i) {
            r.params["p" + std::to_string(i)] = u(rng) / 3.0;
            r.witness["w" + std::to_string(i)] = std::exp(u(rng) / 1e5);
        }
        r.notes = "note " + std::to_string(trial);
        settle(r);
        const auto text = report_to_json(r).dump();
        const auto back = report_from_json(nlohmann::json::parse(text));
        EXPECT_EQ(back, r) << text;
    }
}

TEST(ReportJson, NaNEncodedAsString) {
    VerificationReport r;
    r.worst_margin = std::numeric_limits<double>::quiet_NaN();
    const auto j = report_to_json(r);
    EXPECT_EQ(j.at("worst_margin"), "nan");
    EXPECT_TRUE(std::isnan(report_from_json(j).worst_margin));
}

TEST(ReportJson, RejectsMalformed) {
    auto j = report_to_json(verify_prop_4_1(8, 32));
    auto bad_id = j;
    bad_id["lemma_id"] = "L9_9";
    EXPECT_THROW(report_from_json(bad_id), ParameterError);
    auto missing = j;
    missing.erase("worst_margin");
    EXPECT_THROW(report_from_json(missing), ParameterError);
    auto schema = j;
    schema["schema"] = 2;
    EXPECT_THROW(report_from_json(schema), ParameterError);
    EXPECT_THROW(report_from_json(nlohmann::json::array()), ParameterError);
}

TEST(ReportJson, LemmaIdNames) {
    for (int i = 0; i < 14; ++i) {
        const auto id = static_cast<LemmaId>(i);
        EXPECT_EQ(lemma_id_from_string(to_string(id)), id);
    }
    EXPECT_FALSE(lemma_id_from_string("nope").has_value());
}

TEST(FormatNumber, SeventeenDigits) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(19.954630692703454), "19.954630692703454");
    EXPECT_EQ(std::stod(format_number(M_PI)), M_PI);
    EXPECT_EQ(format_number(1234567.0), "1234567");
}

TEST(RootJson, Fields) {
    const auto j = root_to_json(phi_tilde_root());
    EXPECT_NEAR(j.at("root").get<double>(), 9.34, 0.01);
    EXPECT_EQ(j.at("bracket_lo"), 9.0);
}

}  // namespace
}  // namespace hypergon
