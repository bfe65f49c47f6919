#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hypergon/cli.hpp"
#include "hypergon/hyperbolic_core.hpp"

namespace hypergon::cli {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(CliParse, GenusRange) {
    EXPECT_EQ(parse_genus_range("3").lo, 3);
    EXPECT_EQ(parse_genus_range("2..4").hi, 4);
    EXPECT_THROW(parse_genus_range("4..2"), UsageError);
    EXPECT_THROW(parse_genus_range("1"), UsageError);
    EXPECT_THROW(parse_genus_range("x"), UsageError);
}

TEST(CliParse, ShapeAndPieces) {
    EXPECT_EQ(parse_shape("3,5"), (Shape{3, 5}));
    EXPECT_THROW(parse_shape("1,5"), UsageError);
    const auto p = parse_pieces("2:0.5,6:10");
    ASSERT_EQ(p.k(), 2);
    EXPECT_EQ(p.pieces[1].m, 6);
    EXPECT_DOUBLE_EQ(p.pieces[0].area, 0.5);
    EXPECT_THROW(parse_pieces("2-0.5"), UsageError);
}

TEST(CliMg, Table) {
    const auto r = invoke({"mg", "--genus", "2..4", "--format", "csv"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out.rfind("g,N,mg,half_mg\n2,12,19.9546", 0), 0u) << r.out;
    const auto j = nlohmann::json::parse(invoke({"mg", "--genus", "2..4"}).out);
    ASSERT_EQ(j.at("rows").size(), 3u);
    EXPECT_LT(j["rows"][0]["mg"].get<double>(), j["rows"][1]["mg"].get<double>());
    EXPECT_EQ(invoke({"mg", "--genus", "4..2"}).code, kExitUsage);
}

TEST(CliVerify, ExitCodes) {
    const auto ok = invoke({"verify", "L6_3"});
    EXPECT_EQ(ok.code, kExitPass);
    EXPECT_NEAR(nlohmann::json::parse(ok.out)["witness"]["x0"].get<double>(), 9.34, 0.01);
    EXPECT_EQ(invoke({"verify", "P4_1", "--n", "8"}).code, kExitPass);
    EXPECT_EQ(invoke({"verify", "L4_2", "--grid-x", "8"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "L9_9"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "P4_1", "--n", "-3"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "P4_1", "--n", "2.5"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "L7_1", "--c", "0.5"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "MAIN_THEOREM"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "MAIN_THEOREM", "--pieces", "2:1,4:11.566"}).code, kExitUsage);
}

TEST(CliVerify, MainTheoremAndFailure) {
    EXPECT_EQ(invoke({"verify", "MAIN_THEOREM", "--pieces", "3:6.283185307179586,5:6.283185307179586"}).code,
              kExitPass);
    // Past the tangency root the octagon dips below its chord.
    EXPECT_EQ(invoke({"verify", "L6_2_phi", "--a", "12"}).code, kExitFail);
    EXPECT_EQ(invoke({"verify", "L6_3", "--tol", "0"}).code, kExitUsage);
}

TEST(CliVerify, CsvAndOutFile) {
    const auto r = invoke({"verify", "P4_1", "--format", "csv"});
    EXPECT_NE(r.out.find("lemma_id,P4_1\n"), std::string::npos);
    EXPECT_NE(r.out.find("passed,true\n"), std::string::npos);
    const std::string path = ::testing::TempDir() + "hypergon_cli_report.json";
    EXPECT_EQ(invoke({"verify", "L6_3", "--out", path}).code, kExitPass);
    std::ifstream in(path);
    EXPECT_EQ(nlohmann::json::parse(in)["lemma_id"], "L6_3");
}

TEST(CliVerify, SeedReproducible) {
    const auto a = invoke({"verify", "ANGLE_BALANCE", "--seed", "7"});
    const auto b = invoke({"verify", "ANGLE_BALANCE", "--seed", "7"});
    EXPECT_EQ(a.code, kExitPass);
    EXPECT_EQ(a.out, b.out);
    const auto c = invoke({"verify", "ANGLE_BALANCE", "--seed", "8"});
    EXPECT_NE(a.out, c.out);
}

TEST(CliCertify, GenusTwo) {
    const auto r = invoke({"certify", "--genus", "2", "--k-max", "3", "--samples", "50"});
    EXPECT_EQ(r.code, kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["shapes"].size(), 8u);
    for (const auto& s : j["shapes"]) {
        EXPECT_GE(s["worst_margin"].get<double>(), -1e-9);
    }
}

TEST(CliCertify, SingleShapeEquality) {
    const auto j = nlohmann::json::parse(invoke({"certify", "--genus", "2", "--k-max", "1"}).out);
    ASSERT_EQ(j["shapes"].size(), 1u);
    EXPECT_EQ(j["shapes"][0]["shape"], nlohmann::json::array({6}));
    EXPECT_NEAR(j["shapes"][0]["worst_margin"].get<double>(), 0.0, 1e-9);
}

TEST(CliCertify, Errors) {
    EXPECT_EQ(invoke({"certify", "--genus", "2", "--k-max", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"certify", "--genus", "1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"certify", "--samples", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"certify", "--genus", "4", "--k-max", "2", "--samples", "20"}).code, kExitPass);
}

TEST(CliPlotdata, PhiWithChord) {
    const auto r = invoke({"plotdata", "phi", "--range", "0:18", "--points", "200", "--chord", "6"});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "x,f,chord");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        double x, f, c;
        char comma;
        std::istringstream row(line);
        row >> x >> comma >> f >> comma >> c;
        if (x > 0.0 && x < 6.0) {
            EXPECT_GT(f, c) << x;
        }
    }
    EXPECT_EQ(rows, 200);
}

TEST(CliPlotdata, PhiTildeSignChange) {
    const auto r = invoke({"plotdata", "phi_tilde", "--range", "8:11", "--points", "31", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    bool neg_at_9 = false, pos_at_10 = false;
    for (const auto& row : j["rows"]) {
        const double x = row[0], y = row[1];
        if (std::abs(x - 9.0) < 1e-9) neg_at_9 = y < 0;
        if (std::abs(x - 10.0) < 1e-9) pos_at_10 = y > 0;
    }
    EXPECT_TRUE(neg_at_9);
    EXPECT_TRUE(pos_at_10);
}

TEST(CliPlotdata, Errors) {
    EXPECT_EQ(invoke({"plotdata", "nope"}).code, kExitUsage);
    EXPECT_EQ(invoke({"plotdata", "g_n", "--chord", "3"}).code, kExitUsage);
    EXPECT_EQ(invoke({"plotdata", "phi", "--range", "5:1"}).code, kExitUsage);
    for (const char* id : {"phi", "phi_tilde", "g_n", "p_t", "H_x", "psi", "f_2m"}) {
        EXPECT_EQ(invoke({"plotdata", id, "--points", "10"}).code, kExitPass) << id;
    }
}

TEST(CliMinimize, GenusTwo) {
    const auto r = invoke({"minimize", "--shape", "2,6", "--genus", "2", "--grid", "64"});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["min_value"].get<double>(), mg(2), 1e-12);
    EXPECT_EQ(invoke({"minimize", "--shape", "2,6"}).code, kExitUsage);
}

TEST(CliUsage, MissingSubcommand) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, kExitPass);
}

TEST(CliSeed, Environment) {
    ::setenv("HYPERGON_SEED", "17", 1);
    EXPECT_EQ(default_seed(), 17u);
    ::setenv("HYPERGON_SEED", "abc", 1);
    EXPECT_THROW(default_seed(), UsageError);
    ::unsetenv("HYPERGON_SEED");
    EXPECT_EQ(default_seed(), 0u);
}

}  // namespace
}  // namespace hypergon::cli
