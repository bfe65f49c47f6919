#pragma once

// Command-line front end. Exit codes: 0 pass, 1 verification failure,
// 2 usage or domain error.

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypergon/partition_engine.hpp"
#include "hypergon/report.hpp"

namespace hypergon::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMinGrid = 16;
// Coarse lattice budget for the brute-force oracle inside certify.
inline constexpr double kOracleLatticeBudget = 2e6;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct GenusRange {
    int lo = 2;
    int hi = 2;
};

// "G" or "LO..HI"; throws UsageError on malformed text, lo < 2 or hi < lo.
GenusRange parse_genus_range(const std::string& text);

// "3,5" -> {3, 5}
Shape parse_shape(const std::string& text);

// "2:1.5,6:11" -> pieces (m, area)
Partition parse_pieces(const std::string& text);

// Seed from HYPERGON_SEED, or 0.
std::uint64_t default_seed();

// Overrides given on the verify command line, keyed by flag name without
// dashes (e.g. "t-lo"). Missing keys fall back to per-lemma defaults.
struct VerifyOptions {
    std::map<std::string, double> values;
    std::string pieces;
    std::uint64_t seed = 0;

    double real(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
};

VerificationReport run_verification(LemmaId id, const VerifyOptions& options);

struct CertifyOptions {
    GenusRange genus;
    int k_max = 3;
    int samples = 50;
    std::uint64_t seed = 0;
    int grid = 64;  // brute-force oracle grid, reduced to fit the lattice budget
};

struct ShapeOutcome {
    int genus = 2;
    Shape shape;
    int samples = 0;
    double worst_margin = 0.0;  // min over random splits of sum Perim - m_g
    double best_margin = 0.0;   // max over random splits
    double oracle_min = 0.0;
    int oracle_grid = 0;
    double oracle_margin = 0.0;  // oracle_min - m_g
    bool passed = false;
};

struct CertifySummary {
    CertifyOptions options;
    std::vector<ShapeOutcome> shapes;
    bool passed = false;
};

// Shapes are visited in canonical order (genus, k, lexicographic shape) with
// a single seeded sampler, so output is reproducible.
CertifySummary run_certify(const CertifyOptions& options);

nlohmann::json to_json(const CertifySummary& summary);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypergon::cli
