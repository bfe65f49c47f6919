#pragma once

// Filling-pair combinatorics and the merging induction that reduces the
// many-piece perimeter inequality to repeated two-piece merges.

#include <cstdint>
#include <random>
#include <vector>

#include "hypergon/report.hpp"

namespace hypergon {

// Slack on every >= comparison between computed perimeters or angles.
inline constexpr double kComparisonSlack = 1e-9;

// One complementary region: a regular hyperbolic 2m-gon.
struct Piece {
    int m = 2;
    double area = 0.0;

    int sides() const noexcept { return 2 * m; }
    bool operator==(const Piece&) const = default;
};

struct Partition {
    std::vector<Piece> pieces;

    int k() const noexcept { return static_cast<int>(pieces.size()); }
    int side_sum() const noexcept;       // sum m_i
    int merged_sides() const noexcept;   // 4(1-k) + 2 sum m_i
    double total_area() const noexcept;

    // Throws ParameterError/DomainError unless every m_i >= 2,
    // 0 <= a_i < (2m_i - 2)pi, k >= 1 and merged_sides() >= 3.
    void validate() const;

    bool operator==(const Partition&) const = default;
};

using Shape = std::vector<int>;

struct FillingCombinatorics {
    int genus = 2;
    int faces = 1;
    int vertices = 0;  // 2g + k - 2, the intersection number
    int edges = 0;     // 4g + 2k - 4
    int side_sum = 0;  // sum m_i = 4g + 2k - 4

    static FillingCombinatorics make(int g, int k);
};

// All non-decreasing tuples m_1 <= ... <= m_k with m_i >= 2 and
// sum m_i = 4g + 2k - 4, in lexicographic order.
std::vector<Shape> enumerate_partition_shapes(int g, int k);

struct MergeStep {
    int j = 1;               // 1-based position in angle order
    std::size_t piece = 0;   // index into the input partition
    int m_tilde = 2;         // merged polygon is a 2*m_tilde-gon
    double area_tilde = 0.0;
    double theta_tilde = 0.0;
    double perim_tilde = 0.0;
    double piece_perim = 0.0;
    // Perim(P_j) + Perim(P~_{j-1}) - Perim(P~_j); 0 for j = 1.
    double step_margin = 0.0;
};

struct MergeTrace {
    std::vector<MergeStep> steps;
    bool final_is_Pg = false;
    int genus = 0;  // genus of the final polygon when final_is_Pg

    double min_theta() const;
    double min_step_margin() const;
    // Sum of step margins; telescopes to sum Perim(P_i) - Perim(P~_k).
    double telescoped_margin() const;
};

// Sorts pieces by interior angle (descending; ties: larger m, then input
// order) and merges them one at a time. Throws HypothesisError if the final
// polygon is acute and StepAngleViolationError if an intermediate merged
// polygon's angle drops below pi/2 - kComparisonSlack.
MergeTrace merge_induction(const Partition& partition);

// sum Perim(P_{2m_i}(a_i)) against the regular N-gon of the same total area,
// N = 4(1-k) + 2 sum m_i. Throws HypothesisError if that N-gon is acute.
VerificationReport verify_main_theorem(const Partition& partition);

struct MinimizeResult {
    double min_value = 0.0;
    std::vector<double> argmin;
    int grid = 0;
    long evaluations = 0;
};

// Grid search for min sum Perim(P_{2m_i}(a_i)) over the simplex
// sum a_i = total_area, 0 <= a_i < (2m_i - 2)pi, followed by one pass of
// pairwise area transfers on a lattice 8x finer around the incumbent.
MinimizeResult brute_force_min(const Shape& shape, double total_area, int grid);

// Number of coarse lattice points brute_force_min visits.
double simplex_lattice_size(std::size_t pieces, int grid);

// mg(g)/2.
double systole_lower_bound(int g);

// Seeded sampling used for randomized area splits. Built on mt19937_64 with
// explicit transforms so sequences are reproducible across platforms.
class SplitSampler {
public:
    explicit SplitSampler(std::uint64_t seed) : engine_(seed) {}

    double uniform();                        // [0, 1)
    double exponential();                    // rate 1
    int uniform_int(int lo, int hi);         // inclusive
    std::vector<double> simplex(double total, std::size_t parts);

    // Uniform split of total over the shape's simplex, resampled until every
    // piece satisfies a_i < (2m_i - 2)pi. Throws ParameterError after
    // max_tries rejections.
    Partition split(const Shape& shape, double total, int max_tries = 100000);

private:
    std::mt19937_64 engine_;
};

// Random shape from enumerate_partition_shapes(g, k) with a random split of
// 4pi(g-1).
Partition random_genus_partition(int g, int k, SplitSampler& sampler);

}  // namespace hypergon
