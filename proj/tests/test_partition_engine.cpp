#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "hypergon/errors.hpp"
#include "hypergon/hyperbolic_core.hpp"
#include "hypergon/partition_engine.hpp"
#include "oracles/oracles.hpp"

namespace hypergon {
namespace {

TEST(Partition, Counts) {
    Partition p{{{3, 1.0}, {5, 2.0}}};
    EXPECT_EQ(p.k(), 2);
    EXPECT_EQ(p.side_sum(), 8);
    EXPECT_EQ(p.merged_sides(), 12);
    EXPECT_DOUBLE_EQ(p.total_area(), 3.0);
    EXPECT_NO_THROW(p.validate());
}

TEST(Partition, ValidateRejects) {
    EXPECT_THROW((Partition{{{1, 0.0}}}.validate()), ParameterError);
    EXPECT_THROW((Partition{{{2, 2.0 * kPi}}}.validate()), DomainError);
    EXPECT_THROW((Partition{{{3, -1.0}}}.validate()), DomainError);
    EXPECT_THROW(Partition{}.validate(), ParameterError);
    // Quadrilateral pieces alone always merge to 4 sides.
    EXPECT_EQ((Partition{{{2, 0.0}, {2, 0.0}, {2, 0.0}}}.merged_sides()), 4);
}

TEST(FillingCombinatorics, EulerCharacteristic) {
    for (int g = 2; g <= 6; ++g) {
        for (int k = 1; k <= 5; ++k) {
            const auto f = FillingCombinatorics::make(g, k);
            EXPECT_EQ(f.vertices - f.edges + f.faces, 2 - 2 * g);
            EXPECT_EQ(f.side_sum, 4 * g + 2 * k - 4);
            EXPECT_EQ(4 * (1 - k) + 2 * f.side_sum, 8 * g - 4);
        }
    }
    EXPECT_THROW(FillingCombinatorics::make(1, 1), ParameterError);
}

TEST(EnumerateShapes, MatchesNaiveScan) {
    for (int g = 2; g <= 5; ++g) {
        for (int k = 1; k <= 5; ++k) {
            const auto shapes = enumerate_partition_shapes(g, k);
            EXPECT_EQ(shapes, oracle::naive_shapes(4 * g + 2 * k - 4, k)) << g << " " << k;
        }
    }
}

TEST(EnumerateShapes, GenusTwo) {
    EXPECT_EQ(enumerate_partition_shapes(2, 1), (std::vector<Shape>{{6}}));
    EXPECT_EQ(enumerate_partition_shapes(2, 2), (std::vector<Shape>{{2, 6}, {3, 5}, {4, 4}}));
}

TEST(MergeInduction, SinglePieceIsEquality) {
    const auto trace = merge_induction(Partition{{{6, 4.0 * kPi}}});
    ASSERT_EQ(trace.steps.size(), 1u);
    EXPECT_TRUE(trace.final_is_Pg);
    EXPECT_EQ(trace.genus, 2);
    EXPECT_EQ(trace.telescoped_margin(), 0.0);
}

TEST(MergeInduction, StepsRecomputed) {
    Partition p{{{3, 2.0 * kPi}, {5, 2.0 * kPi}}};
    const auto trace = merge_induction(p);
    ASSERT_EQ(trace.steps.size(), 2u);
    // The decagon has the larger angle (0.6pi against pi/3) and opens the merge.
    EXPECT_EQ(trace.steps[0].piece, 1u);
    EXPECT_EQ(trace.steps[1].m_tilde, 6);
    EXPECT_NEAR(trace.steps[1].theta_tilde, kHalfPi, 1e-14);
    const double direct = static_cast<double>(oracle::perim(6, 2 * oracle::kPi) + oracle::perim(10, 2 * oracle::kPi) -
                                              oracle::perim(12, 4 * oracle::kPi));
    EXPECT_NEAR(trace.telescoped_margin(), direct, 1e-11);
    EXPECT_TRUE(trace.final_is_Pg);
}

TEST(MergeInduction, AcuteTargetRejected) {
    EXPECT_THROW(merge_induction(Partition{{{2, 1.0}, {4, 11.566}}}), HypothesisError);
}

TEST(MainTheorem, RandomGenusPartitions) {
    SplitSampler s(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = 2 + trial % 3;
        const int k = 1 + trial % 4;
        const auto p = random_genus_partition(g, k, s);
        const auto r = verify_main_theorem(p);
        EXPECT_TRUE(r.passed);
        EXPECT_NEAR(r.witness.at("perim_R"), mg(g), 1e-9 * mg(g));
        EXPECT_NEAR(merge_induction(p).telescoped_margin(), r.worst_margin, 1e-6);
    }
}

TEST(BruteForce, GenusTwoShapes) {
    const double area = 4.0 * kPi;
    for (const Shape& shape : {Shape{3, 5}, Shape{4, 4}, Shape{2, 6}}) {
        const auto r = brute_force_min(shape, area, 256);
        EXPECT_GE(r.min_value, mg(2) - 1e-6);
        double sum = 0.0;
        for (double a : r.argmin) sum += a;
        EXPECT_NEAR(sum, area, 1e-12);
    }
    EXPECT_NEAR(brute_force_min({2, 6}, area, 64).min_value, mg(2), 1e-12);
}

TEST(BruteForce, AgreesWithDenseScan) {
    // Two pieces: the minimum over a fine one-dimensional scan.
    const Shape shape{4, 4};
    const double area = 4.0 * kPi;
    long double best = 1e300L;
    const int steps = 200000;
    for (int i = 0; i <= steps; ++i) {
        const long double a1 = area * static_cast<long double>(i) / steps;
        best = std::min(best, oracle::perim(8, a1) + oracle::perim(8, area - a1));
    }
    const auto r = brute_force_min(shape, area, 256);
    EXPECT_GE(r.min_value, static_cast<double>(best) - 1e-9);
    EXPECT_LE(r.min_value, static_cast<double>(best) + 1e-6);
}

TEST(BruteForce, RefinementNeverWorse) {
    for (const Shape& shape : {Shape{3, 5}, Shape{4, 4}, Shape{2, 6}, Shape{2, 3, 5}}) {
        const double area = 4.0 * kPi;
        EXPECT_LE(brute_force_min(shape, area, 256).min_value, brute_force_min(shape, area, 128).min_value + 1e-12);
    }
}

TEST(BruteForce, LatticeSize) {
    EXPECT_EQ(simplex_lattice_size(1, 64), 1.0);
    EXPECT_EQ(simplex_lattice_size(2, 64), 65.0);
    EXPECT_EQ(simplex_lattice_size(3, 4), 15.0);
}

TEST(SplitSampler, Reproducible) {
    SplitSampler a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        EXPECT_EQ(u, b.uniform());
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    EXPECT_NE(SplitSampler(42).uniform(), c.uniform());
}

TEST(SplitSampler, SimplexAndSplit) {
    SplitSampler s(1);
    const auto parts = s.simplex(5.0, 4);
    ASSERT_EQ(parts.size(), 4u);
    double sum = 0.0;
    for (double v : parts) {
        EXPECT_GE(v, 0.0);
        sum += v;
    }
    EXPECT_NEAR(sum, 5.0, 1e-12);
    for (int i = 0; i < 200; ++i) {
        const auto p = s.split({2, 3, 5}, 4.0 * kPi);
        EXPECT_NO_THROW(p.validate());
        EXPECT_LT(p.pieces[0].area, 2.0 * kPi);
        EXPECT_NEAR(p.total_area(), 4.0 * kPi, 1e-12);
    }
    EXPECT_THROW(s.split({2, 2}, 5.0 * kPi, 50), ParameterError);
}

TEST(SplitSampler, UniformIntRange) {
    SplitSampler s(9);
    for (int i = 0; i < 500; ++i) {
        const int v = s.uniform_int(2, 5);
        EXPECT_GE(v, 2);
        EXPECT_LE(v, 5);
    }
}

TEST(Systole, HalfOfMg) {
    EXPECT_DOUBLE_EQ(systole_lower_bound(3), mg(3) / 2.0);
}

}  // namespace
}  // namespace hypergon
