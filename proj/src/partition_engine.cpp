#include "hypergon/partition_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hypergon/errors.hpp"
#include "hypergon/hyperbolic_core.hpp"

namespace hypergon {
namespace {

double piece_area_bound(int m) { return (2.0 * m - 2.0) * kPi; }

void build_shapes(int remaining_parts, int remaining_sum, int min_part, Shape& current,
                  std::vector<Shape>& out) {
    if (remaining_parts == 0) {
        if (remaining_sum == 0) {
            out.push_back(current);
        }
        return;
    }
    // Parts are non-decreasing, so the current part can be at most an even
    // share of what is left.
    for (int part = min_part; part * remaining_parts <= remaining_sum; ++part) {
        current.push_back(part);
        build_shapes(remaining_parts - 1, remaining_sum - part, part, current, out);
        current.pop_back();
    }
}

double sum_perimeters(const Shape& shape, const std::vector<double>& areas) {
    double total = 0.0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        total += perim_regular(2 * shape[i], areas[i]);
    }
    return total;
}

bool feasible(const Shape& shape, const std::vector<double>& areas) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (!(areas[i] >= 0.0) || !(areas[i] < piece_area_bound(shape[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

int Partition::side_sum() const noexcept {
    int total = 0;
    for (const auto& p : pieces) {
        total += p.m;
    }
    return total;
}

int Partition::merged_sides() const noexcept { return 4 * (1 - k()) + 2 * side_sum(); }

double Partition::total_area() const noexcept {
    double total = 0.0;
    for (const auto& p : pieces) {
        total += p.area;
    }
    return total;
}

void Partition::validate() const {
    if (pieces.empty()) {
        throw ParameterError("partition must contain at least one piece");
    }
    for (const auto& p : pieces) {
        if (p.m < 2) {
            throw ParameterError("piece half-side count must be >= 2, got " + std::to_string(p.m));
        }
        if (!(p.area >= 0.0) || !(p.area < piece_area_bound(p.m))) {
            throw DomainError("piece area " + std::to_string(p.area) + " outside [0, " +
                              std::to_string(piece_area_bound(p.m)) + ")");
        }
    }
    if (merged_sides() < 3) {
        throw ParameterError("merged side count 4(1-k) + 2 sum m_i must be >= 3");
    }
}

FillingCombinatorics FillingCombinatorics::make(int g, int k) {
    if (g < 2) {
        throw ParameterError("genus must be >= 2");
    }
    if (k < 1) {
        throw ParameterError("face count must be >= 1");
    }
    FillingCombinatorics c;
    c.genus = g;
    c.faces = k;
    c.vertices = 2 * g + k - 2;
    c.edges = 4 * g + 2 * k - 4;
    c.side_sum = 4 * g + 2 * k - 4;
    return c;
}

std::vector<Shape> enumerate_partition_shapes(int g, int k) {
    const auto comb = FillingCombinatorics::make(g, k);
    std::vector<Shape> out;
    Shape current;
    current.reserve(static_cast<std::size_t>(k));
    build_shapes(k, comb.side_sum, 2, current, out);
    return out;
}

double MergeTrace::min_theta() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : steps) {
        best = std::min(best, s.theta_tilde);
    }
    return best;
}

double MergeTrace::min_step_margin() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < steps.size(); ++i) {
        best = std::min(best, steps[i].step_margin);
    }
    return best;
}

double MergeTrace::telescoped_margin() const {
    double total = 0.0;
    for (const auto& s : steps) {
        total += s.step_margin;
    }
    return total;
}

MergeTrace merge_induction(const Partition& partition) {
    partition.validate();
    const int final_half_sides = partition.merged_sides() / 2;
    if (partition.merged_sides() % 2 != 0) {
        throw ParameterError("merged side count must be even");
    }
    const double total = partition.total_area();
    const double final_theta = ((2.0 * final_half_sides - 2.0) * kPi - total) / (2.0 * final_half_sides);
    if (final_theta < kHalfPi - kComparisonSlack) {
        throw HypothesisError("final merged polygon is acute (theta = " + std::to_string(final_theta) + ")");
    }

    const std::size_t k = partition.pieces.size();
    std::vector<double> angles(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& p = partition.pieces[i];
        angles[i] = interior_angle(p.sides(), p.area);
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (angles[a] != angles[b]) {
            return angles[a] > angles[b];
        }
        return partition.pieces[a].m > partition.pieces[b].m;
    });

    MergeTrace trace;
    int m_tilde = 0;
    double area_tilde = 0.0;
    double perim_prev = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const auto& piece = partition.pieces[order[j]];
        m_tilde = j == 0 ? piece.m : m_tilde + piece.m - 2;
        area_tilde += piece.area;

        MergeStep step;
        step.j = static_cast<int>(j) + 1;
        step.piece = order[j];
        step.m_tilde = m_tilde;
        step.area_tilde = area_tilde;
        step.theta_tilde = ((2.0 * m_tilde - 2.0) * kPi - area_tilde) / (2.0 * m_tilde);
        if (step.theta_tilde < kHalfPi - kComparisonSlack) {
            throw StepAngleViolationError("merged polygon at step " + std::to_string(step.j) +
                                          " has angle " + std::to_string(step.theta_tilde) + " < pi/2");
        }
        step.piece_perim = perim_regular(piece.sides(), piece.area);
        step.perim_tilde = perim_regular(2 * m_tilde, area_tilde);
        step.step_margin = j == 0 ? 0.0 : step.piece_perim + perim_prev - step.perim_tilde;
        perim_prev = step.perim_tilde;
        trace.steps.push_back(step);
    }

    const int sides = 2 * m_tilde;
    if (sides % 8 == 4 && sides >= 12) {
        const int g = (sides + 4) / 8;
        const double pg_area = 4.0 * kPi * (g - 1);
        if (std::abs(area_tilde - pg_area) <= kComparisonSlack * std::max(1.0, pg_area)) {
            trace.final_is_Pg = true;
            trace.genus = g;
        }
    }
    return trace;
}

VerificationReport verify_main_theorem(const Partition& partition) {
    partition.validate();
    const int n_sides = partition.merged_sides();
    const double total = partition.total_area();
    if (!(total < (n_sides - 2) * kPi)) {
        throw HypothesisError("total area exceeds the regular N-gon's domain");
    }
    const double theta = ((n_sides - 2) * kPi - total) / n_sides;
    if (theta < kHalfPi - kComparisonSlack) {
        throw HypothesisError("comparison polygon is acute (theta = " + std::to_string(theta) + ")");
    }

    double sum = 0.0;
    for (const auto& p : partition.pieces) {
        sum += perim_regular(p.sides(), p.area);
    }
    const double perim_r = perim_regular(n_sides, total);

    VerificationReport report;
    report.lemma_id = LemmaId::MAIN_THEOREM;
    report.tolerance = kComparisonSlack;
    report.params["k"] = partition.k();
    report.params["N"] = n_sides;
    for (std::size_t i = 0; i < partition.pieces.size(); ++i) {
        report.params["m" + std::to_string(i + 1)] = partition.pieces[i].m;
        report.params["a" + std::to_string(i + 1)] = partition.pieces[i].area;
    }
    report.worst_margin = sum - perim_r;
    report.witness["theta_R"] = theta;
    report.witness["sum_perimeters"] = sum;
    report.witness["perim_R"] = perim_r;
    report.notes = "sum of piece perimeters against the regular N-gon of equal area";
    settle(report);
    return report;
}

double simplex_lattice_size(std::size_t pieces, int grid) {
    // C(grid + pieces - 1, pieces - 1)
    double count = 1.0;
    for (std::size_t i = 1; i < pieces; ++i) {
        count = count * static_cast<double>(grid + static_cast<int>(i)) / static_cast<double>(i);
    }
    return count;
}

MinimizeResult brute_force_min(const Shape& shape, double total_area, int grid) {
    if (shape.empty()) {
        throw ParameterError("brute_force_min: empty shape");
    }
    for (int m : shape) {
        if (m < 2) {
            throw ParameterError("brute_force_min: half-side counts must be >= 2");
        }
    }
    if (grid < 2) {
        throw ParameterError("brute_force_min: grid must be >= 2");
    }
    double capacity = 0.0;
    for (int m : shape) {
        capacity += piece_area_bound(m);
    }
    if (!(total_area >= 0.0) || !(total_area < capacity)) {
        throw ParameterError("brute_force_min: total area outside [0, sum (2m_i - 2)pi)");
    }

    const std::size_t k = shape.size();
    MinimizeResult result;
    result.grid = grid;
    result.min_value = std::numeric_limits<double>::infinity();

    std::vector<int> counts(k, 0);
    std::vector<double> areas(k, 0.0);
    auto consider = [&](const std::vector<double>& candidate) {
        if (!feasible(shape, candidate)) {
            return;
        }
        ++result.evaluations;
        const double value = sum_perimeters(shape, candidate);
        if (value < result.min_value) {
            result.min_value = value;
            result.argmin = candidate;
        }
    };

    // Coarse pass: compositions of grid into k non-negative parts in
    // lexicographic order.
    const double step = total_area / grid;
    auto visit = [&](auto&& self, std::size_t index, int remaining) -> void {
        if (index + 1 == k) {
            counts[index] = remaining;
            double used = 0.0;
            for (std::size_t i = 0; i + 1 < k; ++i) {
                areas[i] = step * counts[i];
                used += areas[i];
            }
            areas[index] = remaining == 0 ? 0.0 : std::max(0.0, total_area - used);
            consider(areas);
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            counts[index] = c;
            self(self, index + 1, remaining - c);
        }
    };
    visit(visit, 0, grid);
    if (result.argmin.empty()) {
        throw ParameterError("brute_force_min: no feasible lattice point; increase grid");
    }

    // Refinement: move area between each ordered pair of pieces in steps of
    // step/8, up to one coarse step, starting from the coarse incumbent.
    constexpr int kRefine = 8;
    const std::vector<double> incumbent = result.argmin;
    const double fine = step / kRefine;
    for (std::size_t from = 0; from < k; ++from) {
        for (std::size_t to = 0; to < k; ++to) {
            if (from == to) {
                continue;
            }
            for (int s = 1; s <= kRefine; ++s) {
                std::vector<double> candidate = incumbent;
                const double moved = std::min(fine * s, candidate[from]);
                candidate[from] -= moved;
                candidate[to] += moved;
                consider(candidate);
            }
        }
    }
    return result;
}

double systole_lower_bound(int g) { return mg(g) / 2.0; }

double SplitSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SplitSampler::exponential() { return -std::log1p(-uniform()); }

int SplitSampler::uniform_int(int lo, int hi) {
    if (hi < lo) {
        throw ParameterError("uniform_int: empty range");
    }
    const auto span = static_cast<double>(hi - lo + 1);
    const int v = lo + static_cast<int>(uniform() * span);
    return std::min(v, hi);
}

std::vector<double> SplitSampler::simplex(double total, std::size_t parts) {
    std::vector<double> weights(parts);
    double sum = 0.0;
    for (auto& w : weights) {
        w = exponential();
        sum += w;
    }
    if (sum == 0.0) {
        weights.assign(parts, 1.0);
        sum = static_cast<double>(parts);
    }
    for (auto& w : weights) {
        w = total * w / sum;
    }
    return weights;
}

Partition SplitSampler::split(const Shape& shape, double total, int max_tries) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        const auto areas = simplex(total, shape.size());
        if (!feasible(shape, areas)) {
            continue;
        }
        Partition p;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            p.pieces.push_back(Piece{shape[i], areas[i]});
        }
        return p;
    }
    throw ParameterError("split: no feasible area split found");
}

Partition random_genus_partition(int g, int k, SplitSampler& sampler) {
    const auto shapes = enumerate_partition_shapes(g, k);
    const auto& shape = shapes[static_cast<std::size_t>(sampler.uniform_int(0, static_cast<int>(shapes.size()) - 1))];
    return sampler.split(shape, 4.0 * kPi * (g - 1));
}

}  // namespace hypergon
