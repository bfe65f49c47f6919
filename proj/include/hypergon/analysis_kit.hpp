#pragma once

// Scalar analysis used by the lemma verifiers: bisection, finite
// differences, and grid certificates for monotonicity, concavity, sign and
// chord domination. A certificate is evidence on a finite grid, not a proof.

#include <functional>
#include <string>
#include <vector>

namespace hypergon {

using ScalarFn = std::function<double(double)>;

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr int kMaxBisectionIterations = 200;
inline constexpr double kDefaultFdStep = 1e-6;
inline constexpr int kDefaultGridPoints = 512;
// Open endpoints are moved inward by this fraction of the interval length.
inline constexpr double kOpenEndpointShrink = 1e-9;

struct RootResult {
    double bracket_lo = 0.0;  // initial bracket
    double bracket_hi = 0.0;
    double root = 0.0;
    double residual = 0.0;  // f(root)
    int iterations = 0;
    std::vector<double> trace;  // midpoint visited at each iteration

    bool operator==(const RootResult&) const = default;
};

// Bisection on [lo, hi]. Stops when |f(mid)| <= tol or the bracket width
// drops to tol. Throws NoSignChangeError if f(lo)*f(hi) >= 0 and
// NonConvergenceError when max_iterations is exhausted.
RootResult find_root(const ScalarFn& f, double lo, double hi, double tol = kDefaultRootTol,
                     int max_iterations = kMaxBisectionIterations);

// (f(x + step) - f(x - step)) / (2 step)
double finite_difference(const ScalarFn& f, double x, double step = kDefaultFdStep);

// Centered difference with one level of Richardson extrapolation,
// (4 D(step/2) - D(step)) / 3.
double richardson_derivative(const ScalarFn& f, double x, double step = kDefaultFdStep);

enum class Property { increasing, decreasing, concave, positive, negative, above_chord };

std::string to_string(Property p);

enum class Endpoints { closed, open, open_lo, open_hi };

struct GridCertificate {
    double domain_lo = 0.0;
    double domain_hi = 0.0;
    int points = 0;
    Property property = Property::increasing;
    double worst_margin = 0.0;  // positive means the property holds with slack
    double witness = 0.0;       // argument attaining worst_margin
    bool passed = false;

    bool operator==(const GridCertificate&) const = default;
};

// Uniform grid of `points` samples on [lo, hi], with open endpoints shrunk
// inward by kOpenEndpointShrink * (hi - lo).
std::vector<double> uniform_grid(double lo, double hi, int points, Endpoints ends = Endpoints::closed);

// Consecutive differences; witness is the left point of the worst pair.
GridCertificate certify_monotone(const ScalarFn& f, double lo, double hi, int points, Property direction,
                                 Endpoints ends = Endpoints::closed);

// Midpoint test f((x_i + x_{i+1})/2) > (f(x_i) + f(x_{i+1}))/2 on every cell;
// witness is the worst midpoint.
GridCertificate certify_concave(const ScalarFn& f, double lo, double hi, int points,
                                Endpoints ends = Endpoints::closed);

// Pointwise sign (Property::positive or Property::negative).
GridCertificate certify_sign(const ScalarFn& f, double lo, double hi, int points, Property sign,
                             Endpoints ends = Endpoints::closed);

struct ChordCertificate {
    GridCertificate above_chord;  // f(a + t(b-a)) - chord(t) at interior t
    GridCertificate symmetric;    // f(a+x) + f(b-x) - f(a) - f(b) at interior x
    bool passed = false;
};

// Graph of f above the chord from (a, f(a)) to (b, f(b)) on interior grid
// points, plus the paired inequality f(a+x) + f(b-x) > f(a) + f(b).
ChordCertificate verify_chord_property(const ScalarFn& f, double a, double b, int points);

}  // namespace hypergon
