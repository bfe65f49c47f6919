#include "hypergon/analysis_kit.hpp"

#include <cmath>
#include <limits>

#include "hypergon/errors.hpp"

namespace hypergon {
namespace {

double evaluate(const ScalarFn& f, double x) {
    try {
        return f(x);
    } catch (const GridEvaluationError&) {
        throw;
    } catch (const std::exception& e) {
        throw GridEvaluationError(e.what(), x);
    }
}

void check_grid(double lo, double hi, int points, int min_points) {
    if (!(lo < hi)) {
        throw ParameterError("grid requires lo < hi");
    }
    if (points < min_points) {
        throw ParameterError("grid requires at least " + std::to_string(min_points) + " points");
    }
}

std::vector<double> sample(const ScalarFn& f, const std::vector<double>& xs) {
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) {
        ys.push_back(evaluate(f, x));
    }
    return ys;
}

GridCertificate make_certificate(double lo, double hi, int points, Property p) {
    GridCertificate cert;
    cert.domain_lo = lo;
    cert.domain_hi = hi;
    cert.points = points;
    cert.property = p;
    cert.worst_margin = std::numeric_limits<double>::infinity();
    cert.witness = lo;
    return cert;
}

void record(GridCertificate& cert, double margin, double at) {
    // NaN margins count as failures.
    if (!(margin >= cert.worst_margin)) {
        cert.worst_margin = margin;
        cert.witness = at;
    }
}

void finish(GridCertificate& cert) { cert.passed = cert.worst_margin > 0.0; }

}  // namespace

std::string to_string(Property p) {
    switch (p) {
        case Property::increasing: return "increasing";
        case Property::decreasing: return "decreasing";
        case Property::concave: return "concave";
        case Property::positive: return "positive";
        case Property::negative: return "negative";
        case Property::above_chord: return "above_chord";
    }
    return "unknown";
}

RootResult find_root(const ScalarFn& f, double lo, double hi, double tol, int max_iterations) {
    if (!(tol > 0.0)) {
        throw ParameterError("find_root: tolerance must be positive");
    }
    if (!(lo < hi)) {
        throw ParameterError("find_root: requires lo < hi");
    }
    double f_lo = evaluate(f, lo);
    const double f_hi = evaluate(f, hi);
    if (!(f_lo * f_hi < 0.0)) {
        throw NoSignChangeError("find_root: f(lo) and f(hi) do not have opposite signs");
    }

    RootResult result;
    result.bracket_lo = lo;
    result.bracket_hi = hi;
    double a = lo;
    double b = hi;
    for (int it = 1; it <= max_iterations; ++it) {
        const double mid = a + 0.5 * (b - a);
        const double f_mid = evaluate(f, mid);
        result.trace.push_back(mid);
        result.iterations = it;
        if (std::abs(f_mid) <= tol || (b - a) <= tol) {
            result.root = mid;
            result.residual = f_mid;
            return result;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            a = mid;
            f_lo = f_mid;
        } else {
            b = mid;
        }
    }
    throw NonConvergenceError("find_root: no convergence after " + std::to_string(max_iterations) +
                              " iterations");
}

double finite_difference(const ScalarFn& f, double x, double step) {
    if (!(step > 0.0)) {
        throw ParameterError("finite_difference: step must be positive");
    }
    return (evaluate(f, x + step) - evaluate(f, x - step)) / (2.0 * step);
}

double richardson_derivative(const ScalarFn& f, double x, double step) {
    const double coarse = finite_difference(f, x, step);
    const double fine = finite_difference(f, x, 0.5 * step);
    return (4.0 * fine - coarse) / 3.0;
}

std::vector<double> uniform_grid(double lo, double hi, int points, Endpoints ends) {
    check_grid(lo, hi, points, 2);
    const double shrink = kOpenEndpointShrink * (hi - lo);
    if (ends == Endpoints::open || ends == Endpoints::open_lo) {
        lo += shrink;
    }
    if (ends == Endpoints::open || ends == Endpoints::open_hi) {
        hi -= shrink;
    }
    std::vector<double> xs(static_cast<std::size_t>(points));
    const double width = hi - lo;
    for (int i = 0; i < points; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + width * (static_cast<double>(i) / (points - 1));
    }
    xs.back() = hi;
    return xs;
}

GridCertificate certify_monotone(const ScalarFn& f, double lo, double hi, int points, Property direction,
                                 Endpoints ends) {
    if (direction != Property::increasing && direction != Property::decreasing) {
        throw ParameterError("certify_monotone: direction must be increasing or decreasing");
    }
    const auto xs = uniform_grid(lo, hi, points, ends);
    const auto ys = sample(f, xs);
    const double orient = direction == Property::increasing ? 1.0 : -1.0;
    auto cert = make_certificate(lo, hi, points, direction);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        record(cert, orient * (ys[i + 1] - ys[i]), xs[i]);
    }
    finish(cert);
    return cert;
}

GridCertificate certify_concave(const ScalarFn& f, double lo, double hi, int points, Endpoints ends) {
    const auto xs = uniform_grid(lo, hi, points, ends);
    const auto ys = sample(f, xs);
    auto cert = make_certificate(lo, hi, points, Property::concave);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double mid = 0.5 * (xs[i] + xs[i + 1]);
        record(cert, evaluate(f, mid) - 0.5 * (ys[i] + ys[i + 1]), mid);
    }
    finish(cert);
    return cert;
}

GridCertificate certify_sign(const ScalarFn& f, double lo, double hi, int points, Property sign,
                             Endpoints ends) {
    if (sign != Property::positive && sign != Property::negative) {
        throw ParameterError("certify_sign: property must be positive or negative");
    }
    const auto xs = uniform_grid(lo, hi, points, ends);
    const double orient = sign == Property::positive ? 1.0 : -1.0;
    auto cert = make_certificate(lo, hi, points, sign);
    for (double x : xs) {
        record(cert, orient * evaluate(f, x), x);
    }
    finish(cert);
    return cert;
}

ChordCertificate verify_chord_property(const ScalarFn& f, double a, double b, int points) {
    check_grid(a, b, points, 3);
    const double fa = evaluate(f, a);
    const double fb = evaluate(f, b);
    ChordCertificate out;
    out.above_chord = make_certificate(a, b, points, Property::above_chord);
    out.symmetric = make_certificate(a, b, points, Property::above_chord);
    const double width = b - a;
    for (int i = 1; i + 1 < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        const double x = a + t * width;
        record(out.above_chord, evaluate(f, x) - (fa + t * (fb - fa)), x);
        const double offset = t * width;
        record(out.symmetric, evaluate(f, a + offset) + evaluate(f, b - offset) - (fa + fb), a + offset);
    }
    finish(out.above_chord);
    finish(out.symmetric);
    out.passed = out.above_chord.passed && out.symmetric.passed;
    return out;
}

}  // namespace hypergon
