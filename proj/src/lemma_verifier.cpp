#include "hypergon/lemma_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypergon/errors.hpp"
#include "hypergon/hyperbolic_core.hpp"

namespace hypergon {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VerificationReport make_report(LemmaId id, double tolerance = 0.0) {
    VerificationReport r;
    r.lemma_id = id;
    r.tolerance = tolerance;
    r.worst_margin = kInf;
    return r;
}

// Folds a margin into the report; NaN counts as a failure.
void fold(VerificationReport& r, double margin) {
    if (!(margin >= r.worst_margin)) {
        r.worst_margin = margin;
    }
}

void fold(VerificationReport& r, const GridCertificate& cert, const std::string& label) {
    fold(r, cert.worst_margin);
    r.witness[label + "_margin"] = cert.worst_margin;
    r.witness[label + "_at"] = cert.witness;
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ParameterError(message);
    }
}

double square(double v) { return v * v; }

}  // namespace

// --- trigonometric inequality ------------------------------------------------

double lemma_4_2_margin(double x, double y) {
    require(x > 0.0 && x <= kPi / 4.0, "lemma_4_2_margin: x must lie in (0, pi/4]");
    require(y > x && y < kHalfPi, "lemma_4_2_margin: y must lie in (x, pi/2)");
    const double sy2 = square(std::sin(y));
    const double rhs = square(std::cos(x)) / square(std::cos(y)) + (x * std::tan(x)) / (y * std::tan(y)) * sy2;
    return rhs - (1.0 + sy2);
}

VerificationReport verify_lemma_4_2(int grid_x, int grid_y) {
    require(grid_x >= 16 && grid_y >= 16, "verify_lemma_4_2: grids must be >= 16");
    auto r = make_report(LemmaId::L4_2);
    r.params["grid_x"] = grid_x;
    r.params["grid_y"] = grid_y;

    double main_worst = kInf;
    double aux_worst = kInf;
    for (int i = 1; i <= grid_x; ++i) {
        const double x = (kPi / 4.0) * i / grid_x;
        for (int j = 1; j <= grid_y; ++j) {
            const double y = x + (kHalfPi - x) * j / (grid_y + 1);
            const double margin = lemma_4_2_margin(x, y);
            if (margin < main_worst) {
                main_worst = margin;
                r.witness["x"] = x;
                r.witness["y"] = y;
            }
            aux_worst = std::min(aux_worst, y - std::sin(y) * std::cos(y));
        }
    }
    fold(r, main_worst);
    fold(r, aux_worst);
    r.witness["inequality_margin"] = main_worst;
    r.witness["sin_cos_margin"] = aux_worst;
    r.witness["near_diagonal_margin"] = lemma_4_2_margin(kPi / 4.0 - 1e-6, kPi / 4.0);
    r.notes = "triangular grid; certified on grid";
    settle(r);
    return r;
}

// --- derivative monotonicity in the side count ---------------------------------

double h_squared(double x, double t) {
    const double cx = 2.0 + x / kPi;
    if (!(x > 0.0) || !(t > cx)) {
        throw DomainError("H_x: requires x > 0 and t > 2 + x/pi");
    }
    const double alpha = cx * kPi / (2.0 * t);
    const double beta = kPi / t;
    // cos^2(beta) - cos^2(alpha) = sin(alpha + beta) sin(alpha - beta)
    return square(std::cos(beta)) * square(std::tan(alpha)) / (std::sin(alpha + beta) * std::sin(alpha - beta));
}

VerificationReport verify_lemma_4_3(double x, double t_lo, double t_hi, int points) {
    require(x > 0.0, "verify_lemma_4_3: x must be positive");
    const double cx = 2.0 + x / kPi;
    require(t_lo > cx, "verify_lemma_4_3: t_lo must exceed c_x = 2 + x/pi");
    require(t_hi > t_lo, "verify_lemma_4_3: t_hi must exceed t_lo");
    require(points >= 2, "verify_lemma_4_3: points must be >= 2");
    auto r = make_report(LemmaId::L4_3);
    r.params["x"] = x;
    r.params["t_lo"] = t_lo;
    r.params["t_hi"] = t_hi;
    r.params["points"] = points;
    r.witness["c_x"] = cx;
    const auto cert = certify_monotone([x](double t) { return h_squared(x, t); }, t_lo, t_hi, points,
                                       Property::decreasing);
    fold(r, cert, "decreasing");
    r.notes = "H_x decreasing in t; certified on grid";
    settle(r);
    return r;
}

double perimeter_gap(int n, double x) { return perim_regular(n, x) - perim_regular(n + 1, x); }

VerificationReport verify_prop_4_1(int n, int points) {
    require(n >= 4, "verify_prop_4_1: n must be >= 4");
    require(points >= 2, "verify_prop_4_1: points must be >= 2");
    auto r = make_report(LemmaId::P4_1);
    r.params["n"] = n;
    r.params["points"] = points;

    const double hi = (n - 2) * kPi;
    const auto cert =
        certify_monotone([n](double x) { return perimeter_gap(n, x); }, 0.0, hi, points, Property::increasing,
                         Endpoints::open);
    fold(r, cert, "g_n_increasing");

    const double gap0 = perimeter_gap(n, 0.0);
    r.witness["g_n_at_0"] = gap0;
    if (gap0 != 0.0) {
        fold(r, -std::abs(gap0));
    }

    const auto h_cert = certify_sign([n](double x) { return h_n(n, x) - h_n(n + 1, x); }, 0.0, hi, points,
                                     Property::positive, Endpoints::open);
    fold(r, h_cert, "h_n_decreasing_in_n");
    r.notes = "g_n increasing on (0, (n-2)pi); certified on grid";
    settle(r);
    return r;
}

double f_mn(int m, int n, double a, double x) {
    return perim_regular(2 * m, x) + perim_regular(2 * (n + 2 - m), a - x);
}

VerificationReport verify_corollary_4_4(int m, double a, int n_max, int points) {
    require(m >= 2, "verify_corollary_4_4: m must be >= 2");
    require(a > 0.0 && a < (2.0 * m - 2.0) * kPi, "verify_corollary_4_4: a must lie in (0, (2m-2)pi)");
    require(n_max >= 2 * m, "verify_corollary_4_4: n_max must be >= 2m");
    require(points >= 2, "verify_corollary_4_4: points must be >= 2");
    auto r = make_report(LemmaId::C4_4);
    r.params["m"] = m;
    r.params["a"] = a;
    r.params["n_max"] = n_max;
    r.params["points"] = points;

    double min_at_zero = kInf;
    double diff_max_at_zero = kInf;
    for (int n = 2 * m; n <= n_max; ++n) {
        const double f0 = f_mn(m, n, a, 0.0);
        const double d0 = f0 - f_mn(m, n + 1, a, 0.0);
        for (int i = 1; i < points; ++i) {
            const double x = a * i / points;
            const double f = f_mn(m, n, a, x);
            const double d = f - f_mn(m, n + 1, a, x);
            if (f - f0 < min_at_zero) {
                min_at_zero = f - f0;
                r.witness["min_at_zero_n"] = n;
                r.witness["min_at_zero_x"] = x;
            }
            diff_max_at_zero = std::min(diff_max_at_zero, d0 - d);
        }
    }
    fold(r, min_at_zero);
    fold(r, diff_max_at_zero);
    r.witness["min_at_zero_margin"] = min_at_zero;
    r.witness["difference_margin"] = diff_max_at_zero;
    r.notes = "f_{m,n} minimized at 0 for n = 2m..n_max; certified on grid";
    settle(r);
    return r;
}

// --- base cases ----------------------------------------------------------------------

double p_t(double t, double x) {
    if (!(t > 0.0) || !(x > t / kPi + 2.0)) {
        throw DomainError("p_t: requires t > 0 and x > t/pi + 2");
    }
    return perim_continuous(x, t);
}

VerificationReport verify_lemma_5_1(double t, double x_lo, double x_hi, int points) {
    require(t > 0.0, "verify_lemma_5_1: t must be positive");
    require(x_lo > t / kPi + 2.0, "verify_lemma_5_1: x_lo must exceed t/pi + 2");
    require(x_hi > x_lo, "verify_lemma_5_1: x_hi must exceed x_lo");
    require(points >= 2, "verify_lemma_5_1: points must be >= 2");
    auto r = make_report(LemmaId::L5_1);
    r.params["t"] = t;
    r.params["x_lo"] = x_lo;
    r.params["x_hi"] = x_hi;
    r.params["points"] = points;

    const auto cert = certify_monotone([t](double x) { return p_t(t, x); }, x_lo, x_hi, points,
                                       Property::decreasing);
    fold(r, cert, "p_t_decreasing");

    double integer_margin = kInf;
    const int n_lo = static_cast<int>(std::ceil(x_lo));
    const int n_hi = static_cast<int>(std::floor(x_hi));
    for (int n = n_lo; n < n_hi; ++n) {
        integer_margin = std::min(integer_margin, perim_regular(n, t) - perim_regular(n + 1, t));
    }
    if (n_hi > n_lo) {
        fold(r, integer_margin);
        r.witness["integer_margin"] = integer_margin;
    }
    r.notes = "p_t decreasing in x; certified on grid";
    settle(r);
    return r;
}

VerificationReport verify_theorem_5_2_instance(int k, int points) {
    require(k >= 3, "verify_theorem_5_2_instance: k must be >= 3");
    require(points >= 2, "verify_theorem_5_2_instance: points must be >= 2");
    auto r = make_report(LemmaId::T5_2_instance, kComparisonSlack);
    r.params["k"] = k;
    r.params["points"] = points;
    const double threshold = threshold_angle(k);
    const double area_max = area_from_angle(k, threshold);
    require(area_max > 0.0, "verify_theorem_5_2_instance: threshold admits no positive area");
    r.witness["threshold_angle"] = threshold;
    r.witness["area_max"] = area_max;

    double worst = kInf;
    for (int j = 1; j <= points; ++j) {
        const double total = area_max * j / points;
        const double merged = perim_regular(k, total);
        for (int i = 1; i <= points; ++i) {
            const double a1 = total * i / (points + 1);
            const double margin = perim_regular(k, a1) + perim_regular(k, total - a1) - merged;
            if (margin < worst) {
                worst = margin;
                r.witness["total"] = total;
                r.witness["a1"] = a1;
            }
        }
    }
    fold(r, worst);
    r.notes = "two regular k-gons against the merged k-gon above the threshold angle";
    settle(r);
    return r;
}

BaseCaseMargins base_case_margins(double a1, double a2) {
    BaseCaseMargins out;
    const double p4 = perim_regular(4, a1);
    const double p6_a1 = perim_regular(6, a1);
    const double p6_a2 = perim_regular(6, a2);
    const double merged = perim_regular(6, a1 + a2);
    out.replacement = p4 - p6_a1;
    out.threshold_instance = p6_a1 + p6_a2 - merged;
    out.combined = p4 + p6_a2 - merged;
    return out;
}

VerificationReport verify_base_cases(int points) {
    require(points >= 2, "base cases: points must be >= 2");
    auto r = make_report(LemmaId::L5_3, kComparisonSlack);
    r.params["points"] = points;

    // n = 2: angle((2pi - a)/4) >= pi/2 forces a <= 0.
    double quad_margin = interior_angle(4, 0.0) == kHalfPi ? kInf : -1.0;
    for (int j = 1; j <= points; ++j) {
        const double a = 2.0 * kPi * j / (points + 1);
        quad_margin = std::min(quad_margin, kHalfPi - interior_angle(4, a));
    }
    fold(r, quad_margin);
    r.witness["n2_margin"] = quad_margin;

    // n = 3: m1 = 2, m2 = 3, hexagon of area a1 + a2 <= pi.
    const double threshold_gap = std::abs(threshold_angle(6) - kHalfPi);
    r.witness["threshold6_minus_half_pi"] = threshold_gap;
    if (threshold_gap > 1e-12) {
        fold(r, -threshold_gap);
    }
    double replacement = kInf;
    double instance = kInf;
    double combined = kInf;
    for (int i = 0; i <= points; ++i) {
        for (int j = 0; i + j <= points; ++j) {
            const double a1 = kPi * i / points;
            const double a2 = kPi * j / points;
            const auto m = base_case_margins(a1, a2);
            replacement = std::min(replacement, m.replacement);
            instance = std::min(instance, m.threshold_instance);
            if (m.combined < combined) {
                combined = m.combined;
                r.witness["a1"] = a1;
                r.witness["a2"] = a2;
            }
        }
    }
    fold(r, replacement);
    fold(r, instance);
    fold(r, combined);
    r.witness["replacement_margin"] = replacement;
    r.witness["threshold_instance_margin"] = instance;
    r.witness["combined_margin"] = combined;
    r.notes = "n=2 vacuous; n=3 via quadrilateral-to-hexagon replacement and the threshold-angle instance";
    settle(r);
    return r;
}

// --- the octagon perimeter ---------------------------------------------------------

namespace {
void check_octagon_domain(double x) {
    if (!(x > 0.0) || !(x < 6.0 * kPi)) {
        throw DomainError("phi: x must lie in (0, 6pi)");
    }
}
}  // namespace

double phi(double x) {
    check_octagon_domain(x);
    return perim_regular(8, x);
}

double phi_prime(double x) {
    check_octagon_domain(x);
    return h_n(8, x);
}

double phi_second(double x) {
    check_octagon_domain(x);
    const double c8 = std::cos(kPi / 8.0);
    const double s = std::sin((6.0 * kPi - x) / 16.0);
    const double co = std::cos((6.0 * kPi - x) / 16.0);
    const double w = (2.0 * kPi + x) / 16.0;
    // cos^2(pi/8) - sin^2((6pi - x)/16), written without cancellation.
    const double d = std::sin(w + kPi / 8.0) * std::sin(w - kPi / 8.0);
    return c8 / (16.0 * s * s * std::sqrt(d)) - c8 * co * co / (16.0 * d * std::sqrt(d));
}

double phi_tilde(double x) { return x * phi_prime(x) - phi(x); }

RootResult phi_tilde_root(double tol) { return find_root(phi_tilde, 9.0, 10.0, tol); }

VerificationReport verify_lemma_6_3(int points, double tol) {
    require(points >= 2, "verify_lemma_6_3: points must be >= 2");
    auto r = make_report(LemmaId::L6_3);
    r.params["bracket_lo"] = 9.0;
    r.params["bracket_hi"] = 10.0;
    r.params["tol"] = tol;
    r.params["points"] = points;

    const auto root = phi_tilde_root(tol);
    const double x0 = root.root;
    r.witness["x0"] = x0;
    r.witness["residual"] = root.residual;
    r.witness["iterations"] = root.iterations;
    r.witness["phi_tilde_9"] = phi_tilde(9.0);
    r.witness["phi_tilde_10"] = phi_tilde(10.0);

    fold(r, certify_sign(phi_tilde, 0.0, x0, points, Property::negative, Endpoints::open), "negative_before_x0");
    fold(r, certify_sign(phi_tilde, x0, 6.0 * kPi, points, Property::positive, Endpoints::open),
         "positive_after_x0");
    fold(r, x0 - 2.0 * kPi);
    r.witness["x0_minus_2pi"] = x0 - 2.0 * kPi;

    // cos^2(pi/8) lies below the supremum of sin^2(u)(1 + cos^2(u)) at u = 3pi/8.
    const double codomain_gap = square(std::sin(3.0 * kPi / 8.0)) * (1.0 + square(std::cos(3.0 * kPi / 8.0))) -
                                square(std::cos(kPi / 8.0));
    r.witness["codomain_gap"] = codomain_gap;
    fold(r, codomain_gap);

    // phi_tilde' = x phi'' changes sign once, from - to +.
    const auto inflection = find_root(phi_second, 1e-3, 9.0, tol);
    r.witness["phi_second_root"] = inflection.root;
    fold(r, certify_sign(phi_second, 0.0, inflection.root, points, Property::negative, Endpoints::open),
         "phi_second_negative");
    fold(r, certify_sign(phi_second, inflection.root, 6.0 * kPi, points, Property::positive, Endpoints::open),
         "phi_second_positive");
    r.notes = "unique root of x phi'(x) - phi(x) on (0, 6pi); sign pattern certified on grid";
    settle(r);
    return r;
}

VerificationReport verify_lemma_6_2_phi(double a, int points) {
    require(a > 0.0 && a < 6.0 * kPi, "verify_lemma_6_2_phi: a must lie in (0, 6pi)");
    require(points >= 3, "verify_lemma_6_2_phi: points must be >= 3");
    auto r = make_report(LemmaId::L6_2_phi);
    r.params["a"] = a;
    r.params["points"] = points;
    const auto chord = verify_chord_property([](double x) { return perim_regular(8, x); }, 0.0, a, points);
    fold(r, chord.above_chord, "above_chord");
    fold(r, chord.symmetric, "symmetric_sum");
    r.notes = "octagon perimeter above its chord from the origin; certified on grid";
    settle(r);
    return r;
}

double f2m(int m, double a, double x) { return perim_regular(4, x) + perim_regular(2 * m, a - x); }

VerificationReport verify_f2m_min(int m, double a, int points) {
    require(m >= 4, "verify_f2m_min: m must be >= 4");
    require(a > 0.0 && a < (2.0 * m - 2.0) * kPi, "verify_f2m_min: a must lie in (0, (2m-2)pi)");
    require(points >= 2, "verify_f2m_min: points must be >= 2");
    auto r = make_report(LemmaId::P6_1);
    r.params["m"] = m;
    r.params["a"] = a;
    r.params["points"] = points;

    const double b = std::min(2.0 * kPi, a);
    const double f0 = f2m(m, a, 0.0);
    double worst = kInf;
    double argmin = 0.0;
    for (int i = 1; i < points; ++i) {
        const double x = b * i / points;
        const double margin = f2m(m, a, x) - f0;
        if (margin < worst) {
            worst = margin;
            argmin = x;
        }
    }
    fold(r, worst);
    r.witness["f_at_0"] = f0;
    r.witness["worst_x"] = argmin;
    r.notes = "f_{2,m} minimized at 0 on [0, min(2pi, a)); certified on grid";
    settle(r);
    return r;
}

// --- concavity in the half-side count ----------------------------------------------

double a_c(double c) {
    if (!(c > 1.0)) {
        throw DomainError("a_c: c must exceed 1");
    }
    return kPi / (2.0 * std::acos(1.0 / c));
}

double phi_c(double c, double x) {
    const double lo = a_c(c);
    if (!(x >= lo * (1.0 - 1e-12))) {
        throw DomainError("phi_c: x must be >= a_c");
    }
    return 2.0 * x * acosh_clamped(c * std::cos(kPi / (2.0 * x)));
}

double phi_c_second(double c, double x) {
    if (!(x > a_c(c))) {
        throw DomainError("phi_c'': x must exceed a_c");
    }
    const double s = std::sin(kPi / (2.0 * x));
    const double co = std::cos(kPi / (2.0 * x));
    const double root = std::sqrt(c * c * co * co - 1.0);
    const double x3 = x * x * x;
    const double pi2 = kPi * kPi;
    return -pi2 * c * c * s * s / (4.0 * x3 * (c * co - 1.0) * root) -
           pi2 * c * c * s * s / (4.0 * x3 * (c * co + 1.0) * root) - pi2 * c * co / (2.0 * x3 * root);
}

VerificationReport verify_lemma_7_1(double c, double x_hi, int points) {
    require(c > 1.0, "verify_lemma_7_1: c must exceed 1");
    const double lo = a_c(c);
    require(x_hi > lo, "verify_lemma_7_1: x_hi must exceed a_c");
    require(points >= 2, "verify_lemma_7_1: points must be >= 2");
    auto r = make_report(LemmaId::L7_1);
    r.params["c"] = c;
    r.params["x_hi"] = x_hi;
    r.params["points"] = points;
    r.witness["a_c"] = lo;

    const auto f = [c](double x) { return phi_c(c, x); };
    const auto cert = certify_concave(f, lo, x_hi, points, Endpoints::open_lo);
    fold(r, cert, "midpoint");

    const auto xs = uniform_grid(lo, x_hi, points, Endpoints::open_lo);
    double max_second = -kInf;
    int agree = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double mid = 0.5 * (xs[i] + xs[i + 1]);
        const double gap = f(mid) - 0.5 * (f(xs[i]) + f(xs[i + 1]));
        const double second =
            std::max({phi_c_second(c, xs[i]), phi_c_second(c, mid), phi_c_second(c, xs[i + 1])});
        if (second > max_second) {
            max_second = second;
            r.witness["second_at"] = mid;
        }
        if ((gap > 0.0) == (second < 0.0)) {
            ++agree;
        }
    }
    fold(r, -max_second);
    r.witness["max_second_derivative"] = max_second;
    r.witness["cells"] = static_cast<double>(xs.size() - 1);
    r.witness["agreeing_cells"] = agree;
    if (agree != static_cast<int>(xs.size()) - 1) {
        fold(r, -1.0);
    }
    r.notes = "phi_c strictly concave; midpoint test and closed-form second derivative on grid";
    settle(r);
    return r;
}

PsiDomain psi_domain(int n, double theta1, double theta2) {
    require(n >= 2, "psi: n must be >= 2");
    require(theta1 > 0.0 && theta1 < kPi && theta2 > 0.0 && theta2 < kPi, "psi: angles must lie in (0, pi)");
    PsiDomain d;
    d.c1 = 1.0 / std::sin(theta1 / 2.0);
    d.c2 = 1.0 / std::sin(theta2 / 2.0);
    d.b1 = std::max(2.0, a_c(d.c1));
    d.b2 = std::min(static_cast<double>(n), n + 2.0 - a_c(d.c2));
    if (!(d.b1 < d.b2)) {
        throw ParameterError("psi: empty domain [b1, b2]");
    }
    return d;
}

double psi(int n, double theta1, double theta2, double x) {
    const auto d = psi_domain(n, theta1, theta2);
    return phi_c(d.c1, x) + phi_c(d.c2, n + 2.0 - x);
}

VerificationReport verify_psi_endpoints(int n, double theta1, double theta2, int points) {
    require(points >= 3, "psi: points must be >= 3");
    const auto d = psi_domain(n, theta1, theta2);
    auto r = make_report(LemmaId::PSI_ENDPOINTS);
    r.params["n"] = n;
    r.params["theta1"] = theta1;
    r.params["theta2"] = theta2;
    r.params["points"] = points;
    r.witness["b1"] = d.b1;
    r.witness["b2"] = d.b2;

    const auto f = [&](double x) { return phi_c(d.c1, x) + phi_c(d.c2, n + 2.0 - x); };
    fold(r, certify_concave(f, d.b1, d.b2, points), "concave");

    const double at_b1 = f(d.b1);
    const double at_b2 = f(d.b2);
    const double endpoint_min = std::min(at_b1, at_b2);
    r.witness["psi_b1"] = at_b1;
    r.witness["psi_b2"] = at_b2;

    const auto xs = uniform_grid(d.b1, d.b2, points);
    double interior_min = kInf;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const double v = f(xs[i]);
        if (v < interior_min) {
            interior_min = v;
            r.witness["interior_argmin"] = xs[i];
        }
    }
    r.witness["interior_min"] = interior_min;
    fold(r, interior_min - endpoint_min);
    r.notes = "psi concave on [b1, b2], minimum at an endpoint; certified on grid";
    settle(r);
    return r;
}

// --- angle balance -----------------------------------------------------------------------

AngleBalance angle_balance(const Partition& partition, int n) {
    partition.validate();
    if (2 * n != partition.merged_sides()) {
        throw IdentityViolationError("side counts violate 2n = 4(1-k) + 2 sum m_i");
    }
    const double total = partition.total_area();
    if (!(total < (2.0 * n - 2.0) * kPi)) {
        throw DomainError("angle_balance: total area exceeds the 2n-gon's domain");
    }
    AngleBalance out;
    out.theta = ((2.0 * n - 2.0) * kPi - total) / (2.0 * n);
    out.theta_min = kInf;
    out.theta_max = -kInf;
    double weighted = 0.0;
    for (const auto& p : partition.pieces) {
        const double theta_i = interior_angle(p.sides(), p.area);
        weighted += p.m * theta_i;
        out.theta_min = std::min(out.theta_min, theta_i);
        out.theta_max = std::max(out.theta_max, theta_i);
    }
    out.residual = std::abs(weighted - n * out.theta - (partition.k() - 1) * kPi);
    out.non_acute = out.theta >= kHalfPi;
    return out;
}

Partition random_balanced_partition(int k, SplitSampler& sampler) {
    require(k >= 1, "random partition: k must be >= 1");
    for (;;) {
        Shape shape(static_cast<std::size_t>(k));
        int sum = 0;
        for (auto& m : shape) {
            m = sampler.uniform_int(2, 8);
            sum += m;
        }
        const int n = 2 - 2 * k + sum;
        const double total = sampler.uniform() * (2.0 * n - 2.0) * kPi;
        try {
            return sampler.split(shape, total, 1000);
        } catch (const ParameterError&) {
            continue;
        }
    }
}

VerificationReport verify_angle_balance(int k_max, int samples, std::uint64_t seed) {
    require(k_max >= 1, "angle balance: k_max must be >= 1");
    require(samples >= 1, "angle balance: samples must be >= 1");
    auto r = make_report(LemmaId::ANGLE_BALANCE, 1e-12);
    r.params["k_max"] = k_max;
    r.params["samples"] = samples;
    r.params["seed"] = static_cast<double>(seed);

    SplitSampler sampler(seed);
    double max_residual = 0.0;
    int non_acute = 0;
    for (int k = 1; k <= k_max; ++k) {
        for (int s = 0; s < samples; ++s) {
            const auto partition = random_balanced_partition(k, sampler);
            const int n = partition.merged_sides() / 2;
            const auto ab = angle_balance(partition, n);
            max_residual = std::max(max_residual, ab.residual);
            fold(r, kAngleBalanceResidualTol - ab.residual);
            if (ab.non_acute) {
                ++non_acute;
                fold(r, ab.theta - ab.theta_min);
                fold(r, ab.theta_max - kHalfPi);
            }
        }
    }
    r.witness["max_residual"] = max_residual;
    r.witness["non_acute_draws"] = non_acute;
    r.notes = "sum m_i theta_i = n theta + (k-1)pi on random partitions";
    settle(r);
    return r;
}

}  // namespace hypergon
