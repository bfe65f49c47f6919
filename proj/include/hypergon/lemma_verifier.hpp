#pragma once

// One routine per analytic step of the perimeter inequality. Each returns a
// VerificationReport whose params fully determine the check.

#include <cstdint>

#include "hypergon/analysis_kit.hpp"
#include "hypergon/hyperbolic_core.hpp"
#include "hypergon/partition_engine.hpp"
#include "hypergon/report.hpp"

namespace hypergon {

// --- trigonometric inequality ------------------------------------------

// RHS - LHS of 1 + sin^2 y < cos^2 x / cos^2 y + (x tan x)/(y tan y) sin^2 y.
// Throws ParameterError unless x in (0, pi/4] and y in (x, pi/2).
double lemma_4_2_margin(double x, double y);

// Triangular grid x in (0, pi/4], y in (x, pi/2), plus sin y cos y <= y on
// the y samples. Grids must be >= 16.
VerificationReport verify_lemma_4_2(int grid_x = 64, int grid_y = 64);

// --- derivative monotonicity in the side count -------------------------

// H_x(t) = cos^2(pi/t) tan^2(c pi/(2t)) / (cos^2(pi/t) - cos^2(c pi/(2t))),
// c = 2 + x/pi, for t > c.
double h_squared(double x, double t);

VerificationReport verify_lemma_4_3(double x, double t_lo, double t_hi, int points = kDefaultGridPoints);

// g_n(x) = Perim(P_n(x)) - Perim(P_{n+1}(x)).
double perimeter_gap(int n, double x);

// g_n increasing on (0, (n-2)pi), g_n(0) = 0 and h_n > h_{n+1} on the grid.
VerificationReport verify_prop_4_1(int n, int points = kDefaultGridPoints);

// f_{m,n}(x) = Perim(P_{2m}(x)) + Perim(P_{2(n+2-m)}(a - x)).
double f_mn(int m, int n, double a, double x);

// Minimum-at-0 propagation: for n = 2m..n_max, f_{m,n} has its grid minimum
// at 0 and f_{m,n} - f_{m,n+1} has its grid maximum at 0.
VerificationReport verify_corollary_4_4(int m, double a, int n_max, int points = 128);

// --- base cases -----------------------------------------------------------

// p_t(x) = 2x acosh(cos(pi/x) / sin(((x-2)pi - t)/(2x))) for x > t/pi + 2.
double p_t(double t, double x);

VerificationReport verify_lemma_5_1(double t, double x_lo, double x_hi, int points = kDefaultGridPoints);

// Two regular k-gons against the merged one for every total area whose
// angle clears threshold_angle(k).
VerificationReport verify_theorem_5_2_instance(int k, int points = 128);

struct BaseCaseMargins {
    double replacement = 0.0;         // Perim(P_4(a1)) - Perim(P_6(a1))
    double threshold_instance = 0.0;  // Perim(P_6(a1)) + Perim(P_6(a2)) - Perim(P_6(a1+a2))
    double combined = 0.0;            // Perim(P_4(a1)) + Perim(P_6(a2)) - Perim(P_6(a1+a2))
};

BaseCaseMargins base_case_margins(double a1, double a2);

// n = 2: a non-acute regular quadrilateral is degenerate.
// n = 3: every split (a1, a2) with a1 + a2 <= pi (hexagon angle >= pi/2).
VerificationReport verify_base_cases(int points = 64);

// --- the octagon perimeter and its tangent from the origin -----------------

double phi(double x);         // Perim(P_8(x)), 0 < x < 6pi
double phi_prime(double x);   // h_8(x)
double phi_second(double x);  // closed-form second derivative
double phi_tilde(double x);   // x phi'(x) - phi(x)

// Root of phi_tilde bracketed in [9, 10].
RootResult phi_tilde_root(double tol = kDefaultRootTol);

// Root plus sign evidence for uniqueness on (0, 6pi).
VerificationReport verify_lemma_6_3(int points = kDefaultGridPoints, double tol = kDefaultRootTol);

// Chord domination of phi on [0, a].
VerificationReport verify_lemma_6_2_phi(double a = 2.0 * kPi, int points = kDefaultGridPoints);

// f_{2,m}(x) = Perim(P_4(x)) + Perim(P_{2m}(a - x)).
double f2m(int m, double a, double x);

// f_{2,m}(x) >= f_{2,m}(0) on (0, min(2pi, a)). Requires m >= 4 and
// 0 < a < (2m-2)pi.
VerificationReport verify_f2m_min(int m, double a, int points = kDefaultGridPoints);

// --- concavity in the half-side count --------------------------------------

// a_c = pi / (2 acos(1/c)).
double a_c(double c);

// phi_c(x) = 2x acosh(c cos(pi/(2x))), x >= a_c.
double phi_c(double c, double x);

double phi_c_second(double c, double x);

VerificationReport verify_lemma_7_1(double c, double x_hi, int points = kDefaultGridPoints);

struct PsiDomain {
    double c1 = 0.0;
    double c2 = 0.0;
    double b1 = 0.0;  // max(2, a_{c1})
    double b2 = 0.0;  // min(n, n + 2 - a_{c2})
};

// Throws ParameterError when the interval [b1, b2] is empty.
PsiDomain psi_domain(int n, double theta1, double theta2);

// psi(x) = phi_{c1}(x) + phi_{c2}(n + 2 - x), c_i = 1/sin(theta_i / 2).
double psi(int n, double theta1, double theta2, double x);

VerificationReport verify_psi_endpoints(int n, double theta1, double theta2, int points = kDefaultGridPoints);

// --- angle balance ---------------------------------------------------------

struct AngleBalance {
    double theta = 0.0;  // angle of the regular 2n-gon of total area
    double residual = 0.0;
    double theta_min = 0.0;
    double theta_max = 0.0;
    bool non_acute = false;  // theta >= pi/2
};

// Throws IdentityViolationError unless 2n = 4(1-k) + 2 sum m_i.
AngleBalance angle_balance(const Partition& partition, int n);

inline constexpr double kAngleBalanceResidualTol = 1e-10;

// Random partition with k pieces, m_i in [2, 8] and total area uniform in
// [0, (2n-2)pi).
Partition random_balanced_partition(int k, SplitSampler& sampler);

VerificationReport verify_angle_balance(int k_max = 5, int samples = 100, std::uint64_t seed = 0);

}  // namespace hypergon
