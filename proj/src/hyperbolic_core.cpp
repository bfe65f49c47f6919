#include "hypergon/hyperbolic_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypergon/errors.hpp"

namespace hypergon {
namespace {

void check_polygon(double n, double a, const char* what) {
    if (!(n > 2.0)) {
        throw DomainError(std::string(what) + ": side count must exceed 2, got " + std::to_string(n));
    }
    if (!(a >= 0.0) || !(a < (n - 2.0) * kPi)) {
        throw DomainError(std::string(what) + ": area " + std::to_string(a) + " outside [0, " +
                          std::to_string((n - 2.0) * kPi) + ")");
    }
}

void check_sides(int n, const char* what) {
    if (n < 3) {
        throw DomainError(std::string(what) + ": side count must be >= 3, got " + std::to_string(n));
    }
}

// cos(pi/n)/sin(((n-2)pi - a)/(2n)) - 1, written as a product so that the
// a -> 0 limit is exact and free of cancellation:
//   cos(pi/n) - cos(pi/n + a/(2n)) = 2 sin(pi/n + a/(4n)) sin(a/(4n)).
double perimeter_excess(double n, double a) {
    const double base = kPi / n;
    return 2.0 * std::sin(base + a / (4.0 * n)) * std::sin(a / (4.0 * n)) / std::cos(base + a / (2.0 * n));
}

double perimeter_impl(double n, double a) {
    if (a == 0.0) {
        return 0.0;
    }
    const double delta = perimeter_excess(n, a);
    // acosh(1 + d) = log1p(d + sqrt(d(d + 2)))
    return 2.0 * n * std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

double derivative_impl(double n, double x) {
    const double base = kPi / n;
    const double w = (2.0 * kPi + x) / (2.0 * n);
    // cos^2(pi/n) - cos^2(w) = sin(w + pi/n) sin(w - pi/n)
    return std::cos(base) * std::tan(w) / std::sqrt(std::sin(w + base) * std::sin(w - base));
}

}  // namespace

double acosh_clamped(double arg) {
    if (arg >= 1.0) {
        return std::acosh(arg);
    }
    if (arg >= 1.0 - kAcoshClampWindow) {
        return 0.0;
    }
    throw DomainError("acosh argument " + std::to_string(arg) + " below 1");
}

double interior_angle(int n, double a) {
    check_sides(n, "interior_angle");
    check_polygon(n, a, "interior_angle");
    return ((n - 2) * kPi - a) / n;
}

double area_from_angle(int n, double theta) {
    check_sides(n, "area_from_angle");
    if (!(theta > 0.0) || !(theta <= (n - 2) * kPi / n)) {
        throw DomainError("area_from_angle: angle " + std::to_string(theta) + " outside (0, (n-2)pi/n]");
    }
    return std::max(0.0, (n - 2) * kPi - n * theta);
}

double perim_regular(int n, double a) {
    check_sides(n, "perim_regular");
    check_polygon(n, a, "perim_regular");
    return perimeter_impl(n, a);
}

double perim_continuous(double n, double a) {
    check_polygon(n, a, "perim_continuous");
    return perimeter_impl(n, a);
}

double h_n(int n, double x) {
    check_sides(n, "h_n");
    if (!(x > 0.0) || !(x < (n - 2) * kPi)) {
        throw DomainError("h_n: area " + std::to_string(x) + " outside (0, (n-2)pi)");
    }
    return derivative_impl(n, x);
}

double h_continuous(double n, double x) {
    if (!(n > 2.0) || !(x > 0.0) || !(x < (n - 2.0) * kPi)) {
        throw DomainError("h_continuous: (n, x) outside n > 2, 0 < x < (n-2)pi");
    }
    return derivative_impl(n, x);
}

double mg(int g) {
    if (g < 2) {
        throw DomainError("mg: genus must be >= 2, got " + std::to_string(g));
    }
    const double sides = 8.0 * g - 4.0;
    return sides * std::acosh(2.0 * std::cos(2.0 * kPi / sides) + 1.0);
}

double threshold_angle(int k) {
    if (k < 3) {
        throw DomainError("threshold_angle: k must be >= 3, got " + std::to_string(k));
    }
    return std::acos(-1.0 + 2.0 * std::sin(kPi / k));
}

RegularPolygon::RegularPolygon(int sides, double area) : sides_(sides), area_(area) {
    check_sides(sides, "RegularPolygon");
    check_polygon(sides, area, "RegularPolygon");
}

double RegularPolygon::interior_angle() const { return hypergon::interior_angle(sides_, area_); }

double RegularPolygon::perimeter() const { return perimeter_impl(sides_, area_); }

GenusParams GenusParams::from_genus(int g) {
    if (g < 2) {
        throw DomainError("genus must be >= 2, got " + std::to_string(g));
    }
    return GenusParams{g, 8 * g - 4, 4.0 * kPi * (g - 1)};
}

}  // namespace hypergon
