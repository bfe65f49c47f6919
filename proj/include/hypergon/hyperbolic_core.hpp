#pragma once

// Closed-form geometry of regular hyperbolic polygons.
//
// A regular polygon is identified by its side count n and its area a with
// 0 <= a < (n-2)pi. The interior angle follows from Gauss-Bonnet,
// a = (n-2)pi - n*theta, so it is always derived and never stored.

#include <numbers>

namespace hypergon {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// acosh arguments within this distance below 1 are treated as exactly 1.
inline constexpr double kAcoshClampWindow = 1e-12;

// acosh with the rounding window [1 - 1e-12, 1) mapped to 0.
double acosh_clamped(double arg);

// Interior angle ((n-2)pi - a)/n of the regular n-gon of area a.
double interior_angle(int n, double a);

// Area (n-2)pi - n*theta of the regular n-gon with interior angle theta.
double area_from_angle(int n, double theta);

// Perimeter 2n*acosh(cos(pi/n) / sin(((n-2)pi - a)/(2n))).
// Exactly 0 for a = 0.
double perim_regular(int n, double a);

// Same formula with a real-valued side count n > 2 and 0 <= a < (n-2)pi.
double perim_continuous(double n, double a);

// d/da perim_regular(n, a) for 0 < a < (n-2)pi. Diverges as a -> 0+.
double h_n(int n, double x);

// Real side count version of h_n.
double h_continuous(double n, double x);

// Perimeter of the regular right-angled (8g-4)-gon,
// (8g-4) * acosh(2cos(2pi/(8g-4)) + 1).
double mg(int g);

// acos(-1 + 2 sin(pi/k)), the angle threshold above which two regular
// k-gons beat the merged one.
double threshold_angle(int k);

class RegularPolygon {
public:
    // Throws DomainError unless n >= 3 and 0 <= area < (n-2)pi.
    RegularPolygon(int sides, double area);

    int sides() const noexcept { return sides_; }
    double area() const noexcept { return area_; }
    double interior_angle() const;
    double perimeter() const;
    bool degenerate() const noexcept { return area_ == 0.0; }

private:
    int sides_;
    double area_;
};

struct GenusParams {
    int genus;
    int sides;          // 8g - 4
    double area_total;  // 4pi(g - 1)

    static GenusParams from_genus(int g);
};

}  // namespace hypergon
