#pragma once

// Independent reference formulas for the tests. Everything here is written
// directly from the defining expressions in long double, without the
// cancellation-free rewrites used by the library.

#include <cmath>
#include <vector>

namespace oracle {

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

inline long double angle(int n, long double a) { return ((n - 2) * kPi - a) / n; }

inline long double perim(long double n, long double a) {
    if (a == 0.0L) return 0.0L;
    const long double theta = ((n - 2) * kPi - a) / n;
    return 2.0L * n * std::acosh(std::cos(kPi / n) / std::sin(theta / 2.0L));
}

inline long double mg(int g) {
    const int n = 8 * g - 4;
    // Right-angled n-gon: half-side from cosh(s/2) = cos(pi/n)/sin(pi/4).
    return 2.0L * n * std::acosh(std::sqrt(2.0L) * std::cos(kPi / n));
}

// Central difference of perim in long double.
inline long double dperim(long double n, long double a, long double h = 1e-7L) {
    return (perim(n, a + h) - perim(n, a - h)) / (2.0L * h);
}

inline long double phi(long double x) { return perim(8, x); }

inline long double phi_tilde(long double x) { return x * dperim(8, x) - phi(x); }

// Plain bisection, independent of the library's root finder.
template <class F>
long double bisect(F f, long double lo, long double hi, int iterations = 80) {
    long double flo = f(lo);
    for (int i = 0; i < iterations; ++i) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5L * (lo + hi);
}

// All non-decreasing k-tuples with entries >= 2 summing to total, found by
// scanning the whole box [2, total]^k.
inline std::vector<std::vector<int>> naive_shapes(int total, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(k, 2);
    while (true) {
        int sum = 0;
        bool sorted = true;
        for (int i = 0; i < k; ++i) {
            sum += t[i];
            if (i > 0 && t[i] < t[i - 1]) sorted = false;
        }
        if (sorted && sum == total) out.push_back(t);
        int pos = k - 1;
        while (pos >= 0 && t[pos] == total) {
            t[pos] = 2;
            --pos;
        }
        if (pos < 0) break;
        ++t[pos];
    }
    return out;
}

}  // namespace oracle
