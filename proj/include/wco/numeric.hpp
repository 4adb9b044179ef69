#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace wco {

using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Extended nonnegative arithmetic with measure-theoretic conventions:
//   0 * inf = 0,   t / 0 = inf (t > 0),   0 / 0 = 0.
inline double xmul(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
}

inline double xdiv(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
    if (std::isinf(num) && std::isinf(den)) return kInf;
    return num / den;
}

// std::pow already gives 0^0 = 1, 0^t = 0 and inf^t = inf for t > 0.
inline double xpow(double base, double expo) { return std::pow(base, expo); }

// Default tolerances; WCO_TOL in the environment overrides the exact-form one.
struct Tolerances {
    double exact = 1e-12;   // closed-form / pointwise identity checks
    double oracle = 1e-9;   // eigensolver-limited matrix comparisons
    static Tolerances from_env();
};

}  // namespace wco
