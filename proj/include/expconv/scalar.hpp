#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "expconv/errors.hpp"

namespace expconv {

using Complex = std::complex<double>;

// Tolerances shared across modules.
inline constexpr double kRootMergeTol = 1e-8;      // root identity inside signals / multisets
inline constexpr double kClusterTolDefault = 1e-6; // cluster() default threshold
inline constexpr double kSolverClusterTol = 1e-5;  // IVP pipeline default (knob: cluster_tol)
inline constexpr double kPivotRelTol = 1e-13;      // singularity threshold in elimination
inline constexpr double kResidualRelTol = 1e-8;    // accepted ||VA-B||_inf / (1+||B||_inf)
inline constexpr int kMaxExactDegree = 20;         // factorials exact in double up to here

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) throw Error(std::string(what) + ": non-finite value");
}

/// base^exp for integer exp >= 0 by binary powering.
inline Complex ipow(Complex base, long long exp) {
    Complex acc{1.0, 0.0};
    while (exp > 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

/// Root identity test used when merging signal terms and multisets.
inline bool same_root(Complex a, Complex b, double tol = kRootMergeTol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

/// Exact integer binomial; throws BinomialOverflow past 64 bits.
inline std::int64_t binom_i64(std::int64_t n, int k) {
    if (k < 0 || n < 0) return 0;
    if (k > n) return 0;
    if (k > n - k) k = static_cast<int>(n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) stays integral before the division by i
        std::int64_t mul;
        if (__builtin_mul_overflow(r, n - k + i, &mul))
            throw BinomialOverflow("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                   ") exceeds 64-bit range");
        r = mul / i;
    }
    return r;
}

inline double binom(std::int64_t n, int k) {
    return static_cast<double>(binom_i64(n, k));
}

/// n! exact in double; degree cap shared with basis conversions.
inline double factorial(int n) {
    static const std::array<double, kMaxExactDegree + 1> table = [] {
        std::array<double, kMaxExactDegree + 1> t{};
        t[0] = 1.0;
        for (int i = 1; i <= kMaxExactDegree; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n > kMaxExactDegree)
        throw DegreeTooHigh("factorial(" + std::to_string(n) + ") outside exact range 0.." +
                            std::to_string(kMaxExactDegree));
    return table[static_cast<std::size_t>(n)];
}

} // namespace expconv
