#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace treevol {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

namespace detail {

// zeta(2n) for n = 1..kZetaTerms, via Euler-Maclaurin tail summation.
inline constexpr int kZetaTerms = 48;

inline const std::array<double, kZetaTerms + 1>& even_zeta_table() {
    static const std::array<double, kZetaTerms + 1> table = [] {
        std::array<double, kZetaTerms + 1> z{};
        // B_2, B_4, ..., B_12
        const double bern[6] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                                -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
        const int N = 16;
        for (int n = 1; n <= kZetaTerms; ++n) {
            const double s = 2.0 * n;
            double sum = 0.0;
            for (int k = 1; k < N; ++k) sum += std::pow(k, -s);
            sum += std::pow(N, 1.0 - s) / (s - 1.0);
            sum += 0.5 * std::pow(N, -s);
            // correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
            double rising = s;         // s(s+1)...(s+2j-2), built incrementally
            double fact = 2.0;         // (2j)!
            for (int j = 1; j <= 6; ++j) {
                sum += bern[j - 1] / fact * rising * std::pow(N, -s - 2 * j + 1);
                rising *= (s + 2 * j - 1) * (s + 2 * j);
                fact *= (2 * j + 1) * (2 * j + 2);
            }
            z[n] = sum;
        }
        return z;
    }();
    return table;
}

// L on (0, pi/2]: L(t) = t - t log(2t) + t * sum_n zeta(2n)/(n(2n+1)) (t/pi)^{2n}
inline double lobachevsky_core(double t) {
    if (t == 0.0) return 0.0;
    const auto& zeta = even_zeta_table();
    const double x = (t / kPi) * (t / kPi);
    double xn = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= kZetaTerms; ++n) {
        xn *= x;
        const double term = zeta[n] / (n * (2.0 * n + 1.0)) * xn;
        sum += term;
        if (term < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return t - t * std::log(2.0 * t) + t * sum;
}

}  // namespace detail

/// Lobachevsky function L(theta) = -int_0^theta log|2 sin t| dt.
/// Odd, pi-periodic; absolute error well below 1e-12 everywhere.
inline double lobachevsky(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("lobachevsky: non-finite argument");
    // reduce mod pi into [-pi/2, pi/2], then use oddness
    double r = std::remainder(theta, kPi);
    double s = 1.0;
    if (r < 0.0) {
        r = -r;
        s = -1.0;
    }
    return s * detail::lobachevsky_core(r);
}

/// Volume of the hyperbolic regular ideal n-bipyramid, vol(B_n) = 2n L(pi/n).
/// vol(B_2) = 0; strictly increasing in n; vol(B_n) < 2 pi log(n/2) for n >= 3.
inline double bipyramid_volume(long long n) {
    if (n < 2) throw std::domain_error("bipyramid_volume: need n >= 2");
    if (n == 2) return 0.0;  // degenerate bipyramid, L(pi/2) = 0
    return 2.0 * static_cast<double>(n) * lobachevsky(kPi / static_cast<double>(n));
}

/// v_tet = 3 L(pi/3): volume of the regular ideal tetrahedron (~1.01494).
inline double v_tet() {
    static const double v = 3.0 * lobachevsky(kPi / 3.0);
    return v;
}

/// v_oct = 8 L(pi/4) = vol(B_4): volume of the regular ideal octahedron (~3.66386).
inline double v_oct() {
    static const double v = 8.0 * lobachevsky(kPi / 4.0);
    return v;
}

}  // namespace treevol
