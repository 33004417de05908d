#pragma once

// Scalar reference for the vectorized Box-Muller kernel. log and sin/cos use
// fdlibm's polynomial kernels written without FMA, so the AVX2 variant,
// doing the same operations in the same order, is bit-identical.

#include <bit>
#include <cmath>
#include <cstdint>

namespace fptlab::detail {

inline constexpr double ln2_hi = 6.93147180369123816490e-01;
inline constexpr double ln2_lo = 1.90821492927058770002e-10;
inline constexpr double lg1 = 6.666666666666735130e-01;
inline constexpr double lg2 = 3.999999999940941908e-01;
inline constexpr double lg3 = 2.857142874366239149e-01;
inline constexpr double lg4 = 2.222219843214978396e-01;
inline constexpr double lg5 = 1.818357216161805012e-01;
inline constexpr double lg6 = 1.531383769920937332e-01;
inline constexpr double lg7 = 1.479819860511658591e-01;

inline constexpr double s1 = -1.66666666666666324348e-01;
inline constexpr double s2 = 8.33333333332248946124e-03;
inline constexpr double s3 = -1.98412698298579493134e-04;
inline constexpr double s4 = 2.75573137070700676789e-06;
inline constexpr double s5 = -2.50507602534068634195e-08;
inline constexpr double s6 = 1.58969099521155010221e-10;

inline constexpr double c1 = 4.16666666666666019037e-02;
inline constexpr double c2 = -1.38888888888741095749e-03;
inline constexpr double c3 = 2.48015872894767294178e-05;
inline constexpr double c4 = -2.75573143513906633035e-07;
inline constexpr double c5 = 2.08757232129817482790e-09;
inline constexpr double c6 = -1.13596475577881948265e-11;

inline constexpr double two_pi = 6.28318530717958647692;
inline constexpr double sqrt2 = 1.41421356237309504880;

/// Natural log for positive normal x.
inline double log_positive(double x) noexcept
{
    const auto bits = std::bit_cast<std::uint64_t>(x);
    double k = static_cast<double>(static_cast<std::int64_t>(bits >> 52) - 1023);
    double m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) | 0x3FF0000000000000ull);
    if (m > sqrt2) {
        m = m * 0.5;
        k = k + 1.0;
    }
    const double f = m - 1.0;
    const double s = f / (2.0 + f);
    const double z = s * s;
    const double w = z * z;
    const double t1 = w * (lg2 + w * (lg4 + w * lg6));
    const double t2 = z * (lg1 + w * (lg3 + w * (lg5 + w * lg7)));
    const double r = t2 + t1;
    const double hfsq = 0.5 * f * f;
    return k * ln2_hi - ((hfsq - (s * (hfsq + r) + k * ln2_lo)) - f);
}

/// sin and cos on |x| <= pi/4.
inline void sincos_reduced(double x, double& sn, double& cs) noexcept
{
    const double z = x * x;
    const double v = z * x;
    const double rs = s2 + z * (s3 + z * (s4 + z * (s5 + z * s6)));
    sn = x + v * (s1 + z * rs);
    const double rc = z * (c1 + z * (c2 + z * (c3 + z * (c4 + z * (c5 + z * c6)))));
    const double hz = 0.5 * z;
    const double w = 1.0 - hz;
    cs = w + (((1.0 - w) - hz) + z * rc);
}

/// sin(2 pi u) and cos(2 pi u) for u in [0, 1].
inline void sincos_turns(double u, double& sn, double& cs) noexcept
{
    double q = static_cast<double>(static_cast<std::int64_t>(4.0 * u + 0.5));
    const double x = two_pi * (u - 0.25 * q);
    if (q == 4.0) q = 0.0;
    double s, c;
    sincos_reduced(x, s, c);
    const bool swap = q == 1.0 || q == 3.0;
    const bool neg_s = q == 2.0 || q == 3.0;
    const bool neg_c = q == 1.0 || q == 2.0;
    double rs = swap ? c : s;
    double rc = swap ? s : c;
    if (neg_s) rs = -rs;
    if (neg_c) rc = -rc;
    sn = rs;
    cs = rc;
}

/// 52-bit uniform on (0, 1) from two 32-bit words: (x + 1/2) 2^-52.
inline double open_unit_52(std::uint32_t hi, std::uint32_t lo) noexcept
{
    const std::uint64_t x = ((std::uint64_t{hi} << 32) | lo) >> 12;
    return (std::bit_cast<double>(x | 0x3FF0000000000000ull) - 1.0) + 0x1.0p-53;
}

/// Box-Muller: (r cos theta, r sin theta), r = sqrt(-2 ln u1), theta = 2 pi u2.
inline void box_muller(double u1, double u2, double& z0, double& z1) noexcept
{
    const double r = std::sqrt(-2.0 * log_positive(u1));
    double sn, cs;
    sincos_turns(u2, sn, cs);
    z0 = r * cs;
    z1 = r * sn;
}

} // namespace fptlab::detail
