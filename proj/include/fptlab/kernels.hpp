#pragma once

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant chosen at runtime. The AVX2 kernels avoid FMA so that the
// element-wise ones are bit-identical to the scalar reference; only dot()
// differs (summation order).

#include <cstddef>
#include <cstdint>
#include <span>

namespace fptlab::kernels {

enum class isa { scalar, avx2 };

struct table {
    isa id;
    // out[i] = x[i] + shift * profile[i]
    void (*shift_by_profile)(const double* x, const double* profile, double shift, double* out,
                             std::size_t n);
    // smallest i in [begin, n) with x[i] > s[i], n if none
    std::size_t (*first_exceedance)(const double* x, const double* s, std::size_t begin,
                                    std::size_t n);
    // complex z[k] (interleaved re, im) *= w[k]
    void (*scale_complex)(double* z, const double* w, std::size_t n);
    double (*dot)(const double* a, const double* b, std::size_t n);
    // Philox4x32-10 blocks [first, first + n_blocks) of the stream with
    // counter words 2, 3 = (stream_lo, stream_hi), each turned into a
    // Box-Muller pair: out[2b], out[2b + 1]
    void (*normal_blocks)(const std::uint32_t* key, std::uint32_t stream_lo,
                          std::uint32_t stream_hi, std::uint64_t first, std::size_t n_blocks,
                          double* out);
};

const table& scalar_table() noexcept;

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available() noexcept;

/// AVX2 table; falls back to the scalar table when unavailable.
const table& avx2_table() noexcept;

/// Best table for this machine, chosen once.
const table& active() noexcept;

const char* isa_name(isa id) noexcept;

inline void shift_by_profile(std::span<const double> x, std::span<const double> profile,
                             double shift, std::span<double> out)
{
    active().shift_by_profile(x.data(), profile.data(), shift, out.data(), out.size());
}

inline std::size_t first_exceedance(std::span<const double> x, std::span<const double> s,
                                    std::size_t begin = 0)
{
    return active().first_exceedance(x.data(), s.data(), begin, x.size());
}

inline double dot(std::span<const double> a, std::span<const double> b)
{
    return active().dot(a.data(), b.data(), a.size());
}

} // namespace fptlab::kernels
