#include "fptlab/kernels.hpp"
#include "fptlab/philox.hpp"

namespace fptlab::kernels {
namespace {

void shift_by_profile_scalar(const double* x, const double* profile, double shift, double* out,
                             std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + shift * profile[i];
}

std::size_t first_exceedance_scalar(const double* x, const double* s, std::size_t begin,
                                    std::size_t n)
{
    for (std::size_t i = begin; i < n; ++i)
        if (x[i] > s[i]) return i;
    return n;
}

void scale_complex_scalar(double* z, const double* w, std::size_t n)
{
    for (std::size_t k = 0; k < n; ++k) {
        z[2 * k] *= w[k];
        z[2 * k + 1] *= w[k];
    }
}

double dot_scalar(const double* a, const double* b, std::size_t n)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void normal_blocks_scalar(const std::uint32_t* key, std::uint32_t stream_lo,
                          std::uint32_t stream_hi, std::uint64_t first, std::size_t n_blocks,
                          double* out)
{
    const philox_key k{key[0], key[1]};
    for (std::size_t b = 0; b < n_blocks; ++b) {
        const std::uint64_t index = first + b;
        const auto r = philox4x32_10({static_cast<std::uint32_t>(index),
                                      static_cast<std::uint32_t>(index >> 32), stream_lo, stream_hi},
                                     k);
        detail::box_muller(detail::open_unit_52(r[0], r[1]), detail::open_unit_52(r[2], r[3]),
                           out[2 * b], out[2 * b + 1]);
    }
}

constexpr table scalar{isa::scalar, shift_by_profile_scalar, first_exceedance_scalar,
                       scale_complex_scalar, dot_scalar, normal_blocks_scalar};

} // namespace

const table& scalar_table() noexcept { return scalar; }

const char* isa_name(isa id) noexcept
{
    switch (id) {
    case isa::scalar: return "scalar";
    case isa::avx2: return "avx2";
    }
    return "unknown";
}

} // namespace fptlab::kernels
