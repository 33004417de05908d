#include "fptlab/kernels.hpp"

namespace fptlab::kernels {

#if defined(FPTLAB_HAVE_AVX2)
extern const table avx2_impl;
#endif

bool avx2_available() noexcept
{
#if defined(FPTLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    return ok;
#else
    return false;
#endif
}

const table& avx2_table() noexcept
{
#if defined(FPTLAB_HAVE_AVX2)
    if (avx2_available()) return avx2_impl;
#endif
    return scalar_table();
}

const table& active() noexcept
{
    static const table& chosen = avx2_available() ? avx2_table() : scalar_table();
    return chosen;
}

} // namespace fptlab::kernels
