// Compiled with -mavx2 only; never called unless the CPU reports AVX2.

#include "fptlab/detail/fastmath.hpp"
#include "fptlab/kernels.hpp"

#include <immintrin.h>

namespace fptlab::kernels {
namespace {

void shift_by_profile_avx2(const double* x, const double* profile, double shift, double* out,
                           std::size_t n)
{
    const __m256d vs = _mm256_set1_pd(shift);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vp = _mm256_loadu_pd(profile + i);
        _mm256_storeu_pd(out + i, _mm256_add_pd(vx, _mm256_mul_pd(vs, vp)));
    }
    for (; i < n; ++i) out[i] = x[i] + shift * profile[i];
}

std::size_t first_exceedance_avx2(const double* x, const double* s, std::size_t begin,
                                  std::size_t n)
{
    std::size_t i = begin;
    for (; i < n && (i & 3) != 0; ++i)
        if (x[i] > s[i]) return i;
    for (; i + 8 <= n; i += 8) {
        const __m256d c0 = _mm256_cmp_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(s + i), _CMP_GT_OQ);
        const __m256d c1 =
            _mm256_cmp_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(s + i + 4), _CMP_GT_OQ);
        const int mask = _mm256_movemask_pd(c0) | (_mm256_movemask_pd(c1) << 4);
        if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
    }
    for (; i < n; ++i)
        if (x[i] > s[i]) return i;
    return n;
}

void scale_complex_avx2(double* z, const double* w, std::size_t n)
{
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        // (w0, w0, w1, w1)
        const __m256d vw = _mm256_permute4x64_pd(
            _mm256_castpd128_pd256(_mm_loadu_pd(w + k)), _MM_SHUFFLE(1, 1, 0, 0));
        __m256d vz = _mm256_loadu_pd(z + 2 * k);
        _mm256_storeu_pd(z + 2 * k, _mm256_mul_pd(vz, vw));
    }
    for (; k < n; ++k) {
        z[2 * k] *= w[k];
        z[2 * k + 1] *= w[k];
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        acc1 = _mm256_add_pd(acc1,
                             _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
    }
    const __m256d acc = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

// Four Philox blocks at once, one per 64-bit lane; words live in the low
// 32 bits of each lane so _mm256_mul_epu32 gives the full 64-bit product.
struct philox_x4 {
    __m256i r0, r1, r2, r3;
};

inline philox_x4 philox_avx2(__m256i c0, __m256i c1, __m256i c2, __m256i c3,
                             const std::uint32_t* key)
{
    const __m256i m0 = _mm256_set1_epi64x(0xD2511F53);
    const __m256i m1 = _mm256_set1_epi64x(0xCD9E8D57);
    const __m256i low = _mm256_set1_epi64x(0xFFFFFFFF);
    std::uint32_t k0 = key[0];
    std::uint32_t k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        const __m256i p0 = _mm256_mul_epu32(c0, m0);
        const __m256i p1 = _mm256_mul_epu32(c2, m1);
        const __m256i n0 = _mm256_xor_si256(_mm256_xor_si256(_mm256_srli_epi64(p1, 32), c1),
                                            _mm256_set1_epi64x(k0));
        const __m256i n2 = _mm256_xor_si256(_mm256_xor_si256(_mm256_srli_epi64(p0, 32), c3),
                                            _mm256_set1_epi64x(k1));
        c1 = _mm256_and_si256(p1, low);
        c3 = _mm256_and_si256(p0, low);
        c0 = n0;
        c2 = n2;
    }
    return {c0, c1, c2, c3};
}

inline __m256d open_unit_52_avx2(__m256i hi, __m256i lo)
{
    const __m256i x = _mm256_srli_epi64(_mm256_or_si256(_mm256_slli_epi64(hi, 32), lo), 12);
    const __m256d one_plus =
        _mm256_castsi256_pd(_mm256_or_si256(x, _mm256_set1_epi64x(0x3FF0000000000000)));
    return _mm256_add_pd(_mm256_sub_pd(one_plus, _mm256_set1_pd(1.0)), _mm256_set1_pd(0x1.0p-53));
}

inline __m256d log_avx2(__m256d x)
{
    using namespace detail;
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i e = _mm256_srli_epi64(bits, 52);
    const __m256d e_d = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(e, _mm256_set1_epi64x(0x4330000000000000))),
        _mm256_set1_pd(0x1.0p52));
    __m256d k = _mm256_sub_pd(e_d, _mm256_set1_pd(1023.0));
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFF)),
                        _mm256_set1_epi64x(0x3FF0000000000000)));
    const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(sqrt2), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    k = _mm256_blendv_pd(k, _mm256_add_pd(k, _mm256_set1_pd(1.0)), big);

    const __m256d f = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
    const __m256d z = _mm256_mul_pd(s, s);
    const __m256d w = _mm256_mul_pd(z, z);
    auto c = [](double v) { return _mm256_set1_pd(v); };
    const __m256d t1 = _mm256_mul_pd(
        w, _mm256_add_pd(c(lg2), _mm256_mul_pd(w, _mm256_add_pd(c(lg4), _mm256_mul_pd(w, c(lg6))))));
    const __m256d t2 = _mm256_mul_pd(
        z, _mm256_add_pd(
               c(lg1),
               _mm256_mul_pd(w, _mm256_add_pd(
                                    c(lg3), _mm256_mul_pd(w, _mm256_add_pd(
                                                                 c(lg5), _mm256_mul_pd(w, c(lg7))))))));
    const __m256d r = _mm256_add_pd(t2, t1);
    const __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(c(0.5), f), f);
    const __m256d inner = _mm256_add_pd(_mm256_mul_pd(s, _mm256_add_pd(hfsq, r)),
                                        _mm256_mul_pd(k, c(ln2_lo)));
    return _mm256_sub_pd(_mm256_mul_pd(k, c(ln2_hi)),
                         _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f));
}

inline void sincos_turns_avx2(__m256d u, __m256d& sn, __m256d& cs)
{
    using namespace detail;
    auto c = [](double v) { return _mm256_set1_pd(v); };
    __m256d q = _mm256_round_pd(_mm256_add_pd(_mm256_mul_pd(c(4.0), u), c(0.5)),
                                _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC);
    const __m256d x = _mm256_mul_pd(c(two_pi), _mm256_sub_pd(u, _mm256_mul_pd(c(0.25), q)));
    q = _mm256_blendv_pd(q, _mm256_setzero_pd(), _mm256_cmp_pd(q, c(4.0), _CMP_EQ_OQ));

    const __m256d z = _mm256_mul_pd(x, x);
    const __m256d v = _mm256_mul_pd(z, x);
    const __m256d rs = _mm256_add_pd(
        c(s2),
        _mm256_mul_pd(z, _mm256_add_pd(
                             c(s3), _mm256_mul_pd(z, _mm256_add_pd(
                                                         c(s4), _mm256_mul_pd(z, _mm256_add_pd(
                                                                                     c(s5), _mm256_mul_pd(z, c(s6)))))))));
    const __m256d s = _mm256_add_pd(x, _mm256_mul_pd(v, _mm256_add_pd(c(s1), _mm256_mul_pd(z, rs))));
    __m256d poly = _mm256_add_pd(c(c5), _mm256_mul_pd(z, c(c6)));
    poly = _mm256_add_pd(c(c4), _mm256_mul_pd(z, poly));
    poly = _mm256_add_pd(c(c3), _mm256_mul_pd(z, poly));
    poly = _mm256_add_pd(c(c2), _mm256_mul_pd(z, poly));
    poly = _mm256_add_pd(c(c1), _mm256_mul_pd(z, poly));
    const __m256d rc = _mm256_mul_pd(z, poly);
    const __m256d hz = _mm256_mul_pd(c(0.5), z);
    const __m256d w = _mm256_sub_pd(c(1.0), hz);
    const __m256d co = _mm256_add_pd(
        w, _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(c(1.0), w), hz), _mm256_mul_pd(z, rc)));

    const __m256d q1 = _mm256_cmp_pd(q, c(1.0), _CMP_EQ_OQ);
    const __m256d q2 = _mm256_cmp_pd(q, c(2.0), _CMP_EQ_OQ);
    const __m256d q3 = _mm256_cmp_pd(q, c(3.0), _CMP_EQ_OQ);
    const __m256d swap = _mm256_or_pd(q1, q3);
    const __m256d sign = c(-0.0);
    __m256d rsn = _mm256_blendv_pd(s, co, swap);
    __m256d rcs = _mm256_blendv_pd(co, s, swap);
    rsn = _mm256_xor_pd(rsn, _mm256_and_pd(_mm256_or_pd(q2, q3), sign));
    rcs = _mm256_xor_pd(rcs, _mm256_and_pd(_mm256_or_pd(q1, q2), sign));
    sn = rsn;
    cs = rcs;
}

void normal_blocks_avx2(const std::uint32_t* key, std::uint32_t stream_lo, std::uint32_t stream_hi,
                        std::uint64_t first, std::size_t n_blocks, double* out)
{
    const __m256i c2 = _mm256_set1_epi64x(stream_lo);
    const __m256i c3 = _mm256_set1_epi64x(stream_hi);
    std::size_t b = 0;
    for (; b + 4 <= n_blocks; b += 4) {
        const std::uint64_t i0 = first + b;
        const std::uint64_t i1 = i0 + 1, i2 = i0 + 2, i3 = i0 + 3;
        const __m256i c0 = _mm256_set_epi64x(static_cast<std::uint32_t>(i3), static_cast<std::uint32_t>(i2),
                                             static_cast<std::uint32_t>(i1), static_cast<std::uint32_t>(i0));
        const __m256i c1 = _mm256_set_epi64x(static_cast<long long>(i3 >> 32), static_cast<long long>(i2 >> 32),
                                             static_cast<long long>(i1 >> 32), static_cast<long long>(i0 >> 32));
        const philox_x4 r = philox_avx2(c0, c1, c2, c3, key);
        const __m256d u1 = open_unit_52_avx2(r.r0, r.r1);
        const __m256d u2 = open_unit_52_avx2(r.r2, r.r3);
        const __m256d rad =
            _mm256_sqrt_pd(_mm256_mul_pd(_mm256_set1_pd(-2.0), log_avx2(u1)));
        __m256d sn, cs;
        sincos_turns_avx2(u2, sn, cs);
        const __m256d z0 = _mm256_mul_pd(rad, cs);
        const __m256d z1 = _mm256_mul_pd(rad, sn);
        const __m256d lo = _mm256_unpacklo_pd(z0, z1);
        const __m256d hi = _mm256_unpackhi_pd(z0, z1);
        _mm256_storeu_pd(out + 2 * b, _mm256_permute2f128_pd(lo, hi, 0x20));
        _mm256_storeu_pd(out + 2 * b + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
    }
    if (b < n_blocks) scalar_table().normal_blocks(key, stream_lo, stream_hi, first + b, n_blocks - b, out + 2 * b);
}

} // namespace

extern const table avx2_impl;
const table avx2_impl{isa::avx2, shift_by_profile_avx2, first_exceedance_avx2, scale_complex_avx2,
                      dot_avx2, normal_blocks_avx2};

} // namespace fptlab::kernels
