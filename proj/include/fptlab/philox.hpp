#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11) and the
// per-(seed, stream, purpose) substreams used by every sampler. A substream
// is addressed purely by its counter, so a path's randomness never depends
// on which worker produced it or in which order.

#include "fptlab/detail/fastmath.hpp"
#include "fptlab/kernels.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace fptlab {

using philox_counter = std::array<std::uint32_t, 4>;
using philox_key = std::array<std::uint32_t, 2>;

inline philox_counter philox4x32_10(philox_counter ctr, philox_key key) noexcept
{
    constexpr std::uint32_t m0 = 0xD2511F53u;
    constexpr std::uint32_t m1 = 0xCD9E8D57u;
    constexpr std::uint32_t w0 = 0x9E3779B9u;
    constexpr std::uint32_t w1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += w0;
            key[1] += w1;
        }
        const std::uint64_t p0 = std::uint64_t{m0} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{m1} * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

/// What a substream is used for; part of the counter so that different
/// consumers of the same path index never share random words.
enum class rng_purpose : std::uint32_t {
    path_noise = 1,     // circulant embedding, indexed by path pair
    initial_state = 2,  // truncated-normal start, indexed by path
    bridge = 3,         // crossing correction between grid points
    state_space = 4,    // state-space recursion, indexed by path
    test = 255,
};

/// 52-bit uniform on the open interval (0, 1).
inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) noexcept
{
    return detail::open_unit_52(hi, lo);
}

class philox_stream {
public:
    philox_stream(std::uint64_t seed, std::uint64_t stream, rng_purpose purpose) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_((static_cast<std::uint32_t>(purpose) << 24)
                     | (static_cast<std::uint32_t>(stream >> 32) & 0x00FFFFFFu))
    {
    }

    /// Two uniforms from block `index`; random access, no state touched.
    std::array<double, 2> uniform_pair_at(std::uint64_t index) const noexcept
    {
        const auto r = philox4x32_10(
            {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
             stream_lo_, stream_hi_},
            key_);
        return {to_open_unit(r[0], r[1]), to_open_unit(r[2], r[3])};
    }

    double uniform() noexcept
    {
        if (have_uniform_) {
            have_uniform_ = false;
            return spare_uniform_;
        }
        const auto u = uniform_pair_at(block_++);
        spare_uniform_ = u[1];
        have_uniform_ = true;
        return u[0];
    }

    /// Box-Muller pair from block `index`.
    std::array<double, 2> normal_pair_at(std::uint64_t index) const noexcept
    {
        const auto u = uniform_pair_at(index);
        std::array<double, 2> z;
        detail::box_muller(u[0], u[1], z[0], z[1]);
        return z;
    }

    double normal() noexcept
    {
        if (have_normal_) {
            have_normal_ = false;
            return spare_normal_;
        }
        const auto z = normal_pair_at(block_++);
        spare_normal_ = z[1];
        have_normal_ = true;
        return z[0];
    }

    /// Fills `out` from blocks 0, 1, ... of the stream; independent of the
    /// sequential cursor.
    void fill_normal(std::span<double> out) const noexcept
    {
        const std::size_t pairs = out.size() / 2;
        kernels::active().normal_blocks(key_.data(), stream_lo_, stream_hi_, 0, pairs, out.data());
        if (out.size() % 2 != 0) out[2 * pairs] = normal_pair_at(pairs)[0];
    }

    const philox_key& key() const noexcept { return key_; }
    std::uint32_t stream_lo() const noexcept { return stream_lo_; }
    std::uint32_t stream_hi() const noexcept { return stream_hi_; }

private:
    philox_key key_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
    std::uint64_t block_ = 0;
    double spare_uniform_ = 0.0;
    double spare_normal_ = 0.0;
    bool have_uniform_ = false;
    bool have_normal_ = false;
};

} // namespace fptlab
