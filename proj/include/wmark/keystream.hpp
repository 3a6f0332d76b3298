#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wmark/wavelet.hpp"

namespace wmark {

/// Parameters of the variable-increment congruential generator
/// Z_i = (a * Z_{i-1} + c_i) mod m, with c_1 = c0 and c_{i+1} = c_i + 1.
struct LcgParams {
    std::uint64_t a = 1103515245;
    std::uint64_t c0 = 12345;
    std::uint64_t m = 2147483648ULL;  // 2^31
    std::uint64_t z0 = 0;

    void validate() const;  // ParameterError unless a >= 1, m >= 2, z0 < m
    bool operator==(const LcgParams&) const = default;
};

/// The composite secret needed to embed and to extract.
struct WatermarkKey {
    WaveletId wavelet = WaveletId::db4;
    int levels = 4;
    int q = 4;
    LcgParams lcg;
    double select_threshold = 0.5;
    std::uint32_t perm_seed = 0;
    int wm_width = 32;
    int wm_height = 32;

    std::size_t watermark_length() const
    {
        return static_cast<std::size_t>(wm_width) * static_cast<std::size_t>(wm_height);
    }

    void validate() const;
    bool operator==(const WatermarkKey&) const = default;
};

/// 32-bit fixed-constant LCG, W_{k+1} = (1664525 W_k + 1013904223) mod 2^32.
/// Drives the watermark scramble and the stochastic attacks.
class Lcg32 {
public:
    explicit Lcg32(std::uint32_t seed) : state_(seed) {}

    std::uint32_t next()
    {
        state_ = 1664525u * state_ + 1013904223u;
        return state_;
    }

    // Uniform in the open interval (0, 1).
    double uniform_open() { return (static_cast<double>(next()) + 0.5) / 4294967296.0; }

private:
    std::uint32_t state_;
};

// Z_i / m for i = 1..length.
std::vector<double> lcg_sequence(const LcgParams& p, std::size_t length);

// bit_i = 1 iff lcg_sequence(p, count)[i] < threshold; threshold in (0, 1].
std::vector<std::uint8_t> selection_mask(const LcgParams& p, std::size_t count, double threshold);

/// Bijection on {0..n-1}; apply gives out[i] = bits[map[i]].
struct Permutation {
    std::vector<std::size_t> map;

    std::size_t size() const { return map.size(); }
};

// Fisher-Yates (descending) driven by Lcg32(seed): for i = n-1..1,
// j = next() mod (i+1), swap(map[i], map[j]). n must be >= 1.
Permutation permutation(std::uint32_t seed, std::size_t n);

std::vector<std::uint8_t> apply_permutation(const Permutation& perm, std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> invert_permutation(const Permutation& perm, std::span<const std::uint8_t> bits);

} // namespace wmark
