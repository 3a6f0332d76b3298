#include "wmark/keystream.hpp"

#include "wmark/error.hpp"

#include <numeric>
#include <utility>

namespace wmark {

void LcgParams::validate() const
{
    if (a < 1)
        throw ParameterError("lcg multiplier a must be >= 1");
    if (m < 2)
        throw ParameterError("lcg modulus m must be >= 2");
    if (z0 >= m)
        throw ParameterError("lcg seed z0 must be in [0, m)");
}

void WatermarkKey::validate() const
{
    lcg.validate();
    if (levels < 1 || levels > 30)
        throw ParameterError("levels must be in [1, 30]");
    if (q < 1)
        throw ParameterError("q must be >= 1");
    if (!(select_threshold > 0.0 && select_threshold <= 1.0))
        throw ParameterError("select_threshold must be in (0, 1]");
    if (wm_width < 1 || wm_height < 1)
        throw ParameterError("watermark dimensions must be >= 1");
}

std::vector<double> lcg_sequence(const LcgParams& p, std::size_t length)
{
    p.validate();
    std::vector<double> out;
    out.reserve(length);
    __extension__ typedef unsigned __int128 u128;
    std::uint64_t z = p.z0;
    u128 c = p.c0;
    const double m = static_cast<double>(p.m);
    for (std::size_t i = 0; i < length; ++i) {
        z = static_cast<std::uint64_t>((static_cast<u128>(p.a) * z + c) % p.m);
        out.push_back(static_cast<double>(z) / m);
        ++c;
    }
    return out;
}

std::vector<std::uint8_t> selection_mask(const LcgParams& p, std::size_t count, double threshold)
{
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ParameterError("selection threshold must be in (0, 1]");
    const auto values = lcg_sequence(p, count);
    std::vector<std::uint8_t> mask(count);
    for (std::size_t i = 0; i < count; ++i)
        mask[i] = values[i] < threshold ? 1 : 0;
    return mask;
}

Permutation permutation(std::uint32_t seed, std::size_t n)
{
    if (n == 0)
        throw ParameterError("permutation size must be >= 1");
    Permutation perm;
    perm.map.resize(n);
    std::iota(perm.map.begin(), perm.map.end(), std::size_t{0});
    Lcg32 stream(seed);
    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t j = stream.next() % (i + 1);
        std::swap(perm.map[i], perm.map[j]);
    }
    return perm;
}

std::vector<std::uint8_t> apply_permutation(const Permutation& perm, std::span<const std::uint8_t> bits)
{
    if (bits.size() != perm.size())
        throw DimensionError("apply_permutation: length mismatch");
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = bits[perm.map[i]];
    return out;
}

std::vector<std::uint8_t> invert_permutation(const Permutation& perm, std::span<const std::uint8_t> bits)
{
    if (bits.size() != perm.size())
        throw DimensionError("invert_permutation: length mismatch");
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[perm.map[i]] = bits[i];
    return out;
}

} // namespace wmark
