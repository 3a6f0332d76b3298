#pragma once

// Per-pixel and per-block kernels shared by the parallel and serial drivers.

#include "wmark/image.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace wmark::detail {

inline std::uint8_t clamp_round(double v)
{
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
}

inline std::array<std::uint8_t, 9> window3(const Image& img, int x, int y)
{
    std::array<std::uint8_t, 9> w{};
    int k = 0;
    for (int dy = -1; dy <= 1; ++dy) {
        const int yy = std::clamp(y + dy, 0, img.height - 1);
        for (int dx = -1; dx <= 1; ++dx)
            w[k++] = img.at(std::clamp(x + dx, 0, img.width - 1), yy);
    }
    return w;
}

inline std::uint8_t mean3_at(const Image& img, int x, int y)
{
    int sum = 0;
    for (auto v : window3(img, x, y))
        sum += v;
    // round(sum / 9) half away from zero, sum >= 0
    return static_cast<std::uint8_t>((2 * sum + 9) / 18);
}

inline std::uint8_t median3_at(const Image& img, int x, int y)
{
    auto w = window3(img, x, y);
    std::nth_element(w.begin(), w.begin() + 4, w.end());
    return w[4];
}

using QuantTable = std::array<int, 64>;

QuantTable scaled_luma_table(int quality);

// Quantizes one 8x8 block with top-left corner (bx, by) from src into dst.
void jpeg_block(const Image& src, Image& dst, int bx, int by, const QuantTable& table);

} // namespace wmark::detail
