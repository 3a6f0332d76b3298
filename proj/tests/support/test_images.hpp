#pragma once

// Deterministic synthetic hosts and marks for tests and benchmarks.

#include "wmark/image.hpp"
#include "wmark/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace wmark::testing {

// Smooth interpolated lattice noise in roughly [-1, 1].
class ValueNoise {
public:
    ValueNoise(int period, int w, int h, std::uint32_t seed)
        : period_(period), gw_(w / period + 2), gh_(h / period + 2), grid_(static_cast<std::size_t>(gw_) * gh_)
    {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (auto& g : grid_)
            g = u(rng);
    }

    double operator()(int x, int y) const
    {
        const double fx = static_cast<double>(x) / period_;
        const double fy = static_cast<double>(y) / period_;
        const int ix = static_cast<int>(fx);
        const int iy = static_cast<int>(fy);
        const double tx = smooth(fx - ix);
        const double ty = smooth(fy - iy);
        const double a = at(ix, iy) * (1 - tx) + at(ix + 1, iy) * tx;
        const double b = at(ix, iy + 1) * (1 - tx) + at(ix + 1, iy + 1) * tx;
        return a * (1 - ty) + b * ty;
    }

private:
    static double smooth(double t) { return t * t * (3 - 2 * t); }
    double at(int x, int y) const { return grid_[static_cast<std::size_t>(y) * gw_ + x]; }

    int period_;
    int gw_;
    int gh_;
    std::vector<double> grid_;
};

// Random texture with mid-range gray levels (no clipping headroom issues).
inline Image random_texture(int w, int h, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::normal_distribution<double> grain(0.0, 18.0);
    const ValueNoise coarse(16, w, h, seed ^ 0x5bd1e995u);
    const ValueNoise medium(4, w, h, seed ^ 0x1b873593u);
    Image img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double v = 128.0 + 35.0 * coarse(x, y) + 25.0 * medium(x, y) + grain(rng);
            img.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::round(v), 40.0, 215.0));
        }
    return img;
}

// Photograph-like scene: sky gradient, horizon, sun disc, a building with a
// window grid, multi-octave texture and mild sensor grain.
inline Image natural_scene(int w, int h, std::uint32_t seed = 2024)
{
    std::mt19937 rng(seed);
    std::normal_distribution<double> grain(0.0, 2.0);
    std::vector<ValueNoise> octaves;
    for (int period : {128, 64, 32, 16, 8, 4})
        octaves.emplace_back(period, w, h, seed + static_cast<std::uint32_t>(period));
    const double sx = w / 512.0;
    const double sy = h / 512.0;

    Image img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double texture = 0.0;
            double amp = 22.0;
            for (const auto& o : octaves) {
                texture += amp * o(x, y);
                amp *= 0.6;
            }
            const double horizon = 300.0 * sy + 25.0 * sy * std::sin(x / (45.0 * sx)) + 0.5 * texture;
            double v;
            if (y < horizon) {
                v = 185.0 - 70.0 * (y / horizon) + 0.4 * texture;
                const double dx = x - 380.0 * sx;
                const double dy = y - 110.0 * sy;
                const double r = std::sqrt(dx * dx + dy * dy);
                const double sun = 45.0 * sx;
                if (r < sun + 3.0)
                    v += 50.0 * std::clamp((sun + 3.0 - r) / 6.0, 0.0, 1.0);
            } else {
                v = 95.0 + 0.15 * (y - horizon) + 1.6 * texture;
            }
            // building
            if (x > 70 * sx && x < 210 * sx && y > 170 * sy && y < 420 * sy) {
                v = 70.0 + 0.3 * texture;
                const int wx = static_cast<int>((x - 70 * sx) / (20 * sx));
                const int wy = static_cast<int>((y - 170 * sy) / (28 * sy));
                const double lx = std::fmod(x - 70 * sx, 20 * sx);
                const double ly = std::fmod(y - 170 * sy, 28 * sy);
                if (lx > 6 * sx && lx < 15 * sx && ly > 8 * sy && ly < 20 * sy)
                    v = ((wx * 7 + wy * 3) % 5 == 0) ? 200.0 : 45.0;
            }
            v += grain(rng);
            img.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::round(v), 5.0, 250.0));
        }
    }
    return img;
}

inline Watermark random_mark(int w, int h, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(w) * h);
    for (auto& b : bits)
        b = static_cast<std::uint8_t>(rng() & 1u);
    return Watermark(w, h, std::move(bits));
}

inline Matrix random_matrix(int rows, int cols, std::uint32_t seed, double lo = -100.0, double hi = 100.0)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    Matrix m(rows, cols);
    for (auto& v : m.values())
        v = u(rng);
    return m;
}

} // namespace wmark::testing
