#include "wmark/attacks.hpp"

#include "attacks_detail.hpp"
#include "wmark/error.hpp"
#include "wmark/keystream.hpp"

#include <numbers>

namespace wmark {

namespace detail {

namespace {

constexpr QuantTable kLumaTable = {
    16, 11, 10, 16, 24,  40,  51,  61,
    12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,
    14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,
    24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101,
    72, 92, 95, 98, 112, 100, 103, 99,
};

// basis[u][x] = c(u) cos((2x+1) u pi / 16), orthonormal DCT-II.
const std::array<std::array<double, 8>, 8>& dct_basis()
{
    static const auto basis = [] {
        std::array<std::array<double, 8>, 8> b{};
        for (int u = 0; u < 8; ++u) {
            const double c = u == 0 ? std::sqrt(1.0 / 8.0) : 0.5;
            for (int x = 0; x < 8; ++x)
                b[u][x] = c * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
        }
        return b;
    }();
    return basis;
}

} // namespace

QuantTable scaled_luma_table(int quality)
{
    if (quality < 1 || quality > 100)
        throw ParameterError("jpeglike quality must be in [1, 100]");
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    QuantTable t{};
    for (int i = 0; i < 64; ++i)
        t[i] = std::clamp((kLumaTable[i] * scale + 50) / 100, 1, 255);
    return t;
}

void jpeg_block(const Image& src, Image& dst, int bx, int by, const QuantTable& table)
{
    const auto& b = dct_basis();
    double px[8][8];
    double tmp[8][8];
    double coef[8][8];
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
            px[y][x] = src.at(bx + x, by + y) - 128.0;

    // coef = B px B^T
    for (int y = 0; y < 8; ++y)
        for (int u = 0; u < 8; ++u) {
            double s = 0.0;
            for (int x = 0; x < 8; ++x)
                s += b[u][x] * px[y][x];
            tmp[y][u] = s;
        }
    for (int v = 0; v < 8; ++v)
        for (int u = 0; u < 8; ++u) {
            double s = 0.0;
            for (int y = 0; y < 8; ++y)
                s += b[v][y] * tmp[y][u];
            const double q = table[v * 8 + u];
            coef[v][u] = std::round(s / q) * q;
        }

    // px = B^T coef B
    for (int v = 0; v < 8; ++v)
        for (int x = 0; x < 8; ++x) {
            double s = 0.0;
            for (int u = 0; u < 8; ++u)
                s += b[u][x] * coef[v][u];
            tmp[v][x] = s;
        }
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) {
            double s = 0.0;
            for (int v = 0; v < 8; ++v)
                s += b[v][y] * tmp[v][x];
            dst.at(bx + x, by + y) = clamp_round(s + 128.0);
        }
}

} // namespace detail

Image gaussian_noise(const Image& img, double sigma, std::uint32_t seed)
{
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw ParameterError("gaussian sigma must be finite and >= 0");
    Image out = img;
    if (sigma == 0.0)
        return out;
    // Sequential by construction: each pixel consumes the next normal deviate.
    Lcg32 stream(seed);
    double spare = 0.0;
    bool have_spare = false;
    for (auto& p : out.samples) {
        double z;
        if (have_spare) {
            z = spare;
            have_spare = false;
        } else {
            const double u1 = stream.uniform_open();
            const double u2 = stream.uniform_open();
            const double r = std::sqrt(-2.0 * std::log(u1));
            z = r * std::cos(2.0 * std::numbers::pi * u2);
            spare = r * std::sin(2.0 * std::numbers::pi * u2);
            have_spare = true;
        }
        p = detail::clamp_round(p + sigma * z);
    }
    return out;
}

Image salt_pepper(const Image& img, double density, std::uint32_t seed)
{
    if (!(density >= 0.0 && density <= 1.0))
        throw ParameterError("saltpepper density must be in [0, 1]");
    Image out = img;
    Lcg32 stream(seed);
    for (auto& p : out.samples) {
        if (stream.uniform_open() < density)
            p = stream.uniform_open() < 0.5 ? 0 : 255;
    }
    return out;
}

Image mean_filter3(const Image& img)
{
    Image out = img;
#pragma omp parallel for schedule(static)
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(x, y) = detail::mean3_at(img, x, y);
    return out;
}

Image median_filter3(const Image& img)
{
    Image out = img;
#pragma omp parallel for schedule(static)
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(x, y) = detail::median3_at(img, x, y);
    return out;
}

Image crop_region(const Image& img, Rect rect, std::uint8_t fill)
{
    if (rect.w < 0 || rect.h < 0)
        throw ParameterError("crop width and height must be >= 0");
    Image out = img;
    const int x0 = std::clamp(rect.x, 0, img.width);
    const int y0 = std::clamp(rect.y, 0, img.height);
    const int x1 = std::clamp(rect.x + rect.w, 0, img.width);
    const int y1 = std::clamp(rect.y + rect.h, 0, img.height);
    for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x)
            out.at(x, y) = fill;
    return out;
}

Image jpeg_like(const Image& img, int quality)
{
    if (img.width % 8 != 0 || img.height % 8 != 0)
        throw DimensionError("jpeglike: image dimensions must be divisible by 8");
    const auto table = detail::scaled_luma_table(quality);
    Image out = img;
    const int bw = img.width / 8;
    const int blocks = bw * (img.height / 8);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < blocks; ++k)
        detail::jpeg_block(img, out, (k % bw) * 8, (k / bw) * 8, table);
    return out;
}

Image apply_attack(const Image& img, const AttackSpec& spec)
{
    switch (spec.kind) {
    case AttackKind::gaussian:
        return gaussian_noise(img, spec.sigma, spec.seed);
    case AttackKind::saltpepper:
        return salt_pepper(img, spec.density, spec.seed);
    case AttackKind::mean3:
        return mean_filter3(img);
    case AttackKind::median3:
        return median_filter3(img);
    case AttackKind::crop:
        return crop_region(img, spec.rect, static_cast<std::uint8_t>(spec.fill));
    case AttackKind::jpeglike:
        return jpeg_like(img, spec.quality);
    }
    throw ParameterError("unknown attack kind");
}

} // namespace wmark
