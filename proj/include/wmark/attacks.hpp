#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wmark/image.hpp"

namespace wmark {

struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

// Additive N(0, sigma^2) noise from Box-Muller over Lcg32(seed), then
// round and clamp. sigma == 0 is an exact identity.
Image gaussian_noise(const Image& img, double sigma, std::uint32_t seed);

// Each pixel becomes 0 or 255 (equally likely) with probability density.
Image salt_pepper(const Image& img, double density, std::uint32_t seed);

// 3x3 windows with replicated borders.
Image mean_filter3(const Image& img);
Image median_filter3(const Image& img);

// Fills rect (clipped to the image) with a constant gray level.
Image crop_region(const Image& img, Rect rect, std::uint8_t fill);

// 8x8 blockwise DCT quantization with the standard luminance table scaled
// by quality (1..100). Width and height must be multiples of 8.
Image jpeg_like(const Image& img, int quality);

namespace serial {
Image mean_filter3(const Image& img);
Image median_filter3(const Image& img);
Image jpeg_like(const Image& img, int quality);
} // namespace serial

enum class AttackKind { gaussian, saltpepper, mean3, median3, crop, jpeglike };

struct AttackSpec {
    AttackKind kind = AttackKind::gaussian;
    double sigma = 0.0;
    double density = 0.0;
    Rect rect;
    int fill = 0;
    int quality = 75;
    std::uint32_t seed = 0;
};

// Grammar: kind[:key=value[,key=value...]], e.g. "gaussian:sigma=5,seed=1".
// ParameterError on unknown kinds (message lists the supported ones),
// unknown keys or out-of-range values.
AttackSpec parse_attack_spec(std::string_view text);
std::string_view supported_attack_kinds();

Image apply_attack(const Image& img, const AttackSpec& spec);

} // namespace wmark
