#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wmark {

/// 8-bit grayscale raster, row-major.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    Image() = default;
    Image(int w, int h, std::uint8_t fill = 0);
    Image(int w, int h, std::vector<std::uint8_t> data);

    std::uint8_t& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return samples.size(); }

    bool operator==(const Image&) const = default;
};

/// Binary mark; bits are 0 or 1, row-major.
struct Watermark {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    Watermark() = default;
    Watermark(int w, int h, std::vector<std::uint8_t> data);

    std::size_t size() const { return bits.size(); }

    bool operator==(const Watermark&) const = default;
};

// Binary PGM (P5, maxval 255). Throws FormatError on malformed headers,
// unsupported maxval or truncated rasters.
Image read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const Image& img);

// Binary PBM (P4). Black (1) maps to watermark bit 1; rows are padded to
// whole bytes and the padding bits are ignored on read.
Watermark read_pbm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pbm(const Watermark& wm);

// File helpers. Throw IoError when the file cannot be opened or written.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

} // namespace wmark
