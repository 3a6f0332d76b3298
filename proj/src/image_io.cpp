#include "wmark/image.hpp"

#include "wmark/error.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

namespace wmark {

Image::Image(int w, int h, std::uint8_t fill)
    : width(w), height(h), samples(static_cast<std::size_t>(w) * h, fill)
{
    if (w < 1 || h < 1)
        throw DimensionError("image dimensions must be positive");
}

Image::Image(int w, int h, std::vector<std::uint8_t> data)
    : width(w), height(h), samples(std::move(data))
{
    if (w < 1 || h < 1)
        throw DimensionError("image dimensions must be positive");
    if (samples.size() != static_cast<std::size_t>(w) * h)
        throw DimensionError("image sample count does not match width x height");
}

Watermark::Watermark(int w, int h, std::vector<std::uint8_t> data)
    : width(w), height(h), bits(std::move(data))
{
    if (w < 1 || h < 1)
        throw DimensionError("watermark dimensions must be positive");
    if (bits.size() != static_cast<std::size_t>(w) * h)
        throw DimensionError("watermark bit count does not match width x height");
    for (auto b : bits)
        if (b > 1)
            throw ParameterError("watermark bits must be 0 or 1");
}

namespace {

// Minimal netpbm header scanner over a byte span.
class HeaderReader {
public:
    HeaderReader(std::span<const std::uint8_t> bytes, const char* format)
        : bytes_(bytes), format_(format) {}

    void expect_magic(const char* magic)
    {
        if (bytes_.size() < 2 || bytes_[0] != magic[0] || bytes_[1] != magic[1])
            fail(std::string("bad magic number, expected ") + magic);
        pos_ = 2;
    }

    // Skips whitespace and '#' comments, then parses one unsigned decimal.
    long next_uint(const char* field)
    {
        skip_separators(field);
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_]))
            fail(std::string("malformed header: expected ") + field);
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max())
                fail(std::string("malformed header: ") + field + " out of range");
            ++pos_;
        }
        return value;
    }

    // Exactly one whitespace byte separates the header from the raster.
    void end_header()
    {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
            fail("malformed header: missing separator before raster");
        ++pos_;
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw FormatError(std::string(format_) + ": " + what);
    }

private:
    void skip_separators(const char* field)
    {
        bool saw_space = false;
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                saw_space = true;
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else {
                break;
            }
        }
        if (!saw_space)
            fail(std::string("malformed header: missing whitespace before ") + field);
    }

    std::span<const std::uint8_t> bytes_;
    const char* format_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> header_bytes(const std::string& header)
{
    return {header.begin(), header.end()};
}

} // namespace

Image read_pgm(std::span<const std::uint8_t> bytes)
{
    HeaderReader hdr(bytes, "pgm");
    hdr.expect_magic("P5");
    const long w = hdr.next_uint("width");
    const long h = hdr.next_uint("height");
    const long maxval = hdr.next_uint("maxval");
    if (w < 1 || h < 1)
        hdr.fail("malformed header: zero dimension");
    if (maxval != 255)
        hdr.fail("unsupported maxval " + std::to_string(maxval) + " (only 255 is supported)");
    hdr.end_header();

    const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    const std::size_t start = hdr.position();
    if (bytes.size() - start < count)
        hdr.fail("truncated pixel data: expected " + std::to_string(count) + " bytes, found " +
                 std::to_string(bytes.size() - start));
    auto first = bytes.begin() + static_cast<std::ptrdiff_t>(start);
    return Image(static_cast<int>(w), static_cast<int>(h),
                 std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(count)));
}

std::vector<std::uint8_t> write_pgm(const Image& img)
{
    auto out = header_bytes("P5\n" + std::to_string(img.width) + " " +
                            std::to_string(img.height) + "\n255\n");
    out.insert(out.end(), img.samples.begin(), img.samples.end());
    return out;
}

Watermark read_pbm(std::span<const std::uint8_t> bytes)
{
    HeaderReader hdr(bytes, "pbm");
    hdr.expect_magic("P4");
    const long w = hdr.next_uint("width");
    const long h = hdr.next_uint("height");
    if (w < 1 || h < 1)
        hdr.fail("malformed header: zero dimension");
    hdr.end_header();

    const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
    const std::size_t start = hdr.position();
    if (bytes.size() - start < row_bytes * static_cast<std::size_t>(h))
        hdr.fail("truncated bit data: expected " + std::to_string(row_bytes * h) + " bytes");

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(w) * h);
    for (long y = 0; y < h; ++y) {
        const auto* row = bytes.data() + start + static_cast<std::size_t>(y) * row_bytes;
        for (long x = 0; x < w; ++x)
            bits[static_cast<std::size_t>(y) * w + x] = (row[x / 8] >> (7 - x % 8)) & 1u;
    }
    return Watermark(static_cast<int>(w), static_cast<int>(h), std::move(bits));
}

std::vector<std::uint8_t> write_pbm(const Watermark& wm)
{
    auto out = header_bytes("P4\n" + std::to_string(wm.width) + " " +
                            std::to_string(wm.height) + "\n");
    const std::size_t row_bytes = (static_cast<std::size_t>(wm.width) + 7) / 8;
    const std::size_t start = out.size();
    out.resize(start + row_bytes * wm.height, 0);
    for (int y = 0; y < wm.height; ++y)
        for (int x = 0; x < wm.width; ++x)
            if (wm.bits[static_cast<std::size_t>(y) * wm.width + x])
                out[start + y * row_bytes + x / 8] |= static_cast<std::uint8_t>(0x80u >> (x % 8));
    return out;
}

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

} // namespace wmark
