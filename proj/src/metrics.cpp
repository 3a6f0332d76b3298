#include "wmark/metrics.hpp"

#include "wmark/error.hpp"

#include <cmath>
#include <limits>

namespace wmark {

double psnr(const Image& a, const Image& b)
{
    if (a.width != b.width || a.height != b.height)
        throw DimensionError("psnr: image dimensions differ");
    double sse = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = static_cast<double>(a.samples[i]) - static_cast<double>(b.samples[i]);
        sse += d * d;
    }
    if (sse == 0.0)
        return std::numeric_limits<double>::infinity();
    const double mse = sse / static_cast<double>(a.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {
void check_same_shape(const Watermark& w, const Watermark& w2, const char* what)
{
    if (w.width != w2.width || w.height != w2.height)
        throw DimensionError(std::string(what) + ": watermark dimensions differ");
}
} // namespace

double ber(const Watermark& w, const Watermark& w2)
{
    check_same_shape(w, w2, "ber");
    std::size_t diff = 0;
    for (std::size_t i = 0; i < w.bits.size(); ++i)
        diff += (w.bits[i] != w2.bits[i]);
    return static_cast<double>(diff) / static_cast<double>(w.bits.size());
}

double ncc(const Watermark& w, const Watermark& w2)
{
    check_same_shape(w, w2, "ncc");
    std::size_t dot = 0;
    std::size_t norm = 0;
    std::size_t other = 0;
    for (std::size_t i = 0; i < w.bits.size(); ++i) {
        dot += w.bits[i] * w2.bits[i];
        norm += w.bits[i];
        other += w2.bits[i];
    }
    if (norm == 0)
        return other == 0 ? 1.0 : 0.0;
    return static_cast<double>(dot) / static_cast<double>(norm);
}

} // namespace wmark
