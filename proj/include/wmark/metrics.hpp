#pragma once

#include "wmark/image.hpp"

namespace wmark {

// Peak 255. Identical images give +infinity. DimensionError on mismatch.
double psnr(const Image& a, const Image& b);

// Fraction of differing bits.
double ber(const Watermark& w, const Watermark& w2);

// sum(w*w2) / sum(w*w). Not symmetric. When w has no 1-bits the result is
// 1 if w2 is also all zero, else 0.
double ncc(const Watermark& w, const Watermark& w2);

} // namespace wmark
