#include "wmark/attacks.hpp"

#include "attacks_detail.hpp"
#include "wmark/error.hpp"

namespace wmark::serial {

Image mean_filter3(const Image& img)
{
    Image out = img;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(x, y) = detail::mean3_at(img, x, y);
    return out;
}

Image median_filter3(const Image& img)
{
    Image out = img;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(x, y) = detail::median3_at(img, x, y);
    return out;
}

Image jpeg_like(const Image& img, int quality)
{
    if (img.width % 8 != 0 || img.height % 8 != 0)
        throw DimensionError("jpeglike: image dimensions must be divisible by 8");
    const auto table = detail::scaled_luma_table(quality);
    Image out = img;
    for (int by = 0; by < img.height; by += 8)
        for (int bx = 0; bx < img.width; bx += 8)
            detail::jpeg_block(img, out, bx, by, table);
    return out;
}

} // namespace wmark::serial
