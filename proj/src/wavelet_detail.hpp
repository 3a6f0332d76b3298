#pragma once

// Internal helpers shared by the parallel and serial 2-D transforms.

#include "wmark/wavelet.hpp"

namespace wmark::detail {

// Splits a transformed R x C level into LL (returned) and the three details.
Matrix split_quadrants(const Matrix& level, std::array<Matrix, 3>& bands);

// Reassembles the R x C level from LL and its three details.
Matrix join_quadrants(const Matrix& ll, const std::array<Matrix, 3>& bands);

// Throws DimensionError if the pyramid's subband shapes are inconsistent.
void validate_pyramid(const Pyramid& p);

} // namespace wmark::detail
