#pragma once

#include <string>
#include <string_view>

#include "wmark/keystream.hpp"

namespace wmark {

// Line-based key file:
//
//   WMKEY v1
//   wavelet=db4
//   levels=4
//   q=4
//   lcg_a=... lcg_c0=... lcg_m=... lcg_z0=...
//   select_threshold=0.5
//   perm_seed=...
//   wm_width=32
//   wm_height=32
//
// one name=value per line in exactly that order, LF line endings. The
// threshold is written with at most 6 fraction digits.
std::string serialize_key(const WatermarkKey& key);

// FormatError on a missing/reordered/duplicated field or bad number;
// ParameterError if the parsed key fails validation.
WatermarkKey parse_key(std::string_view text);

// Rounds to the 6-fraction-digit grid used by the key file.
double quantize_threshold(double t);

// (z0 XOR 0x9E3779B9) mod 2^32.
std::uint32_t default_perm_seed(std::uint64_t z0);

} // namespace wmark
