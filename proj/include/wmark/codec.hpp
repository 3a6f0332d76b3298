#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wmark/image.hpp"
#include "wmark/keystream.hpp"
#include "wmark/wavelet.hpp"

namespace wmark {

// Triples whose range (bin width) is at or below this are not marked or read.
inline constexpr double kSkipEpsilon = 1e-6;

/// The three detail coefficients at one (level, m, n), sorted ascending.
/// orient[k] is the orientation holding rank k; ties keep orientation order.
struct OrderedTriple {
    double lo = 0.0;
    double mid = 0.0;
    double hi = 0.0;
    std::array<Orientation, 3> orient{horizontal, diagonal, vertical};

    static OrderedTriple sort(double h, double d, double v);
};

double bin_width(double lo, double hi, int q);

// New median value carrying `bit`, or nullopt for a degenerate triple.
// At q == 1 only bit 0 exists; bit 1 falls back to the single center.
std::optional<double> quantize_to_bit(const OrderedTriple& t, int q, int bit);

// Bit carried by the nearest bin center to t.mid, or nullopt if degenerate.
std::optional<int> read_bit(const OrderedTriple& t, int q);

struct EmbedReport {
    std::size_t locations_total = 0;
    std::size_t locations_selected = 0;
    std::size_t locations_skipped = 0;
    std::size_t q1_fallbacks = 0;     // bit-1 requests that could only take bit 0 (q == 1)
    std::size_t bits_uncovered = 0;   // watermark bits assigned to no selected location
    double repetitions = 0.0;         // selected / N_w
    double psnr_db = 0.0;
};

struct VoteTally {
    std::vector<std::uint32_t> zeros;  // indexed by permuted bit position
    std::vector<std::uint32_t> ones;

    explicit VoteTally(std::size_t n = 0) : zeros(n, 0), ones(n, 0) {}

    std::size_t total_votes() const;
    std::size_t zero_vote_bits() const;
    std::size_t tie_bits() const;  // includes zero-vote bits
};

// Number of (level, m, n) location triples for a rows x cols host.
std::size_t location_count(int rows, int cols, int levels);

// Marks a pyramid in place. The approximation band is never touched.
// Throws EmptySelectionError if the key selects no location.
EmbedReport embed_pyramid(Pyramid& p, const Watermark& wm, const WatermarkKey& key);

// Reads votes from a pyramid; the result is in permuted order.
VoteTally tally_pyramid(const Pyramid& p, const WatermarkKey& key);

// Majority decode (ties and empty tallies give 0), unscramble and reshape.
Watermark decode_tally(const VoteTally& tally, const WatermarkKey& key);

// Real-valued pipeline without pixel rounding.
Matrix embed_real(const Matrix& host, const Watermark& wm, const WatermarkKey& key,
                  EmbedReport* report = nullptr);
std::pair<Watermark, VoteTally> extract_real(const Matrix& marked, const WatermarkKey& key);

// 8-bit pipeline: rounds half away from zero and clamps to [0, 255].
std::pair<Image, EmbedReport> embed(const Image& host, const Watermark& wm, const WatermarkKey& key);
std::pair<Watermark, VoteTally> extract(const Image& marked, const WatermarkKey& key);

Matrix to_matrix(const Image& img);
Image to_image(const Matrix& m);

} // namespace wmark
