#include "wmark/codec.hpp"

#include "wmark/error.hpp"
#include "wmark/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wmark {

OrderedTriple OrderedTriple::sort(double h, double d, double v)
{
    const std::array<double, 3> values{h, d, v};
    OrderedTriple t;
    std::stable_sort(t.orient.begin(), t.orient.end(),
                     [&](Orientation a, Orientation b) { return values[a] < values[b]; });
    t.lo = values[t.orient[0]];
    t.mid = values[t.orient[1]];
    t.hi = values[t.orient[2]];
    return t;
}

double bin_width(double lo, double hi, int q)
{
    return (hi - lo) / (2.0 * q - 1.0);
}

std::optional<double> quantize_to_bit(const OrderedTriple& t, int q, int bit)
{
    const double delta = bin_width(t.lo, t.hi, q);
    if (!(delta > kSkipEpsilon))
        return std::nullopt;
    const int bins = 2 * q - 1;
    double best = t.lo + 0.5 * delta;  // lone center when q == 1 and bit == 1
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = bit; j < bins; j += 2) {
        const double center = t.lo + (j + 0.5) * delta;
        const double dist = std::abs(t.mid - center);
        if (dist < best_dist) {
            best_dist = dist;
            best = center;
        }
    }
    return best;
}

std::optional<int> read_bit(const OrderedTriple& t, int q)
{
    const double delta = bin_width(t.lo, t.hi, q);
    if (!(delta > kSkipEpsilon))
        return std::nullopt;
    const int bins = 2 * q - 1;
    int best_j = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < bins; ++j) {
        const double dist = std::abs(t.mid - (t.lo + (j + 0.5) * delta));
        if (dist < best_dist) {
            best_dist = dist;
            best_j = j;
        }
    }
    return best_j % 2;
}

std::size_t VoteTally::total_votes() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < zeros.size(); ++i)
        n += zeros[i] + ones[i];
    return n;
}

std::size_t VoteTally::zero_vote_bits() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < zeros.size(); ++i)
        n += (zeros[i] + ones[i] == 0);
    return n;
}

std::size_t VoteTally::tie_bits() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < zeros.size(); ++i)
        n += (zeros[i] == ones[i]);
    return n;
}

std::size_t location_count(int rows, int cols, int levels)
{
    std::size_t n = 0;
    for (int l = 1; l <= levels; ++l)
        n += static_cast<std::size_t>(rows >> l) * static_cast<std::size_t>(cols >> l);
    return n;
}

namespace {

void check_pyramid_matches_key(const Pyramid& p, const WatermarkKey& key)
{
    key.validate();
    if (p.levels != key.levels || p.wavelet != key.wavelet)
        throw KeyMismatchError("pyramid wavelet/levels disagree with the key");
}

// Selected-location counter j for every location in canonical scan order
// (levels ascending, then row-major); -1 marks unselected locations.
// Depends on key material only.
struct SlotMap {
    std::vector<std::int64_t> slot;
    std::size_t selected = 0;
};

SlotMap slot_map(const Pyramid& p, const WatermarkKey& key)
{
    const std::size_t total = location_count(p.rows, p.cols, p.levels);
    const auto mask = selection_mask(key.lcg, total, key.select_threshold);
    SlotMap sm;
    sm.slot.assign(total, -1);
    for (std::size_t i = 0; i < total; ++i)
        if (mask[i])
            sm.slot[i] = static_cast<std::int64_t>(sm.selected++);
    return sm;
}

} // namespace

EmbedReport embed_pyramid(Pyramid& p, const Watermark& wm, const WatermarkKey& key)
{
    check_pyramid_matches_key(p, key);
    if (wm.width != key.wm_width || wm.height != key.wm_height)
        throw KeyMismatchError("watermark is " + std::to_string(wm.width) + "x" +
                               std::to_string(wm.height) + " but the key expects " +
                               std::to_string(key.wm_width) + "x" + std::to_string(key.wm_height));

    const auto sm = slot_map(p, key);
    if (sm.selected == 0)
        throw EmptySelectionError("empty selection: the key selects no coefficient location");

    const std::size_t nw = wm.size();
    const auto scrambled = apply_permutation(permutation(key.perm_seed, nw), wm.bits);

    std::size_t skipped = 0;
    std::size_t fallbacks = 0;
    std::size_t base = 0;
    for (int l = 1; l <= p.levels; ++l) {
        auto& bands = p.detail[l - 1];
        const int rows = bands[0].rows();
        const int cols = bands[0].cols();
#pragma omp parallel for reduction(+ : skipped, fallbacks) schedule(static)
        for (int m = 0; m < rows; ++m) {
            for (int n = 0; n < cols; ++n) {
                const auto j = sm.slot[base + static_cast<std::size_t>(m) * cols + n];
                if (j < 0)
                    continue;
                const int bit = scrambled[static_cast<std::size_t>(j) % nw];
                const auto t = OrderedTriple::sort(bands[horizontal](m, n), bands[diagonal](m, n),
                                                   bands[vertical](m, n));
                const auto marked = quantize_to_bit(t, key.q, bit);
                if (!marked) {
                    ++skipped;
                    continue;
                }
                if (key.q == 1 && bit == 1)
                    ++fallbacks;
                bands[t.orient[1]](m, n) = *marked;
            }
        }
        base += static_cast<std::size_t>(rows) * cols;
    }

    EmbedReport r;
    r.locations_total = sm.slot.size();
    r.locations_selected = sm.selected;
    r.locations_skipped = skipped;
    r.q1_fallbacks = fallbacks;
    r.bits_uncovered = sm.selected < nw ? nw - sm.selected : 0;
    r.repetitions = static_cast<double>(sm.selected) / static_cast<double>(nw);
    return r;
}

VoteTally tally_pyramid(const Pyramid& p, const WatermarkKey& key)
{
    check_pyramid_matches_key(p, key);
    const auto sm = slot_map(p, key);
    const std::size_t nw = key.watermark_length();

    // Per-location reads run in parallel; votes are accumulated in scan order.
    std::vector<std::int8_t> reads(sm.slot.size(), -1);
    std::size_t base = 0;
    for (int l = 1; l <= p.levels; ++l) {
        const auto& bands = p.detail[l - 1];
        const int rows = bands[0].rows();
        const int cols = bands[0].cols();
#pragma omp parallel for schedule(static)
        for (int m = 0; m < rows; ++m) {
            for (int n = 0; n < cols; ++n) {
                const std::size_t idx = base + static_cast<std::size_t>(m) * cols + n;
                if (sm.slot[idx] < 0)
                    continue;
                const auto t = OrderedTriple::sort(bands[horizontal](m, n), bands[diagonal](m, n),
                                                   bands[vertical](m, n));
                if (const auto bit = read_bit(t, key.q))
                    reads[idx] = static_cast<std::int8_t>(*bit);
            }
        }
        base += static_cast<std::size_t>(rows) * cols;
    }

    VoteTally tally(nw);
    for (std::size_t idx = 0; idx < reads.size(); ++idx) {
        if (reads[idx] < 0)
            continue;
        const std::size_t i = static_cast<std::size_t>(sm.slot[idx]) % nw;
        if (reads[idx] == 1)
            ++tally.ones[i];
        else
            ++tally.zeros[i];
    }
    return tally;
}

Watermark decode_tally(const VoteTally& tally, const WatermarkKey& key)
{
    const std::size_t nw = key.watermark_length();
    if (tally.zeros.size() != nw || tally.ones.size() != nw)
        throw KeyMismatchError("vote tally length disagrees with the key's watermark size");
    std::vector<std::uint8_t> scrambled(nw);
    for (std::size_t i = 0; i < nw; ++i)
        scrambled[i] = tally.ones[i] > tally.zeros[i] ? 1 : 0;
    return Watermark(key.wm_width, key.wm_height,
                     invert_permutation(permutation(key.perm_seed, nw), scrambled));
}

Matrix embed_real(const Matrix& host, const Watermark& wm, const WatermarkKey& key, EmbedReport* report)
{
    key.validate();
    auto p = dwt2d_multi(host, key.wavelet, key.levels);
    auto r = embed_pyramid(p, wm, key);
    Matrix marked = idwt2d_multi(p);
    if (report) {
        double sse = 0.0;
        for (std::size_t i = 0; i < host.values().size(); ++i) {
            const double d = host.values()[i] - marked.values()[i];
            sse += d * d;
        }
        const double mse = sse / static_cast<double>(host.values().size());
        r.psnr_db = mse == 0.0 ? std::numeric_limits<double>::infinity()
                               : 10.0 * std::log10(255.0 * 255.0 / mse);
        *report = r;
    }
    return marked;
}

std::pair<Watermark, VoteTally> extract_real(const Matrix& marked, const WatermarkKey& key)
{
    key.validate();
    const auto p = dwt2d_multi(marked, key.wavelet, key.levels);
    auto tally = tally_pyramid(p, key);
    auto wm = decode_tally(tally, key);
    return {std::move(wm), std::move(tally)};
}

Matrix to_matrix(const Image& img)
{
    Matrix m(img.height, img.width);
    for (std::size_t i = 0; i < img.samples.size(); ++i)
        m.values()[i] = img.samples[i];
    return m;
}

Image to_image(const Matrix& m)
{
    std::vector<std::uint8_t> px(m.values().size());
    for (std::size_t i = 0; i < px.size(); ++i)
        px[i] = static_cast<std::uint8_t>(std::clamp(std::round(m.values()[i]), 0.0, 255.0));
    return Image(m.cols(), m.rows(), std::move(px));
}

std::pair<Image, EmbedReport> embed(const Image& host, const Watermark& wm, const WatermarkKey& key)
{
    EmbedReport report;
    Image marked = to_image(embed_real(to_matrix(host), wm, key, &report));
    report.psnr_db = psnr(host, marked);
    return {std::move(marked), report};
}

std::pair<Watermark, VoteTally> extract(const Image& marked, const WatermarkKey& key)
{
    return extract_real(to_matrix(marked), key);
}

} // namespace wmark
