#include "wmark/wavelet.hpp"

#include "wavelet_detail.hpp"
#include "wmark/error.hpp"

#include <algorithm>
#include <cmath>

namespace wmark {

std::string_view to_string(WaveletId id)
{
    switch (id) {
    case WaveletId::haar:
        return "haar";
    case WaveletId::db4:
        return "db4";
    }
    return "unknown";
}

WaveletId parse_wavelet(std::string_view name)
{
    if (name == "haar")
        return WaveletId::haar;
    if (name == "db4")
        return WaveletId::db4;
    throw ParameterError("unknown wavelet '" + std::string(name) + "' (supported: haar, db4)");
}

WaveletFilter WaveletFilter::make(WaveletId id)
{
    WaveletFilter f;
    f.id = id;
    if (id == WaveletId::haar) {
        const double s = 1.0 / std::sqrt(2.0);
        f.lowpass = {s, s};
    } else {
        const double r3 = std::sqrt(3.0);
        const double norm = 4.0 * std::sqrt(2.0);
        f.lowpass = {(1 + r3) / norm, (3 + r3) / norm, (3 - r3) / norm, (1 - r3) / norm};
    }
    const std::size_t len = f.lowpass.size();
    f.highpass.resize(len);
    for (std::size_t k = 0; k < len; ++k)
        f.highpass[k] = (k % 2 == 0 ? 1.0 : -1.0) * f.lowpass[len - 1 - k];
    return f;
}

void dwt1d(std::span<const double> signal, const WaveletFilter& f,
           std::span<double> approx, std::span<double> detail)
{
    const std::size_t n = signal.size();
    if (n < 2 || n % 2 != 0)
        throw DimensionError("dwt1d: signal length must be even and >= 2, got " + std::to_string(n));
    const std::size_t half = n / 2;
    if (approx.size() != half || detail.size() != half)
        throw DimensionError("dwt1d: output spans must be half the signal length");

    const std::size_t taps = f.lowpass.size();
    for (std::size_t i = 0; i < half; ++i) {
        double a = 0.0;
        double d = 0.0;
        for (std::size_t k = 0; k < taps; ++k) {
            const double x = signal[(2 * i + k) % n];
            a += f.lowpass[k] * x;
            d += f.highpass[k] * x;
        }
        approx[i] = a;
        detail[i] = d;
    }
}

std::pair<std::vector<double>, std::vector<double>> dwt1d(std::span<const double> signal,
                                                          const WaveletFilter& f)
{
    std::vector<double> a(signal.size() / 2), d(signal.size() / 2);
    dwt1d(signal, f, a, d);
    return {std::move(a), std::move(d)};
}

void idwt1d(std::span<const double> approx, std::span<const double> detail,
            const WaveletFilter& f, std::span<double> out)
{
    if (approx.size() != detail.size())
        throw DimensionError("idwt1d: approx and detail lengths differ");
    if (approx.empty())
        throw DimensionError("idwt1d: empty input");
    const std::size_t n = approx.size() * 2;
    if (out.size() != n)
        throw DimensionError("idwt1d: output span must be twice the input length");

    const std::size_t taps = f.lowpass.size();
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < approx.size(); ++i)
        for (std::size_t k = 0; k < taps; ++k)
            out[(2 * i + k) % n] += f.lowpass[k] * approx[i] + f.highpass[k] * detail[i];
}

std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const WaveletFilter& f)
{
    std::vector<double> out(approx.size() * 2);
    idwt1d(approx, detail, f, out);
    return out;
}

void check_divisible(int rows, int cols, int levels)
{
    if (levels < 1)
        throw ParameterError("wavelet level count must be >= 1");
    if (levels > 30)
        throw ParameterError("wavelet level count too large");
    const long step = 1L << levels;
    if (rows < 1 || cols < 1 || rows % step != 0 || cols % step != 0)
        throw DimensionError("dimensions " + std::to_string(cols) + "x" + std::to_string(rows) +
                             " must be divisible by 2^levels = " + std::to_string(step));
}

namespace detail {

Matrix split_quadrants(const Matrix& level, std::array<Matrix, 3>& bands)
{
    const int hr = level.rows() / 2;
    const int hc = level.cols() / 2;
    Matrix ll(hr, hc);
    for (auto& b : bands)
        b = Matrix(hr, hc);
    for (int r = 0; r < hr; ++r) {
        for (int c = 0; c < hc; ++c) {
            ll(r, c) = level(r, c);
            bands[horizontal](r, c) = level(r, c + hc);
            bands[diagonal](r, c) = level(r + hr, c + hc);
            bands[vertical](r, c) = level(r + hr, c);
        }
    }
    return ll;
}

Matrix join_quadrants(const Matrix& ll, const std::array<Matrix, 3>& bands)
{
    const int hr = ll.rows();
    const int hc = ll.cols();
    Matrix level(hr * 2, hc * 2);
    for (int r = 0; r < hr; ++r) {
        for (int c = 0; c < hc; ++c) {
            level(r, c) = ll(r, c);
            level(r, c + hc) = bands[horizontal](r, c);
            level(r + hr, c + hc) = bands[diagonal](r, c);
            level(r + hr, c) = bands[vertical](r, c);
        }
    }
    return level;
}

void validate_pyramid(const Pyramid& p)
{
    check_divisible(p.rows, p.cols, p.levels);
    if (static_cast<int>(p.detail.size()) != p.levels)
        throw DimensionError("pyramid: detail level count does not match levels");
    for (int l = 1; l <= p.levels; ++l)
        for (const auto& b : p.detail[l - 1])
            if (b.rows() != (p.rows >> l) || b.cols() != (p.cols >> l))
                throw DimensionError("pyramid: inconsistent subband dimensions at level " +
                                     std::to_string(l));
    if (p.approx.rows() != (p.rows >> p.levels) || p.approx.cols() != (p.cols >> p.levels))
        throw DimensionError("pyramid: inconsistent approximation dimensions");
}

} // namespace detail

namespace {

// One analysis level in place: rows first, then columns.
void analyze_level(Matrix& m, const WaveletFilter& f)
{
    const int rows = m.rows();
    const int cols = m.cols();
    const int hc = cols / 2;
    const int hr = rows / 2;

#pragma omp parallel
    {
        std::vector<double> buf(static_cast<std::size_t>(std::max(rows, cols)));
        std::vector<double> col(static_cast<std::size_t>(rows));

#pragma omp for schedule(static)
        for (int r = 0; r < rows; ++r) {
            auto row = m.row(r);
            std::copy(row.begin(), row.end(), buf.begin());
            dwt1d(std::span<const double>(buf.data(), cols), f, row.subspan(0, hc), row.subspan(hc, hc));
        }

#pragma omp for schedule(static)
        for (int c = 0; c < cols; ++c) {
            for (int r = 0; r < rows; ++r)
                col[r] = m(r, c);
            dwt1d(col, f, std::span<double>(buf.data(), hr), std::span<double>(buf.data() + hr, hr));
            for (int r = 0; r < rows; ++r)
                m(r, c) = buf[r];
        }
    }
}

// Inverse of analyze_level: columns first, then rows.
void synthesize_level(Matrix& m, const WaveletFilter& f)
{
    const int rows = m.rows();
    const int cols = m.cols();
    const int hc = cols / 2;
    const int hr = rows / 2;

#pragma omp parallel
    {
        std::vector<double> buf(static_cast<std::size_t>(std::max(rows, cols)));
        std::vector<double> col(static_cast<std::size_t>(rows));

#pragma omp for schedule(static)
        for (int c = 0; c < cols; ++c) {
            for (int r = 0; r < rows; ++r)
                col[r] = m(r, c);
            idwt1d(std::span<const double>(col.data(), hr), std::span<const double>(col.data() + hr, hr),
                   f, std::span<double>(buf.data(), rows));
            for (int r = 0; r < rows; ++r)
                m(r, c) = buf[r];
        }

#pragma omp for schedule(static)
        for (int r = 0; r < rows; ++r) {
            auto row = m.row(r);
            std::copy(row.begin(), row.end(), buf.begin());
            idwt1d(std::span<const double>(buf.data(), hc), std::span<const double>(buf.data() + hc, hc),
                   f, row);
        }
    }
}

} // namespace

Pyramid dwt2d_multi(const Matrix& m, WaveletId wavelet, int levels)
{
    check_divisible(m.rows(), m.cols(), levels);
    const auto f = WaveletFilter::make(wavelet);

    Pyramid p;
    p.levels = levels;
    p.rows = m.rows();
    p.cols = m.cols();
    p.wavelet = wavelet;
    p.detail.resize(static_cast<std::size_t>(levels));

    Matrix cur = m;
    for (int l = 1; l <= levels; ++l) {
        analyze_level(cur, f);
        cur = detail::split_quadrants(cur, p.detail[l - 1]);
    }
    p.approx = std::move(cur);
    return p;
}

Matrix idwt2d_multi(const Pyramid& p)
{
    detail::validate_pyramid(p);
    const auto f = WaveletFilter::make(p.wavelet);

    Matrix cur = p.approx;
    for (int l = p.levels; l >= 1; --l) {
        cur = detail::join_quadrants(cur, p.detail[l - 1]);
        synthesize_level(cur, f);
    }
    return cur;
}

} // namespace wmark
