#include "wmark/wavelet.hpp"

#include "wavelet_detail.hpp"

#include <algorithm>

namespace wmark::serial {

namespace {

void analyze_level(Matrix& m, const WaveletFilter& f)
{
    const int rows = m.rows();
    const int cols = m.cols();

    for (int r = 0; r < rows; ++r) {
        std::vector<double> src(m.row(r).begin(), m.row(r).end());
        auto [a, d] = wmark::dwt1d(src, f);
        std::copy(a.begin(), a.end(), m.row(r).begin());
        std::copy(d.begin(), d.end(), m.row(r).begin() + cols / 2);
    }

    std::vector<double> col(static_cast<std::size_t>(rows));
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r)
            col[r] = m(r, c);
        auto [a, d] = wmark::dwt1d(col, f);
        for (int r = 0; r < rows / 2; ++r) {
            m(r, c) = a[r];
            m(r + rows / 2, c) = d[r];
        }
    }
}

void synthesize_level(Matrix& m, const WaveletFilter& f)
{
    const int rows = m.rows();
    const int cols = m.cols();

    std::vector<double> a(static_cast<std::size_t>(rows / 2)), d(static_cast<std::size_t>(rows / 2));
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows / 2; ++r) {
            a[r] = m(r, c);
            d[r] = m(r + rows / 2, c);
        }
        auto x = wmark::idwt1d(a, d, f);
        for (int r = 0; r < rows; ++r)
            m(r, c) = x[r];
    }

    for (int r = 0; r < rows; ++r) {
        auto row = m.row(r);
        auto x = wmark::idwt1d(row.subspan(0, cols / 2), row.subspan(cols / 2), f);
        std::copy(x.begin(), x.end(), row.begin());
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

} // namespace wmark::serial
