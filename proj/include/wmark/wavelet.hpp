#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wmark {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), values_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return values_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return values_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<double> row(int r) { return {values_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
    std::span<const double> row(int r) const { return {values_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> values_;
};

enum class WaveletId { haar, db4 };

std::string_view to_string(WaveletId id);
// Throws ParameterError for names other than "haar" and "db4".
WaveletId parse_wavelet(std::string_view name);

/// Orthonormal two-channel filter bank. The highpass is the quadrature
/// mirror of the lowpass: g[k] = (-1)^k h[len-1-k].
struct WaveletFilter {
    WaveletId id = WaveletId::db4;
    std::vector<double> lowpass;
    std::vector<double> highpass;

    static WaveletFilter make(WaveletId id);
};

// Detail orientations, in the order used for f_{o,l}.
enum Orientation : int { horizontal = 0, diagonal = 1, vertical = 2 };

/// L-level decomposition. detail[l-1][o] holds level l, orientation o.
/// Quadrant layout per level after rows (left=low) then columns (top=low):
/// top-right is horizontal, bottom-right diagonal, bottom-left vertical.
struct Pyramid {
    int levels = 0;
    int rows = 0;  // dimensions of the transformed input
    int cols = 0;
    WaveletId wavelet = WaveletId::db4;
    std::vector<std::array<Matrix, 3>> detail;
    Matrix approx;

    Matrix& band(int level, Orientation o) { return detail[level - 1][o]; }
    const Matrix& band(int level, Orientation o) const { return detail[level - 1][o]; }
};

// Single periodic analysis step; signal length must be even and >= 2.
void dwt1d(std::span<const double> signal, const WaveletFilter& f,
           std::span<double> approx, std::span<double> detail);
std::pair<std::vector<double>, std::vector<double>> dwt1d(std::span<const double> signal,
                                                          const WaveletFilter& f);

// Exact inverse of dwt1d under periodic extension.
void idwt1d(std::span<const double> approx, std::span<const double> detail,
            const WaveletFilter& f, std::span<double> out);
std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const WaveletFilter& f);

// Multilevel separable 2-D transform. Rows and columns must each be
// divisible by 2^levels (DimensionError otherwise). Rows and columns of a
// level are processed in parallel; results are bit-identical to the
// serial reference below.
Pyramid dwt2d_multi(const Matrix& m, WaveletId wavelet, int levels);
Matrix idwt2d_multi(const Pyramid& p);

// Throws DimensionError unless rows and cols are divisible by 2^levels.
void check_divisible(int rows, int cols, int levels);

namespace serial {
// Single-threaded reference implementations kept for testing and benchmarks.
Pyramid dwt2d_multi(const Matrix& m, WaveletId wavelet, int levels);
Matrix idwt2d_multi(const Pyramid& p);
} // namespace serial

} // namespace wmark
