#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lgf/series.hpp"

namespace lgf {

/// Coefficients of the two-parameter model value ~ c_log * ln(delta) + c_const.
struct LogFit {
    cplx c_log{0.0, 0.0};
    cplx c_const{0.0, 0.0};
    double residual = 0.0;
};

namespace detail {

/// Least squares with real basis columns and complex data, solved through
/// column-scaled normal equations in extended precision.  The systems here
/// are tiny (<= 6 columns).
inline std::vector<cplx> solve_least_squares(
    const std::vector<std::vector<double>>& columns,
    const std::vector<cplx>& y) {
    const std::size_t k = columns.size();
    const std::size_t m = y.size();
    for (const auto& col : columns)
        if (col.size() != m)
            throw std::invalid_argument("least squares: ragged design matrix");

    std::vector<long double> scale(k, 0.0L);
    for (std::size_t j = 0; j < k; ++j) {
        long double s = 0.0L;
        for (double v : columns[j]) s += static_cast<long double>(v) * v;
        scale[j] = std::sqrt(s);
        if (scale[j] == 0.0L)
            throw std::invalid_argument("least squares: zero basis column");
    }

    // normal equations on the scaled columns
    std::vector<std::vector<long double>> ata(k, std::vector<long double>(k, 0.0L));
    std::vector<std::complex<long double>> aty(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            long double s = 0.0L;
            for (std::size_t n = 0; n < m; ++n)
                s += static_cast<long double>(columns[i][n]) * columns[j][n];
            ata[i][j] = s / (scale[i] * scale[j]);
        }
        std::complex<long double> s{0.0L, 0.0L};
        for (std::size_t n = 0; n < m; ++n)
            s += static_cast<long double>(columns[i][n]) *
                 std::complex<long double>(y[n].real(), y[n].imag());
        aty[i] = s / scale[i];
    }

    // Gaussian elimination with partial pivoting
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(ata[r][col]) > std::fabs(ata[piv][col])) piv = r;
        if (std::fabs(ata[piv][col]) < 1e-30L)
            throw std::invalid_argument("least squares: singular system");
        std::swap(ata[col], ata[piv]);
        std::swap(aty[col], aty[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const long double f = ata[r][col] / ata[col][col];
            for (std::size_t c = col; c < k; ++c) ata[r][c] -= f * ata[col][c];
            aty[r] -= f * aty[col];
        }
    }
    std::vector<cplx> x(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto v = aty[j] / ata[j][j] / scale[j];
        x[j] = cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    return x;
}

}  // namespace detail

/// Fits value ~ c_log ln(delta) + c_const to samples (delta, value).
/// Requires at least three samples with distinct delta; callers should spread
/// the deltas over the smallest scales they can evaluate.
inline LogFit fit_log_singularity(
    std::span<const std::pair<double, cplx>> samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("fit_log_singularity: need >= 3 samples");
    bool distinct = false;
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first != samples[0].first) distinct = true;
    if (!distinct)
        throw std::invalid_argument("fit_log_singularity: all deltas equal");
    for (const auto& [d, v] : samples)
        if (!(d > 0.0))
            throw std::invalid_argument("fit_log_singularity: delta must be positive");

    std::vector<std::vector<double>> cols(2);
    std::vector<cplx> y;
    for (const auto& [d, v] : samples) {
        cols[0].push_back(std::log(d));
        cols[1].push_back(1.0);
        y.push_back(v);
    }
    const auto x = detail::solve_least_squares(cols, y);
    LogFit fit;
    fit.c_log = x[0];
    fit.c_const = x[1];
    double rss = 0.0;
    for (std::size_t n = 0; n < y.size(); ++n) {
        const cplx model = fit.c_log * cols[0][n] + fit.c_const;
        rss += std::norm(y[n] - model);
    }
    fit.residual = std::sqrt(rss / static_cast<double>(y.size()));
    return fit;
}

/// Fit with caller-supplied basis functions of delta; returns one coefficient
/// per basis function.  Used for edge extrapolations where the expansion
/// carries delta*log(delta) corrections alongside the constant.
inline std::vector<cplx> fit_basis(
    std::span<const double> deltas, std::span<const cplx> values,
    const std::vector<std::function<double(double)>>& basis) {
    if (deltas.size() != values.size())
        throw std::invalid_argument("fit_basis: size mismatch");
    if (deltas.size() < basis.size())
        throw std::invalid_argument("fit_basis: underdetermined fit");
    std::vector<std::vector<double>> cols(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (double d : deltas) cols[j].push_back(basis[j](d));
    std::vector<cplx> y(values.begin(), values.end());
    return detail::solve_least_squares(cols, y);
}

}  // namespace lgf
