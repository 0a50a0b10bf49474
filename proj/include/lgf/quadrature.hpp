#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lgf/fitting.hpp"
#include "lgf/lattice.hpp"
#include "lgf/series.hpp"

namespace lgf {

/// Worker count for grid evaluation; LGF_NUM_THREADS overrides the hardware
/// default.  Partials are combined in fixed row order, so the thread count
/// never changes a result.
inline int worker_count() {
    if (const char* env = std::getenv("LGF_NUM_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

template <class Fn>
void parallel_rows(int rows, Fn&& fn) {
    const int workers = std::min(worker_count(), rows);
    if (workers <= 1) {
        for (int r = 0; r < rows; ++r) fn(r);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            try {
                for (int r = next.fetch_add(1); r < rows && !failed;
                     r = next.fetch_add(1))
                    fn(r);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

// Per-dimension tables of exp(i m theta_k) for the integer frequencies a
// lattice evaluation needs.
struct PhaseTable {
    std::vector<cplx> row;  // exp(i m theta_k), k = 0..n-1
};

inline PhaseTable make_phase_row(int m, int n) {
    PhaseTable t;
    t.row.resize(n);
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * std::numbers::pi * m * k / n;
        t.row[k] = {std::cos(th), std::sin(th)};
    }
    return t;
}

inline void check_off_spectrum(const LatticeSpec& spec, cplx lambda) {
    if (lambda.imag() != 0.0 || !spec.has_spectrum_bounds) return;
    if (lambda.real() >= spec.spectrum_min && lambda.real() <= spec.spectrum_max)
        throw std::domain_error("quadrature: spectral parameter lies on the band");
}

}  // namespace detail

/// Tensor-product trapezoidal quadrature of the resolvent integral
///   (2 pi)^-D  Int  e^{i r.theta} / (lambda - sum_a cos(a.theta))  d^D theta
/// over the torus.  The integrand is periodic and analytic off the spectrum,
/// so the error decays exponentially in n_per_dim.
inline cplx quadrature_resolvent(const LatticeSpec& spec, std::span<const int> r,
                                 cplx lambda, int n_per_dim) {
    if (static_cast<int>(r.size()) != spec.dimension)
        throw std::invalid_argument("quadrature_resolvent: index dimension mismatch");
    if (n_per_dim < 2)
        throw std::invalid_argument("quadrature_resolvent: grid too small");
    if (spec.dimension > 3)
        throw std::invalid_argument("quadrature_resolvent: D > 3 not supported");
    detail::check_off_spectrum(spec, lambda);

    const int n = n_per_dim;
    const int D = spec.dimension;
    const auto& neigh = spec.neighbors;
    const int A = static_cast<int>(neigh.size());

    // phase rows per dimension: numerator frequency r_d and each neighbor's a_d
    std::vector<detail::PhaseTable> num_rows(D);
    std::vector<std::vector<detail::PhaseTable>> nb_rows(A, std::vector<detail::PhaseTable>(D));
    for (int d = 0; d < D; ++d) num_rows[d] = detail::make_phase_row(r[d], n);
    for (int a = 0; a < A; ++a)
        for (int d = 0; d < D; ++d)
            nb_rows[a][d] = detail::make_phase_row(neigh[a][d], n);

    const double cells = std::pow(static_cast<double>(n), D);

    if (D == 1) {
        KahanSum sum;
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (int a = 0; a < A; ++a) s += nb_rows[a][0].row[k].real();
            sum.add(num_rows[0].row[k] / (lambda - s));
        }
        return sum.value() / cells;
    }

    std::vector<cplx> row_sums(n);
    detail::parallel_rows(n, [&](int k1) {
        KahanSum sum;
        if (D == 2) {
            for (int k2 = 0; k2 < n; ++k2) {
                double s = 0.0;
                for (int a = 0; a < A; ++a)
                    s += (nb_rows[a][0].row[k1] * nb_rows[a][1].row[k2]).real();
                sum.add(num_rows[0].row[k1] * num_rows[1].row[k2] / (lambda - s));
            }
        } else if (D == 3) {
            for (int k2 = 0; k2 < n; ++k2) {
                const cplx num12 = num_rows[0].row[k1] * num_rows[1].row[k2];
                for (int k3 = 0; k3 < n; ++k3) {
                    double s = 0.0;
                    for (int a = 0; a < A; ++a)
                        s += (nb_rows[a][0].row[k1] * nb_rows[a][1].row[k2] *
                              nb_rows[a][2].row[k3])
                                 .real();
                    sum.add(num12 * num_rows[2].row[k3] / (lambda - s));
                }
            }
        }
        row_sums[k1] = sum.value();
    });
    KahanSum total;
    for (const cplx& v : row_sums) total.add(v);
    return total.value() / cells;
}

/// Grid-doubling driver around quadrature_resolvent.  Grids are powers of
/// two; refinement stops once a doubling moves the value by less than tol.
inline cplx quadrature_resolvent_auto(const LatticeSpec& spec,
                                      std::span<const int> r, cplx lambda,
                                      double tol = 1e-12, int n_start = 0,
                                      int n_max = 0) {
    if (n_start == 0) n_start = spec.dimension <= 2 ? 256 : 64;
    if (n_max == 0) n_max = spec.dimension <= 2 ? 4096 : 256;
    cplx prev = quadrature_resolvent(spec, r, lambda, n_start);
    for (int n = 2 * n_start; n <= n_max; n *= 2) {
        const cplx cur = quadrature_resolvent(spec, r, lambda, n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("quadrature_resolvent_auto: tolerance not reached");
}

/// Regularized correlation at the spectral edge lambda = N:
///   (2 pi)^-D  Int  (cos(r.theta) - 1) / (N - sum_a cos(a.theta))  d^D theta.
/// The imaginary part of e^{i r.theta} integrates to zero by theta -> -theta
/// symmetry and is dropped.  The lone singular node at theta = 0 is replaced
/// by the limit of the quadratic ratio along the grid diagonal.
inline double quadrature_correlation(const LatticeSpec& spec,
                                     std::span<const int> r, int n_per_dim) {
    if (static_cast<int>(r.size()) != spec.dimension)
        throw std::invalid_argument("quadrature_correlation: index dimension mismatch");
    if (spec.dimension > 3)
        throw std::invalid_argument("quadrature_correlation: D > 3 not supported");
    const int n = n_per_dim;
    const int D = spec.dimension;
    const double N = spec.coordination();

    // limit of the quadratic ratio, averaged over the coordinate axes so the
    // patch shares the dihedral symmetries of the integrand; for D = 1 this
    // is the exact continuous extension -r^2/2
    double origin_patch = 0.0;
    for (int d = 0; d < D; ++d) {
        double ad2 = 0.0;
        for (const auto& a : spec.neighbors) ad2 += a[d] * a[d];
        origin_patch -= r[d] * r[d] / ad2;
    }
    origin_patch /= D;

    std::vector<double> theta(D);
    std::vector<double> row_sums(n, 0.0);
    const double two_pi = 2.0 * std::numbers::pi;

    auto node_value = [&](std::span<const double> th, bool origin) -> double {
        const double den = N - structure_function(spec, th);
        double dot = 0.0;
        for (int d = 0; d < D; ++d) dot += r[d] * th[d];
        if (origin) return origin_patch;
        if (std::abs(den) < 1e-12 * N)
            throw std::domain_error(
                "quadrature_correlation: structure maximum away from origin");
        return (std::cos(dot) - 1.0) / den;
    };

    if (D == 1) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) {
            theta[0] = two_pi * k / n;
            sum += node_value(theta, k == 0);
        }
        return sum / n;
    }
    detail::parallel_rows(n, [&](int k1) {
        std::vector<double> th(D);
        th[0] = two_pi * k1 / n;
        double sum = 0.0;
        if (D == 2) {
            for (int k2 = 0; k2 < n; ++k2) {
                th[1] = two_pi * k2 / n;
                sum += node_value(th, k1 == 0 && k2 == 0);
            }
        } else if (D == 3) {
            for (int k2 = 0; k2 < n; ++k2) {
                th[1] = two_pi * k2 / n;
                for (int k3 = 0; k3 < n; ++k3) {
                    th[2] = two_pi * k3 / n;
                    sum += node_value(th, k1 == 0 && k2 == 0 && k3 == 0);
                }
            }
        }
        row_sums[k1] = sum;
    });
    double total = 0.0;
    for (double v : row_sums) total += v;
    return total / std::pow(static_cast<double>(n), D);
}

/// Three-grid extrapolation of quadrature_correlation.  The direction-
/// dependent limit at the origin leaves an error of the form
/// (a + b log n) / n^2, which grids n, 2n, 4n remove exactly.
inline double quadrature_correlation_extrapolated(const LatticeSpec& spec,
                                                  std::span<const int> r,
                                                  int n_base = 512) {
    const double q1 = quadrature_correlation(spec, r, n_base);
    const double q2 = quadrature_correlation(spec, r, 2 * n_base);
    const double q4 = quadrature_correlation(spec, r, 4 * n_base);
    std::vector<double> ds = {static_cast<double>(n_base),
                              static_cast<double>(2 * n_base),
                              static_cast<double>(4 * n_base)};
    std::vector<cplx> ys = {q1, q2, q4};
    const auto x = fit_basis(
        ds, ys,
        {[](double) { return 1.0; }, [](double nn) { return 1.0 / (nn * nn); },
         [](double nn) { return std::log(nn) / (nn * nn); }});
    return x[0].real();
}

/// Weighted quadrature for the next-nearest-neighbor chain resolvent,
///   (2 pi)^-1  Int  e^{i r theta} / (2/tau1 - 2 cos theta
///                                    - (2 tau2/tau1) cos 2 theta)  d theta.
inline cplx quadrature_resolvent_nnn(int r, double tau1, double tau2,
                                     int n = 4096) {
    if (!(tau1 > 0.0) || tau2 < 0.0)
        throw std::domain_error("quadrature_resolvent_nnn: need tau1 > 0, tau2 >= 0");
    if (tau1 + tau2 >= 1.0)
        throw std::domain_error("quadrature_resolvent_nnn: tau1 + tau2 must be < 1");
    KahanSum sum;
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * std::numbers::pi * k / n;
        const double den =
            2.0 / tau1 - 2.0 * std::cos(th) - (2.0 * tau2 / tau1) * std::cos(2.0 * th);
        sum.add(cplx{std::cos(r * th), std::sin(r * th)} / den);
    }
    return sum.value() / static_cast<double>(n);
}

/// Residual of the Fourier-inverted defining relation of the resolvent,
///   lambda H(r) - sum_a (H(r+a) + H(r-a)) / 2 - [r = 0].
/// Any correct evaluator drives this to zero.
inline cplx resolvent_identity_residual(
    const LatticeSpec& spec, std::span<const int> r, cplx lambda,
    const std::function<cplx(std::span<const int>)>& H) {
    if (static_cast<int>(r.size()) != spec.dimension)
        throw std::invalid_argument("resolvent_identity_residual: dimension mismatch");
    cplx acc = lambda * H(r);
    std::vector<int> shifted(r.begin(), r.end());
    for (const auto& a : spec.neighbors) {
        for (int d = 0; d < spec.dimension; ++d) shifted[d] = r[d] + a[d];
        acc -= 0.5 * H(shifted);
        for (int d = 0; d < spec.dimension; ++d) shifted[d] = r[d] - a[d];
        acc -= 0.5 * H(shifted);
    }
    bool origin = true;
    for (int c : r) origin = origin && c == 0;
    if (origin) acc -= 1.0;
    return acc;
}

}  // namespace lgf
