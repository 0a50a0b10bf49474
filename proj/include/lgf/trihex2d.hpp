#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "lgf/fitting.hpp"
#include "lgf/gamma.hpp"
#include "lgf/lattice.hpp"
#include "lgf/quadrature.hpp"
#include "lgf/series.hpp"

namespace lgf {

/// Series convergence gate for the triangular/honeycomb family.  The
/// classical Lauricella criterion gives |t| > 9, and t = 9 is also the
/// spectral edge of the contour form; evaluation is refused below 10 to keep
/// a convergence margin.
inline constexpr double trihex_series_min_t = 10.0;

/// Triple residue series of the shared triangular/honeycomb resolvent,
///   sum_{i,j,k >= 0} Gamma(1+i+j+k)^2 t^{-1-i-j-k} /
///     [i! j! k! Gamma(1-p+i) Gamma(1+p-q+j) Gamma(1+q+k)],
/// summed over total-degree shells n = i+j+k in ascending order.  Reciprocal
/// gamma zeros prune index combinations outside the lattice walk structure.
inline SeriesEval h_trihex_series(int p, int q, cplx t, double tol = 1e-14,
                                  int max_shells = 2500) {
    if (std::abs(t) < trihex_series_min_t)
        throw std::domain_error("h_trihex_series: |t| below the convergence gate");

    const cplx log_t = std::log(t);
    const int margin = std::abs(p) + std::abs(q) + std::abs(p - q) + 2;
    LnGammaTable lg(64 + margin);

    SeriesAccumulator acc(tol);
    const int i_min = std::max(0, p);
    const int j_min = std::max(0, q - p);
    const int k_min = std::max(0, -q);
    for (int n = 0; n < max_shells; ++n) {
        lg.grow(static_cast<std::size_t>(n) + margin);
        KahanSum shell;
        const double two_ln = 2.0 * lg(1 + n);
        for (int i = i_min; i <= n; ++i) {
            for (int j = j_min; j <= n - i; ++j) {
                const int k = n - i - j;
                if (k < k_min) continue;
                const double lden = lg(1 + i) + lg(1 + j) + lg(1 + k) +
                                    lg(1 - p + i) + lg(1 + p - q + j) +
                                    lg(1 + q + k);
                shell.add(std::exp(cplx(two_ln - lden, 0.0) -
                                   (1.0 + n) * log_t));
            }
        }
        acc.add(shell.value());
        if (acc.done()) break;
    }
    return acc.finalize();
}

/// Third Lauricella function in three variables,
///   F_C(a1, a2; b1, b2, b3; x, y, z)
///     = sum (a1)_{i+j+k} (a2)_{i+j+k} / ((b1)_i (b2)_j (b3)_k)
///       x^i y^j z^k / (i! j! k!),
/// summed over shells.  Requires sqrt|x| + sqrt|y| + sqrt|z| < 1.
inline SeriesEval lauricella_fc3(cplx a1, cplx a2, cplx b1, cplx b2, cplx b3,
                                 cplx x, cplx y, cplx z, double tol = 1e-14,
                                 int max_shells = 2500) {
    if (std::sqrt(std::abs(x)) + std::sqrt(std::abs(y)) + std::sqrt(std::abs(z)) >=
        1.0)
        throw std::domain_error("lauricella_fc3: outside the convergence domain");
    for (cplx b : {b1, b2, b3})
        if (is_nonpositive_integer(b))
            throw std::domain_error(
                "lauricella_fc3: nonpositive-integer denominator parameter");

    // log-Pochhammer ladders; a numerator zero propagates -inf and the
    // corresponding terms vanish under exp
    const int cap = max_shells + 1;
    std::vector<cplx> lpa(cap + 1), lpb1(cap + 1), lpb2(cap + 1), lpb3(cap + 1);
    lpa[0] = lpb1[0] = lpb2[0] = lpb3[0] = cplx{0.0, 0.0};
    for (int n = 0; n < cap; ++n) {
        const double dn = n;
        lpa[n + 1] = lpa[n] + std::log(a1 + dn) + std::log(a2 + dn);
        lpb1[n + 1] = lpb1[n] + std::log(b1 + dn);
        lpb2[n + 1] = lpb2[n] + std::log(b2 + dn);
        lpb3[n + 1] = lpb3[n] + std::log(b3 + dn);
    }
    LnGammaTable lg(static_cast<std::size_t>(cap) + 2);
    const bool zx = x == cplx{0.0, 0.0}, zy = y == cplx{0.0, 0.0},
               zz = z == cplx{0.0, 0.0};
    const cplx lx = zx ? cplx{0.0, 0.0} : std::log(x);
    const cplx ly = zy ? cplx{0.0, 0.0} : std::log(y);
    const cplx lz = zz ? cplx{0.0, 0.0} : std::log(z);

    SeriesAccumulator acc(tol);
    for (int n = 0; n < max_shells; ++n) {
        KahanSum shell;
        for (int i = 0; i <= n; ++i) {
            if (zx && i > 0) break;
            for (int j = 0; j <= n - i; ++j) {
                if (zy && j > 0) break;
                const int k = n - i - j;
                if (zz && k > 0) continue;
                const cplx lt = lpa[n] - lpb1[i] - lpb2[j] - lpb3[k] -
                                lg(1 + i) - lg(1 + j) - lg(1 + k) +
                                static_cast<double>(i) * lx +
                                static_cast<double>(j) * ly +
                                static_cast<double>(k) * lz;
                shell.add(std::exp(lt));
            }
        }
        acc.add(shell.value());
        if (acc.done()) break;
    }
    return acc.finalize();
}

enum class TrihexForm { honeycomb, triangular };

/// Calibrated proportionality constants between the physical Green's
/// functions and the shared resolvent at t = 2u + 3 (measured against the
/// quadrature oracle; a published variant states -6 and -3/2 at the singular
/// point, where the relation is not falsifiable).
inline constexpr double honeycomb_green_constant = 2.0;
inline constexpr double triangular_green_constant = 1.0;

/// Green's function of the honeycomb-form (denominator u - [cos t1 + cos t2 +
/// cos(t1+t2)]) or triangular-form (denominator 2u - 2[cos 2 t1 + cos(t1-t2)
/// + cos(t1+t2)]) integral, via the shared series at t = 2u + 3.
/// The triangular form needs p + q even; its index map is the i <-> j swap
/// p' = q, q' = (p+q)/2.
inline cplx green_trihex(TrihexForm form, int p, int q, cplx u,
                         double tol = 1e-14) {
    const cplx t = 2.0 * u + 3.0;
    if (std::abs(t) < trihex_series_min_t)
        throw std::domain_error(
            "green_trihex: spectral parameter below the series gate");
    if (form == TrihexForm::honeycomb)
        return honeycomb_green_constant * h_trihex_series(p, q, t, tol).value;
    if (((p + q) % 2 + 2) % 2 != 0)
        throw std::domain_error("green_trihex: triangular form needs p + q even");
    return triangular_green_constant *
           h_trihex_series(q, (p + q) / 2, t, tol).value;
}

/// Regularized correlation at the spectral edge of the honeycomb-form
/// integrand, (2 pi)^-2 Int (cos(p t1 + q t2) - 1) /
/// (3 - cos t1 - cos t2 - cos(t1+t2)).
inline double correlation_trihex(int p, int q, int n_base = 512) {
    const std::array<int, 2> idx = {p, q};
    return quadrature_correlation_extrapolated(honeycomb_lattice(), idx, n_base);
}

/// Secondary route for the trihex correlation: the spectral-edge limit of
/// resolvent differences, G(p,q; 3+delta) - G(0,0; 3+delta), extrapolated in
/// delta with log corrections.  Slower and less accurate than the regularized
/// quadrature; used for cross-checking.
struct TrihexCorrelationRoutes {
    double value = 0.0;
    double quadrature_route = 0.0;
    double edge_limit_route = 0.0;
    double difference = 0.0;
};

inline TrihexCorrelationRoutes correlation_trihex_routes(int p, int q,
                                                         double route_tol = 1e-5) {
    TrihexCorrelationRoutes out;
    out.quadrature_route = correlation_trihex(p, q);
    const LatticeSpec hex = honeycomb_lattice();
    const std::array<int, 2> idx = {p, q};
    const std::array<int, 2> origin = {0, 0};
    const std::vector<double> deltas = {0.04, 0.02, 0.01, 0.005, 0.0025};
    std::vector<cplx> ys;
    ys.reserve(deltas.size());
    for (double d : deltas)
        ys.push_back(quadrature_resolvent(hex, idx, 3.0 + d, 3072) -
                     quadrature_resolvent(hex, origin, 3.0 + d, 3072));
    const auto x = fit_basis(
        deltas, ys,
        {[](double) { return 1.0; }, [](double d) { return d; },
         [](double d) { return d * std::log(d); },
         [](double d) { return d * d; }});
    out.edge_limit_route = x[0].real();
    out.difference = std::abs(out.edge_limit_route - out.quadrature_route);
    out.value = out.quadrature_route;
    if (out.difference > route_tol)
        throw std::runtime_error("correlation_trihex: routes disagree");
    return out;
}

}  // namespace lgf
