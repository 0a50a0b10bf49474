#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "lgf/branch_series.hpp"
#include "lgf/gamma.hpp"
#include "lgf/series.hpp"

namespace lgf {

namespace detail {

inline bool bcc_common_parity(std::span<const int> r, int& parity) {
    parity = ((r[0] % 2) + 2) % 2;
    for (int c : r)
        if (((c % 2) + 2) % 2 != parity) return false;
    return true;
}

}  // namespace detail

/// Residue series of the D-dimensional body-centered-cubic resolvent,
///   sum_n (2^D t)^{-1-n} prod_i n! / (((n+r_i)/2)! ((n-r_i)/2)! gammas),
/// restricted to n = r_i (mod 2).  Components of mixed parity admit no
/// residue index at all: the walk cannot reach the site, and the result is
/// exactly zero.
inline SeriesEval h_bcc_series(std::span<const int> r, cplx t, int dim,
                               double tol = 1e-14,
                               std::size_t max_terms = 1000000) {
    if (dim < 1) throw std::invalid_argument("h_bcc_series: dimension must be >= 1");
    if (static_cast<int>(r.size()) != dim)
        throw std::invalid_argument("h_bcc_series: index dimension mismatch");
    if (std::abs(t) <= 1.0)
        throw std::domain_error("h_bcc_series: series require |t| > 1");

    int parity = 0;
    if (!detail::bcc_common_parity(r, parity)) {
        SeriesEval zero;
        zero.converged = true;
        return zero;
    }
    long n0 = 0;
    for (int c : r) n0 = std::max(n0, static_cast<long>(std::abs(c)));

    double lead_log = 0.0;
    for (int c : r) {
        const long cc = std::abs(c);
        lead_log += std::lgamma(1.0 + n0) - std::lgamma(1.0 + (n0 + cc) / 2) -
                    std::lgamma(1.0 + (n0 - cc) / 2);
    }
    const double pow2d = std::ldexp(1.0, dim);
    cplx term = std::exp(lead_log) * std::pow(1.0 / (pow2d * t), 1.0 + n0);
    const cplx inv_t2 = 1.0 / (t * t);

    SeriesAccumulator acc(tol);
    long n = n0;
    for (std::size_t steps = 0; steps < max_terms; ++steps) {
        acc.add(term);
        if (acc.done()) break;
        cplx ratio = inv_t2;
        for (int c : r) {
            const long cc = std::abs(c);
            ratio *= static_cast<double>((n + 1) * (n + 2)) /
                     static_cast<double>((n + 2 + cc) * (n + 2 - cc));
        }
        term *= ratio;
        n += 2;
    }
    return acc.finalize();
}

/// Single parity branch of the (2D+1)F(2D) two-branch form, with gamma-ratio
/// prefactors folded in termwise as analytic limits.  Requires all index
/// components of one parity; equals h_bcc_series there.
inline SeriesEval h_bcc_parity_branch(std::span<const int> r, cplx t, int dim,
                                      double tol = 1e-14) {
    if (dim < 1)
        throw std::invalid_argument("h_bcc_parity_branch: dimension must be >= 1");
    if (static_cast<int>(r.size()) != dim)
        throw std::invalid_argument("h_bcc_parity_branch: index dimension mismatch");
    if (std::abs(t) <= 1.0)
        throw std::domain_error("h_bcc_parity_branch: series require |t| > 1");
    int parity = 0;
    if (!detail::bcc_common_parity(r, parity))
        throw std::domain_error("h_bcc_parity_branch: mixed-parity indices");

    const cplx z = 1.0 / (t * t);
    const double pref_scale =
        std::pow(2.0, -dim) * std::pow(std::numbers::pi, -0.5 * dim);
    std::vector<cplx> num, den;
    num.reserve(2 * dim);
    den.reserve(2 * dim);
    cplx pref;
    if (parity == 0) {
        for (int d = 0; d < dim; ++d) num.insert(num.end(), {0.5, 1.0});
        for (int c : r) {
            const double cc = std::abs(c);
            den.push_back(1.0 + cc / 2.0);
            den.push_back(1.0 - cc / 2.0);
        }
        pref = pref_scale / t;
    } else {
        for (int d = 0; d < dim; ++d) num.insert(num.end(), {1.5, 1.0});
        for (int c : r) {
            const double cc = std::abs(c);
            den.push_back((3.0 + cc) / 2.0);
            den.push_back((3.0 - cc) / 2.0);
        }
        pref = pref_scale / (t * t);
    }
    return branch_series(pref, num, den, z, tol);
}

/// Direct residue sum for the chain with next-nearest-neighbor hopping.
/// Terms are indexed by (n, n', b) with the remaining index solved from the
/// residue constraint r + 4b + 2a - n' - n = 0; invalid solutions are pruned.
/// Convergence needs tau1 + tau2 < 1 (unit-circle bound on the expanded
/// symbol).
inline SeriesEval h_nnn_series(int r, double tau1, double tau2,
                               double tol = 1e-14, int max_shells = 2000) {
    if (!(tau1 > 0.0)) throw std::domain_error("h_nnn_series: tau1 must be positive");
    if (tau2 < 0.0) throw std::domain_error("h_nnn_series: tau2 must be nonnegative");
    if (tau1 + tau2 >= 1.0)
        throw std::domain_error("h_nnn_series: tau1 + tau2 must be < 1");
    const int rr = std::abs(r);

    LnGammaTable lg(64);
    const double ratio21 = tau2 / tau1;
    const double log_half_t1 = std::log(tau1 / 2.0);

    SeriesAccumulator acc(tol);
    for (int n = 0; n < max_shells; ++n) {
        lg.grow(static_cast<std::size_t>(n) + 2);
        KahanSum shell;
        const int np_max = tau2 > 0.0 ? n : 0;
        for (int np = 0; np <= np_max; ++np) {
            const double w_np = np == 0 ? 0.0 : np * std::log(ratio21);
            for (int b = 0; b <= np; ++b) {
                const int twice_a = n + np - rr - 4 * b;
                if (twice_a < 0 || twice_a % 2 != 0) continue;
                const int a = twice_a / 2;
                const int c = n - np - a;
                if (c < 0) continue;
                const double lcoef = lg(1 + n) - (lg(1 + b) + lg(1 + a) +
                                                  lg(1 + np - b) + lg(1 + c));
                shell.add(std::exp(lcoef + w_np + (1.0 + n) * log_half_t1));
            }
        }
        acc.add(shell.value());
        if (acc.done()) break;
    }
    return acc.finalize();
}

/// Green's function of the next-nearest-neighbor chain,
///   (1/2 pi) Int e^{i r theta} / (2 - 2 tau1 cos theta - 2 tau2 cos 2 theta),
/// equal to H_r / tau1.
inline cplx green_nnn(int r, double tau1, double tau2, double tol = 1e-14) {
    return h_nnn_series(r, tau1, tau2, tol).value / tau1;
}

}  // namespace lgf
