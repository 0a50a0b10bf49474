#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "lgf/branch_series.hpp"
#include "lgf/gamma.hpp"
#include "lgf/pfq.hpp"
#include "lgf/series.hpp"

namespace lgf {

namespace detail {

inline void require_outside_unit_segment(cplx t) {
    if (t.imag() == 0.0 && std::abs(t.real()) <= 1.0)
        throw std::domain_error("chain1d: t on the branch segment [-1, 1]");
}

inline void require_outside_unit_disk(cplx t) {
    if (std::abs(t) <= 1.0)
        throw std::domain_error("chain1d: series require |t| > 1");
}

// sqrt(t^2 - 1) analytic off the segment [-1, 1], asymptotic to t at infinity.
inline cplx edge_sqrt(cplx t) { return t * std::sqrt(1.0 - 1.0 / (t * t)); }

}  // namespace detail

/// Closed form of the chain resolvent,
///   H_r(t) = (t + sqrt(t^2-1))^{-|r|} / (2 sqrt(t^2-1)),
/// with the branch cut of the square root on [-1, 1].
inline cplx h1_closed(int r, cplx t) {
    detail::require_outside_unit_segment(t);
    const cplx w = detail::edge_sqrt(t);
    return 1.0 / (2.0 * w) / std::pow(t + w, std::abs(r));
}

/// Gauss form (1/2t)^{1+r} 2F1(1 + r/2, (1+r)/2; 1 + r; 1/t^2).
inline SeriesEval h1_hyp(int r, cplx t, double tol = 1e-14) {
    detail::require_outside_unit_disk(t);
    const int rr = std::abs(r);
    HyperParams hp;
    hp.numerator = {1.0 + rr / 2.0, (1.0 + rr) / 2.0};
    hp.denominator = {1.0 + static_cast<double>(rr)};
    hp.argument = 1.0 / (t * t);
    SeriesEval out = pfq(hp, tol);
    const cplx scale = std::pow(1.0 / (2.0 * t), 1 + rr);
    out.value *= scale;
    out.tail_estimate *= std::abs(scale);
    return out;
}

/// Residue series  sum_{n >= |r|, n = r mod 2}  (2t)^{-1-n} n! /
/// ((1+(n+r)/2)! (1+(n-r)/2)! gammas).  Only indices of the parity of r give
/// integer residue solutions; opposite-parity terms are spurious and omitted.
inline SeriesEval h1_gamma_series(int r, cplx t, double tol = 1e-14,
                                  std::size_t max_terms = 1000000) {
    detail::require_outside_unit_disk(t);
    const int rr = std::abs(r);
    SeriesAccumulator acc(tol);
    cplx term = std::pow(1.0 / (2.0 * t), 1 + rr);  // n = |r| term
    const cplx inv_t2 = 1.0 / (t * t);
    long n = rr;
    for (std::size_t steps = 0; steps < max_terms; ++steps) {
        acc.add(term);
        if (acc.done()) break;
        term *= inv_t2 * static_cast<double>((n + 1) * (n + 2)) /
                static_cast<double>((n + 2 + rr) * (n + 2 - rr));
        n += 2;
    }
    return acc.finalize();
}

/// Single parity branch of the split two-branch form: the even-r branch is
/// the 3F2(1, 1, 1/2; (2+r)/2, (2-r)/2; 1/t^2) series with its gamma-ratio
/// prefactor folded in termwise, the odd-r branch the (1, 1, 3/2; ...) one.
/// At integer r this equals the full resolvent.
inline SeriesEval h1_parity_branch(int r, cplx t, double tol = 1e-14) {
    detail::require_outside_unit_disk(t);
    const double rr = std::abs(r);
    const cplx z = 1.0 / (t * t);
    const double rt_pi = std::sqrt(std::numbers::pi);
    if (std::abs(r) % 2 == 0) {
        return branch_series(1.0 / (2.0 * rt_pi * t), {0.5, 1.0},
                             {1.0 + rr / 2.0, 1.0 - rr / 2.0}, z, tol);
    }
    return branch_series(1.0 / (2.0 * rt_pi * t * t), {1.5, 1.0},
                         {(3.0 + rr) / 2.0, (3.0 - rr) / 2.0}, z, tol);
}

/// Regularized correlation of the chain at the band edge, the t -> 1+ limit
/// of H_r - H_0.  The closed form gives exactly -|r| / 2.
inline double correlation_1d(int r) { return -0.5 * std::abs(r); }

}  // namespace lgf
