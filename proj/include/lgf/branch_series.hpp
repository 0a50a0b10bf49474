#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "lgf/gamma.hpp"
#include "lgf/series.hpp"

namespace lgf {

/// Sum of  prefactor * sum_m z^m  Prod Gamma(num_j + m) / Prod Gamma(den_j + m).
///
/// This is the common shape of the parity-selected hypergeometric branches:
/// the gamma-ratio prefactors of the two-branch formulas are folded into the
/// terms, so a denominator argument sitting at a gamma pole simply zeroes the
/// early terms instead of requiring an explicit limit.  Once past the last
/// pole the terms follow the usual pFq ratio recurrence.
inline SeriesEval branch_series(cplx prefactor, const std::vector<cplx>& num,
                                const std::vector<cplx>& den, cplx z,
                                double tol = 1e-14,
                                std::size_t max_terms = 1000000) {
    long m0 = 0;
    for (cplx d : den)
        if (is_real_integer(d) && d.real() <= 0.0)
            m0 = std::max(m0, 1 - static_cast<long>(d.real()));

    SeriesAccumulator acc(tol);
    for (long m = 0; m < m0; ++m) acc.add({0.0, 0.0});

    // first nonzero term computed in log space
    cplx log_term{0.0, 0.0};
    for (cplx a : num) log_term += ln_gamma(a + static_cast<double>(m0));
    for (cplx d : den) log_term -= ln_gamma(d + static_cast<double>(m0));
    cplx term = prefactor * std::exp(log_term) * std::pow(z, static_cast<double>(m0));

    for (std::size_t n = static_cast<std::size_t>(m0); n < max_terms; ++n) {
        acc.add(term);
        if (acc.done()) break;
        cplx ratio = z;
        for (cplx a : num) ratio *= a + static_cast<double>(n);
        for (cplx d : den) ratio /= d + static_cast<double>(n);
        term *= ratio;
    }
    return acc.finalize();
}

}  // namespace lgf
