#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lgf/gamma.hpp"
#include "lgf/series.hpp"

namespace lgf {

/// Parameter block for a generalized hypergeometric series
/// pFq(numerator; denominator; argument).
struct HyperParams {
    std::vector<cplx> numerator;
    std::vector<cplx> denominator;
    cplx argument{0.0, 0.0};

    /// Zero-balanced means the denominator parameters sum to the numerator
    /// parameters; such series are logarithmically singular at unit argument.
    bool zero_balanced(double eps = 1e-12) const {
        cplx s{0.0, 0.0};
        for (cplx b : denominator) s += b;
        for (cplx a : numerator) s -= a;
        return std::abs(s) <= eps;
    }
};

namespace detail {

// Index of the last nonzero term when some numerator parameter is a
// nonpositive integer (the series terminates), or nullopt.
inline std::optional<long> terminating_index(const std::vector<cplx>& num) {
    std::optional<long> m;
    for (cplx a : num)
        if (is_nonpositive_integer(a)) {
            long k = static_cast<long>(-a.real());
            if (!m || k < *m) m = k;
        }
    return m;
}

}  // namespace detail

/// Term-recursive evaluation of pFq.
///
/// Throws std::domain_error when a denominator parameter is a nonpositive
/// integer not shielded by an earlier-terminating numerator parameter, and
/// when the parameter counts alone rule out convergence.  Reaching the term
/// cap returns converged = false rather than throwing.
inline SeriesEval pfq(const HyperParams& p, double tol = 1e-14,
                      std::size_t max_terms = 1000000) {
    const auto term_at = detail::terminating_index(p.numerator);
    for (cplx b : p.denominator) {
        if (!is_nonpositive_integer(b)) continue;
        const long mb = static_cast<long>(-b.real());
        if (!term_at || *term_at >= mb)
            throw std::domain_error("pfq: nonpositive-integer denominator parameter");
    }
    const std::size_t np = p.numerator.size(), nq = p.denominator.size();
    if (!term_at && p.argument != cplx{0.0, 0.0}) {
        if (np > nq + 1)
            throw std::domain_error("pfq: series diverges for nonzero argument");
        if (np == nq + 1 && std::abs(p.argument) > 1.0)
            throw std::domain_error("pfq: argument outside the unit disk");
    }

    SeriesAccumulator acc(tol);
    cplx term{1.0, 0.0};
    for (std::size_t n = 0; n < max_terms; ++n) {
        acc.add(term);
        if (term_at && static_cast<long>(n) >= *term_at) {
            acc.mark_terminated();
            break;
        }
        if (acc.done()) break;
        cplx ratio = p.argument / static_cast<double>(n + 1);
        for (cplx a : p.numerator) ratio *= a + static_cast<double>(n);
        for (cplx b : p.denominator) ratio /= b + static_cast<double>(n);
        term *= ratio;
        if (term == cplx{0.0, 0.0}) {
            acc.mark_terminated();
            break;
        }
    }
    return acc.finalize();
}

}  // namespace lgf
