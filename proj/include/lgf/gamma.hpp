#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lgf/series.hpp"

namespace lgf {

inline bool is_real_integer(cplx z) {
    return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

/// Exact pole test: nonpositive integers are the poles of Gamma.
inline bool is_nonpositive_integer(cplx z) {
    return is_real_integer(z) && z.real() <= 0.0;
}

namespace detail {

// Stirling coefficients B_{2n} / (2n (2n-1)).
inline constexpr double kStirling[] = {
    1.0 / 12.0,           -1.0 / 360.0,          1.0 / 1260.0,
    -1.0 / 1680.0,        1.0 / 1188.0,          -691.0 / 360360.0,
    1.0 / 156.0,          -3617.0 / 122400.0,    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// B_{2n} / (2n) for the digamma asymptotic series.
inline constexpr double kDigamma[] = {
    1.0 / 12.0,        -1.0 / 120.0,      1.0 / 252.0,   -1.0 / 240.0,
    1.0 / 132.0,       -691.0 / 32760.0,  1.0 / 12.0,    -3617.0 / 8160.0,
};

inline constexpr double kAsymptoticRadius = 12.0;

inline cplx ln_gamma_stirling(cplx z) {
    const cplx lz = std::log(z);
    cplx sum = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * std::numbers::pi);
    const cplx z2 = z * z;
    cplx zp = z;
    for (double c : kStirling) {
        sum += c / zp;
        zp *= z2;
    }
    return sum;
}

}  // namespace detail

/// Log of the gamma function for complex argument.
///
/// Shift-and-Stirling with reflection for Re z < 1/2; exp(ln_gamma(z))
/// reproduces Gamma(z) to near machine precision for moderate arguments.
/// The imaginary part is reduced through principal-branch logs, so values
/// are intended for exponentiation or for differences of nearby arguments.
inline cplx ln_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("ln_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const cplx s = std::sin(std::numbers::pi * z);
        return std::log(std::numbers::pi) - std::log(s) - ln_gamma(1.0 - z);
    }
    cplx shift{0.0, 0.0};
    while (std::abs(z) < detail::kAsymptoticRadius) {
        shift += std::log(z);
        z += 1.0;
    }
    return detail::ln_gamma_stirling(z) - shift;
}

/// 1 / Gamma(z).  Entire; exactly zero at nonpositive integers, which is what
/// lets series with out-of-range indices drop their invalid terms.
inline cplx recip_gamma(cplx z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    return std::exp(-ln_gamma(z));
}

/// Digamma (logarithmic derivative of gamma).
inline cplx digamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("digamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        const cplx piz = std::numbers::pi * z;
        return digamma(1.0 - z) -
               std::numbers::pi * std::cos(piz) / std::sin(piz);
    }
    cplx shift{0.0, 0.0};
    while (std::abs(z) < detail::kAsymptoticRadius) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv2 = 1.0 / (z * z);
    cplx sum = std::log(z) - 0.5 / z;
    cplx zp = inv2;
    for (double c : detail::kDigamma) {
        sum -= c * zp;
        zp *= inv2;
    }
    return sum + shift;
}

/// Rising factorial (a)_n by its product definition; valid at gamma poles.
inline cplx pochhammer(cplx a, unsigned n) {
    cplx p{1.0, 0.0};
    for (unsigned k = 0; k < n; ++k) p *= a + static_cast<double>(k);
    return p;
}

/// Product of gamma factors, Prod Gamma(num) / Prod Gamma(den), evaluated in
/// log space.  A pole in the denominator makes the ratio zero; a pole in the
/// numerator is an error.
inline cplx gamma_ratio(std::initializer_list<cplx> num,
                        std::initializer_list<cplx> den) {
    for (cplx a : num)
        if (is_nonpositive_integer(a))
            throw std::domain_error("gamma_ratio: numerator pole");
    for (cplx b : den)
        if (is_nonpositive_integer(b)) return {0.0, 0.0};
    cplx acc{0.0, 0.0};
    for (cplx a : num) acc += ln_gamma(a);
    for (cplx b : den) acc -= ln_gamma(b);
    return std::exp(acc);
}

/// ln Gamma(n) for positive integer n, cached.  The lattice series need
/// factorial logs up to a few thousand.
class LnGammaTable {
  public:
    explicit LnGammaTable(std::size_t max_arg = 64) { grow(max_arg); }

    double operator()(long n) const {
        return table_[static_cast<std::size_t>(n)];
    }

    void grow(std::size_t max_arg) {
        if (table_.empty()) table_.push_back(std::numeric_limits<double>::infinity());  // ln Gamma(0): pole
        std::size_t start = table_.size();
        if (start > max_arg) return;
        table_.resize(max_arg + 1);
        for (std::size_t n = start; n <= max_arg; ++n)
            table_[n] = std::lgamma(static_cast<double>(n));
        }

  private:
    std::vector<double> table_;
};

}  // namespace lgf
