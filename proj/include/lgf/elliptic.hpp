#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lgf {

/// Complete elliptic integral of the first kind by the arithmetic-geometric
/// mean, K(m) = pi / (2 agm(1, sqrt(1-m))).
///
/// The argument is the squared modulus m in [0, 1); with this convention
/// (pi/2) 2F1(1/2, 1/2; 1; m) = elliptic_k_agm(m).
inline double elliptic_k_agm(double m) {
    if (!(m >= 0.0 && m < 1.0))
        throw std::domain_error("elliptic_k_agm: squared modulus outside [0,1)");
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    // quadratic convergence: well under 10 iterations to roundoff
    for (int i = 0; i < 40 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (2.0 * a);
}

}  // namespace lgf
