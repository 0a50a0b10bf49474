#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgf/series.hpp"

namespace lgf {

enum class Family { chain1d, square, trihex, bcc, nnn };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::chain1d: return "chain1d";
        case Family::square: return "square";
        case Family::trihex: return "trihex";
        case Family::bcc: return "bcc";
        case Family::nnn: return "nnn";
    }
    return "?";
}

/// A Bravais lattice given by its dimension and the displacement set whose
/// cosine sum is the hopping symbol.  The Laplacian's +/- symmetrization is
/// carried by the quadrature and identity stencils, so asymmetric sets such
/// as the honeycomb triple are stored as written.
struct LatticeSpec {
    int dimension = 0;
    std::vector<std::vector<int>> neighbors;

    // Range of the structure function, when known analytically.  Used to
    // refuse on-spectrum quadrature requests.
    double spectrum_min = 0.0;
    double spectrum_max = 0.0;
    bool has_spectrum_bounds = false;

    LatticeSpec(int dim, std::vector<std::vector<int>> neigh)
        : dimension(dim), neighbors(std::move(neigh)) {
        if (dimension <= 0)
            throw std::invalid_argument("LatticeSpec: dimension must be positive");
        if (neighbors.empty())
            throw std::invalid_argument("LatticeSpec: empty neighbor set");
        for (const auto& a : neighbors) {
            if (static_cast<int>(a.size()) != dimension)
                throw std::invalid_argument("LatticeSpec: neighbor dimension mismatch");
            bool zero = true;
            for (int c : a) zero = zero && c == 0;
            if (zero)
                throw std::invalid_argument("LatticeSpec: zero neighbor vector");
        }
    }

    LatticeSpec with_spectrum(double lo, double hi) const {
        LatticeSpec out = *this;
        out.spectrum_min = lo;
        out.spectrum_max = hi;
        out.has_spectrum_bounds = true;
        return out;
    }

    int coordination() const { return static_cast<int>(neighbors.size()); }
};

/// Sum over the neighbor set of cos(a . theta); equals the coordination
/// number at theta = 0.
inline double structure_function(const LatticeSpec& spec,
                                 std::span<const double> theta) {
    if (static_cast<int>(theta.size()) != spec.dimension)
        throw std::invalid_argument("structure_function: dimension mismatch");
    double s = 0.0;
    for (const auto& a : spec.neighbors) {
        double dot = 0.0;
        for (int d = 0; d < spec.dimension; ++d) dot += a[d] * theta[d];
        s += std::cos(dot);
    }
    return s;
}

inline LatticeSpec chain_lattice() {
    return LatticeSpec(1, {{1}, {-1}}).with_spectrum(-2.0, 2.0);
}

inline LatticeSpec square_lattice() {
    return LatticeSpec(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
        .with_spectrum(-4.0, 4.0);
}

/// Three-vector set whose symbol is cos t1 + cos t2 + cos(t1 + t2); the
/// shared evaluator of the triangular/honeycomb pair in its direct angles.
inline LatticeSpec honeycomb_lattice() {
    return LatticeSpec(2, {{1, 0}, {0, 1}, {-1, -1}}).with_spectrum(-1.5, 3.0);
}

inline LatticeSpec triangular_lattice() {
    return LatticeSpec(2, {{2, 0}, {-2, 0}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}})
        .with_spectrum(-3.0, 6.0);
}

/// Lattice of the contour-variable form shared by the triangular/honeycomb
/// family: symbol 2[cos(p1-p2) + cos(2 p1+p2) + cos(p1+2 p2)], spectrum [-3, 6].
inline LatticeSpec trihex_contour_lattice() {
    return LatticeSpec(2, {{1, -1}, {-1, 1}, {2, 1}, {-2, -1}, {1, 2}, {-1, -2}})
        .with_spectrum(-3.0, 6.0);
}

inline LatticeSpec bcc_lattice(int dim) {
    if (dim < 1) throw std::invalid_argument("bcc_lattice: dimension must be >= 1");
    std::vector<std::vector<int>> neigh;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        std::vector<int> a(dim);
        for (int d = 0; d < dim; ++d) a[d] = (mask >> d) & 1 ? 1 : -1;
        neigh.push_back(std::move(a));
    }
    const double n = std::ldexp(1.0, dim);  // 2^dim
    return LatticeSpec(dim, std::move(neigh)).with_spectrum(-n, n);
}

/// A spectral parameter in both the family's native normalization and the
/// raw lambda of the 1/(lambda - sum cos) integrand.
///
/// Native-to-raw maps:  chain lambda = 2t;  square lambda = 4t;
/// trihex lambda = t - 3 (contour lattice);  bcc lambda = 2^D t.
/// The next-nearest-neighbor chain carries weighted cosines and is handled
/// by its own quadrature, not by this mapping.
struct SpectralPoint {
    Family family = Family::chain1d;
    int dimension = 1;
    cplx native_t{0.0, 0.0};
    cplx raw_lambda{0.0, 0.0};
};

inline cplx native_to_raw_lambda(Family f, cplx t, int dim = 0) {
    switch (f) {
        case Family::chain1d: return 2.0 * t;
        case Family::square: return 4.0 * t;
        case Family::trihex: return t - 3.0;
        case Family::bcc:
            if (dim < 1)
                throw std::invalid_argument("native_to_raw_lambda: bcc needs a dimension");
            return std::ldexp(1.0, dim) * t;
        case Family::nnn:
            throw std::invalid_argument(
                "native_to_raw_lambda: nnn uses weighted hopping; see extensions");
    }
    throw std::invalid_argument("native_to_raw_lambda: unknown family");
}

inline SpectralPoint spectral_from_native(Family f, cplx t, int dim = 0) {
    if (dim == 0) {
        switch (f) {
            case Family::chain1d: case Family::nnn: dim = 1; break;
            case Family::square: case Family::trihex: dim = 2; break;
            case Family::bcc: dim = 3; break;
        }
    }
    return SpectralPoint{f, dim, t, native_to_raw_lambda(f, t, dim)};
}

}  // namespace lgf
