#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <numbers>

#include "lgf/lattice.hpp"
#include "lgf/quadrature.hpp"

using lgf::cplx;
using Catch::Matchers::WithinAbs;

TEST_CASE("structure function at symmetry points") {
    const auto sq = lgf::square_lattice();
    const std::array<double, 2> origin = {0.0, 0.0};
    CHECK_THAT(lgf::structure_function(sq, origin), WithinAbs(4.0, 1e-15));

    const auto hex = lgf::honeycomb_lattice();
    const std::array<double, 2> pipi = {std::numbers::pi, std::numbers::pi};
    CHECK_THAT(lgf::structure_function(hex, pipi), WithinAbs(-1.0, 1e-12));

    const auto bcc3 = lgf::bcc_lattice(3);
    const std::array<double, 3> origin3 = {0.0, 0.0, 0.0};
    CHECK_THAT(lgf::structure_function(bcc3, origin3), WithinAbs(8.0, 1e-15));
    CHECK(bcc3.coordination() == 8);
}

TEST_CASE("structure function validates dimensions") {
    const auto sq = lgf::square_lattice();
    const std::array<double, 1> wrong = {0.0};
    CHECK_THROWS_AS(lgf::structure_function(sq, wrong), std::invalid_argument);
}

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(lgf::LatticeSpec(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(lgf::LatticeSpec(2, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(lgf::LatticeSpec(0, {}), std::invalid_argument);
}

TEST_CASE("chain quadrature matches the closed form at lambda = 4") {
    const auto chain = lgf::chain_lattice();
    const std::array<int, 1> r0 = {0};
    const cplx h0 = lgf::quadrature_resolvent(chain, r0, 4.0, 256);
    CHECK_THAT(h0.real(), WithinAbs(0.28867513459481287, 1e-13));
    CHECK_THAT(h0.imag(), WithinAbs(0.0, 1e-14));
}

TEST_CASE("square quadrature at lambda = 8 and the identity row") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> r00 = {0, 0}, r10 = {1, 0};
    const double h00 = lgf::quadrature_resolvent(sq, r00, 8.0, 256).real();
    const double h10 = lgf::quadrature_resolvent(sq, r10, 8.0, 256).real();
    CHECK_THAT(h00, WithinAbs(0.13414775089367054, 1e-11));
    CHECK_THAT(h10, WithinAbs(0.018295501787341094, 1e-11));
    CHECK_THAT(8.0 * h00 - 4.0 * h10 - 1.0, WithinAbs(0.0, 1e-10));
}

TEST_CASE("quadrature refuses on-spectrum parameters") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> r = {0, 0};
    CHECK_THROWS_AS(lgf::quadrature_resolvent(sq, r, 3.0, 64), std::domain_error);
    CHECK_NOTHROW(lgf::quadrature_resolvent(sq, r, cplx{3.0, 0.5}, 64));
}

TEST_CASE("spectral convergence of the doubling driver") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> r = {1, 0};
    const cplx lam{4.4, 0.0};
    const double c1 = std::abs(lgf::quadrature_resolvent(sq, r, lam, 32) -
                               lgf::quadrature_resolvent(sq, r, lam, 16));
    const double c2 = std::abs(lgf::quadrature_resolvent(sq, r, lam, 64) -
                               lgf::quadrature_resolvent(sq, r, lam, 32));
    const double c3 = std::abs(lgf::quadrature_resolvent(sq, r, lam, 128) -
                               lgf::quadrature_resolvent(sq, r, lam, 64));
    CHECK(c1 > c2);
    CHECK(c2 > c3);
    CHECK_NOTHROW(lgf::quadrature_resolvent_auto(sq, r, lam, 1e-12));
}

TEST_CASE("correlation values: chain and square") {
    const auto chain = lgf::chain_lattice();
    for (int r = 0; r <= 4; ++r) {
        const std::array<int, 1> rv = {r};
        CHECK_THAT(lgf::quadrature_correlation(chain, rv, 64),
                   WithinAbs(-0.5 * r, 1e-13));
    }
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> r10 = {1, 0};
    CHECK_THAT(lgf::quadrature_correlation_extrapolated(sq, r10, 256),
               WithinAbs(-0.25, 1e-9));
}

TEST_CASE("correlation dihedral symmetry on the square lattice") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> a = {2, 1}, b = {1, 2}, c = {-2, 1}, d = {2, -1};
    const double va = lgf::quadrature_correlation(sq, a, 512);
    CHECK_THAT(lgf::quadrature_correlation(sq, b, 512), WithinAbs(va, 1e-12));
    CHECK_THAT(lgf::quadrature_correlation(sq, c, 512), WithinAbs(va, 1e-12));
    CHECK_THAT(lgf::quadrature_correlation(sq, d, 512), WithinAbs(va, 1e-12));
}

TEST_CASE("resolvent identity with closed-form chain values") {
    const auto chain = lgf::chain_lattice();
    auto H = [](std::span<const int> rv) -> cplx {
        const double w = std::sqrt(3.0);
        return 1.0 / (2.0 * w) / std::pow(2.0 + w, std::abs(rv[0]));
    };
    const std::array<int, 1> origin = {0}, off = {5};
    CHECK_THAT(std::abs(lgf::resolvent_identity_residual(chain, origin, 4.0, H)),
               WithinAbs(0.0, 1e-10));
    CHECK_THAT(std::abs(lgf::resolvent_identity_residual(chain, off, 4.0, H)),
               WithinAbs(0.0, 1e-10));
}

TEST_CASE("reflection symmetry of the quadrature") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> rp = {2, 1}, rm = {-2, -1};
    const cplx a = lgf::quadrature_resolvent(sq, rp, 6.5, 128);
    const cplx b = lgf::quadrature_resolvent(sq, rm, 6.5, 128);
    CHECK_THAT(std::abs(a - b), WithinAbs(0.0, 1e-13));
}

TEST_CASE("nnn quadrature gates") {
    CHECK_THROWS_AS(lgf::quadrature_resolvent_nnn(0, 0.6, 0.5, 128),
                    std::domain_error);
    CHECK_THROWS_AS(lgf::quadrature_resolvent_nnn(0, -0.1, 0.0, 128),
                    std::domain_error);
    CHECK_THAT(lgf::quadrature_resolvent_nnn(0, 0.5, 0.0, 2048).real(),
               WithinAbs(0.28867513459481287, 1e-12));
}

TEST_CASE("thread count does not change quadrature results") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> r = {1, 1};
    setenv("LGF_NUM_THREADS", "1", 1);
    const cplx serial = lgf::quadrature_resolvent(sq, r, 6.0, 256);
    setenv("LGF_NUM_THREADS", "4", 1);
    const cplx parallel = lgf::quadrature_resolvent(sq, r, 6.0, 256);
    unsetenv("LGF_NUM_THREADS");
    CHECK(serial == parallel);
}

TEST_CASE("spectral point mappings") {
    const auto sp = lgf::spectral_from_native(lgf::Family::square, 2.0);
    CHECK(sp.raw_lambda == cplx{8.0, 0.0});
    CHECK(lgf::native_to_raw_lambda(lgf::Family::trihex, 12.0) == cplx{9.0, 0.0});
    CHECK(lgf::native_to_raw_lambda(lgf::Family::bcc, 2.0, 3) == cplx{16.0, 0.0});
    CHECK_THROWS_AS(lgf::native_to_raw_lambda(lgf::Family::nnn, 1.0),
                    std::invalid_argument);
}
