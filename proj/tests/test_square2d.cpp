#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "lgf/elliptic.hpp"
#include "lgf/fitting.hpp"
#include "lgf/gamma.hpp"
#include "lgf/pfq.hpp"
#include "lgf/quadrature.hpp"
#include "lgf/square2d.hpp"

using lgf::cplx;
using Catch::Matchers::WithinAbs;

TEST_CASE("gamma series reference values at t = 2") {
    CHECK_THAT(lgf::h2_gamma_series(0, 0, 2.0).value.real(),
               WithinAbs(0.13414775089367054, 1e-12));
    CHECK_THAT(lgf::h2_gamma_series(1, 1, 2.0).value.real(),
               WithinAbs(0.018295501787341094, 1e-12));
}

TEST_CASE("gamma series maps to the physical oracle by r = p+q, s = p-q") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> r11 = {1, 1};
    const double oracle = lgf::quadrature_resolvent(sq, r11, 8.0, 256).real();
    CHECK_THAT(lgf::h2_gamma_series(2, 0, 2.0).value.real(), WithinAbs(oracle, 1e-11));
}

TEST_CASE("parity violation and domain gates") {
    CHECK_THROWS_AS(lgf::h2_gamma_series(1, 0, 2.0), std::domain_error);
    CHECK_THROWS_AS(lgf::h2_4f3(2, 1, 2.0), std::domain_error);
    CHECK_THROWS_AS(lgf::h2_parity_branch(3, 0, 2.0), std::domain_error);
    CHECK_THROWS_AS(lgf::h2_gamma_series(0, 0, 0.99), std::domain_error);
}

TEST_CASE("4F3 form: collapse at the origin and elliptic identification") {
    const cplx t{2.0, 0.0};
    const auto ev = lgf::h2_4f3(0, 0, t);
    REQUIRE(ev.converged);
    CHECK_THAT(ev.value.real(), WithinAbs(0.13414775089367054, 1e-12));

    // (1/4t) 2F1(1/2,1/2;1;1/t^2), AGM cross-check
    lgf::HyperParams hp;
    hp.numerator = {0.5, 0.5};
    hp.denominator = {1.0};
    hp.argument = 0.25;
    const double via_2f1 = (lgf::pfq(hp).value / (4.0 * t)).real();
    const double via_agm = (2.0 / std::numbers::pi) * lgf::elliptic_k_agm(0.25) / 8.0;
    CHECK_THAT(ev.value.real(), WithinAbs(via_2f1, 1e-12));
    CHECK_THAT(ev.value.real(), WithinAbs(via_agm, 1e-12));
}

TEST_CASE("representation identities across the fundamental grid") {
    for (const cplx t : {cplx{1.5, 0.0}, cplx{3.0, 0.0}}) {
        for (int r = 0; r <= 4; ++r) {
            for (int s = -r; s <= r; ++s) {
                if ((r - s) % 2 != 0) continue;
                const cplx ref = lgf::h2_gamma_series(r, s, t).value;
                const double tol = 1e-9 * std::max(1.0, std::abs(ref));
                CHECK_THAT(std::abs(lgf::h2_4f3(r, s, t).value - ref),
                           WithinAbs(0.0, tol));
                CHECK_THAT(std::abs(lgf::h2_parity_branch(r, s, t).value - ref),
                           WithinAbs(0.0, tol));
            }
        }
    }
}

TEST_CASE("4F3 at (3,1,3) matches the physical oracle at lambda = 12") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> pq = {2, 1};
    const double oracle = lgf::quadrature_resolvent(sq, pq, 12.0, 256).real();
    CHECK_THAT(lgf::h2_4f3(3, 1, 3.0).value.real(), WithinAbs(oracle, 1e-9));
}

TEST_CASE("green_square symmetry and oracle agreement") {
    const cplx t{2.0, 0.0};
    CHECK_THAT(std::abs(lgf::green_square(1, 2, t) - lgf::green_square(2, 1, t)),
               WithinAbs(0.0, 1e-13));
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> r00 = {0, 0}, r10 = {1, 0};
    CHECK_THAT(std::abs(lgf::green_square(0, 0, t) -
                        lgf::quadrature_resolvent(sq, r00, 8.0, 256)),
               WithinAbs(0.0, 1e-10));
    CHECK_THAT(std::abs(lgf::green_square(1, 0, t) -
                        lgf::quadrature_resolvent(sq, r10, 8.0, 256)),
               WithinAbs(0.0, 1e-10));
}

TEST_CASE("resolvent differences carry no log singularity") {
    // H_{2,0} - H_{0,0} stays finite at the edge: fitted log coefficient ~ 0
    std::vector<std::pair<double, cplx>> samples;
    for (double d : {1e-2, 1e-3, 1e-4})
        samples.emplace_back(d, lgf::h2_gamma_series(2, 0, 1.0 + d, 1e-12).value -
                                    lgf::h2_gamma_series(0, 0, 1.0 + d, 1e-12).value);
    const auto fit = lgf::fit_log_singularity(samples);
    CHECK_THAT(std::abs(fit.c_log), WithinAbs(0.0, 2e-3));
    // the same fit applied to H_{0,0} alone sees the -1/(4 pi) singularity
    samples.clear();
    for (double d : {1e-2, 1e-3, 1e-4})
        samples.emplace_back(d, lgf::h2_gamma_series(0, 0, 1.0 + d, 1e-12).value);
    const auto sing = lgf::fit_log_singularity(samples);
    CHECK_THAT(sing.c_log.real(), WithinAbs(-1.0 / (4.0 * std::numbers::pi), 2e-3));
}

TEST_CASE("log coefficient: constant across indices, equals -1/(4 pi) c") {
    const cplx c00 = lgf::log_coefficient(0, 0);
    // measured value of the edge asymptote (elliptic-integral route)
    const double expect = -1.0 / (4.0 * std::numbers::pi) * lgf::square_green_constant;
    CHECK_THAT(c00.real(), WithinAbs(expect, 1e-4));
    CHECK_THAT(std::abs(lgf::log_coefficient(1, 0) - c00), WithinAbs(0.0, 1e-5));
    CHECK_THAT(std::abs(lgf::log_coefficient(2, 1) - c00), WithinAbs(0.0, 1e-5));
}

TEST_CASE("continuation coefficients: literal primed form") {
    const auto coeffs = lgf::buhring_coefficients(0, 0, 4);
    REQUIRE(coeffs.size() == 5);
    for (const auto& c : coeffs) {
        const cplx expect = lgf::pochhammer(1.0, c.k) *
                            lgf::pochhammer(-0.5, c.k) /
                            std::tgamma(c.k + 1.0);
        CHECK_THAT(std::abs(c.a_prime - expect), WithinAbs(0.0, 1e-12));
    }
    // A_0 is a convergent sum; the printed formulas do NOT reproduce the
    // -1/(2 pi) claim (documented discrepancy, recorded by the suite)
    const cplx route = -(coeffs[0].a + coeffs[0].a_prime) / (4.0 * std::numbers::pi);
    CHECK(std::abs(route - cplx{-1.0 / (2.0 * std::numbers::pi), 0.0}) > 1e-3);
}

TEST_CASE("correlation vanishes at the origin") {
    const auto sq = lgf::square_lattice();
    const std::array<int, 2> origin = {0, 0};
    CHECK(lgf::quadrature_correlation(sq, origin, 128) == 0.0);
}

TEST_CASE("correlation: two routes agree and match known constants") {
    const auto r10 = lgf::correlation_square_routes(1, 0);
    CHECK_THAT(r10.value, WithinAbs(-0.25, 1e-7));
    CHECK(r10.difference < 1e-6);

    const auto r11 = lgf::correlation_square_routes(1, 1);
    CHECK_THAT(r11.value, WithinAbs(-1.0 / std::numbers::pi, 1e-7));

    // exact resistor-network value at (2,1): -(4/pi - 1/2)/2
    const auto r21 = lgf::correlation_square_routes(2, 1);
    CHECK_THAT(r21.value, WithinAbs(-(4.0 / std::numbers::pi - 0.5) / 2.0, 1e-7));
}
