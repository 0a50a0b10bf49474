#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>

#include "lgf/chain1d.hpp"
#include "lgf/extensions.hpp"
#include "lgf/lattice.hpp"
#include "lgf/quadrature.hpp"
#include "lgf/square2d.hpp"

using lgf::cplx;
using Catch::Matchers::WithinAbs;

TEST_CASE("bcc D=1 collapses to the chain series") {
    for (const cplx t : {cplx{1.5, 0.0}, cplx{2.0, 0.0}, cplx{1.0, 2.0}}) {
        for (int r = 0; r <= 4; ++r) {
            const std::array<int, 1> rv = {r};
            CHECK_THAT(std::abs(lgf::h_bcc_series(rv, t, 1).value -
                                lgf::h1_gamma_series(r, t).value),
                       WithinAbs(0.0, 1e-14));
        }
    }
}

TEST_CASE("bcc D=2 equals the square lattice in rotated coordinates") {
    for (const cplx t : {cplx{1.5, 0.0}, cplx{3.0, 0.0}}) {
        for (int r1 = 0; r1 <= 3; ++r1)
            for (int r2 = 0; r2 <= 3; ++r2) {
                if ((r1 - r2) % 2 != 0) continue;
                const std::array<int, 2> rv = {r1, r2};
                CHECK_THAT(std::abs(lgf::h_bcc_series(rv, t, 2).value -
                                    lgf::h2_gamma_series(r1, r2, t).value),
                           WithinAbs(0.0, 1e-10));
            }
    }
}

TEST_CASE("bcc D=3 matches the 64^3 oracle at t = 2") {
    const auto bcc3 = lgf::bcc_lattice(3);
    for (const auto& rv : std::vector<std::array<int, 3>>{
             {0, 0, 0}, {1, 1, 1}, {2, 0, 0}}) {
        const cplx oracle = lgf::quadrature_resolvent(bcc3, rv, 16.0, 64);
        CHECK_THAT(std::abs(lgf::h_bcc_series(rv, 2.0, 3).value - oracle),
                   WithinAbs(0.0, 1e-6));
    }
    CHECK_THAT(lgf::h_bcc_series(std::array<int, 3>{0, 0, 0}, 2.0, 3).value.real(),
               WithinAbs(0.06469504133910, 1e-11));
}

TEST_CASE("bcc mixed parity is a structural zero") {
    for (const auto& rv : std::vector<std::array<int, 3>>{
             {1, 0, 0}, {2, 1, 0}, {3, 2, 2}}) {
        const auto ev = lgf::h_bcc_series(rv, 2.0, 3);
        CHECK(ev.value == cplx{0.0, 0.0});
        CHECK(ev.converged);
        CHECK(ev.terms_used == 0);
    }
}

TEST_CASE("bcc parity branch equals the series; mixed parity is refused") {
    for (const auto& rv : std::vector<std::array<int, 3>>{
             {0, 0, 0}, {2, 0, 0}, {1, 1, 1}, {3, 1, 1}}) {
        CHECK_THAT(std::abs(lgf::h_bcc_parity_branch(rv, 2.0, 3).value -
                            lgf::h_bcc_series(rv, 2.0, 3).value),
                   WithinAbs(0.0, 1e-9));
    }
    const std::array<int, 3> mixed = {1, 0, 0};
    CHECK_THROWS_AS(lgf::h_bcc_parity_branch(mixed, 2.0, 3), std::domain_error);
    const std::array<int, 1> r1 = {1};
    CHECK_THAT(std::abs(lgf::h_bcc_parity_branch(r1, 2.0, 1).value -
                        lgf::h1_parity_branch(1, 2.0).value),
               WithinAbs(0.0, 1e-14));
}

TEST_CASE("bcc resolvent identity") {
    for (int dim = 1; dim <= 3; ++dim) {
        const auto bl = lgf::bcc_lattice(dim);
        const cplx lambda = std::ldexp(1.0, dim) * 2.0;
        auto H = [dim](std::span<const int> rv) {
            return lgf::h_bcc_series(rv, 2.0, dim).value;
        };
        std::vector<int> rv(dim, 0);
        // spot-check the origin and a few shifted points
        CHECK_THAT(std::abs(lgf::resolvent_identity_residual(bl, rv, lambda, H)),
                   WithinAbs(0.0, 1e-8));
        rv.assign(dim, 2);
        CHECK_THAT(std::abs(lgf::resolvent_identity_residual(bl, rv, lambda, H)),
                   WithinAbs(0.0, 1e-8));
        rv.assign(dim, 1);
        CHECK_THAT(std::abs(lgf::resolvent_identity_residual(bl, rv, lambda, H)),
                   WithinAbs(0.0, 1e-8));
    }
}

TEST_CASE("bcc domain gates") {
    const std::array<int, 2> r = {0, 0};
    CHECK_THROWS_AS(lgf::h_bcc_series(r, 0.9, 2), std::domain_error);
    CHECK_THROWS_AS(lgf::h_bcc_series(r, 2.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(lgf::h_bcc_series(r, 2.0, 0), std::invalid_argument);
}

TEST_CASE("nnn: tau2 = 0 reduces to the chain closed form") {
    for (double tau1 : {0.5, 0.4}) {
        for (int r = 0; r <= 3; ++r) {
            const auto ev = lgf::h_nnn_series(r, tau1, 0.0);
            REQUIRE(ev.converged);
            CHECK_THAT(std::abs(ev.value - lgf::h1_closed(r, 1.0 / tau1)),
                       WithinAbs(0.0, 1e-12));
        }
    }
    CHECK_THAT(lgf::h_nnn_series(0, 0.5, 0.0).value.real(),
               WithinAbs(0.28867513459481287, 1e-13));
}

TEST_CASE("nnn matches the weighted quadrature oracle") {
    const double vals[] = {0.16411201036616552, 0.031936279979179874,
                           0.022655631862057726};
    for (int r = 0; r <= 2; ++r) {
        const auto ev = lgf::h_nnn_series(r, 0.3, 0.2);
        REQUIRE(ev.converged);
        CHECK_THAT(ev.value.real(), WithinAbs(vals[r], 1e-12));
        CHECK_THAT(std::abs(ev.value -
                            lgf::quadrature_resolvent_nnn(r, 0.3, 0.2, 4096)),
                   WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("nnn resolvent identity") {
    const double tau1 = 0.3, tau2 = 0.2;
    auto H = [&](int r) { return lgf::h_nnn_series(r, tau1, tau2).value; };
    for (int r = 0; r <= 3; ++r) {
        const cplx res = (2.0 / tau1) * H(r) - (H(r + 1) + H(r - 1)) -
                         (tau2 / tau1) * (H(r + 2) + H(r - 2)) -
                         (r == 0 ? 1.0 : 0.0);
        CHECK_THAT(std::abs(res), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("nnn symmetry and green normalization") {
    CHECK_THAT(std::abs(lgf::h_nnn_series(-2, 0.3, 0.2).value -
                        lgf::h_nnn_series(2, 0.3, 0.2).value),
               WithinAbs(0.0, 1e-16));
    CHECK_THAT(lgf::green_nnn(0, 0.5, 0.0).real(),
               WithinAbs(2.0 * 0.28867513459481287, 1e-12));
    CHECK_THAT(std::abs(lgf::green_nnn(2, 0.3, 0.2) -
                        lgf::quadrature_resolvent_nnn(2, 0.3, 0.2, 4096) / 0.3),
               WithinAbs(0.0, 1e-12));
}

TEST_CASE("nnn convergence gate and continuity in tau2") {
    CHECK_THROWS_AS(lgf::h_nnn_series(0, 0.6, 0.4), std::domain_error);
    CHECK_THROWS_AS(lgf::h_nnn_series(0, 0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(lgf::h_nnn_series(0, 0.5, -0.1), std::domain_error);
    for (int r = 0; r <= 3; ++r) {
        CHECK_THAT(std::abs(lgf::h_nnn_series(r, 0.5, 1e-6).value -
                            lgf::h1_closed(r, 2.0)),
                   WithinAbs(0.0, 1e-5));
    }
}
