#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>

#include "lgf/chain1d.hpp"
#include "lgf/gamma.hpp"
#include "lgf/lattice.hpp"
#include "lgf/quadrature.hpp"
#include "lgf/series.hpp"

using lgf::cplx;
using Catch::Matchers::WithinAbs;

namespace {
const cplx kTs[] = {{1.5, 0.0}, {2.0, 0.0}, {5.0, 0.0}, {1.0, 2.0}};
}

TEST_CASE("closed form values at t = 2") {
    CHECK_THAT(lgf::h1_closed(0, 2.0).real(), WithinAbs(0.28867513459481287, 1e-14));
    CHECK_THAT(lgf::h1_closed(1, 2.0).real(), WithinAbs(0.07735026918962576, 1e-14));
    CHECK(lgf::h1_closed(-3, 2.0) == lgf::h1_closed(3, 2.0));
}

TEST_CASE("closed form branch gate") {
    CHECK_THROWS_AS(lgf::h1_closed(0, 0.5), std::domain_error);
    CHECK_THROWS_AS(lgf::h1_closed(0, -1.0), std::domain_error);
    CHECK_NOTHROW(lgf::h1_closed(0, cplx{0.5, 0.2}));
}

TEST_CASE("hypergeometric form equals the closed form") {
    for (const cplx t : kTs) {
        for (int r = 0; r <= 6; ++r) {
            const cplx closed = lgf::h1_closed(r, t);
            const auto ev = lgf::h1_hyp(r, t);
            REQUIRE(ev.converged);
            CHECK_THAT(std::abs(ev.value - closed), WithinAbs(0.0, 1e-12 * std::abs(closed)));
        }
    }
}

TEST_CASE("gamma series equals the closed form, parity restricted") {
    for (const cplx t : kTs) {
        for (int r = -6; r <= 6; ++r) {
            const cplx closed = lgf::h1_closed(r, t);
            const auto ev = lgf::h1_gamma_series(r, t);
            REQUIRE(ev.converged);
            CHECK_THAT(std::abs(ev.value - closed), WithinAbs(0.0, 1e-10 * std::abs(closed)));
        }
    }
}

TEST_CASE("gamma series leading term is (1/2t)^{1+r}") {
    const auto ev = lgf::h1_gamma_series(4, 40.0);
    const double lead = std::pow(1.0 / 80.0, 5);
    CHECK_THAT(ev.value.real(), WithinAbs(lead, 1e-3 * lead));
}

TEST_CASE("dropping the parity restriction breaks the identity") {
    // unrestricted sum over both parities at r=0, t=2; the spurious odd terms
    // contribute roughly 1/(pi t^2) at leading order
    const cplx t{2.0, 0.0};
    lgf::KahanSum sum;
    for (int n = 0; n < 120; ++n) {
        const cplx coef =
            lgf::gamma_ratio({1.0 + n}, {1.0 + n / 2.0, 1.0 + n / 2.0});
        sum.add(coef * std::pow(1.0 / (2.0 * t), 1.0 + n));
    }
    const double diff = std::abs(sum.value() - lgf::h1_closed(0, t));
    CHECK(diff > 0.09);
    CHECK(diff < 0.11);
}

TEST_CASE("parity branch equals the closed form") {
    for (const cplx t : kTs) {
        for (int r = 0; r <= 6; ++r) {
            const cplx closed = lgf::h1_closed(r, t);
            const auto ev = lgf::h1_parity_branch(r, t);
            REQUIRE(ev.converged);
            CHECK_THAT(std::abs(ev.value - closed), WithinAbs(0.0, 1e-10 * std::abs(closed)));
        }
    }
}

TEST_CASE("series domain gate |t| > 1") {
    CHECK_THROWS_AS(lgf::h1_gamma_series(0, 0.9), std::domain_error);
    CHECK_THROWS_AS(lgf::h1_hyp(0, cplx{0.6, 0.6}), std::domain_error);
}

TEST_CASE("resolvent identity for each representation") {
    for (const cplx t : kTs) {
        auto check = [&](auto&& H) {
            for (int r = -3; r <= 3; ++r) {
                const cplx res = 2.0 * t * H(r) - H(r + 1) - H(r - 1) -
                                 (r == 0 ? 1.0 : 0.0);
                CHECK_THAT(std::abs(res), WithinAbs(0.0, 1e-10));
            }
        };
        check([&](int r) { return lgf::h1_closed(r, t); });
        check([&](int r) { return lgf::h1_gamma_series(r, t).value; });
        check([&](int r) { return lgf::h1_hyp(r, t).value; });
        check([&](int r) { return lgf::h1_parity_branch(r, t).value; });
    }
}

TEST_CASE("geometric decay of the closed form") {
    for (const cplx t : kTs) {
        const cplx expect = t - t * std::sqrt(1.0 - 1.0 / (t * t));
        for (int r = 0; r <= 5; ++r) {
            const cplx ratio = lgf::h1_closed(r + 1, t) / lgf::h1_closed(r, t);
            CHECK_THAT(std::abs(ratio - expect), WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("correlation is -|r|/2 and matches quadrature") {
    CHECK(lgf::correlation_1d(0) == 0.0);
    CHECK(lgf::correlation_1d(2) == -1.0);
    CHECK(lgf::correlation_1d(-2) == -1.0);
    const auto chain = lgf::chain_lattice();
    for (int r = 0; r <= 5; ++r) {
        const std::array<int, 1> rv = {r};
        CHECK_THAT(lgf::quadrature_correlation(chain, rv, 64),
                   WithinAbs(lgf::correlation_1d(r), 1e-12));
    }
}
