#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "lgf/elliptic.hpp"
#include "lgf/pfq.hpp"

using lgf::cplx;
using lgf::HyperParams;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("0F0 is the exponential") {
    HyperParams hp;
    hp.argument = 1.0;
    const auto ev = lgf::pfq(hp);
    REQUIRE(ev.converged);
    CHECK_THAT(ev.value.real(), WithinRel(std::numbers::e, 1e-14));
}

TEST_CASE("2F1(a,b;b;z) = (1-z)^{-a}") {
    HyperParams hp;
    hp.numerator = {1.0, 1.0};
    hp.denominator = {1.0};
    hp.argument = 0.5;
    CHECK_THAT(lgf::pfq(hp).value.real(), WithinRel(2.0, 1e-13));

    for (double a : {0.5, 1.0, 2.5}) {
        for (double z = -0.9; z <= 0.9; z += 0.3) {
            HyperParams g;
            g.numerator = {a, 1.25};
            g.denominator = {1.25};
            g.argument = z;
            const auto ev = lgf::pfq(g);
            REQUIRE(ev.converged);
            CHECK_THAT(ev.value.real(), WithinRel(std::pow(1.0 - z, -a), 1e-12));
        }
    }
}

TEST_CASE("2F1(1/2,1/2;1;m) ties to the AGM elliptic integral") {
    HyperParams hp;
    hp.numerator = {0.5, 0.5};
    hp.denominator = {1.0};
    hp.argument = 0.25;
    const auto ev = lgf::pfq(hp);
    CHECK_THAT(ev.value.real(), WithinRel(1.0731820071493644, 1e-12));

    for (double m : {0.1, 0.25, 0.5, 0.8}) {
        hp.argument = m;
        const double lhs = (std::numbers::pi / 2.0) * lgf::pfq(hp).value.real();
        CHECK_THAT(lhs, WithinAbs(lgf::elliptic_k_agm(m), 1e-10));
    }
}

TEST_CASE("elliptic K values") {
    CHECK_THAT(lgf::elliptic_k_agm(0.0), WithinRel(std::numbers::pi / 2.0, 1e-15));
    CHECK_THAT(lgf::elliptic_k_agm(0.25), WithinRel(1.685750354812596, 1e-13));
    CHECK_THROWS_AS(lgf::elliptic_k_agm(1.0), std::domain_error);
    CHECK_THROWS_AS(lgf::elliptic_k_agm(-0.1), std::domain_error);
    // logarithmic asymptote as m -> 1
    const double m = 1.0 - 1e-8;
    const double asym = -0.5 * std::log(1.0 - m) + 2.0 * std::log(2.0);
    CHECK_THAT(lgf::elliptic_k_agm(m), WithinAbs(asym, 1e-6));
}

TEST_CASE("terminating series and denominator validation") {
    // numerator -2 terminates before the denominator pole at -5
    HyperParams ok;
    ok.numerator = {-2.0, 1.0};
    ok.denominator = {-5.0};
    ok.argument = 3.0;
    const auto ev = lgf::pfq(ok);
    CHECK(ev.converged);
    CHECK(ev.tail_estimate == 0.0);
    // 2F1(-2, 1; -5; 3) = 1 + 6/5 + 9/10 = 3.1
    CHECK_THAT(ev.value.real(), WithinRel(3.1, 1e-14));

    HyperParams bad;
    bad.numerator = {-5.0, 1.0};
    bad.denominator = {-2.0};
    bad.argument = 0.5;
    CHECK_THROWS_AS(lgf::pfq(bad), std::domain_error);

    HyperParams equal_mag;
    equal_mag.numerator = {-2.0};
    equal_mag.denominator = {-2.0};
    equal_mag.argument = 0.5;
    CHECK_THROWS_AS(lgf::pfq(equal_mag), std::domain_error);
}

TEST_CASE("divergent parameter layouts are refused") {
    HyperParams hp;
    hp.numerator = {1.0, 1.0, 1.0};
    hp.denominator = {1.0};
    hp.argument = 0.5;
    CHECK_THROWS_AS(lgf::pfq(hp), std::domain_error);

    HyperParams edge;
    edge.numerator = {1.0, 1.0};
    edge.denominator = {1.0};
    edge.argument = 1.5;
    CHECK_THROWS_AS(lgf::pfq(edge), std::domain_error);
}

TEST_CASE("zero-balanced flag") {
    HyperParams hp;
    hp.numerator = {0.5, 0.5};
    hp.denominator = {1.0};
    CHECK(hp.zero_balanced());
    hp.numerator = {0.5, 0.6};
    CHECK(!hp.zero_balanced());
}

TEST_CASE("convergence metadata is consistent") {
    HyperParams hp;
    hp.numerator = {0.5, 0.5};
    hp.denominator = {1.0};
    hp.argument = 0.9;
    const double tol = 1e-14;
    const auto ev = lgf::pfq(hp, tol);
    REQUIRE(ev.converged);
    CHECK(ev.tail_estimate <= tol * std::max(1.0, std::abs(ev.value)));
    CHECK(ev.terms_used <= 1000000);
}
