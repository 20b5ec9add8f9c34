#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "walsh/bounds.hpp"

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("smooth bound anchors, b = 2") {
    // k = 1: mu_alpha = 1, v = 1. alpha = 1, p = 1: 2^(-1 - 1 + 1) = 1/2
    CHECK(walsh::bound_smooth(2, 1, 1, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
    // p = inf drops the 1/p term: 2^(-2)
    CHECK(walsh::bound_smooth(2, 1, 1, 1.0, kInf) == doctest::Approx(0.25).epsilon(1e-13));
    // k = 0 has v = 0: bound is the bare norm
    CHECK(walsh::bound_smooth(2, 0, 2, 3.0, 1.0) == doctest::Approx(3.0).epsilon(1e-13));
    // norm scales linearly
    CHECK(walsh::bound_smooth(2, 5, 2, 2.0, 1.0) ==
          doctest::Approx(2.0 * walsh::bound_smooth(2, 5, 2, 1.0, 1.0)).epsilon(1e-13));
}

TEST_CASE("smooth bound, b = 3 structure") {
    const auto bc = walsh::constants(3);
    // k = 1: v = 1, mu_1 = 1, alpha = 1:
    // 3^-1 / m * (M + C_{3,1})
    const double expect = (1.0 / 3.0) / bc.m * (bc.M + walsh::c_factor(3, 1));
    CHECK(walsh::bound_smooth(3, 1, 1, 1.0, 1.0) == doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS(walsh::bound_smooth(3, 1, 1, 1.0, 2.0));
    // the v-variant constant is never smaller
    for (std::uint64_t k = 1; k < 100; ++k) {
        for (int alpha : {1, 2, 3}) {
            CHECK(walsh::bound_smooth(3, k, alpha, 1.0, 1.0, true) >=
                  walsh::bound_smooth(3, k, alpha, 1.0, 1.0) * (1 - 1e-13));
        }
    }
}

TEST_CASE("multivariate bound is the product of univariate factors") {
    const std::uint64_t ks[2] = {3, 5};
    const int alphas[2] = {2, 2};
    const double lhs = walsh::bound_smooth_multi(2, ks, alphas, 1.0, 1.0);
    const double rhs =
        walsh::bound_smooth(2, 3, 2, 1.0, 1.0) * walsh::bound_smooth(2, 5, 2, 1.0, 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("infinitely smooth bound") {
    // b = 2, one coordinate, rate 1, D = 1, k = 1: 2^-1 * (1/2) * 2 = 1/2
    const std::uint64_t ks[1] = {1};
    const double rates[1] = {1.0};
    CHECK(walsh::bound_c_infty(2, ks, rates, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
    // k = 0 contributes factor 1
    const std::uint64_t k0[1] = {0};
    CHECK(walsh::bound_c_infty(2, k0, rates, 2.5) == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("bernoulli bound branches") {
    // r < v
    CHECK(walsh::bound_bernoulli(2, 3, 1).exact_zero);
    // b = 2, r - v odd
    CHECK(walsh::bound_bernoulli(2, 1, 2).exact_zero);
    CHECK_FALSE(walsh::bound_bernoulli(2, 1, 3).exact_zero);
    // b = 2, k = 1, r = 1: mu'_1 = 1, bound 2^(-1-1) = 1/4, attained by |b_1-hat(1)|
    const auto b = walsh::bound_bernoulli(2, 1, 1);
    CHECK_FALSE(b.exact_zero);
    CHECK(b.value == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("sobolev norm constant anchors") {
    CHECK(walsh::c_sob_constant(2, 1, 1.0) == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(walsh::c_sob_constant(2, 2, kInf) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("periodic bound anchor") {
    CHECK(walsh::bound_periodic(2, 1, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("family parser") {
    auto e = walsh::parse_family("exp:2");
    CHECK(std::abs(e.deriv(0, 0.5) - std::exp(1.0)) < 1e-13);
    CHECK(std::abs(e.deriv(1, 0.5) - 2.0 * std::exp(1.0)) < 1e-13);
    auto p = walsh::parse_family("poly:1,0,3");
    CHECK(std::abs(p.deriv(0, 2.0) - 13.0) < 1e-12);
    auto b = walsh::parse_family("bernoulli:2");
    CHECK(std::abs(b.deriv(0, 0.0) - 1.0 / 12.0) < 1e-13);
    CHECK_THROWS(walsh::parse_family("nope:1"));
}

TEST_CASE("sweeps pass at small scale, every rule") {
    using walsh::SweepConfig;
    auto run = [](SweepConfig cfg) {
        auto reports = walsh::verify_sweep(cfg);
        CHECK(!reports.empty());
        for (const auto& r : reports) CHECK(r.pass);
        return reports;
    };
    run({.rule = "smooth", .base = 2, .k_begin = 1, .k_end = 32, .alpha = 2, .p = 2.0,
         .family = "exp:1"});
    run({.rule = "smooth", .base = 3, .k_begin = 1, .k_end = 27, .alpha = 2, .p = 1.0,
         .family = "sin:1,0.3"});
    run({.rule = "bernoulli", .base = 2, .k_begin = 1, .k_end = 16, .alpha = 5});
    run({.rule = "sobolev", .base = 2, .k_begin = 1, .k_end = 16, .alpha = 2,
         .family = "exp:1"});
    run({.rule = "sobolev_norm", .base = 2, .k_begin = 1, .k_end = 16, .alpha = 2, .p = 2.0,
         .family = "exp:1"});
    run({.rule = "periodic", .base = 2, .k_begin = 1, .k_end = 16, .alpha = 2,
         .family = "bernoulli:2"});
    run({.rule = "cinfty", .base = 2, .k_begin = 1, .k_end = 16, .family = "exp:1"});
    run({.rule = "wextra", .base = 2, .k_begin = 1, .k_end = 8, .alpha = 2});
}

TEST_CASE("periodic membership is enforced") {
    walsh::SweepConfig cfg{.rule = "periodic", .base = 2, .k_begin = 1, .k_end = 8, .alpha = 2,
                           .family = "exp:1"};
    CHECK_THROWS(walsh::verify_sweep(cfg));
}

TEST_CASE("sweeps are deterministic under parallelism") {
    walsh::SweepConfig cfg{.rule = "smooth", .base = 2, .k_begin = 1, .k_end = 48, .alpha = 2,
                           .p = 1.0, .family = "exp:1"};
    auto a = walsh::verify_sweep(cfg);
    cfg.parallelism = 3;
    auto b = walsh::verify_sweep(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].ks == b[i].ks);
        CHECK(a[i].coeff_abs == b[i].coeff_abs);
        CHECK(a[i].bound == b[i].bound);
    }
}
