#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "walsh/bernoulli.hpp"
#include "walsh/coefficients.hpp"

using walsh::BernoulliPoly;
using walsh::cplx;
using walsh::rational;

TEST_CASE("low-degree polynomials are exact") {
    // b_1 = x - 1/2
    const auto& b1 = BernoulliPoly::get(1).coeffs_b();
    CHECK(b1[0] == rational(-1, 2));
    CHECK(b1[1] == rational(1));
    // b_2 = (x^2 - x + 1/6)/2
    const auto& b2 = BernoulliPoly::get(2).coeffs_b();
    CHECK(b2[0] == rational(1, 12));
    CHECK(b2[1] == rational(-1, 2));
    CHECK(b2[2] == rational(1, 2));
    // Bernoulli numbers via B_r(0): B_4 = -1/30, B_6 = 1/42, B_12 = -691/2730
    CHECK(BernoulliPoly::get(4).coeffs_B()[0] == rational(-1, 30));
    CHECK(BernoulliPoly::get(6).coeffs_B()[0] == rational(1, 42));
    CHECK(BernoulliPoly::get(12).coeffs_B()[0] == rational(-691, 2730));
}

TEST_CASE("derivative and mean-zero identities, exact rationals") {
    for (int r = 1; r <= BernoulliPoly::kMaxDegree; ++r) {
        const auto& cur = BernoulliPoly::get(r).coeffs_b();
        const auto& prev = BernoulliPoly::get(r - 1).coeffs_b();
        // d/dx b_r = b_{r-1}
        for (int i = 1; i <= r; ++i) {
            CHECK(cur[static_cast<std::size_t>(i)] * i == prev[static_cast<std::size_t>(i - 1)]);
        }
        // int_0^1 b_r = 0
        rational integral = 0;
        for (int i = 0; i <= r; ++i) integral += cur[static_cast<std::size_t>(i)] / (i + 1);
        CHECK(integral == rational(0));
    }
}

TEST_CASE("reflection symmetry") {
    for (int r = 1; r <= 12; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        for (double x : {0.0, 0.1, 0.37, 0.5, 0.93}) {
            CHECK(walsh::bernoulli_b(r, 1.0 - x) ==
                  doctest::Approx(sign * walsh::bernoulli_b(r, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("walsh coefficients: zero branch and anchor") {
    // k = 1, r = 1, b = 2: coefficient -1/4
    CHECK(std::abs(walsh::walsh_coeff_bernoulli(2, 1, 1) - cplx(-0.25)) < 1e-15);
    // r < v forces zero: k = 3 has v = 2
    CHECK(std::abs(walsh::walsh_coeff_bernoulli(2, 3, 1)) == 0.0);
    CHECK(std::abs(walsh::walsh_coeff_bernoulli(3, 4, 1)) == 0.0);
}

TEST_CASE("walsh coefficients match quadrature") {
    for (int base : {2, 3}) {
        for (int r = 1; r <= 6; ++r) {
            auto f = walsh::smooth_bernoulli(r);
            for (std::uint64_t k = 1; k < 30; ++k) {
                const cplx exact = walsh::walsh_coeff_bernoulli(base, k, r);
                const cplx quad = walsh::coeff_quadrature(f, base, k).value;
                CHECK(std::abs(exact - quad) < 1e-12);
            }
        }
    }
}

TEST_CASE("kernel pieces") {
    // b_tilde parity in the arguments
    for (double x : {0.2, 0.6}) {
        for (double y : {0.1, 0.8}) {
            CHECK(walsh::b_tilde(2, x, y) == doctest::Approx(walsh::b_tilde(2, y, x)).epsilon(1e-13));
            CHECK(walsh::b_tilde(3, x, y) ==
                  doctest::Approx(-walsh::b_tilde(3, y, x)).epsilon(1e-13));
        }
    }
    // kernels are symmetric
    for (int alpha : {1, 2, 3}) {
        for (double x : {0.15, 0.5, 0.77}) {
            for (double y : {0.05, 0.3, 0.9}) {
                CHECK(walsh::kernel(alpha, x, y) ==
                      doctest::Approx(walsh::kernel(alpha, y, x)).epsilon(1e-12));
                CHECK(walsh::kernel_periodic(alpha, x, y) ==
                      doctest::Approx(walsh::kernel_periodic(alpha, y, x)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("kernel reproduces polynomials, alpha = 1") {
    // In the order-1 space, <K(x,.), f>_H = f(x) with
    // <f, g>_H = int f int g + int f' g'. Test f(y) = y.
    // <K(x,.), f> = int_y K(x,y) * int_y f + int_y dK/dy f'(y).
    auto f = [](double y) { return y; };
    for (double x : {0.2, 0.5, 0.9}) {
        const int n = 4000;
        double int_K = 0.0, int_dK_fp = 0.0;
        for (int i = 0; i < n; ++i) {
            const double y0 = static_cast<double>(i) / n;
            const double y1 = static_cast<double>(i + 1) / n;
            const double ym = 0.5 * (y0 + y1);
            int_K += walsh::kernel(1, x, ym) / n;
            const double dK = (walsh::kernel(1, x, y1 - 1e-9) - walsh::kernel(1, x, y0 + 1e-9)) /
                              (y1 - y0 - 2e-9);
            int_dK_fp += dK * 1.0 / n;  // f' = 1
        }
        const double int_f = 0.5;
        const double inner = int_K * int_f + int_dK_fp;
        CHECK(inner == doctest::Approx(f(x)).epsilon(2e-3));
    }
}

TEST_CASE("degree guard") {
    CHECK_THROWS(BernoulliPoly::get(31));
    CHECK_THROWS(BernoulliPoly::get(-1));
}
