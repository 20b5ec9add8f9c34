#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "walsh/walsh_system.hpp"

using walsh::cplx;

TEST_CASE("wal_0 is identically one") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int base : {2, 3, 5}) {
        for (int i = 0; i < 50; ++i) {
            CHECK(std::abs(walsh::wal_eval(base, 0, u(rng)) - cplx(1.0)) < 1e-15);
        }
    }
}

TEST_CASE("finite expansion convention at b-adic rationals") {
    // x = 1/2 has dyadic digits (1, 0, 0, ...): wal_1(1/2) = -1
    CHECK(std::abs(walsh::wal_eval(2, 1, 0.5) - cplx(-1.0)) < 1e-14);
    // wal_2(1/2) reads digit 2 of 0.5 which is 0
    CHECK(std::abs(walsh::wal_eval(2, 2, 0.5) - cplx(1.0)) < 1e-14);
    // x = 1/3 in base 3 has digits (1, 0, ...)
    CHECK(std::abs(walsh::wal_eval(3, 1, 1.0 / 3.0) -
                   walsh::omega_bar_pow(3, -1)) < 1e-12);
}

TEST_CASE("scaled evaluation matches float evaluation on grid points") {
    for (int base : {2, 3, 5}) {
        const int G = 5;
        std::uint64_t cells = 1;
        for (int i = 0; i < G; ++i) cells *= static_cast<std::uint64_t>(base);
        for (std::uint64_t k = 0; k < 40; ++k) {
            for (std::uint64_t m = 0; m < cells; m += 7) {
                const double x = static_cast<double>(m) / static_cast<double>(cells);
                CHECK(std::abs(walsh::wal_eval(base, k, x) -
                               walsh::wal_eval_scaled(base, k, m, G)) < 1e-12);
            }
        }
    }
}

TEST_CASE("piecewise constancy on cells of width b^-a1") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int base : {2, 3}) {
        for (std::uint64_t k = 1; k < 30; ++k) {
            auto cells = walsh::wal_conj_cells(base, k);
            for (int i = 0; i < 100; ++i) {
                const double x = u(rng);
                CHECK(std::abs(std::conj(cells.eval(x)) - walsh::wal_eval(base, k, x)) < 1e-12);
            }
        }
    }
}

TEST_CASE("character property under digitwise addition, b = 2") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::uint64_t k = 0; k < 32; ++k) {
        for (std::uint64_t l = 0; l < 32; ++l) {
            for (int i = 0; i < 5; ++i) {
                const double x = u(rng);
                const cplx lhs = walsh::wal_eval(2, k, x) * walsh::wal_eval(2, l, x);
                const cplx rhs = walsh::wal_eval(2, k ^ l, x);
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }
        }
    }
}

TEST_CASE("orthonormality sample") {
    for (int base : {2, 3, 5}) {
        const std::uint64_t n = static_cast<std::uint64_t>(base) * static_cast<std::uint64_t>(base);
        for (std::uint64_t k = 0; k < n; ++k) {
            for (std::uint64_t l = 0; l < n; ++l) {
                const cplx ip = walsh::inner_product(base, k, l);
                const cplx expect = (k == l) ? cplx(1.0) : cplx(0.0);
                CHECK(std::abs(ip - expect) < 1e-13);
            }
        }
    }
}

TEST_CASE("modulus one everywhere") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int base : {2, 3, 5}) {
        for (std::uint64_t k = 1; k < 50; ++k) {
            for (int i = 0; i < 20; ++i) {
                CHECK(std::abs(std::abs(walsh::wal_eval(base, k, u(rng))) - 1.0) < 1e-13);
            }
        }
    }
}

TEST_CASE("multivariate product") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::uint64_t ks[3] = {5, 2, 7};
    for (int base : {2, 3}) {
        for (int i = 0; i < 50; ++i) {
            const double xs[3] = {u(rng), u(rng), u(rng)};
            cplx prod(1.0);
            for (int j = 0; j < 3; ++j) prod *= walsh::wal_eval(base, ks[j], xs[j]);
            CHECK(std::abs(walsh::wal_eval_multi(base, ks, xs) - prod) < 1e-13);
        }
    }
}
