#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "walsh/piecewise_poly.hpp"
#include "walsh/quadrature.hpp"

using walsh::cplx;
using walsh::PiecewisePoly;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

PiecewisePoly identity_poly() {
    // f(x) = x on a single cell
    return PiecewisePoly(2, 0, {{cplx(0.0), cplx(1.0)}});
}
}  // namespace

TEST_CASE("constant and step evaluation") {
    auto c = PiecewisePoly::constant(3, cplx(2.0, -1.0));
    CHECK(std::abs(c.eval(0.3) - cplx(2.0, -1.0)) < 1e-15);
    CHECK(std::abs(c.definite_integral() - cplx(2.0, -1.0)) < 1e-15);

    auto s = PiecewisePoly::step(2, 1, {cplx(1.0), cplx(-1.0)});
    CHECK(std::abs(s.eval(0.25) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(s.eval(0.75) - cplx(-1.0)) < 1e-15);
    CHECK(std::abs(s.definite_integral()) < 1e-15);
    CHECK(s.norm(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.norm(kInf) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("antiderivative and derivative are inverse") {
    auto s = PiecewisePoly::step(2, 2, {cplx(1.0), cplx(0.0, 1.0), cplx(-1.0), cplx(2.0)});
    auto F = s.antiderivative();
    CHECK(std::abs(F.eval(0.0)) < 1e-15);
    // continuity at breakpoints
    for (double x : {0.25, 0.5, 0.75}) {
        CHECK(std::abs(F.eval(x - 1e-12) - F.eval(x + 1e-12)) < 1e-10);
    }
    auto back = F.derivative();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        double x = u(rng);
        CHECK(std::abs(back.eval(x) - s.eval(x)) < 1e-13);
    }
}

TEST_CASE("antiderivative of x is x^2/2") {
    auto F = identity_poly().antiderivative();
    for (double x : {0.1, 0.37, 0.99, 1.0}) {
        CHECK(std::abs(F.eval(x) - cplx(x * x / 2)) < 1e-14);
    }
    CHECK(std::abs(F.definite_integral() - cplx(1.0 / 6.0)) < 1e-15);
}

TEST_CASE("refinement preserves the function") {
    auto F = identity_poly().antiderivative().antiderivative();  // x^3/6
    auto G = F.refined(3);
    CHECK(G.cell_count() == 8);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double x = u(rng);
        CHECK(std::abs(G.eval(x) - F.eval(x)) < 1e-14);
    }
    CHECK(std::abs(G.definite_integral() - F.definite_integral()) < 1e-15);
}

TEST_CASE("algebra: plus, plus_const, scaled, times_step") {
    auto f = identity_poly();                       // x
    auto g = PiecewisePoly::step(2, 1, {cplx(1.0), cplx(3.0)});
    auto h = f.plus(g);
    CHECK(std::abs(h.eval(0.2) - cplx(1.2)) < 1e-14);
    CHECK(std::abs(h.eval(0.7) - cplx(3.7)) < 1e-14);
    auto p = f.times_step(g);                       // x * step
    CHECK(std::abs(p.eval(0.2) - cplx(0.2)) < 1e-14);
    CHECK(std::abs(p.eval(0.7) - cplx(2.1)) < 1e-14);
    CHECK(std::abs(f.plus_const(cplx(0.0, 2.0)).eval(0.5) - cplx(0.5, 2.0)) < 1e-14);
    CHECK(std::abs(f.scaled(cplx(-2.0)).eval(0.25) - cplx(-0.5)) < 1e-14);
}

TEST_CASE("norms of f(x) = x") {
    auto f = identity_poly();
    CHECK(f.norm(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.norm(2) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(f.norm(kInf) == doctest::Approx(1.0).epsilon(1e-10));
    // sign change inside a cell: f(x) = x - 1/2, L1 = 1/4
    auto g = PiecewisePoly(2, 0, {{cplx(-0.5), cplx(1.0)}});
    CHECK(g.norm(1) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(g.norm(kInf) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("norm against quadrature for an oscillating poly") {
    // f(x) = (x-0.2)(x-0.8) on one cell
    auto f = PiecewisePoly(2, 0, {{cplx(0.16), cplx(-1.0), cplx(1.0)}});
    const double l1 = walsh::gauss_integrate(
        [](double x) { return std::abs((x - 0.2) * (x - 0.8)); }, 0.0, 0.2, 32) +
        walsh::gauss_integrate(
            [](double x) { return std::abs((x - 0.2) * (x - 0.8)); }, 0.2, 0.8, 32) +
        walsh::gauss_integrate(
            [](double x) { return std::abs((x - 0.2) * (x - 0.8)); }, 0.8, 1.0, 32);
    CHECK(f.norm(1) == doctest::Approx(l1).epsilon(1e-8));
    CHECK(f.norm(kInf) == doctest::Approx(0.16).epsilon(1e-10));
}

TEST_CASE("grid size guard") {
    CHECK(walsh::grid_cells(2, 14) == 16384);
    CHECK(walsh::grid_cells(3, 9) == 19683);
    CHECK(walsh::grid_cells(5, 6) == 15625);
    CHECK_THROWS(walsh::grid_cells(2, 15));
    CHECK_THROWS(walsh::grid_cells(3, 10));
    CHECK_THROWS(walsh::grid_cells(5, 7));
}
