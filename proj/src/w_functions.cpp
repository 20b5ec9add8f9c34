#include "walsh/w_functions.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "walsh/walsh_system.hpp"

namespace walsh {

namespace {

double pow_int(int base, int e) { return std::pow(static_cast<double>(base), e); }

}  // namespace

WFunction build_W(int base, std::uint64_t k) {
    const KExpansion e = KExpansion::expand(base, k);
    PiecewisePoly p = wal_conj_cells(base, k);
    for (int n = 0; n < e.v(); ++n) p = p.antiderivative();
    cplx integral = p.definite_integral();
    return WFunction{e, 0, std::move(p), integral};
}

WFunction build_W_recursive(int base, std::uint64_t k) {
    const KExpansion e = KExpansion::expand(base, k);
    if (e.v() == 0) return WFunction{e, 0, PiecewisePoly::constant(base, 1.0), 1.0};
    const KExpansion prev = e.drop_smallest();
    WFunction wp = build_W_recursive(base, prev.value());
    std::uint64_t lowest = k - prev.value();  // kappa_v b^(a_v - 1)
    PiecewisePoly p = wp.poly.times_step(wal_conj_cells(base, lowest)).antiderivative();
    cplx integral = p.definite_integral();
    return WFunction{e, 0, std::move(p), integral};
}

cplx I_closed_form(int base, std::uint64_t k) {
    const KExpansion e = KExpansion::expand(base, k);
    cplx denom = 1.0;
    for (const Digit& d : e.digits()) denom *= (1.0 - omega_bar_pow(base, d.kappa));
    return pow_int(base, -e.mu()) / denom;
}

cplx W_at_base_closed_form(int base, std::uint64_t k) {
    const KExpansion e = KExpansion::expand(base, k);
    if (e.v() == 0) throw std::invalid_argument("W_at_base_closed_form requires k >= 1");
    cplx denom = 1.0;
    for (int i = 0; i + 1 < e.v(); ++i)
        denom *= (1.0 - omega_bar_pow(base, e.digits()[static_cast<std::size_t>(i)].kappa));
    return pow_int(base, -e.mu()) / denom;
}

cplx eval_W_fast(const WFunction& w, double x) {
    if (w.j != 0) throw std::invalid_argument("eval_W_fast requires j = 0");
    const KExpansion& e = w.k;
    if (e.v() == 0) return 1.0;
    if (x < 0.0 || x > 1.0) throw std::domain_error("eval_W_fast requires x in [0,1]");
    const int base = e.base();
    const double h = pow_int(base, -e.a_min());
    double t = x / h;
    const double r = std::round(t);
    double cf = (std::abs(t - r) < 1e-9 * std::max(1.0, t)) ? r : std::floor(t);
    const std::int64_t c = static_cast<std::int64_t>(cf);
    const double xp = std::max(0.0, x - static_cast<double>(c) * h);
    const cplx rot = omega_bar_pow(base, c * e.kappa_min());
    return (1.0 - rot) * I_closed_form(base, e.value()) + rot * w.poly.eval(xp);
}

cplx eval_W_fast(int base, std::uint64_t k, double x) {
    return eval_W_fast(build_W(base, k), x);
}

WFunction build_W_extra(int base, std::uint64_t k, int j) {
    if (j < 0) throw std::invalid_argument("build_W_extra requires j >= 0");
    WFunction w = build_W(base, k);
    for (int level = 0; level < j; ++level) {
        PiecewisePoly next = w.poly.plus_const(-w.integral).antiderivative();
        cplx integral = next.definite_integral();
        w = WFunction{w.k, level + 1, std::move(next), integral};
    }
    return w;
}

cplx I_extra(int base, std::uint64_t k, int j) {
    return build_W_extra(base, k, j).integral;
}

DyadicReport dyadic_properties(std::uint64_t k, int samples, std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("dyadic_properties requires k >= 1");
    const WFunction w = build_W(2, k);
    const KExpansion& e = w.k;
    DyadicReport rep;
    rep.k = k;
    rep.norm1 = w.poly.norm(1.0);
    rep.norm1_expected = std::pow(2.0, -e.mu() - e.v());
    rep.norm_inf = w.poly.norm(std::numeric_limits<double>::infinity());
    rep.norm_inf_expected = std::pow(2.0, -e.mu() - e.v() + 1);

    const double base_pt = std::pow(2.0, -e.a_min());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double min_value = 0.0;
    // dense min scan on a grid finer than the cells
    const std::int64_t n = w.poly.cell_count() * 8;
    for (std::int64_t i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n);
        min_value = std::min(min_value, w.poly.eval(x).real());
    }
    rep.min_value = min_value;

    const double period = 2.0 * base_pt;
    const cplx w_base = w.poly.eval(base_pt);
    for (int i = 0; i < samples; ++i) {
        // x1 + x2 a multiple of 2^(-a_v+1)
        double x1 = unif(rng);
        const std::int64_t mult = 1 + static_cast<std::int64_t>(unif(rng) * (1.0 / period - 1.0));
        double x2 = static_cast<double>(mult) * period - x1;
        if (x2 >= 0.0 && x2 <= 1.0) {
            const double d = std::abs(w.poly.eval(x1) - w.poly.eval(x2));
            rep.max_period_residual = std::max(rep.max_period_residual, d);
        }
        // x1 + x2 an odd multiple of 2^-a_v
        x1 = unif(rng) * base_pt;
        x2 = base_pt - x1;
        const double d2 = std::abs(w.poly.eval(x1) + w.poly.eval(x2) - w_base);
        rep.max_half_residual = std::max(rep.max_half_residual, d2);
    }

    rep.pass = rep.min_value >= -1e-12 &&
               std::abs(rep.norm1 - rep.norm1_expected) <= 1e-10 &&
               std::abs(rep.norm_inf - rep.norm_inf_expected) <= 1e-9 &&
               rep.max_period_residual <= 1e-11 && rep.max_half_residual <= 1e-11;
    return rep;
}

}  // namespace walsh
