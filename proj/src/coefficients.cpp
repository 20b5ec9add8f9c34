#include "walsh/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "walsh/bernoulli.hpp"
#include "walsh/quadrature.hpp"
#include "walsh/walsh_system.hpp"

namespace walsh {

namespace {

double pow_int(int base, int e) { return std::pow(static_cast<double>(base), e); }

int grid_for(const KExpansion& e) { return std::max(e.a1(), kMinResolution); }

// Per-cell Gauss-Legendre integral of g over the grid of b^G cells.
cplx grid_integral(const std::function<cplx(double)>& g, int base, int G, int nodes) {
    const std::int64_t n = grid_cells(base, G);
    const double h = pow_int(base, -G);
    const GaussRule& rule = gauss_legendre(nodes);
    cplx total = 0.0;
    for (std::int64_t m = 0; m < n; ++m) {
        const double left = static_cast<double>(m) * h;
        cplx s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] * g(left + h * rule.nodes[i]);
        total += s * h;
    }
    return total;
}

// Zeros of the real part sign changes of g on [0,1], by probing + bisection.
std::vector<double> real_sign_changes(const std::function<double(double)>& g, int probes) {
    std::vector<double> zeros;
    double x0 = 0.0;
    double g0 = g(x0);
    for (int i = 1; i <= probes; ++i) {
        const double x1 = static_cast<double>(i) / probes;
        const double g1 = g(x1);
        if ((g0 < 0.0) != (g1 < 0.0)) {
            double lo = x0, hi = x1;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((g(mid) < 0.0) == (g0 < 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        g0 = g1;
    }
    return zeros;
}

}  // namespace

SmoothFunction smooth_exp(double lambda) {
    SmoothFunction f;
    f.order = 60;
    f.deriv = [lambda](int i, double x) -> cplx {
        return std::pow(lambda, i) * std::exp(lambda * x);
    };
    return f;
}

SmoothFunction smooth_sin(double freq, double phase) {
    SmoothFunction f;
    f.order = 60;
    f.deriv = [freq, phase](int i, double x) -> cplx {
        return std::pow(freq, i) * std::sin(freq * x + phase + i * std::numbers::pi / 2.0);
    };
    return f;
}

SmoothFunction smooth_poly(std::vector<double> coeffs) {
    SmoothFunction f;
    f.order = 60;
    f.deriv = [coeffs = std::move(coeffs)](int i, double x) -> cplx {
        // i-th derivative of sum c_d x^d
        double v = 0.0;
        for (std::size_t d = coeffs.size(); d-- > 0;) {
            if (static_cast<int>(d) < i) break;
            double fall = 1.0;
            for (int j = 0; j < i; ++j) fall *= static_cast<double>(d) - j;
            const int e = static_cast<int>(d) - i;
            v += coeffs[d] * fall * std::pow(x, e);
        }
        return v;
    };
    return f;
}

SmoothFunction smooth_bernoulli(int r) {
    SmoothFunction f;
    f.order = 60;
    f.deriv = [r](int i, double x) -> cplx {
        if (i > r) return 0.0;
        return bernoulli_b(r - i, x);
    };
    return f;
}

SmoothFunctionND smooth_product(std::vector<SmoothFunction> factors) {
    SmoothFunctionND f;
    for (const auto& g : factors) f.orders.push_back(g.order);
    f.deriv = [factors = std::move(factors)](std::span<const int> ns,
                                             std::span<const double> xs) -> cplx {
        cplx prod = 1.0;
        for (std::size_t j = 0; j < factors.size(); ++j)
            prod *= factors[j].deriv(ns[j], xs[j]);
        return prod;
    };
    return f;
}

double derivative_consistency(const SmoothFunction& f, int points, double step) {
    double worst = 0.0;
    for (int i = 1; i <= f.order && i <= 8; ++i) {
        for (int p = 1; p <= points; ++p) {
            const double x = static_cast<double>(p) / (points + 1);
            const cplx fd = (f.deriv(i - 1, x + step) - f.deriv(i - 1, x - step)) / (2.0 * step);
            const cplx ex = f.deriv(i, x);
            const double rel = std::abs(fd - ex) / std::max(1.0, std::abs(ex));
            worst = std::max(worst, rel);
        }
    }
    return worst;
}

CoefficientResult coeff_quadrature(const SmoothFunction& f, int base, std::uint64_t k,
                                   int nodes_per_cell) {
    const KExpansion e = KExpansion::expand(base, k);
    const int G = grid_for(e);
    const std::int64_t n = grid_cells(base, G);
    const double h = pow_int(base, -G);
    const GaussRule& rule = gauss_legendre(nodes_per_cell);
    cplx total = 0.0;
    for (std::int64_t m = 0; m < n; ++m) {
        const double left = static_cast<double>(m) * h;
        cplx s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] * f.deriv(0, left + h * rule.nodes[i]);
        total += std::conj(wal_eval_scaled(base, k, static_cast<std::uint64_t>(m), G)) * s * h;
    }
    return {{k}, total, "quadrature", nodes_per_cell, G};
}

CoefficientResult coeff_formula(const SmoothFunction& f, int base, std::uint64_t k, int n,
                                int nodes_per_cell) {
    const KExpansion e = KExpansion::expand(base, k);
    if (n < 0 || n > std::min(f.order, e.v()))
        throw std::invalid_argument("coeff_formula: n out of range [0, min(order, v)]");
    const KExpansion low = e.truncate_low(n);
    const KExpansion high = e.tail_high(n);
    const WFunction w = build_W(base, low.value());
    PiecewisePoly weight = w.poly.times_step(wal_conj_cells(base, high.value()));
    const int G = std::max(weight.resolution(), kMinResolution);
    weight = weight.refined(G);
    const cplx integral = grid_integral(
        [&](double x) { return f.deriv(n, x) * weight.eval(x); }, base, G, nodes_per_cell);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return {{k}, sign * integral, "formula:n=" + std::to_string(n), nodes_per_cell, G};
}

CoefficientResult coeff_formula_multi(const SmoothFunctionND& f, int base,
                                      std::span<const std::uint64_t> ks, std::span<const int> ns,
                                      int nodes_per_cell) {
    const int s = f.dim();
    if (s < 1 || s > 3) throw std::invalid_argument("coeff_formula_multi supports 1 <= s <= 3");
    if (static_cast<int>(ks.size()) != s || static_cast<int>(ns.size()) != s)
        throw std::invalid_argument("coeff_formula_multi: dimension mismatch");

    // Per coordinate: list of (x, weight) pairs combining the Gauss rule with
    // the piecewise-polynomial Walsh weight.
    struct Axis {
        std::vector<double> x;
        std::vector<cplx> w;
    };
    std::vector<Axis> axes;
    int sign_exp = 0;
    const GaussRule& rule = gauss_legendre(nodes_per_cell);
    for (int j = 0; j < s; ++j) {
        const KExpansion e = KExpansion::expand(base, ks[static_cast<std::size_t>(j)]);
        const int n = ns[static_cast<std::size_t>(j)];
        if (n < 0 || n > std::min(f.orders[static_cast<std::size_t>(j)], e.v()))
            throw std::invalid_argument("coeff_formula_multi: n out of range");
        sign_exp += n;
        const KExpansion low = e.truncate_low(n);
        const KExpansion high = e.tail_high(n);
        PiecewisePoly weight =
            build_W(base, low.value()).poly.times_step(wal_conj_cells(base, high.value()));
        const int G = std::max(weight.resolution(), kMinResolution);
        weight = weight.refined(G);
        const std::int64_t cells = grid_cells(base, G);
        const double h = pow_int(base, -G);
        Axis ax;
        for (std::int64_t m = 0; m < cells; ++m) {
            const double left = static_cast<double>(m) * h;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double x = left + h * rule.nodes[i];
                ax.x.push_back(x);
                ax.w.push_back(rule.weights[i] * h * weight.eval(x));
            }
        }
        axes.push_back(std::move(ax));
    }

    cplx total = 0.0;
    std::vector<double> xs(static_cast<std::size_t>(s));
    std::vector<int> nsv(ns.begin(), ns.end());
    const std::size_t n0 = axes[0].x.size();
    const std::size_t n1 = s > 1 ? axes[1].x.size() : 1;
    const std::size_t n2 = s > 2 ? axes[2].x.size() : 1;
    for (std::size_t i0 = 0; i0 < n0; ++i0) {
        xs[0] = axes[0].x[i0];
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            if (s > 1) xs[1] = axes[1].x[i1];
            cplx inner = 0.0;
            for (std::size_t i2 = 0; i2 < n2; ++i2) {
                if (s > 2) xs[2] = axes[2].x[i2];
                cplx w = s > 2 ? axes[2].w[i2] : cplx(1.0);
                inner += w * f.deriv(nsv, xs);
            }
            total += axes[0].w[i0] * (s > 1 ? axes[1].w[i1] : cplx(1.0)) * inner;
        }
    }
    const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
    CoefficientResult res;
    res.ks.assign(ks.begin(), ks.end());
    res.value = sign * total;
    res.method = "formula-multi";
    res.nodes_per_cell = nodes_per_cell;
    res.resolution = 0;
    return res;
}

cplx integral_of_derivative(const SmoothFunction& f, int m, int nodes_per_cell) {
    if (m < 0 || m > f.order)
        throw std::invalid_argument("integral_of_derivative: m out of range");
    if (m >= 1) return f.deriv(m - 1, 1.0) - f.deriv(m - 1, 0.0);
    cplx total = 0.0;
    const int pieces = 64;
    for (int i = 0; i < pieces; ++i)
        total += gauss_integrate_c([&](double x) { return f.deriv(0, x); },
                                   static_cast<double>(i) / pieces,
                                   static_cast<double>(i + 1) / pieces, nodes_per_cell);
    return total;
}

double l1_of_derivative(const SmoothFunction& f, int m, int nodes_per_cell) {
    if (m < 0 || m > f.order) throw std::invalid_argument("l1_of_derivative: m out of range");
    auto re = [&](double x) { return f.deriv(m, x).real(); };
    // Assumes a real integrand (the built-in family); integrate |f^(m)| exactly
    // between its sign changes using the antiderivative when m >= 1.
    std::vector<double> cuts = real_sign_changes(re, 256);
    cuts.insert(cuts.begin(), 0.0);
    cuts.push_back(1.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double piece;
        if (m >= 1) {
            piece = (f.deriv(m - 1, cuts[i + 1]) - f.deriv(m - 1, cuts[i])).real();
        } else {
            piece = gauss_integrate(re, cuts[i], cuts[i + 1], nodes_per_cell);
        }
        total += std::abs(piece);
    }
    return total;
}

double lp_of_derivative(const SmoothFunction& f, int m, double p, int nodes_per_cell) {
    if (m < 0 || m > f.order) throw std::invalid_argument("lp_of_derivative: m out of range");
    if (p < 1.0) throw std::invalid_argument("lp_of_derivative requires p >= 1");
    if (p == 1.0) return l1_of_derivative(f, m, nodes_per_cell);
    auto absval = [&](double x) { return std::abs(f.deriv(m, x)); };
    if (std::isinf(p)) {
        double best = 0.0;
        const int n = 4096;
        for (int i = 0; i <= n; ++i)
            best = std::max(best, absval(static_cast<double>(i) / n));
        return best;
    }
    auto re = [&](double x) { return f.deriv(m, x).real(); };
    std::vector<double> cuts = real_sign_changes(re, 256);
    cuts.insert(cuts.begin(), 0.0);
    cuts.push_back(1.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) * 64)));
        for (int j = 0; j < pieces; ++j) {
            const double a = lo + (hi - lo) * j / pieces;
            const double b = lo + (hi - lo) * (j + 1) / pieces;
            total += gauss_integrate([&](double x) { return std::pow(absval(x), p); }, a, b,
                                     nodes_per_cell);
        }
    }
    return std::pow(total, 1.0 / p);
}

CoefficientResult coeff_higher_order(const SmoothFunction& f, int base, std::uint64_t k, int r,
                                     int nodes_per_cell) {
    if (r < 0) throw std::invalid_argument("coeff_higher_order requires r >= 0");
    const KExpansion e = KExpansion::expand(base, k);
    const int v = e.v();
    if (f.order < v + r)
        throw std::invalid_argument("coeff_higher_order: insufficient derivatives");
    cplx total = 0.0;
    for (int i = 0; i <= r; ++i) {
        const double sign = ((v + i) % 2 == 0) ? 1.0 : -1.0;
        total += sign * I_extra(base, k, i) * integral_of_derivative(f, v + i, nodes_per_cell);
    }
    const WFunction w = build_W_extra(base, k, r);
    const PiecewisePoly centered = w.poly.plus_const(-w.integral);
    const int G = std::max(centered.resolution(), kMinResolution);
    const PiecewisePoly cw = centered.refined(G);
    const cplx rem = grid_integral(
        [&](double x) { return f.deriv(v + r, x) * cw.eval(x); }, base, G, nodes_per_cell);
    const double sign = ((v + r) % 2 == 0) ? 1.0 : -1.0;
    total += sign * rem;
    return {{k}, total, "higher-order:r=" + std::to_string(r), nodes_per_cell, G};
}

CoefficientResult coeff_sobolev(const SmoothFunction& f, int base, std::uint64_t k, int alpha,
                                int nodes_per_cell) {
    if (alpha < 1) throw std::invalid_argument("coeff_sobolev requires alpha >= 1");
    const KExpansion e = KExpansion::expand(base, k);
    CoefficientResult res = (alpha >= e.v())
                                ? coeff_higher_order(f, base, k, alpha - e.v(), nodes_per_cell)
                                : coeff_formula(f, base, k, alpha, nodes_per_cell);
    res.method = "sobolev:alpha=" + std::to_string(alpha);
    return res;
}

cplx h1_kernel_integral(int base, std::uint64_t k, int alpha, double x, int nodes_per_cell) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("h1_kernel_integral requires x in [0,1]");
    const KExpansion e = KExpansion::expand(base, k);
    const int G = grid_for(e);
    const std::int64_t n = grid_cells(base, G);
    const double h = pow_int(base, -G);
    cplx total = 0.0;
    for (std::int64_t m = 0; m < n; ++m) {
        const double left = static_cast<double>(m) * h;
        const double right = left + h;
        const cplx wal_bar = std::conj(wal_eval_scaled(base, k, static_cast<std::uint64_t>(m), G));
        auto g = [&](double y) { return b_tilde(alpha, x, y); };
        double piece;
        if (x > left && x < right) {
            piece = gauss_integrate(g, left, x, nodes_per_cell) +
                    gauss_integrate(g, x, right, nodes_per_cell);
        } else {
            piece = gauss_integrate(g, left, right, nodes_per_cell);
        }
        total += wal_bar * piece;
    }
    return -total;
}

}  // namespace walsh
