#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "walsh/badic.hpp"
#include "walsh/piecewise_poly.hpp"
#include "walsh/w_functions.hpp"

namespace walsh {

/// An integrand with evaluable derivatives up to a declared order.
/// deriv(i, x) returns f^(i)(x) for 0 <= i <= order. Complex values are
/// allowed everywhere; the formulas extend by linearity.
struct SmoothFunction {
    int order = 0;
    std::function<cplx(int, double)> deriv;

    cplx operator()(double x) const { return deriv(0, x); }
};

/// s-variate integrand with mixed partials up to orders[j] in coordinate j.
struct SmoothFunctionND {
    std::vector<int> orders;
    std::function<cplx(std::span<const int>, std::span<const double>)> deriv;

    int dim() const { return static_cast<int>(orders.size()); }
};

// Built-in function family (the CLI's closed DSL maps onto these).
SmoothFunction smooth_exp(double lambda);
SmoothFunction smooth_sin(double freq, double phase);
SmoothFunction smooth_poly(std::vector<double> coeffs);  // ascending powers
SmoothFunction smooth_bernoulli(int r);                  // f = b_r
/// Product integrand f(x) = prod_j f_j(x_j).
SmoothFunctionND smooth_product(std::vector<SmoothFunction> factors);

/// Central-difference consistency of deriv(i,.) against deriv(i-1,.) at
/// interior points. Returns the worst relative error seen.
double derivative_consistency(const SmoothFunction& f, int points = 20, double step = 1e-5);

struct CoefficientResult {
    std::vector<std::uint64_t> ks;
    cplx value;
    std::string method;
    int nodes_per_cell = 0;
    int resolution = 0;
};

constexpr int kDefaultNodes = 16;
constexpr int kMinResolution = 4;

/// f-hat(k) by direct Gauss-Legendre quadrature against conj(wal_k) on the
/// cell grid of resolution max(a_1, kMinResolution). The independent oracle
/// for every other coefficient path.
CoefficientResult coeff_quadrature(const SmoothFunction& f, int base, std::uint64_t k,
                                   int nodes_per_cell = kDefaultNodes);

/// f-hat(k) = (-1)^n int f^(n) conj(wal_{k>n}) W_{k<=n}; any 0 <= n <= min(order, v).
CoefficientResult coeff_formula(const SmoothFunction& f, int base, std::uint64_t k, int n,
                                int nodes_per_cell = kDefaultNodes);

/// Tensor version for s <= 3.
CoefficientResult coeff_formula_multi(const SmoothFunctionND& f, int base,
                                      std::span<const std::uint64_t> ks, std::span<const int> ns,
                                      int nodes_per_cell = kDefaultNodes);

/// f-hat(k) = sum_{i=0..r} (-1)^(v+i) I^(i)(k) int f^(v+i)
///          + (-1)^(v+r) int f^(v+r) (W^(r) - I^(r)). Needs order >= v + r.
CoefficientResult coeff_higher_order(const SmoothFunction& f, int base, std::uint64_t k, int r,
                                     int nodes_per_cell = kDefaultNodes);

/// Sobolev-space representation: the higher-order form when alpha >= v, the
/// derivative form at n = alpha when alpha < v. Only f^(alpha) evaluability
/// is required; absolute continuity of lower derivatives is the caller's
/// contract.
CoefficientResult coeff_sobolev(const SmoothFunction& f, int base, std::uint64_t k, int alpha,
                                int nodes_per_cell = kDefaultNodes);

/// h_1(x) = -int_0^1 btilde_alpha(x - y) conj(wal_k(y)) dy, with the
/// quadrature split at the kernel kink y = x.
cplx h1_kernel_integral(int base, std::uint64_t k, int alpha, double x,
                        int nodes_per_cell = kDefaultNodes);

/// int_0^1 f^(m); the exact difference f^(m-1)(1) - f^(m-1)(0) for m >= 1,
/// quadrature for m = 0.
cplx integral_of_derivative(const SmoothFunction& f, int m, int nodes_per_cell = kDefaultNodes);

/// int_0^1 |f^(m)| by composite quadrature.
double l1_of_derivative(const SmoothFunction& f, int m, int nodes_per_cell = kDefaultNodes);

/// L^p norm of f^(m) on [0,1]; p = inf by dense sampling. The quadrature
/// splits at the sign changes of f^(m) (real-valued family assumed).
double lp_of_derivative(const SmoothFunction& f, int m, double p,
                        int nodes_per_cell = kDefaultNodes);

}  // namespace walsh
