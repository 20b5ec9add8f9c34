#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace walsh {

/// Gauss-Legendre rule on [0,1]: nodes and weights, computed once per order
/// by Newton iteration on the Legendre polynomial and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

/// Integral of f over [a,b] with an n-node rule.
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n);
std::complex<double> gauss_integrate_c(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, int n);

}  // namespace walsh
