#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walsh/badic.hpp"

namespace walsh {

using rational = boost::multiprecision::cpp_rational;

/// Bernoulli polynomial B_r and its normalization b_r = B_r / r!, with exact
/// rational coefficients. Generated from the defining recurrence
/// sum_j C(r+1, j) B_j = 0; doubles only appear at the evaluation boundary.
class BernoulliPoly {
public:
    static constexpr int kMaxDegree = 30;

    static const BernoulliPoly& get(int r);

    int degree() const { return r_; }
    /// Coefficients of B_r, ascending powers.
    const std::vector<rational>& coeffs_B() const { return coeffs_B_; }
    /// Coefficients of b_r = B_r / r!, ascending powers.
    const std::vector<rational>& coeffs_b() const { return coeffs_b_; }

    double eval_B(double x) const;
    double eval_b(double x) const;

    BernoulliPoly() = default;

private:
    int r_ = 0;
    std::vector<rational> coeffs_B_;
    std::vector<rational> coeffs_b_;
    std::vector<double> coeffs_b_dbl_;
};

/// b_r(x) = B_r(x) / r!.
double bernoulli_b(int r, double x);

/// Shifted kernel piece: b_alpha(|x-y|) for even alpha,
/// (-1)^(1 if x < y) b_alpha(|x-y|) for odd alpha.
double b_tilde(int alpha, double x, double y);

/// Reproducing kernel of the order-alpha Sobolev space on [0,1]:
/// K(x,y) = sum_{i=0..alpha} b_i(x) b_i(y) - (-1)^alpha btilde_{2 alpha}(x-y).
double kernel(int alpha, double x, double y);

/// Kernel of the periodic subspace:
/// K(x,y) = b_alpha(x) b_alpha(y) + (-1)^(alpha+1) btilde_{2 alpha}(x-y).
double kernel_periodic(int alpha, double x, double y);

/// Walsh coefficient of b_r: 0 for r < v, (-1)^r I^(r-v)(k) for r >= v.
/// Requires k >= 1, r >= 1.
cplx walsh_coeff_bernoulli(int base, std::uint64_t k, int r);

}  // namespace walsh
