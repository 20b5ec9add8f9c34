#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walsh/badic.hpp"
#include "walsh/coefficients.hpp"

namespace walsh {

/// One verification record: coefficient magnitude against a bound value.
struct BoundReport {
    int base = 0;
    std::vector<std::uint64_t> ks;
    int alpha = 0;
    std::string rule;
    double coeff_abs = 0.0;
    double bound = 0.0;
    double ratio = 0.0;  // 0 for a satisfied exact-zero claim
    bool exact_zero_claim = false;
    bool pass = false;
    double tolerance = 0.0;
    std::string note;
};

constexpr double kRatioTolerance = 1e-9;   // pass iff ratio <= 1 + this
constexpr double kExactZeroTolerance = 1e-11;

/// Finalize ratio/pass from coeff_abs, bound and the exact-zero flag.
void settle(BoundReport& r);

/// Smooth-function bound: for b > 2 (p must be 1)
///   norm * b^-mu_alpha(k) / m^min(alpha,v) * (M + C_{b,min(alpha,v)})^min(1,v);
/// for b = 2, any p in [1, inf]
///   norm * 2^(-mu_alpha(k) - min(alpha,v) + min(1,v)/p).
/// With use_v_constant the C argument is v instead of min(alpha, v) (a looser
/// variant, exposed for cross-checking).
double bound_smooth(int base, std::uint64_t k, int alpha, double norm_value, double p,
                    bool use_v_constant = false);

/// Product of the per-coordinate factors times the norm of the mixed partial.
double bound_smooth_multi(int base, std::span<const std::uint64_t> ks, std::span<const int> alphas,
                          double norm_value, double p);

/// C-infinity bound: D * b^-mu(k) * prod_j (r_j/m)^v_j * C_b^min(1, v_j)
/// with C_2 = 2 and C_b = M + b m/(b - M) otherwise.
double bound_c_infty(int base, std::span<const std::uint64_t> ks, std::span<const double> rates,
                     double D);

struct BernoulliBound {
    bool exact_zero = false;
    double value = 0.0;
};

/// Bernoulli-coefficient bound: exact zero for r < v and for b = 2 with r - v
/// odd; 2^(-mu'_r(k) - r) for b = 2; (b^-mu'_r(k)/m^r)(1 + C_{b,v}) for b > 2.
BernoulliBound bound_bernoulli(int base, std::uint64_t k, int r);

/// Sobolev-space bound from the per-derivative integrals and int |f^(alpha)|.
/// integrals[i] = |int f^(i)| for i = 0..alpha.
double bound_sobolev(int base, std::uint64_t k, int alpha, std::span<const double> integrals,
                     double l1_falpha);

/// Norm-form constant C_{b,alpha,q}; q = inf takes the max of the summed terms.
double c_sob_constant(int base, int alpha, double q);

/// ||f||_{p,alpha} = (sum_i |int f^(i)|^p + int |f^(alpha)|^p)^(1/p); p = inf
/// takes the max of the terms (with the sup norm of f^(alpha)).
double f_norm_p_alpha(const SmoothFunction& f, double p, int alpha);

/// b^-mu_alpha(k) * C_{b,alpha,q} * fnorm, with 1/p + 1/q = 1.
double bound_sobolev_simple(int base, std::uint64_t k, int alpha, double p, double fnorm);

/// Periodic-space bound: l1 * (b^-mu'_alpha/m^alpha) M (1 + C_{b,v}) for b > 2,
/// l1 * 2^-mu'_alpha(k) / 2^(alpha-1) for b = 2.
double bound_periodic(int base, std::uint64_t k, int alpha, double l1_falpha);

/// Sweep configuration: which rule, over which k and parameters.
struct SweepConfig {
    std::string rule;  // smooth | bernoulli | sobolev | sobolev_norm | periodic | cinfty | wextra
    int base = 2;
    std::uint64_t k_begin = 1;
    std::uint64_t k_end = 0;  // exclusive
    int alpha = 1;            // alpha, or max r for bernoulli, or max j for wextra
    double p = 1.0;
    std::string family;  // function family spec, e.g. "exp:1" (empty where not needed)
    int nodes_per_cell = kDefaultNodes;
    int parallelism = 1;
};

SmoothFunction parse_family(const std::string& spec);

/// One report per (k, parameter) pair, sorted by k; deterministic given the
/// config regardless of the parallelism degree.
std::vector<BoundReport> verify_sweep(const SweepConfig& config);

}  // namespace walsh
