#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "walsh/badic.hpp"
#include "walsh/piecewise_poly.hpp"

namespace walsh {

/// wal_k(x) = omega_b^(sum_i kappa_i xi_{a_i}) where xi_j are the b-adic
/// digits of x. b-adic rationals use their finite expansion. x in [0,1).
cplx wal_eval(int base, std::uint64_t k, double x);

/// Exact-digit variant for x = numerator * b^-scale_exp (no float peeling).
cplx wal_eval_scaled(int base, std::uint64_t k, std::uint64_t numerator, int scale_exp);

/// Product of univariate Walsh values.
cplx wal_eval_multi(int base, std::span<const std::uint64_t> ks, std::span<const double> xs);

/// conj(wal_k) as a degree-0 piecewise polynomial at resolution a_1.
PiecewisePoly wal_conj_cells(int base, std::uint64_t k);

/// <wal_k, wal_l> by exact cell summation; 1 for k = l, 0 otherwise.
cplx inner_product(int base, std::uint64_t k, std::uint64_t l);

}  // namespace walsh
