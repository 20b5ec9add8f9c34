#pragma once

#include <cstdint>

#include "walsh/badic.hpp"
#include "walsh/piecewise_poly.hpp"

namespace walsh {

/// W^(j)_k: k, level j (j = 0 is W_k itself), its piecewise polynomial on
/// [0,1] and its integral value I^(j)(k).
struct WFunction {
    KExpansion k;
    int j = 0;
    PiecewisePoly poly;
    cplx integral;
};

/// W_k as the v-fold antiderivative of conj(wal_k).
WFunction build_W(int base, std::uint64_t k);

/// W_k by the defining recursion W_k(x) = int_0^x conj(wal_{kappa_v b^(a_v-1)}) W_{k'};
/// must agree with build_W.
WFunction build_W_recursive(int base, std::uint64_t k);

/// I(k) = b^-mu(k) / prod_i (1 - conj(omega)^kappa_i); empty product is 1.
cplx I_closed_form(int base, std::uint64_t k);

/// W_k(b^-a_v) = b^-mu(k) / prod_{i<v} (1 - conj(omega)^kappa_i). Requires k >= 1.
cplx W_at_base_closed_form(int base, std::uint64_t k);

/// W_k(x) from the base-interval polynomial plus the closed-form I(k),
/// via W_k(x) = (1 - conj(omega)^(c kappa_v)) I(k) + conj(omega)^(c kappa_v) W_k(x')
/// for x = c b^-a_v + x'. Requires w.j == 0 and k >= 1.
cplx eval_W_fast(const WFunction& w, double x);
cplx eval_W_fast(int base, std::uint64_t k, double x);

/// W^(j)_k via W^(j+1)(x) = int_0^x (W^(j)(y) - I^(j)) dy, bottoming at build_W.
WFunction build_W_extra(int base, std::uint64_t k, int j);

/// I^(j)(k) = int_0^1 W^(j)_k.
cplx I_extra(int base, std::uint64_t k, int j);

/// Checks peculiar to b = 2: nonnegativity, the two reflection symmetries,
/// and the exact L1/Linf norms 2^(-mu-v) and 2^(-mu-v+min(1,v)).
struct DyadicReport {
    std::uint64_t k = 0;
    double min_value = 0.0;
    double norm1 = 0.0;
    double norm1_expected = 0.0;
    double norm_inf = 0.0;
    double norm_inf_expected = 0.0;
    double max_period_residual = 0.0;  // W(x1) = W(x2), x1 + x2 multiple of 2^(-a_v+1)
    double max_half_residual = 0.0;    // W(x1) + W(x2) = W(2^-a_v), odd multiple of 2^-a_v
    bool pass = false;
};

DyadicReport dyadic_properties(std::uint64_t k, int samples = 200, std::uint64_t seed = 1);

}  // namespace walsh
