#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace walsh {

using cplx = std::complex<double>;

/// One digit of a b-adic expansion: kappa * b^(a-1) with kappa in [1, b-1], a >= 1.
struct Digit {
    int kappa = 0;
    int a = 0;

    friend bool operator==(const Digit&, const Digit&) = default;
};

/// The b-adic digit decomposition of a nonnegative integer k,
///   k = sum_i kappa_i * b^(a_i - 1),   a_1 > a_2 > ... > a_v >= 1.
/// k = 0 is represented by an empty digit list (v = 0).
class KExpansion {
public:
    static KExpansion expand(int base, std::uint64_t k);

    int base() const { return base_; }
    std::uint64_t value() const { return k_; }
    const std::vector<Digit>& digits() const { return digits_; }
    int v() const { return static_cast<int>(digits_.size()); }

    /// Largest exponent a_1 (0 when k = 0).
    int a1() const { return digits_.empty() ? 0 : digits_.front().a; }
    /// Smallest exponent a_v (0 when k = 0).
    int a_min() const { return digits_.empty() ? 0 : digits_.back().a; }
    /// Digit kappa_v attached to the smallest exponent.
    int kappa_min() const { return digits_.empty() ? 0 : digits_.back().kappa; }

    /// k' = k - kappa_v b^(a_v - 1). Throws for k = 0.
    KExpansion drop_smallest() const;
    /// k_{<=n}: keep the n digits with the largest exponents.
    KExpansion truncate_low(int n) const;
    /// k_{>n}: the complementary digits, so truncate_low(n) + tail_high(n) = k.
    KExpansion tail_high(int n) const;

    /// mu(k) = a_1 + ... + a_v (0 for k = 0).
    int mu() const;
    /// mu_alpha(k) = a_1 + ... + a_min(alpha, v).
    int mu_alpha(int alpha) const;
    /// mu'_alpha(k) = a_1 + ... + a_v + (alpha - v) a_v for v <= alpha,
    /// and a_1 + ... + a_alpha for v >= alpha.
    int mu_per(int alpha) const;

private:
    KExpansion(int base, std::uint64_t k, std::vector<Digit> digits)
        : base_(base), k_(k), digits_(std::move(digits)) {}
    static KExpansion from_digits(int base, std::vector<Digit> digits);

    int base_ = 2;
    std::uint64_t k_ = 0;
    std::vector<Digit> digits_;
};

/// Scalar constants attached to a base b:
/// omega = exp(2 pi i / b), m_b = min_c |1 - conj(omega)^c|, M_b = max_c |1 - conj(omega)^c|.
struct BaseConstants {
    int base = 2;
    cplx omega;
    double m = 0.0;
    double M = 0.0;
};

BaseConstants constants(int base);

/// conj(omega_b)^e for integer e (e reduced mod b, negatives allowed).
cplx omega_bar_pow(int base, std::int64_t e);

/// C_{b,n} = (b m_b / (b - M_b)) (1 - (M_b / b)^n). Requires b >= 3.
/// Nondecreasing in n with limit b m_b / (b - M_b).
double c_factor(int base, int n);

}  // namespace walsh
