#include "walsh/bernoulli.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "walsh/w_functions.hpp"

namespace walsh {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(int n, int k) {
    cpp_int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Bernoulli numbers B_0..B_n from sum_{j=0..m} C(m+1, j) B_j = 0.
std::vector<rational> bernoulli_numbers(int n) {
    std::vector<rational> B(static_cast<std::size_t>(n) + 1);
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        rational s = 0;
        for (int j = 0; j < m; ++j) s += rational(binomial(m + 1, j)) * B[static_cast<std::size_t>(j)];
        B[static_cast<std::size_t>(m)] = -s / binomial(m + 1, m);
    }
    return B;
}

double horner(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace

const BernoulliPoly& BernoulliPoly::get(int r) {
    if (r < 0 || r > kMaxDegree)
        throw std::invalid_argument("BernoulliPoly degree out of range [0, 30]");
    static std::vector<BernoulliPoly> table;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (table.empty()) {
        const std::vector<rational> B = bernoulli_numbers(kMaxDegree);
        table.resize(static_cast<std::size_t>(kMaxDegree) + 1);
        rational factorial = 1;
        for (int d = 0; d <= kMaxDegree; ++d) {
            if (d > 0) factorial *= d;
            BernoulliPoly p;
            p.r_ = d;
            p.coeffs_B_.resize(static_cast<std::size_t>(d) + 1);
            // B_d(x) = sum_{j=0..d} C(d, j) B_j x^(d-j)
            for (int j = 0; j <= d; ++j)
                p.coeffs_B_[static_cast<std::size_t>(d - j)] =
                    rational(binomial(d, j)) * B[static_cast<std::size_t>(j)];
            p.coeffs_b_.resize(p.coeffs_B_.size());
            p.coeffs_b_dbl_.resize(p.coeffs_B_.size());
            for (std::size_t i = 0; i < p.coeffs_B_.size(); ++i) {
                p.coeffs_b_[i] = p.coeffs_B_[i] / factorial;
                p.coeffs_b_dbl_[i] = static_cast<double>(p.coeffs_b_[i]);
            }
            table[static_cast<std::size_t>(d)] = std::move(p);
        }
    }
    return table[static_cast<std::size_t>(r)];
}

double BernoulliPoly::eval_b(double x) const { return horner(coeffs_b_dbl_, x); }

double BernoulliPoly::eval_B(double x) const {
    double factorial = 1.0;
    for (int i = 2; i <= r_; ++i) factorial *= i;
    return eval_b(x) * factorial;
}

double bernoulli_b(int r, double x) { return BernoulliPoly::get(r).eval_b(x); }

double b_tilde(int alpha, double x, double y) {
    if (alpha < 1) throw std::invalid_argument("b_tilde requires alpha >= 1");
    const double v = bernoulli_b(alpha, std::abs(x - y));
    if (alpha % 2 == 0) return v;
    return (x < y) ? -v : v;
}

double kernel(int alpha, double x, double y) {
    if (alpha < 1) throw std::invalid_argument("kernel requires alpha >= 1");
    double s = 0.0;
    for (int i = 0; i <= alpha; ++i) s += bernoulli_b(i, x) * bernoulli_b(i, y);
    const double sign = (alpha % 2 == 0) ? 1.0 : -1.0;
    return s - sign * b_tilde(2 * alpha, x, y);
}

double kernel_periodic(int alpha, double x, double y) {
    if (alpha < 1) throw std::invalid_argument("kernel_periodic requires alpha >= 1");
    const double sign = (alpha % 2 == 0) ? -1.0 : 1.0;  // (-1)^(alpha+1)
    return bernoulli_b(alpha, x) * bernoulli_b(alpha, y) + sign * b_tilde(2 * alpha, x, y);
}

cplx walsh_coeff_bernoulli(int base, std::uint64_t k, int r) {
    if (r < 1 || k < 1)
        throw std::invalid_argument("walsh_coeff_bernoulli requires k >= 1 and r >= 1");
    const KExpansion e = KExpansion::expand(base, k);
    if (r < e.v()) return 0.0;
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    return sign * I_extra(base, k, r - e.v());
}

}  // namespace walsh
