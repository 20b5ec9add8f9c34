#include "walsh/badic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walsh {

namespace {

void check_base(int base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
}

}  // namespace

KExpansion KExpansion::expand(int base, std::uint64_t k) {
    check_base(base);
    std::vector<Digit> digits;
    std::uint64_t rest = k;
    int a = 1;
    while (rest > 0) {
        int kappa = static_cast<int>(rest % static_cast<std::uint64_t>(base));
        if (kappa != 0) digits.push_back({kappa, a});
        rest /= static_cast<std::uint64_t>(base);
        ++a;
    }
    std::reverse(digits.begin(), digits.end());
    return KExpansion(base, k, std::move(digits));
}

KExpansion KExpansion::from_digits(int base, std::vector<Digit> digits) {
    std::uint64_t k = 0;
    for (const Digit& d : digits) {
        std::uint64_t p = 1;
        for (int i = 1; i < d.a; ++i) p *= static_cast<std::uint64_t>(base);
        k += static_cast<std::uint64_t>(d.kappa) * p;
    }
    return KExpansion(base, k, std::move(digits));
}

KExpansion KExpansion::drop_smallest() const {
    if (digits_.empty()) throw std::invalid_argument("drop_smallest requires k > 0");
    std::vector<Digit> digits(digits_.begin(), digits_.end() - 1);
    return from_digits(base_, std::move(digits));
}

KExpansion KExpansion::truncate_low(int n) const {
    const int keep = std::min<int>(std::max(n, 0), v());
    std::vector<Digit> digits(digits_.begin(), digits_.begin() + keep);
    return from_digits(base_, std::move(digits));
}

KExpansion KExpansion::tail_high(int n) const {
    const int skip = std::min<int>(std::max(n, 0), v());
    std::vector<Digit> digits(digits_.begin() + skip, digits_.end());
    return from_digits(base_, std::move(digits));
}

int KExpansion::mu() const {
    int s = 0;
    for (const Digit& d : digits_) s += d.a;
    return s;
}

int KExpansion::mu_alpha(int alpha) const {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    int s = 0;
    const int n = std::min(alpha, v());
    for (int i = 0; i < n; ++i) s += digits_[static_cast<std::size_t>(i)].a;
    return s;
}

int KExpansion::mu_per(int alpha) const {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    if (digits_.empty()) return 0;
    if (v() >= alpha) return mu_alpha(alpha);
    return mu() + (alpha - v()) * a_min();
}

BaseConstants constants(int base) {
    check_base(base);
    BaseConstants c;
    c.base = base;
    const double theta = 2.0 * std::numbers::pi / base;
    c.omega = std::polar(1.0, theta);
    c.m = 2.0 * std::sin(std::numbers::pi / base);
    c.M = (base % 2 == 0) ? 2.0
                          : 2.0 * std::sin((base + 1) * std::numbers::pi / (2.0 * base));
    return c;
}

cplx omega_bar_pow(int base, std::int64_t e) {
    check_base(base);
    std::int64_t r = e % base;
    if (r < 0) r += base;
    return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) / base);
}

double c_factor(int base, int n) {
    if (base < 3) throw std::invalid_argument("c_factor requires base >= 3");
    if (n < 0) throw std::invalid_argument("c_factor requires n >= 0");
    const BaseConstants c = constants(base);
    return base * c.m / (base - c.M) * (1.0 - std::pow(c.M / base, n));
}

}  // namespace walsh
