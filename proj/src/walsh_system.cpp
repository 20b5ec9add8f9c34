#include "walsh/walsh_system.hpp"

#include <cmath>
#include <stdexcept>

namespace walsh {

namespace {

std::uint64_t pow_u64(int base, int e) {
    std::uint64_t p = 1;
    for (int i = 0; i < e; ++i) p *= static_cast<std::uint64_t>(base);
    return p;
}

// Exponent sum_i kappa_i xi_{a_i} mod b, where cell = floor(x b^a1) encodes
// the first a1 digits of x.
int wal_exponent(const KExpansion& e, std::uint64_t cell) {
    const int base = e.base();
    const int a1 = e.a1();
    std::int64_t exp = 0;
    for (const Digit& d : e.digits()) {
        // digit xi_{d.a} = floor(cell / b^(a1 - d.a)) mod b
        const std::uint64_t q = cell / pow_u64(base, a1 - d.a);
        const int xi = static_cast<int>(q % static_cast<std::uint64_t>(base));
        exp += static_cast<std::int64_t>(d.kappa) * xi;
    }
    return static_cast<int>(exp % base);
}

cplx omega_pow(int base, int e) { return std::conj(omega_bar_pow(base, e)); }

// floor(x b^a1) with a guard digit: values within 1e-9 of an integer (in
// units of one cell) snap to it, matching the finite-expansion convention
// at b-adic rational boundaries.
std::uint64_t cell_of(int base, int a1, double x) {
    const double t = x * static_cast<double>(pow_u64(base, a1));
    const double r = std::round(t);
    double c = (std::abs(t - r) < 1e-9) ? r : std::floor(t);
    if (c < 0.0) c = 0.0;
    return static_cast<std::uint64_t>(c);
}

}  // namespace

cplx wal_eval(int base, std::uint64_t k, double x) {
    if (x < 0.0 || x >= 1.0) throw std::domain_error("wal_eval requires x in [0,1)");
    const KExpansion e = KExpansion::expand(base, k);
    if (e.v() == 0) return 1.0;
    return omega_pow(base, wal_exponent(e, cell_of(base, e.a1(), x)));
}

cplx wal_eval_scaled(int base, std::uint64_t k, std::uint64_t numerator, int scale_exp) {
    const KExpansion e = KExpansion::expand(base, k);
    if (numerator >= pow_u64(base, scale_exp))
        throw std::domain_error("wal_eval_scaled requires x in [0,1)");
    if (e.v() == 0) return 1.0;
    const int a1 = e.a1();
    // cell = floor(x b^a1) with x = numerator b^-scale_exp, exactly.
    std::uint64_t cell;
    if (scale_exp >= a1)
        cell = numerator / pow_u64(base, scale_exp - a1);
    else
        cell = numerator * pow_u64(base, a1 - scale_exp);
    return omega_pow(base, wal_exponent(e, cell));
}

cplx wal_eval_multi(int base, std::span<const std::uint64_t> ks, std::span<const double> xs) {
    if (ks.size() != xs.size())
        throw std::invalid_argument("wal_eval_multi: length mismatch");
    if (ks.empty()) throw std::invalid_argument("wal_eval_multi: s must be >= 1");
    cplx prod = 1.0;
    for (std::size_t j = 0; j < ks.size(); ++j) prod *= wal_eval(base, ks[j], xs[j]);
    return prod;
}

PiecewisePoly wal_conj_cells(int base, std::uint64_t k) {
    const KExpansion e = KExpansion::expand(base, k);
    const int g = e.a1();
    const std::int64_t n = grid_cells(base, g);
    std::vector<cplx> values(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < n; ++m)
        values[static_cast<std::size_t>(m)] =
            omega_bar_pow(base, wal_exponent(e, static_cast<std::uint64_t>(m)));
    return PiecewisePoly::step(base, g, std::move(values));
}

cplx inner_product(int base, std::uint64_t k, std::uint64_t l) {
    const KExpansion ek = KExpansion::expand(base, k);
    const KExpansion el = KExpansion::expand(base, l);
    const int g = std::max(ek.a1(), el.a1());
    const std::int64_t n = grid_cells(base, g);
    const int gk = g - ek.a1();
    const int gl = g - el.a1();
    const std::uint64_t dk = pow_u64(base, gk);
    const std::uint64_t dl = pow_u64(base, gl);
    cplx s = 0.0;
    for (std::int64_t m = 0; m < n; ++m) {
        const std::uint64_t cm = static_cast<std::uint64_t>(m);
        const int pk = wal_exponent(ek, cm / dk);
        const int pl = wal_exponent(el, cm / dl);
        s += omega_pow(base, pk - pl);
    }
    return s / static_cast<double>(n);
}

}  // namespace walsh
