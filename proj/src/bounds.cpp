#include "walsh/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "walsh/bernoulli.hpp"
#include "walsh/w_functions.hpp"

namespace walsh {

namespace {

double pow_int(int base, int e) { return std::pow(static_cast<double>(base), e); }

double bound_smooth_factor(int base, const KExpansion& e, int alpha, double p,
                           bool use_v_constant) {
    const int v = e.v();
    const int n = std::min(alpha, v);
    if (base == 2) {
        const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
        return std::pow(2.0, -e.mu_alpha(alpha) - n + std::min(1, v) * inv_p);
    }
    if (p != 1.0)
        throw std::invalid_argument("bound_smooth: only the L1 norm is supported for base > 2");
    const BaseConstants c = constants(base);
    const int carg = use_v_constant ? v : n;
    const double factor = (v == 0) ? 1.0 : (c.M + c_factor(base, carg));
    return pow_int(base, -e.mu_alpha(alpha)) / std::pow(c.m, n) * factor;
}

}  // namespace

void settle(BoundReport& r) {
    if (r.exact_zero_claim) {
        r.ratio = 0.0;
        r.tolerance = kExactZeroTolerance;
        r.pass = r.coeff_abs <= kExactZeroTolerance;
        return;
    }
    r.ratio = (r.bound > 0.0) ? r.coeff_abs / r.bound : (r.coeff_abs > 0.0 ? HUGE_VAL : 0.0);
    r.tolerance = kRatioTolerance;
    r.pass = r.ratio <= 1.0 + kRatioTolerance;
}

double bound_smooth(int base, std::uint64_t k, int alpha, double norm_value, double p,
                    bool use_v_constant) {
    if (alpha < 1) throw std::invalid_argument("bound_smooth requires alpha >= 1");
    const KExpansion e = KExpansion::expand(base, k);
    return norm_value * bound_smooth_factor(base, e, alpha, p, use_v_constant);
}

double bound_smooth_multi(int base, std::span<const std::uint64_t> ks, std::span<const int> alphas,
                          double norm_value, double p) {
    if (ks.size() != alphas.size())
        throw std::invalid_argument("bound_smooth_multi: dimension mismatch");
    double prod = norm_value;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const KExpansion e = KExpansion::expand(base, ks[j]);
        prod *= bound_smooth_factor(base, e, alphas[j], p, false);
    }
    return prod;
}

double bound_c_infty(int base, std::span<const std::uint64_t> ks, std::span<const double> rates,
                     double D) {
    if (ks.size() != rates.size())
        throw std::invalid_argument("bound_c_infty: dimension mismatch");
    if (D <= 0.0) throw std::invalid_argument("bound_c_infty requires D > 0");
    const BaseConstants c = constants(base);
    const double cb = (base == 2) ? 2.0 : c.M + base * c.m / (base - c.M);
    double prod = D;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        if (rates[j] <= 0.0) throw std::invalid_argument("bound_c_infty requires rates > 0");
        const KExpansion e = KExpansion::expand(base, ks[j]);
        prod *= pow_int(base, -e.mu()) * std::pow(rates[j] / c.m, e.v()) *
                (e.v() > 0 ? cb : 1.0);
    }
    return prod;
}

BernoulliBound bound_bernoulli(int base, std::uint64_t k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("bound_bernoulli requires k, r >= 1");
    const KExpansion e = KExpansion::expand(base, k);
    const int v = e.v();
    if (r < v) return {true, 0.0};
    if (base == 2 && (r - v) % 2 == 1) return {true, 0.0};
    if (base == 2) return {false, std::pow(2.0, -e.mu_per(r) - r)};
    const BaseConstants c = constants(base);
    const double cbv = 1.0 + c_factor(base, v);
    return {false, pow_int(base, -e.mu_per(r)) / std::pow(c.m, r) * cbv};
}

double bound_sobolev(int base, std::uint64_t k, int alpha, std::span<const double> integrals,
                     double l1_falpha) {
    if (k < 1 || alpha < 1) throw std::invalid_argument("bound_sobolev requires k, alpha >= 1");
    if (static_cast<int>(integrals.size()) != alpha + 1)
        throw std::invalid_argument("bound_sobolev needs integrals for i = 0..alpha");
    const KExpansion e = KExpansion::expand(base, k);
    const int v = e.v();
    double total = 0.0;
    if (base == 2) {
        for (int i = v; i <= alpha; ++i) {
            if (i < 1 || (i - v) % 2 == 1) continue;
            total += integrals[static_cast<std::size_t>(i)] * std::pow(2.0, -e.mu_per(i) - i);
        }
        total += l1_falpha * std::pow(2.0, -e.mu_per(alpha) - (alpha - 1));
        return total;
    }
    const BaseConstants c = constants(base);
    const double cbv = c_factor(base, v);
    for (int i = std::max(v, 1); i <= alpha; ++i)
        total += integrals[static_cast<std::size_t>(i)] * pow_int(base, -e.mu_per(i)) /
                 std::pow(c.m, i) * (1.0 + cbv);
    total += l1_falpha * pow_int(base, -e.mu_per(alpha)) / std::pow(c.m, alpha) * (c.M + cbv);
    return total;
}

double c_sob_constant(int base, int alpha, double q) {
    if (alpha < 1) throw std::invalid_argument("c_sob_constant requires alpha >= 1");
    if (!(q >= 1.0)) throw std::invalid_argument("c_sob_constant requires q >= 1");
    std::vector<double> terms;
    if (base == 2) {
        for (int i = 1; i <= alpha; ++i) terms.push_back(std::pow(2.0, -i));
        terms.push_back(std::pow(2.0, -(alpha - 1)));
    } else {
        const BaseConstants c = constants(base);
        const double tail_const = base * c.m / (base - c.M);
        for (int i = 1; i <= alpha; ++i)
            terms.push_back((1.0 + tail_const) / std::pow(c.m, i));
        terms.push_back((c.M + tail_const) / std::pow(c.m, alpha));
    }
    if (std::isinf(q)) return *std::max_element(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms) s += std::pow(t, q);
    return std::pow(s, 1.0 / q);
}

double f_norm_p_alpha(const SmoothFunction& f, double p, int alpha) {
    if (alpha < 1 || alpha > f.order) throw std::invalid_argument("f_norm_p_alpha: bad alpha");
    if (!(p >= 1.0)) throw std::invalid_argument("f_norm_p_alpha requires p >= 1");
    std::vector<double> terms;
    for (int i = 0; i <= alpha; ++i) terms.push_back(std::abs(integral_of_derivative(f, i)));
    if (std::isinf(p)) {
        double best = lp_of_derivative(f, alpha, p);
        for (double t : terms) best = std::max(best, t);
        return best;
    }
    double s = 0.0;
    for (double t : terms) s += std::pow(t, p);
    s += std::pow(lp_of_derivative(f, alpha, p), p);
    return std::pow(s, 1.0 / p);
}

double bound_sobolev_simple(int base, std::uint64_t k, int alpha, double p, double fnorm) {
    const double q = std::isinf(p) ? 1.0 : (p == 1.0 ? HUGE_VAL : p / (p - 1.0));
    const KExpansion e = KExpansion::expand(base, k);
    return pow_int(base, -e.mu_alpha(alpha)) * c_sob_constant(base, alpha, q) * fnorm;
}

double bound_periodic(int base, std::uint64_t k, int alpha, double l1_falpha) {
    if (k < 1 || alpha < 1) throw std::invalid_argument("bound_periodic requires k, alpha >= 1");
    const KExpansion e = KExpansion::expand(base, k);
    if (base == 2) return l1_falpha * std::pow(2.0, -e.mu_per(alpha)) / std::pow(2.0, alpha - 1);
    const BaseConstants c = constants(base);
    return l1_falpha * pow_int(base, -e.mu_per(alpha)) / std::pow(c.m, alpha) * c.M *
           (1.0 + c_factor(base, e.v()));
}

SmoothFunction parse_family(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
    }
    if (name == "exp" && args.size() == 1) return smooth_exp(args[0]);
    if (name == "sin" && args.size() == 2) return smooth_sin(args[0], args[1]);
    if (name == "bernoulli" && args.size() == 1) return smooth_bernoulli(static_cast<int>(args[0]));
    if (name == "poly" && !args.empty()) return smooth_poly(args);
    throw std::invalid_argument("unknown function family: " + spec);
}

namespace {

struct SweepShared {
    std::optional<SmoothFunction> f;
    std::vector<double> lp_norms;   // L^p norms of f^(n), n = 0..alpha
    std::vector<double> integrals;  // |int f^(i)|, i = 0..alpha
    double l1_falpha = 0.0;
    double fnorm = 0.0;  // ||f||_{p,alpha} or the constant D
    double rate = 0.0;   // growth rate for the C-infinity rule
};

std::vector<BoundReport> sweep_one_k(const SweepConfig& cfg, std::uint64_t k,
                                     const SweepShared& sh) {
    std::vector<BoundReport> out;
    const KExpansion e = KExpansion::expand(cfg.base, k);
    auto base_report = [&](const std::string& note) {
        BoundReport r;
        r.base = cfg.base;
        r.ks = {k};
        r.alpha = cfg.alpha;
        r.rule = cfg.rule;
        r.note = note;
        return r;
    };

    if (cfg.rule == "smooth") {
        BoundReport r = base_report("p=" + std::to_string(cfg.p));
        r.coeff_abs = std::abs(coeff_quadrature(*sh.f, cfg.base, k, cfg.nodes_per_cell).value);
        const int n = std::min(cfg.alpha, e.v());
        r.bound = bound_smooth(cfg.base, k, cfg.alpha,
                               sh.lp_norms[static_cast<std::size_t>(n)], cfg.p);
        settle(r);
        out.push_back(std::move(r));
    } else if (cfg.rule == "bernoulli") {
        for (int r_deg = 1; r_deg <= cfg.alpha; ++r_deg) {
            BoundReport r = base_report("r=" + std::to_string(r_deg));
            r.coeff_abs = std::abs(walsh_coeff_bernoulli(cfg.base, k, r_deg));
            const BernoulliBound bb = bound_bernoulli(cfg.base, k, r_deg);
            r.exact_zero_claim = bb.exact_zero;
            r.bound = bb.value;
            settle(r);
            out.push_back(std::move(r));
        }
    } else if (cfg.rule == "sobolev") {
        BoundReport r = base_report("");
        r.coeff_abs = std::abs(coeff_quadrature(*sh.f, cfg.base, k, cfg.nodes_per_cell).value);
        r.bound = bound_sobolev(cfg.base, k, cfg.alpha, sh.integrals, sh.l1_falpha);
        settle(r);
        out.push_back(std::move(r));
    } else if (cfg.rule == "sobolev_norm") {
        BoundReport r = base_report("p=" + std::to_string(cfg.p));
        r.coeff_abs = std::abs(coeff_quadrature(*sh.f, cfg.base, k, cfg.nodes_per_cell).value);
        r.bound = bound_sobolev_simple(cfg.base, k, cfg.alpha, cfg.p, sh.fnorm);
        settle(r);
        out.push_back(std::move(r));
    } else if (cfg.rule == "periodic") {
        BoundReport r = base_report("");
        r.coeff_abs = std::abs(coeff_quadrature(*sh.f, cfg.base, k, cfg.nodes_per_cell).value);
        r.bound = bound_periodic(cfg.base, k, cfg.alpha, sh.l1_falpha);
        settle(r);
        out.push_back(std::move(r));
    } else if (cfg.rule == "cinfty") {
        BoundReport r = base_report("");
        r.coeff_abs = std::abs(coeff_quadrature(*sh.f, cfg.base, k, cfg.nodes_per_cell).value);
        const std::uint64_t ks[1] = {k};
        const double rates[1] = {sh.rate};
        r.bound = bound_c_infty(cfg.base, ks, rates, sh.fnorm);
        settle(r);
        out.push_back(std::move(r));
    } else if (cfg.rule == "wextra") {
        const BaseConstants c = constants(cfg.base);
        for (int j = 0; j <= cfg.alpha; ++j) {
            const WFunction w = build_W_extra(cfg.base, k, j);
            const double sup_centered =
                w.poly.plus_const(-w.integral).norm(HUGE_VAL);
            const double sup = w.poly.norm(HUGE_VAL);
            const double iabs = std::abs(w.integral);
            double b_centered, b_int, b_sup;
            if (cfg.base == 2) {
                const double core = std::pow(2.0, -j * (e.a_min() + 1) - e.mu() - e.v());
                b_centered = core;
                b_int = core;
                b_sup = 2.0 * core;
            } else {
                const double cbv = 1.0 + c_factor(cfg.base, e.v());
                const double core = pow_int(cfg.base, -e.mu() - j * e.a_min()) /
                                    std::pow(c.m, e.v() + j) * cbv;
                b_centered = core;
                b_int = core;
                b_sup = c.M * core;
            }
            for (auto [tag, coeff, bnd] :
                 {std::tuple{"sup_centered", sup_centered, b_centered},
                  std::tuple{"integral", iabs, b_int}, std::tuple{"sup", sup, b_sup}}) {
                BoundReport r = base_report(std::string("j=") + std::to_string(j) + ":" + tag);
                r.coeff_abs = coeff;
                r.bound = bnd;
                settle(r);
                out.push_back(std::move(r));
            }
            if (cfg.base == 2 && j % 2 == 1) {
                BoundReport r = base_report("j=" + std::to_string(j) + ":odd_zero");
                r.coeff_abs = iabs;
                r.exact_zero_claim = true;
                settle(r);
                r.tolerance = 1e-12;
                r.pass = r.coeff_abs <= r.tolerance;
                out.push_back(std::move(r));
            }
        }
    } else {
        throw std::invalid_argument("verify_sweep: unknown rule " + cfg.rule);
    }
    return out;
}

}  // namespace

std::vector<BoundReport> verify_sweep(const SweepConfig& cfg) {
    if (cfg.k_end <= cfg.k_begin) return {};

    // Shared per-family data, computed once.
    SweepShared sh;
    if (cfg.rule == "smooth" || cfg.rule == "sobolev" || cfg.rule == "sobolev_norm" ||
        cfg.rule == "periodic" || cfg.rule == "cinfty") {
        sh.f = parse_family(cfg.family);
        if (cfg.rule == "smooth") {
            for (int n = 0; n <= cfg.alpha; ++n)
                sh.lp_norms.push_back(lp_of_derivative(*sh.f, n, cfg.p));
        }
        if (cfg.rule == "sobolev" || cfg.rule == "periodic") {
            for (int i = 0; i <= cfg.alpha; ++i)
                sh.integrals.push_back(std::abs(integral_of_derivative(*sh.f, i)));
            sh.l1_falpha = l1_of_derivative(*sh.f, cfg.alpha);
            if (cfg.rule == "periodic") {
                for (int i = 0; i < cfg.alpha; ++i)
                    if (sh.integrals[static_cast<std::size_t>(i)] > 1e-10)
                        throw std::invalid_argument(
                            "periodic sweep: int f^(i) must vanish for i < alpha");
            }
        }
        if (cfg.rule == "sobolev_norm") sh.fnorm = f_norm_p_alpha(*sh.f, cfg.p, cfg.alpha);
        if (cfg.rule == "cinfty") {
            // family exp:lambda grows like lambda^n with D = (e^lambda - 1)/lambda
            if (cfg.family.rfind("exp:", 0) != 0)
                throw std::invalid_argument("cinfty sweep requires the exp family");
            const double lambda = std::stod(cfg.family.substr(4));
            sh.rate = lambda;
            sh.fnorm = (std::exp(lambda) - 1.0) / lambda;
        }
    }

    const std::uint64_t count = cfg.k_end - cfg.k_begin;
    std::vector<std::vector<BoundReport>> slots(count);
    const int workers = std::max(1, cfg.parallelism);
    auto work = [&](int wid) {
        for (std::uint64_t i = static_cast<std::uint64_t>(wid); i < count;
             i += static_cast<std::uint64_t>(workers)) {
            slots[i] = sweep_one_k(cfg, cfg.k_begin + i, sh);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int wLoop = 0; wLoop < workers; ++wLoop) threads.emplace_back(work, wLoop);
        for (auto& t : threads) t.join();
    }
    std::vector<BoundReport> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

}  // namespace walsh
