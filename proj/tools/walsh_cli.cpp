// Command-line surface for b-adic Walsh analysis: expansions, Walsh values,
// weight functions, coefficients and bound-verification sweeps.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "walsh/badic.hpp"
#include "walsh/bernoulli.hpp"
#include "walsh/bounds.hpp"
#include "walsh/coefficients.hpp"
#include "walsh/w_functions.hpp"
#include "walsh/walsh_system.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string num17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double env_tol(const char* name, double fallback) {
    if (const char* s = std::getenv(name)) return std::atof(s);
    return fallback;
}

double parse_p(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    return std::stod(s);
}

struct VerifySummary {
    bool pass = true;
    double max_ratio = 0.0;
    std::size_t count = 0;
    std::size_t failures = 0;
};

VerifySummary summarize(std::vector<walsh::BoundReport>& reports) {
    // Env overrides for the default tolerances (WALSH_RATIO_TOL, WALSH_ZERO_TOL).
    const double ratio_tol = env_tol("WALSH_RATIO_TOL", walsh::kRatioTolerance);
    const double zero_tol = env_tol("WALSH_ZERO_TOL", walsh::kExactZeroTolerance);
    VerifySummary s;
    for (auto& r : reports) {
        if (r.exact_zero_claim) {
            r.tolerance = std::min(r.tolerance, zero_tol);
            r.pass = r.coeff_abs <= r.tolerance;
        } else {
            r.tolerance = ratio_tol;
            r.pass = r.ratio <= 1.0 + ratio_tol;
        }
        s.max_ratio = std::max(s.max_ratio, r.ratio);
        ++s.count;
        if (!r.pass) {
            s.pass = false;
            ++s.failures;
        }
    }
    return s;
}

void write_reports_csv(std::ostream& os, const std::vector<walsh::BoundReport>& reports) {
    os << "b,k,alpha,rule,note,coeff_abs,bound,ratio,exact_zero,pass\n";
    for (const auto& r : reports) {
        os << r.base << ',' << r.ks.front() << ',' << r.alpha << ',' << r.rule << ',' << r.note
           << ',' << num17(r.coeff_abs) << ',' << num17(r.bound) << ',' << num17(r.ratio) << ','
           << (r.exact_zero_claim ? 1 : 0) << ',' << (r.pass ? 1 : 0) << '\n';
    }
}

json report_json(const walsh::BoundReport& r) {
    json j;
    j["b"] = r.base;
    j["k"] = r.ks.front();
    j["alpha"] = r.alpha;
    j["rule"] = r.rule;
    j["note"] = r.note;
    j["coeff_abs"] = num17(r.coeff_abs);
    j["bound"] = num17(r.bound);
    j["ratio"] = num17(r.ratio);
    j["exact_zero"] = r.exact_zero_claim;
    j["pass"] = r.pass;
    return j;
}

void write_out(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"b-adic Walsh function and coefficient toolkit"};
    app.require_subcommand(1);

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "b-adic digit expansion of k");
    int ex_b = 2;
    std::uint64_t ex_k = 0;
    cmd_expand->add_option("--b", ex_b, "base")->required();
    cmd_expand->add_option("--k", ex_k, "index")->required();

    // wal
    auto* cmd_wal = app.add_subcommand("wal", "evaluate wal_k(x)");
    int w_b = 2;
    std::uint64_t w_k = 0;
    double w_x = 0.0;
    cmd_wal->add_option("--b", w_b)->required();
    cmd_wal->add_option("--k", w_k)->required();
    cmd_wal->add_option("--x", w_x)->required();

    // wfun
    auto* cmd_wfun = app.add_subcommand("wfun", "weight function W^(j)_k and its integral");
    int wf_b = 2, wf_j = 0;
    std::uint64_t wf_k = 0;
    std::optional<double> wf_x;
    cmd_wfun->add_option("--b", wf_b)->required();
    cmd_wfun->add_option("--k", wf_k)->required();
    cmd_wfun->add_option("--j", wf_j);
    cmd_wfun->add_option("--x", wf_x, "also evaluate at x");

    // coeff
    auto* cmd_coeff = app.add_subcommand("coeff", "Walsh coefficient of a family function");
    int c_b = 2, c_n = -1, c_r = -1, c_alpha = -1, c_nodes = walsh::kDefaultNodes;
    std::uint64_t c_k = 0;
    std::string c_f, c_method = "quadrature";
    cmd_coeff->add_option("--b", c_b)->required();
    cmd_coeff->add_option("--k", c_k)->required();
    cmd_coeff->add_option("--f", c_f, "family: bernoulli:r | exp:lambda | sin:freq,phase | poly:c0,c1,...")
        ->required();
    cmd_coeff->add_option("--method", c_method, "quadrature | formula | higher | sobolev");
    cmd_coeff->add_option("--n", c_n, "derivative order for --method formula");
    cmd_coeff->add_option("--r", c_r, "extra levels for --method higher");
    cmd_coeff->add_option("--alpha", c_alpha, "smoothness for --method sobolev");
    cmd_coeff->add_option("--nodes", c_nodes, "quadrature nodes per cell");

    // bernoulli
    auto* cmd_ber = app.add_subcommand("bernoulli", "exact Walsh coefficient of b_r");
    int bb = 2, br = 1;
    std::uint64_t bk = 1;
    cmd_ber->add_option("--b", bb)->required();
    cmd_ber->add_option("--k", bk)->required();
    cmd_ber->add_option("--r", br)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a bound-verification sweep");
    walsh::SweepConfig cfg;
    std::string v_p = "1", v_out, v_format = "csv";
    std::uint64_t v_kmax = 0;
    int v_rmax = -1;
    cmd_verify->add_option("--theorem", cfg.rule,
                           "smooth | bernoulli | sobolev | sobolev_norm | periodic | cinfty | wextra")
        ->required();
    cmd_verify->add_option("--b", cfg.base)->required();
    cmd_verify->add_option("--kmin", cfg.k_begin);
    cmd_verify->add_option("--kmax", v_kmax, "sweep k < kmax")->required();
    cmd_verify->add_option("--alpha", cfg.alpha);
    cmd_verify->add_option("--rmax", v_rmax, "max polynomial degree (bernoulli rule)");
    cmd_verify->add_option("--p", v_p, "norm exponent, or inf");
    cmd_verify->add_option("--f", cfg.family, "function family spec");
    cmd_verify->add_option("--nodes", cfg.nodes_per_cell);
    cmd_verify->add_option("--jobs", cfg.parallelism, "sweep parallelism degree");
    cmd_verify->add_option("--out", v_out, "write per-record output to this file");
    cmd_verify->add_option("--format", v_format, "csv | json");

    // decay-table
    auto* cmd_decay = app.add_subcommand("decay-table", "per-k decay table for a family and rule");
    int d_b = 2, d_alpha = 1, d_nodes = walsh::kDefaultNodes;
    std::uint64_t d_kmax = 0;
    std::string d_f, d_rule = "smooth", d_p = "1", d_out;
    cmd_decay->add_option("--b", d_b)->required();
    cmd_decay->add_option("--kmax", d_kmax)->required();
    cmd_decay->add_option("--alpha", d_alpha);
    cmd_decay->add_option("--f", d_f)->required();
    cmd_decay->add_option("--theorem", d_rule, "smooth | sobolev | periodic");
    cmd_decay->add_option("--p", d_p);
    cmd_decay->add_option("--nodes", d_nodes);
    cmd_decay->add_option("--out", d_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_expand) {
            const walsh::KExpansion e = walsh::KExpansion::expand(ex_b, ex_k);
            json j;
            j["b"] = ex_b;
            j["k"] = ex_k;
            j["v"] = e.v();
            j["digits"] = json::array();
            for (const auto& d : e.digits()) j["digits"].push_back({d.kappa, d.a});
            j["mu"] = e.mu();
            std::cout << j.dump() << '\n';
        } else if (*cmd_wal) {
            const walsh::cplx val = walsh::wal_eval(w_b, w_k, w_x);
            std::cout << num17(val.real()) << ' ' << num17(val.imag()) << '\n';
        } else if (*cmd_wfun) {
            const walsh::WFunction w = walsh::build_W_extra(wf_b, wf_k, wf_j);
            json j;
            j["b"] = wf_b;
            j["k"] = wf_k;
            j["j"] = wf_j;
            j["integral_re"] = num17(w.integral.real());
            j["integral_im"] = num17(w.integral.imag());
            if (wf_x) {
                const walsh::cplx val = w.poly.eval(*wf_x);
                j["value_re"] = num17(val.real());
                j["value_im"] = num17(val.imag());
            }
            std::cout << j.dump() << '\n';
        } else if (*cmd_coeff) {
            const walsh::SmoothFunction f = walsh::parse_family(c_f);
            walsh::CoefficientResult res;
            if (c_method == "quadrature")
                res = walsh::coeff_quadrature(f, c_b, c_k, c_nodes);
            else if (c_method == "formula")
                res = walsh::coeff_formula(f, c_b, c_k, c_n < 0 ? 0 : c_n, c_nodes);
            else if (c_method == "higher")
                res = walsh::coeff_higher_order(f, c_b, c_k, c_r < 0 ? 0 : c_r, c_nodes);
            else if (c_method == "sobolev")
                res = walsh::coeff_sobolev(f, c_b, c_k, c_alpha < 1 ? 1 : c_alpha, c_nodes);
            else
                throw CLI::ValidationError("--method", "unknown method " + c_method);
            std::cout << num17(res.value.real()) << ' ' << num17(res.value.imag()) << '\n';
        } else if (*cmd_ber) {
            const walsh::cplx val = walsh::walsh_coeff_bernoulli(bb, bk, br);
            std::cout << num17(val.real()) << ' ' << num17(val.imag()) << '\n';
        } else if (*cmd_verify) {
            cfg.k_end = v_kmax;
            cfg.p = parse_p(v_p);
            if (cfg.rule == "bernoulli" && v_rmax > 0) cfg.alpha = v_rmax;
            if (cfg.k_begin < 1) cfg.k_begin = 1;
            std::vector<walsh::BoundReport> reports = walsh::verify_sweep(cfg);
            const VerifySummary s = summarize(reports);
            if (!v_out.empty()) {
                if (v_format == "csv") {
                    std::ostringstream os;
                    write_reports_csv(os, reports);
                    write_out(v_out, os.str());
                } else if (v_format == "json") {
                    json arr = json::array();
                    for (const auto& r : reports) arr.push_back(report_json(r));
                    write_out(v_out, arr.dump(2) + "\n");
                } else {
                    throw CLI::ValidationError("--format", "unknown format " + v_format);
                }
            }
            json summary;
            summary["rule"] = cfg.rule;
            summary["b"] = cfg.base;
            summary["count"] = s.count;
            summary["failures"] = s.failures;
            summary["max_ratio"] = num17(s.max_ratio);
            summary["pass"] = s.pass;
            std::cout << summary.dump() << '\n';
            return s.pass ? 0 : 1;
        } else if (*cmd_decay) {
            const walsh::SmoothFunction f = walsh::parse_family(d_f);
            const double p = parse_p(d_p);
            std::vector<double> lp_norms, integrals;
            double l1_falpha = 0.0;
            if (d_rule == "smooth") {
                for (int n = 0; n <= d_alpha; ++n)
                    lp_norms.push_back(walsh::lp_of_derivative(f, n, p));
            } else if (d_rule == "sobolev" || d_rule == "periodic") {
                for (int i = 0; i <= d_alpha; ++i)
                    integrals.push_back(std::abs(walsh::integral_of_derivative(f, i)));
                l1_falpha = walsh::l1_of_derivative(f, d_alpha);
            } else {
                throw CLI::ValidationError("--theorem", "unknown rule " + d_rule);
            }
            std::ostringstream os;
            os << "b,k,v,mu,mu_alpha,mu_per,coeff_re,coeff_im,abs,bound,ratio,theorem\n";
            bool all_pass = true;
            for (std::uint64_t k = 0; k < d_kmax; ++k) {
                const walsh::KExpansion e = walsh::KExpansion::expand(d_b, k);
                const walsh::cplx c = walsh::coeff_quadrature(f, d_b, k, d_nodes).value;
                double bound;
                if (d_rule == "smooth") {
                    const int n = std::min(d_alpha, e.v());
                    bound = walsh::bound_smooth(d_b, k, d_alpha,
                                                lp_norms[static_cast<std::size_t>(n)], p);
                } else if (k == 0) {
                    bound = std::numeric_limits<double>::quiet_NaN();
                } else if (d_rule == "sobolev") {
                    bound = walsh::bound_sobolev(d_b, k, d_alpha, integrals, l1_falpha);
                } else {
                    bound = walsh::bound_periodic(d_b, k, d_alpha, l1_falpha);
                }
                const double ratio = std::abs(c) / bound;
                if (!(ratio <= 1.0 + walsh::kRatioTolerance) && !std::isnan(bound))
                    all_pass = false;
                os << d_b << ',' << k << ',' << e.v() << ',' << e.mu() << ','
                   << e.mu_alpha(d_alpha) << ',' << e.mu_per(d_alpha) << ','
                   << num17(c.real()) << ',' << num17(c.imag()) << ',' << num17(std::abs(c))
                   << ',' << num17(bound) << ',' << num17(ratio) << ',' << d_rule << '\n';
            }
            if (d_out.empty())
                std::cout << os.str();
            else
                write_out(d_out, os.str());
            return all_pass ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
