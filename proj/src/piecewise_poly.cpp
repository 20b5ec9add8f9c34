#include "walsh/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "walsh/quadrature.hpp"

namespace walsh {

namespace {

cplx horner(const std::vector<cplx>& c, double t) {
    cplx val = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) val = val * t + *it;
    return val;
}

// p(t + s) expressed in powers of t.
std::vector<cplx> shift_poly(const std::vector<cplx>& c, double s) {
    const std::size_t n = c.size();
    std::vector<cplx> out(n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
        // binomial expansion of c[d] (t + s)^d
        double binom = 1.0;
        double spow = 1.0;
        for (std::size_t j = 0; j <= d; ++j) {
            out[d - j] += c[d] * binom * spow;
            binom = binom * static_cast<double>(d - j) / static_cast<double>(j + 1);
            spow *= s;
        }
    }
    return out;
}

double abs_at(const std::vector<cplx>& c, double t) { return std::abs(horner(c, t)); }

// Golden-section maximization of |p| on [lo, hi].
double golden_max(const std::vector<cplx>& c, double lo, double hi) {
    constexpr double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = abs_at(c, x1);
    double f2 = abs_at(c, x2);
    for (int iter = 0; iter < 80 && (b - a) > 1e-15 * std::max(1.0, hi); ++iter) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = abs_at(c, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = abs_at(c, x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

std::int64_t grid_cells(int base, int resolution) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    if (resolution < 0) throw std::invalid_argument("resolution must be >= 0");
    std::int64_t n = 1;
    for (int i = 0; i < resolution; ++i) {
        n *= base;
        if (n > PiecewisePoly::kMaxCells)
            throw std::invalid_argument("grid resolution exceeds the supported cell budget");
    }
    return n;
}

PiecewisePoly::PiecewisePoly(int base, int resolution, std::vector<std::vector<cplx>> cells)
    : base_(base), resolution_(resolution), cells_(std::move(cells)) {
    const std::int64_t expected = grid_cells(base, resolution);
    if (static_cast<std::int64_t>(cells_.size()) != expected)
        throw std::invalid_argument("cell count must equal base^resolution");
    for (auto& c : cells_) {
        if (c.empty()) c.push_back(0.0);
        if (static_cast<int>(c.size()) - 1 > kMaxDegree)
            throw std::invalid_argument("polynomial degree exceeds the configured maximum");
    }
    width_ = std::pow(static_cast<double>(base), -resolution);
}

PiecewisePoly PiecewisePoly::constant(int base, cplx value) {
    return PiecewisePoly(base, 0, {{value}});
}

PiecewisePoly PiecewisePoly::step(int base, int resolution, std::vector<cplx> values) {
    std::vector<std::vector<cplx>> cells;
    cells.reserve(values.size());
    for (cplx v : values) cells.push_back({v});
    return PiecewisePoly(base, resolution, std::move(cells));
}

int PiecewisePoly::max_degree() const {
    int d = 0;
    for (const auto& c : cells_) d = std::max(d, static_cast<int>(c.size()) - 1);
    return d;
}

cplx PiecewisePoly::eval(double x) const {
    if (x < 0.0 || x > 1.0) throw std::domain_error("eval requires x in [0,1]");
    std::int64_t m = static_cast<std::int64_t>(std::floor(x / width_));
    m = std::min(m, cell_count() - 1);
    const double t = x - static_cast<double>(m) * width_;
    return horner(cells_[static_cast<std::size_t>(m)], t);
}

PiecewisePoly PiecewisePoly::antiderivative() const {
    std::vector<std::vector<cplx>> out(cells_.size());
    cplx acc = 0.0;  // value at the left edge of the current cell
    for (std::size_t m = 0; m < cells_.size(); ++m) {
        const auto& c = cells_[m];
        std::vector<cplx> F(c.size() + 1, 0.0);
        F[0] = acc;
        for (std::size_t i = 0; i < c.size(); ++i) F[i + 1] = c[i] / static_cast<double>(i + 1);
        acc = horner(F, width_);
        out[m] = std::move(F);
    }
    return PiecewisePoly(base_, resolution_, std::move(out));
}

PiecewisePoly PiecewisePoly::derivative() const {
    std::vector<std::vector<cplx>> out(cells_.size());
    for (std::size_t m = 0; m < cells_.size(); ++m) {
        const auto& c = cells_[m];
        std::vector<cplx> d(std::max<std::size_t>(c.size() - 1, 1), 0.0);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
        out[m] = std::move(d);
    }
    return PiecewisePoly(base_, resolution_, std::move(out));
}

cplx PiecewisePoly::definite_integral() const {
    cplx total = 0.0;
    for (const auto& c : cells_) {
        double tpow = width_;
        for (std::size_t i = 0; i < c.size(); ++i) {
            total += c[i] * tpow / static_cast<double>(i + 1);
            tpow *= width_;
        }
    }
    return total;
}

PiecewisePoly PiecewisePoly::refined(int new_resolution) const {
    if (new_resolution < resolution_)
        throw std::invalid_argument("refined: resolution can only increase");
    if (new_resolution == resolution_) return *this;
    std::int64_t split = 1;
    for (int i = resolution_; i < new_resolution; ++i) split *= base_;
    const double sub_width = width_ / static_cast<double>(split);
    std::vector<std::vector<cplx>> out;
    out.reserve(cells_.size() * static_cast<std::size_t>(split));
    for (const auto& c : cells_)
        for (std::int64_t i = 0; i < split; ++i)
            out.push_back(shift_poly(c, static_cast<double>(i) * sub_width));
    return PiecewisePoly(base_, new_resolution, std::move(out));
}

PiecewisePoly PiecewisePoly::scaled(cplx s) const {
    std::vector<std::vector<cplx>> out = cells_;
    for (auto& c : out)
        for (auto& v : c) v *= s;
    return PiecewisePoly(base_, resolution_, std::move(out));
}

PiecewisePoly PiecewisePoly::plus(const PiecewisePoly& other) const {
    if (base_ != other.base_) throw std::invalid_argument("plus: base mismatch");
    const int g = std::max(resolution_, other.resolution_);
    const PiecewisePoly a = refined(g);
    const PiecewisePoly b = other.refined(g);
    std::vector<std::vector<cplx>> out(a.cells_.size());
    for (std::size_t m = 0; m < a.cells_.size(); ++m) {
        const auto& ca = a.cells_[m];
        const auto& cb = b.cells_[m];
        std::vector<cplx> c(std::max(ca.size(), cb.size()), 0.0);
        for (std::size_t i = 0; i < ca.size(); ++i) c[i] += ca[i];
        for (std::size_t i = 0; i < cb.size(); ++i) c[i] += cb[i];
        out[m] = std::move(c);
    }
    return PiecewisePoly(base_, g, std::move(out));
}

PiecewisePoly PiecewisePoly::plus_const(cplx c) const {
    std::vector<std::vector<cplx>> out = cells_;
    for (auto& cell : out) cell[0] += c;
    return PiecewisePoly(base_, resolution_, std::move(out));
}

PiecewisePoly PiecewisePoly::times_step(const PiecewisePoly& step) const {
    if (base_ != step.base_) throw std::invalid_argument("times_step: base mismatch");
    if (step.max_degree() != 0) throw std::invalid_argument("times_step: factor must be degree 0");
    const int g = std::max(resolution_, step.resolution_);
    const PiecewisePoly a = refined(g);
    const PiecewisePoly b = step.refined(g);
    std::vector<std::vector<cplx>> out(a.cells_.size());
    for (std::size_t m = 0; m < a.cells_.size(); ++m) {
        out[m] = a.cells_[m];
        const cplx s = b.cells_[m][0];
        for (auto& v : out[m]) v *= s;
    }
    return PiecewisePoly(base_, g, std::move(out));
}

double PiecewisePoly::norm(double q) const {
    if (q < 1.0) throw std::invalid_argument("norm requires q >= 1");
    if (std::isinf(q)) {
        double best = 0.0;
        for (const auto& c : cells_) {
            if (c.size() == 1) {
                best = std::max(best, std::abs(c[0]));
                continue;
            }
            // 65 Chebyshev-spaced samples, then local golden-section refinement.
            constexpr int kSamples = 65;
            double max_t = 0.0;
            double max_v = -1.0;
            for (int i = 0; i < kSamples; ++i) {
                const double u = 0.5 * (1.0 - std::cos(std::numbers::pi * i / (kSamples - 1)));
                const double t = u * width_;
                const double v = abs_at(c, t);
                if (v > max_v) {
                    max_v = v;
                    max_t = t;
                }
            }
            const double pad = width_ / (kSamples - 1) * 2.0;
            const double lo = std::max(0.0, max_t - pad);
            const double hi = std::min(width_, max_t + pad);
            best = std::max(best, golden_max(c, lo, hi));
        }
        return best;
    }
    // L^q by per-cell Gauss quadrature of |p|^q; |.| is only smooth away from
    // zeros, so split each cell at the interior zeros first. Zeros are found
    // as bisected sign changes of the dominant real or imaginary part.
    const GaussRule& rule = gauss_legendre(32);
    double scale = 0.0;
    for (const auto& c : cells_)
        for (const auto& v : c) scale = std::max(scale, std::abs(v));
    double total = 0.0;
    for (const auto& c : cells_) {
        std::vector<double> cuts{0.0};
        if (c.size() > 1) {
            double re_max = 0.0, im_max = 0.0;
            for (const auto& v : c) {
                re_max = std::max(re_max, std::abs(v.real()));
                im_max = std::max(im_max, std::abs(v.imag()));
            }
            const bool use_re = re_max >= im_max;
            auto part = [&](double t) {
                cplx s = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * t + *it;
                return use_re ? s.real() : s.imag();
            };
            constexpr int kProbe = 129;
            double prev_t = 0.0;
            double prev_v = part(0.0);
            for (int i = 1; i < kProbe; ++i) {
                const double t = width_ * i / (kProbe - 1);
                const double v = part(t);
                if ((prev_v < 0.0) != (v < 0.0)) {
                    double lo = prev_t, hi = t;
                    for (int it = 0; it < 60; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        if ((part(lo) < 0.0) != (part(mid) < 0.0))
                            hi = mid;
                        else
                            lo = mid;
                    }
                    const double z = 0.5 * (lo + hi);
                    if (z > 1e-15 && z < width_ - 1e-15) cuts.push_back(z);
                }
                prev_t = t;
                prev_v = v;
            }
        }
        cuts.push_back(width_);
        auto piece = [&](double a, double b) {
            double s = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double t = a + (b - a) * rule.nodes[i];
                s += rule.weights[i] * std::pow(abs_at(c, t), q);
            }
            return s * (b - a);
        };
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += piece(cuts[i], cuts[i + 1]);
    }
    return std::pow(total, 1.0 / q);
}

}  // namespace walsh
