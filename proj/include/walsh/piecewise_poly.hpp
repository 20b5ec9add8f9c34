#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "walsh/badic.hpp"

namespace walsh {

/// Complex piecewise polynomial on [0,1] over the uniform b-adic grid
/// of b^G cells [m b^-G, (m+1) b^-G). Each cell stores coefficients in the
/// local coordinate t = x - m b^-G, lowest degree first.
class PiecewisePoly {
public:
    static constexpr int kMaxDegree = 64;
    static constexpr std::int64_t kMaxCells = 20000;

    PiecewisePoly(int base, int resolution, std::vector<std::vector<cplx>> cells);

    static PiecewisePoly constant(int base, cplx value);
    /// Degree-0 poly from one value per cell.
    static PiecewisePoly step(int base, int resolution, std::vector<cplx> values);

    int base() const { return base_; }
    int resolution() const { return resolution_; }
    std::int64_t cell_count() const { return static_cast<std::int64_t>(cells_.size()); }
    double cell_width() const { return width_; }
    const std::vector<cplx>& cell(std::int64_t m) const { return cells_[static_cast<std::size_t>(m)]; }
    int max_degree() const;

    /// Evaluate at x in [0,1]. x = 1 uses the last cell's polynomial at its
    /// right endpoint.
    cplx eval(double x) const;

    /// F with F(0) = 0, F' = this on each open cell, continuous at breakpoints.
    PiecewisePoly antiderivative() const;
    /// Cellwise derivative (inverse of antiderivative up to the constants).
    PiecewisePoly derivative() const;

    cplx definite_integral() const;

    /// Same function on the finer grid of resolution new_resolution >= G.
    PiecewisePoly refined(int new_resolution) const;

    PiecewisePoly scaled(cplx s) const;
    PiecewisePoly plus(const PiecewisePoly& other) const;
    PiecewisePoly plus_const(cplx c) const;
    /// Multiply by a degree-0 poly; grids are unified to the finer one.
    PiecewisePoly times_step(const PiecewisePoly& step) const;

    /// L^q norm of |p| on [0,1]. q in [1, inf); pass infinity() for L^inf.
    /// L^inf is estimated by dense Chebyshev sampling plus golden-section
    /// refinement per cell (expected error < 1e-10 for moderate degree).
    double norm(double q) const;

private:
    int base_;
    int resolution_;
    double width_;
    std::vector<std::vector<cplx>> cells_;
};

/// Number of cells b^G, checked against kMaxCells.
std::int64_t grid_cells(int base, int resolution);

}  // namespace walsh
