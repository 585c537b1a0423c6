#pragma once

#include "pzt/problem.hpp"

#include <vector>

namespace pzt {

// Uniform through-thickness grid: n intervals, n+1 nodes from -h to +h.
struct Grid {
    int n = 0;
    double h = 0;

    double spacing() const { return 2.0 * h / n; }

    // Node positions by interpolation so both faces come out exact.
    double node(int i) const
    {
        const double w = static_cast<double>(i) / static_cast<double>(n);
        return (1.0 - w) * -h + w * h;
    }
};

// Nodal fields of the finite-difference solve plus the scaled residual of the
// assembled linear system (a solver-quality figure, not a discretization
// error).
struct DiscreteSolution {
    ProblemSpec spec;
    Grid grid;
    std::vector<double> u1, u2, u3, T, phi;
    double residual_norm = 0;
};

// Second-order finite-difference solve of the coupled one-dimensional
// boundary-value problem, discretizing the field equations directly: central
// stencils in the interior, three-point one-sided first derivatives in the
// flux/traction/charge boundary rows, five interleaved unknowns per node,
// banded LU with partial pivoting (after Ruiz equilibration, with one
// iterative-refinement step).  Deliberately independent of the closed-form
// path: no integration constants, no exponentials, only the local equations.
// Handles the degenerate-coupling case (a = 0) that the closed-form solver
// refuses.  Errors: GridTooCoarse if n < 8, SingularSystem on a zero pivot,
// plus material/problem validation errors.
DiscreteSolution solve_fd(const ProblemSpec& spec, const Grid& grid);

} // namespace pzt
