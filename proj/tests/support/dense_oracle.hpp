#pragma once

#include "pzt/bcp.hpp"

#include <array>

namespace pzt::testing {

// Coefficient vector in a fixed order for the generic linear-system route.
std::array<double, 10> to_vector(const SolutionCoefficients& c);
SolutionCoefficients from_vector(const std::array<double, 10>& v);

// The ten boundary-condition values produced by given integration constants,
// each evaluated through the anchored profiles and the constitutive layer.
// Order matches boundary_rhs: [T(h), phi(h), traction1..3(h), u1..u3(-h),
// -q_n(-h), -D_n(-h) or phi(-h)].
std::array<double, 10> boundary_values(const ProblemSpec& spec, const ReducedParams& p,
                                       const SolutionCoefficients& c);

std::array<double, 10> boundary_rhs(const ProblemSpec& spec);

// Independent solver route: builds the dense 10x10 boundary system by
// probing boundary_values with unit coefficient vectors (the conditions are
// linear and homogeneous in the coefficients) and solves it by equilibrated
// partially pivoted elimination with one long-double refinement step.
SolutionCoefficients dense_solve(const ProblemSpec& spec);

} // namespace pzt::testing
