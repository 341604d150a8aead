#ifndef EIPOSE_SOLVE_MINIMAL_HPP
#define EIPOSE_SOLVE_MINIMAL_HPP

#include <vector>

#include "eipose/solve/nullspace.hpp"
#include "eipose/solve/numpoly.hpp"
#include "eipose/solve/types.hpp"
#include "eipose/tmpl/solver_template.hpp"

namespace eipose {

/// Full online pipeline: null-space parametrization, template fill and G-J,
/// action-matrix eigendecomposition, back-substitution, and focal/distortion
/// extraction. Returns every real candidate passing the residual gates,
/// sorted deterministically; an empty list means no real solution (not an
/// error). Throws DegenerateInput for rank-deficient correspondence sets.
std::vector<PoseSolution> solve_minimal(ProblemId id, const std::vector<Correspondence> &corr,
                                        const SolverTemplate &tpl,
                                        const SolveOptions &options = {});

/// The numeric generators for a given chart (columns: basis vectors then the
/// affine part). Exposed for the cross-path checks and the bench sparsity
/// report.
std::vector<NumPoly> instantiate_problem(ProblemId id, const Eigen::MatrixXd &chart);

} // namespace eipose

#endif
