#ifndef EIPOSE_SOLVE_NULLSPACE_HPP
#define EIPOSE_SOLVE_NULLSPACE_HPP

#include <Eigen/Core>

#include <vector>

#include "eipose/elim/problems.hpp"
#include "eipose/solve/types.hpp"

namespace eipose {

/// Null-space parametrization of the linear (epipolar) constraints: X_L lies
/// in the span of orthonormal basis columns.
struct NullspaceParam {
    ProblemId id;
    Eigen::MatrixXd coefficients; // rows x |X_L|, one row per linear equation
    Eigen::MatrixXd basis;        // |X_L| x nullspace_dim, orthonormal columns
};

/// Builds the coefficient row of one correspondence (epipolar constraint,
/// lifted epipolar for EFK, or one of the two skew rows for Hf).
Eigen::VectorXd linear_row(ProblemId id, const Correspondence &c, int which = 0);

/// Assembles the linear system and extracts its null space. Throws
/// DegenerateInput when the coefficient matrix loses rank beyond the
/// expected null-space dimension (duplicate points, degenerate motion).
NullspaceParam nullspace_parametrize(ProblemId id, const std::vector<Correspondence> &corr,
                                     const SolveOptions &options = {});

} // namespace eipose

#endif
