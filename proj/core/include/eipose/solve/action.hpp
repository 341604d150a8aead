#ifndef EIPOSE_SOLVE_ACTION_HPP
#define EIPOSE_SOLVE_ACTION_HPP

#include <Eigen/Core>

#include <vector>

#include "eipose/solve/numpoly.hpp"
#include "eipose/solve/types.hpp"
#include "eipose/tmpl/solver_template.hpp"

namespace eipose {

/// Fills the template rows with the coefficients of the instantiated
/// generators (row r holds multiplier_r * gen; columns per the template).
Eigen::MatrixXd fill_template(const SolverTemplate &tpl, const std::vector<NumPoly> &gens);

/// G-J eliminates the filled matrix, reads off the action matrix for the
/// template's action variable and returns the real solution vectors
/// recovered from the eigenvectors (values of the substitution unknowns).
/// Throws ConditioningError when a pivot falls below the relative threshold.
std::vector<Eigen::VectorXd> action_eigensolve(const Eigen::MatrixXd &filled,
                                               const SolverTemplate &tpl,
                                               const SolveOptions &options = {});

} // namespace eipose

#endif
