#ifndef EIPOSE_SOLVE_RESULTANT_HPP
#define EIPOSE_SOLVE_RESULTANT_HPP

#include <vector>

#include "eipose/solve/numpoly.hpp"
#include "eipose/solve/types.hpp"

namespace eipose {

/// Sylvester resultant of two bivariate polynomials with respect to the
/// first variable, as a univariate coefficient vector in the second
/// (ascending). Computed by evaluation at scaled roots of unity and inverse
/// DFT of the 8x8 (in general (dx_p+dx_q)^2) determinants.
std::vector<double> sylvester_resultant(const NumPoly &p, const NumPoly &q);

/// Independent root path for the f+E+f system: eliminate x by the resultant,
/// find real y roots through the companion matrix, recover x per root from
/// the cubic, and keep pairs whose residuals against both inputs stay below
/// options.pair_residual_tol. Degree drops trigger a random change of
/// variables; after 3 retries the instance is reported degenerate.
std::vector<std::pair<double, double>> sylvester_fef(const NumPoly &cubic, const NumPoly &quintic,
                                                     const SolveOptions &options = {});

} // namespace eipose

#endif
