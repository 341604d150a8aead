#ifndef EIPOSE_SOLVE_NUMPOLY_HPP
#define EIPOSE_SOLVE_NUMPOLY_HPP

#include <Eigen/Core>

#include <vector>

#include "eipose/poly/poly.hpp"

namespace eipose {

/// Polynomial with double coefficients over a small ambient; the online
/// counterpart of Poly for instantiated generators.
struct NumPoly {
    AmbientPtr ambient;
    std::vector<std::pair<Monomial, double>> terms;

    int degree() const;
    double coeff_norm() const; // sum of |coefficients|
    double evaluate(const Eigen::VectorXd &point) const;
    /// |p(point)| / (coeff_norm * max(1,|point|_inf)^deg); scale-free.
    double normalized_residual(const Eigen::VectorXd &point) const;
    /// Partial derivative with respect to variable `var`.
    NumPoly derivative(int var) const;
};

NumPoly to_numpoly(const Poly &p);

/// Substitutes the affine chart X_L = N * [y; 1] (columns of `chart` are the
/// null basis vectors, the affine part last) into exact generators, expanding
/// into numeric polynomials over `y_ambient`.
std::vector<NumPoly> instantiate_numeric(const std::vector<Poly> &gens,
                                         const Eigen::MatrixXd &chart,
                                         const AmbientPtr &y_ambient);

} // namespace eipose

#endif
