#ifndef EIPOSE_SOLVE_UNIVARIATE_HPP
#define EIPOSE_SOLVE_UNIVARIATE_HPP

#include <complex>
#include <vector>

namespace eipose {

/// All complex roots of c[0] + c[1]*x + ... + c[n]*x^n via the companion
/// matrix. Leading coefficients below `trim_tol` times the largest |c| are
/// trimmed first (degree drop).
std::vector<std::complex<double>> poly_roots(const std::vector<double> &coeffs,
                                             double trim_tol = 1e-12);

/// Real roots under the filter |imag| <= imag_tol * (1 + |real|).
std::vector<double> real_roots(const std::vector<double> &coeffs, double imag_tol = 1e-6);

} // namespace eipose

#endif
