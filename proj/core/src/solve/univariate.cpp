#include "eipose/solve/univariate.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace eipose {

std::vector<std::complex<double>> poly_roots(const std::vector<double> &coeffs, double trim_tol) {
    double maxc = 0;
    for (double c : coeffs)
        maxc = std::max(maxc, std::abs(c));
    if (maxc == 0)
        return {};
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[deg]) <= trim_tol * maxc)
        --deg;
    if (deg <= 0)
        return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i)
        companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i)
        companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> eig(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(deg);
    for (int i = 0; i < deg; ++i)
        roots[i] = eig.eigenvalues()[i];
    return roots;
}

std::vector<double> real_roots(const std::vector<double> &coeffs, double imag_tol) {
    std::vector<double> out;
    for (const auto &z : poly_roots(coeffs))
        if (std::abs(z.imag()) <= imag_tol * (1.0 + std::abs(z.real())))
            out.push_back(z.real());
    return out;
}

} // namespace eipose
