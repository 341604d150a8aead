#include "eipose/solve/extract.hpp"

#include <cmath>

namespace eipose {

double extract_focal_ef(const Eigen::Matrix3d &f, const SolveOptions &options) {
    // The published lemma states the ratio for the transposed orientation
    // (calibration on the left); our E = F*K convention swaps the index roles.
    const double f11 = f(0, 0), f12 = f(1, 0), f13 = f(2, 0);
    const double f21 = f(0, 1), f22 = f(1, 1), f23 = f(2, 1);
    const double f31 = f(0, 2), f32 = f(1, 2), f33 = f(2, 2);
    const double num = f23 * f31 * f31 + f23 * f32 * f32 - 2 * f21 * f31 * f33 -
                       2 * f22 * f32 * f33 - f23 * f33 * f33;
    const double den =
        2 * f11 * f13 * f21 + 2 * f12 * f13 * f22 -
        f23 * (f11 * f11 + f12 * f12 - f13 * f13 - f21 * f21 - f22 * f22 - f23 * f23);
    const double scale = std::pow(f.norm(), 3);
    if (std::abs(den) <= options.extraction_tol * scale)
        throw ExtractionSingular("focal extraction denominator vanishes (E+f)");
    return num / den;
}

double extract_focal_fef(const Eigen::Matrix3d &f, const SolveOptions &options) {
    const double f11 = f(0, 0), f12 = f(0, 1), f13 = f(0, 2);
    const double f21 = f(1, 0), f22 = f(1, 1), f23 = f(1, 2);
    const double f31 = f(2, 0), f32 = f(2, 1), f33 = f(2, 2);
    const double num = -f13 * f13 * f32 * f33 - f23 * f23 * f32 * f33 + f12 * f13 * f33 * f33 +
                       f22 * f23 * f33 * f33;
    const double den = f11 * f13 * f31 * f32 + f21 * f23 * f31 * f32 + f12 * f13 * f32 * f32 +
                       f22 * f23 * f32 * f32 - f11 * f12 * f31 * f33 - f21 * f22 * f31 * f33 -
                       f12 * f12 * f32 * f33 - f22 * f22 * f32 * f33;
    const double scale = std::pow(f.norm(), 4);
    if (std::abs(den) <= options.extraction_tol * scale)
        throw ExtractionSingular("focal extraction denominator vanishes (f+E+f)");
    return num / den;
}

double extract_distortion(const Eigen::Matrix<double, 3, 4> &fhat, const SolveOptions &options) {
    const Eigen::Vector3d third = fhat.col(2);
    const Eigen::Vector3d fourth = fhat.col(3);
    const double denom = third.squaredNorm();
    if (denom <= options.extraction_tol * fhat.norm() * fhat.norm())
        throw ExtractionSingular("third column vanishes; distortion undefined");
    return third.dot(fourth) / denom;
}

HomographyFocal extend_homography(const Eigen::Matrix<double, 9, 1> &h,
                                  const SolveOptions &options) {
    const double h1 = h(0), h2 = h(1), h4 = h(3), h5 = h(4), h7 = h(6), h8 = h(7);
    // w^2*(h1*h2 + h4*h5) + h7*h8 = 0
    // w^2*(h1^2 + h4^2 - h2^2 - h5^2) + h7^2 - h8^2 = 0
    const double den1 = h1 * h2 + h4 * h5;
    const double den2 = h1 * h1 + h4 * h4 - h2 * h2 - h5 * h5;
    const double scale = h.squaredNorm();
    const bool ok1 = std::abs(den1) > options.extraction_tol * scale;
    const bool ok2 = std::abs(den2) > options.extraction_tol * scale;
    if (!ok1 && std::abs(h7 * h8) > 1e-8 * scale)
        return {0.0, false}; // w^2*0 + h7*h8 = 0 contradicted
    if (!ok2 && std::abs(h7 * h7 - h8 * h8) > 1e-8 * scale)
        return {0.0, false};
    if (!ok1 && !ok2)
        throw ExtractionSingular("both focal relations degenerate for this homography");

    double w2;
    if (ok1 && ok2) {
        const double a = -h7 * h8 / den1;
        const double b = (h8 * h8 - h7 * h7) / den2;
        // the quartic constraint makes them agree; pick the better conditioned
        w2 = std::abs(den1) >= std::abs(den2) ? a : b;
        if (std::abs(a - b) > 1e-6 * (1.0 + std::abs(w2)))
            return {0.0, false}; // inconsistent relations: not a valid candidate
    } else {
        w2 = ok1 ? -h7 * h8 / den1 : (h8 * h8 - h7 * h7) / den2;
    }
    if (!(w2 > 0))
        return {0.0, false};
    return {std::sqrt(w2), true};
}

} // namespace eipose
