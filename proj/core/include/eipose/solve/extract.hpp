#ifndef EIPOSE_SOLVE_EXTRACT_HPP
#define EIPOSE_SOLVE_EXTRACT_HPP

#include <Eigen/Core>

#include "eipose/solve/types.hpp"

namespace eipose {

/// f^2 from a fundamental matrix of the E = F*K family (one calibrated
/// camera), by the closed-form ratio of two cubics in the entries. Scale
/// invariant. Throws ExtractionSingular on a vanishing denominator; a
/// negative return signals an invalid candidate (caller discards).
double extract_focal_ef(const Eigen::Matrix3d &f, const SolveOptions &options = {});

/// f^2 for the shared-focal family E = K*F*K (ratio of two quartics).
double extract_focal_fef(const Eigen::Matrix3d &f, const SolveOptions &options = {});

/// Distortion parameter from the 3x4 one-sided radial distortion matrix:
/// least-squares ratio of the fourth column against the third.
double extract_distortion(const Eigen::Matrix<double, 3, 4> &fhat,
                          const SolveOptions &options = {});

struct HomographyFocal {
    double w = 0.0; // 1/f
    bool feasible = false;
};

/// Back-substitutes w = 1/f into the two rotation-column constraints of a
/// planar homography (h is the row-major 9-vector satisfying the quartic).
/// Infeasible when both relations force w^2 <= 0; throws ExtractionSingular
/// when both denominators vanish.
HomographyFocal extend_homography(const Eigen::Matrix<double, 9, 1> &h,
                                  const SolveOptions &options = {});

} // namespace eipose

#endif
