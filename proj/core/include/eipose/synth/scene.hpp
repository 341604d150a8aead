#ifndef EIPOSE_SYNTH_SCENE_HPP
#define EIPOSE_SYNTH_SCENE_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <vector>

#include "eipose/elim/problems.hpp"
#include "eipose/solve/types.hpp"

namespace eipose {

struct SynthConfig {
    double cube_half = 10.0;       // 3D points uniform in [-c, c]^3
    double focal_min = 0.5;
    double focal_max = 5.0;
    double lambda_min = -0.7;
    double lambda_max = 0.0;
    double camera_radius_min = 5.0;  // camera centers on a sphere shell
    double camera_radius_max = 15.0; // around the cube centre
    double axis_jitter_deg = 10.0;   // principal axis points at the centroid
    int point_count = 0;             // 0: the problem minimum
    int max_retries = 500;           // feasibility rejection cap
};

/// Ground truth of one synthetic instance. For two-view problems camera 1 is
/// the calibrated (left) camera; camera 2 carries the unknown focal length
/// and, for EFK, the distortion. Hf uses camera 2 only, observing z = 0.
struct SceneInstance {
    ProblemId id;
    uint64_t seed = 0;
    Eigen::Matrix3d rotation1, rotation2; // world-to-camera
    Eigen::Vector3d translation1, translation2;
    double focal_left = 1.0;
    double focal_right = 1.0;
    double lambda = 0.0;
    std::vector<Eigen::Vector3d> points;

    /// Ground-truth fundamental matrix (u^T F u' = 0 with left/right image
    /// points in image units), unit Frobenius norm.
    Eigen::Matrix3d fundamental() const;
    /// 3x4 one-sided radial distortion matrix [F | lambda*f3] (EFK).
    Eigen::Matrix<double, 3, 4> lifted_fundamental() const;
    /// Ground-truth plane-to-image homography (Hf), unit norm.
    Eigen::Matrix3d homography() const;
};

struct SceneSample {
    SceneInstance scene;
    std::vector<Correspondence> correspondences;
};

struct SceneGenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic in (id, config, seed). All points project in front of the
/// cameras; EF/EFK fix the left camera calibrated (f = 1); Hf scenes place
/// the points on z = 0.
SceneSample random_scene(ProblemId id, const SynthConfig &config, uint64_t seed);

/// Division-model undistortion lift [xd, yd, 1 + lambda*(xd^2 + yd^2)].
Eigen::Vector3d undistort(const Eigen::Vector2d &distorted, double lambda);

/// Inverse of undistort on the image domain (the branch continuous at
/// lambda = 0). Throws std::domain_error when no real branch exists.
Eigen::Vector2d distort(const Eigen::Vector2d &undistorted, double lambda);

/// I.i.d. Gaussian noise on the image coordinates; sigma in image units.
/// `perturb_left` is disabled for Hf, whose left entries are scene geometry.
std::vector<Correspondence> add_noise(const std::vector<Correspondence> &corr, double sigma,
                                      uint64_t seed, bool perturb_left = true);

} // namespace eipose

#endif
