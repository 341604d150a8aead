#ifndef EIPOSE_SOLVE_TYPES_HPP
#define EIPOSE_SOLVE_TYPES_HPP

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <vector>

namespace eipose {

/// One point correspondence. The left point comes from the calibrated (or
/// first) camera; the right point from the camera with the unknown focal
/// length. For EFK the right point is the distorted measurement; for Hf the
/// left entry holds the planar scene coordinates and the right the image
/// point.
struct Correspondence {
    Eigen::Vector2d left;
    Eigen::Vector2d right;
};

/// One candidate answer of a minimal solve.
struct PoseSolution {
    Eigen::MatrixXd matrix; // 3x3 F or H, 3x4 lifted F for EFK
    std::optional<double> focal;
    std::optional<double> lambda; // EFK distortion
    std::optional<double> w;      // Hf: w = 1/f
    double max_generator_residual = 0.0;
    double max_epipolar_residual = 0.0;
};

/// Thrown on rank-deficient inputs (duplicate points, degenerate motion).
struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a closed-form extraction hits a vanishing denominator.
struct ExtractionSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when G-J elimination meets a pivot below threshold.
struct ConditioningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    double pivot_tol = 1e-12;         // relative G-J pivot threshold
    double imag_tol = 1e-6;           // |imag| <= imag_tol*(1+|real|) counts as real
    double generator_residual_tol = 1e-6;
    double pair_residual_tol = 1e-8;  // sylvester path (x,y) verification
    double rank_tol = 1e-9;           // null-space rank gap
    double extraction_tol = 1e-12;    // relative denominator cutoff
    bool polish = false;              // one Newton step on the Y unknowns
    int chart_retries = 2;            // random chart remixes after the default chart
};

} // namespace eipose

#endif
