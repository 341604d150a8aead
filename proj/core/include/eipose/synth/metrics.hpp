#ifndef EIPOSE_SYNTH_METRICS_HPP
#define EIPOSE_SYNTH_METRICS_HPP

#include <optional>
#include <vector>

#include "eipose/synth/scene.hpp"

namespace eipose {

/// Per-instance evaluation against ground truth: the real root closest to
/// the true value is scored, per quantity.
struct MetricsRecord {
    int n_solutions = 0;
    std::optional<double> rel_focal_error;   // min over candidates
    std::optional<double> rel_lambda_error;  // EFK only
    std::optional<double> chosen_focal;
    std::optional<double> chosen_lambda;
    double log10_rel_focal = 0.0;  // clamped to [-16, inf)
    double log10_rel_lambda = 0.0;
    bool failure = false;          // empty output or relative error > 1e-3
};

MetricsRecord evaluate(const std::vector<PoseSolution> &solutions, const SceneInstance &scene);

/// Clamped log10 used throughout the reports.
double log10_clamped(double x, double floor_value = -16.0);

} // namespace eipose

#endif
