#include "eipose/synth/metrics.hpp"

#include <cmath>

namespace eipose {

double log10_clamped(double x, double floor_value) {
    if (x <= std::pow(10.0, floor_value))
        return floor_value;
    return std::log10(x);
}

MetricsRecord evaluate(const std::vector<PoseSolution> &solutions, const SceneInstance &scene) {
    MetricsRecord rec;
    rec.n_solutions = static_cast<int>(solutions.size());

    const double f_gt = scene.focal_right;
    for (const auto &s : solutions) {
        if (!s.focal)
            continue;
        const double err = std::abs(*s.focal - f_gt) / std::abs(f_gt);
        if (!rec.rel_focal_error || err < *rec.rel_focal_error) {
            rec.rel_focal_error = err;
            rec.chosen_focal = *s.focal;
        }
    }
    if (scene.id == ProblemId::EFK) {
        const double l_gt = scene.lambda;
        const double denom = std::max(std::abs(l_gt), 1e-12);
        for (const auto &s : solutions) {
            if (!s.lambda)
                continue;
            const double err = std::abs(*s.lambda - l_gt) / denom;
            if (!rec.rel_lambda_error || err < *rec.rel_lambda_error) {
                rec.rel_lambda_error = err;
                rec.chosen_lambda = *s.lambda;
            }
        }
    }

    rec.failure = !rec.rel_focal_error || *rec.rel_focal_error > 1e-3;
    if (scene.id == ProblemId::EFK)
        rec.failure = rec.failure || !rec.rel_lambda_error || *rec.rel_lambda_error > 1e-3;

    rec.log10_rel_focal = rec.rel_focal_error ? log10_clamped(*rec.rel_focal_error) : 0.0;
    rec.log10_rel_lambda = rec.rel_lambda_error ? log10_clamped(*rec.rel_lambda_error) : 0.0;
    return rec;
}

} // namespace eipose
