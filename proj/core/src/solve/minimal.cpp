#include "eipose/solve/minimal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "eipose/solve/action.hpp"
#include "eipose/solve/extract.hpp"
#include "eipose/util/rng.hpp"

namespace eipose {

std::vector<NumPoly> instantiate_problem(ProblemId id, const Eigen::MatrixXd &chart) {
    return instantiate_numeric(reference::frozen_generators(id),
                               chart, substitution_ambient(id));
}

namespace {

// One Gauss-Newton step on the substitution unknowns against the
// instantiated generators (least squares over all of them).
Eigen::VectorXd polish_step(const std::vector<NumPoly> &gens, const Eigen::VectorXd &y) {
    const int n = static_cast<int>(y.size());
    Eigen::MatrixXd jac(gens.size(), n);
    Eigen::VectorXd val(gens.size());
    for (size_t g = 0; g < gens.size(); ++g) {
        val[g] = gens[g].evaluate(y);
        for (int v = 0; v < n; ++v)
            jac(g, v) = gens[g].derivative(v).evaluate(y);
    }
    const Eigen::VectorXd delta = jac.colPivHouseholderQr().solve(-val);
    return y + delta;
}

Eigen::VectorXd reconstruct_xl(const Eigen::MatrixXd &chart, const Eigen::VectorXd &y) {
    Eigen::VectorXd ext(y.size() + 1);
    ext.head(y.size()) = y;
    ext[y.size()] = 1.0;
    Eigen::VectorXd xl = chart * ext;
    // fix the free scale: unit norm, largest entry positive
    const double n = xl.norm();
    if (n > 0)
        xl /= n;
    int imax = 0;
    for (int i = 1; i < xl.size(); ++i)
        if (std::abs(xl[i]) > std::abs(xl[imax]))
            imax = i;
    if (xl[imax] < 0)
        xl = -xl;
    return xl;
}

double epipolar_residual(const NullspaceParam &ns, const Eigen::VectorXd &xl) {
    double worst = 0;
    for (int r = 0; r < ns.coefficients.rows(); ++r) {
        const double denom = ns.coefficients.row(r).norm() * xl.norm();
        if (denom > 0)
            worst = std::max(worst, std::abs(ns.coefficients.row(r).dot(xl)) / denom);
    }
    return worst;
}

bool solution_less(const PoseSolution &a, const PoseSolution &b) {
    const double fa = a.focal.value_or(-1), fb = b.focal.value_or(-1);
    if (fa != fb)
        return fa < fb;
    const double la = a.lambda.value_or(0), lb = b.lambda.value_or(0);
    if (la != lb)
        return la < lb;
    for (int i = 0; i < a.matrix.size() && i < b.matrix.size(); ++i)
        if (a.matrix(i) != b.matrix(i))
            return a.matrix(i) < b.matrix(i);
    return false;
}

bool same_candidate(const PoseSolution &a, const PoseSolution &b) {
    if (a.matrix.size() != b.matrix.size())
        return false;
    return (a.matrix - b.matrix).cwiseAbs().maxCoeff() < 1e-6;
}

Eigen::MatrixXd random_rotation(int k, Rng &rng) {
    Eigen::MatrixXd g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            g(i, j) = rng.normal();
    return Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
}

} // namespace

std::vector<PoseSolution> solve_minimal(ProblemId id, const std::vector<Correspondence> &corr,
                                        const SolverTemplate &tpl, const SolveOptions &options) {
    if (tpl.problem != id)
        throw std::invalid_argument("template was built for a different problem");
    const ElimProblem &prob = problem(id);
    const NullspaceParam ns = nullspace_parametrize(id, corr, options);
    const int k = prob.nullspace_dim;

    // Solves in the chart X_L = (basis*mix)*[y; 1]. `extreme` reports
    // solutions far out in the chart, where degree-7 monomials eat the
    // mantissa; such instances are re-solved in a second chart and merged.
    const auto solve_chart = [&](const Eigen::MatrixXd &mix,
                                 std::vector<PoseSolution> &out, bool *extreme) {
        const Eigen::MatrixXd chart = ns.basis * mix;
        std::vector<NumPoly> gens = instantiate_problem(id, chart);
        std::vector<Eigen::VectorXd> ys =
            action_eigensolve(fill_template(tpl, gens), tpl, options);

        for (Eigen::VectorXd y : ys) {
            if (options.polish)
                y = polish_step(gens, y);
            if (y.cwiseAbs().maxCoeff() > 10.0)
                *extreme = true;

            double gen_residual = 0;
            for (const auto &g : gens)
                gen_residual = std::max(gen_residual, g.normalized_residual(y));
            if (gen_residual > options.generator_residual_tol)
                continue;

            const Eigen::VectorXd xl = reconstruct_xl(chart, y);
            PoseSolution s;
            s.max_generator_residual = gen_residual;
            s.max_epipolar_residual = epipolar_residual(ns, xl);

            try {
                switch (id) {
                case ProblemId::FEF: {
                    Eigen::Matrix3d f =
                        Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(xl.data());
                    const double f2 = extract_focal_fef(f, options);
                    if (!(f2 > 0))
                        continue;
                    s.matrix = f;
                    s.focal = std::sqrt(f2);
                    break;
                }
                case ProblemId::EF: {
                    Eigen::Matrix3d f =
                        Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(xl.data());
                    const double f2 = extract_focal_ef(f, options);
                    if (!(f2 > 0))
                        continue;
                    s.matrix = f;
                    s.focal = std::sqrt(f2);
                    break;
                }
                case ProblemId::EFK: {
                    Eigen::Matrix<double, 3, 4> fhat;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j)
                            fhat(i, j) = xl[3 * i + j];
                    fhat(0, 3) = xl[9];
                    fhat(1, 3) = xl[10];
                    fhat(2, 3) = xl[11];
                    s.lambda = extract_distortion(fhat, options);
                    const double f2 = extract_focal_ef(fhat.leftCols<3>(), options);
                    if (!(f2 > 0))
                        continue;
                    s.matrix = fhat;
                    s.focal = std::sqrt(f2);
                    break;
                }
                case ProblemId::Hf: {
                    const HomographyFocal hw = extend_homography(xl, options);
                    if (!hw.feasible)
                        continue;
                    s.matrix =
                        Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(xl.data());
                    s.w = hw.w;
                    s.focal = 1.0 / hw.w;
                    break;
                }
                }
            } catch (const ExtractionSingular &) {
                continue;
            }

            bool dup = false;
            for (auto &existing : out) {
                if (same_candidate(existing, s)) {
                    dup = true;
                    if (s.max_generator_residual < existing.max_generator_residual)
                        existing = s;
                    break;
                }
            }
            if (!dup)
                out.push_back(std::move(s));
        }
    };

    Rng chart_rng(0x5eedc0de);
    std::vector<PoseSolution> solutions;
    for (int attempt = 0; attempt <= options.chart_retries + 1; ++attempt) {
        Eigen::MatrixXd mix = Eigen::MatrixXd::Identity(k, k);
        if (attempt > 0)
            mix = random_rotation(k, chart_rng);
        bool extreme = false;
        try {
            solve_chart(mix, solutions, &extreme);
        } catch (const ConditioningError &) {
            if (attempt > options.chart_retries)
                throw;
            continue;
        }
        // Two charts always (a root far out in one chart sits well inside
        // another); keep going while a chart had far-out roots or nothing
        // was accepted yet.
        if (attempt >= 1 && !extreme && !solutions.empty())
            break;
    }

    std::sort(solutions.begin(), solutions.end(), solution_less);
    if (static_cast<int>(solutions.size()) > prob.solution_count)
        solutions.resize(prob.solution_count);
    return solutions;
}

} // namespace eipose
