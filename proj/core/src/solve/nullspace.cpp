#include "eipose/solve/nullspace.hpp"

#include <Eigen/SVD>

namespace eipose {

Eigen::VectorXd linear_row(ProblemId id, const Correspondence &c, int which) {
    switch (id) {
    case ProblemId::FEF:
    case ProblemId::EF: {
        // u^T F u' with u = (x1,y1,1), u' = (x2,y2,1); F row-major.
        Eigen::VectorXd row(9);
        const double x1 = c.left.x(), y1 = c.left.y();
        const double x2 = c.right.x(), y2 = c.right.y();
        row << x1 * x2, x1 * y2, x1, y1 * x2, y1 * y2, y1, x2, y2, 1.0;
        return row;
    }
    case ProblemId::EFK: {
        // u^T Fhat [xd, yd, 1, xd^2+yd^2] with the distorted right point.
        Eigen::VectorXd row(12);
        const double x1 = c.left.x(), y1 = c.left.y();
        const double xd = c.right.x(), yd = c.right.y();
        const double r2 = xd * xd + yd * yd;
        row << x1 * xd, x1 * yd, x1, y1 * xd, y1 * yd, y1, xd, yd, 1.0, x1 * r2, y1 * r2, r2;
        return row;
    }
    case ProblemId::Hf: {
        // Rows of skew(u) * H * [x, y, 1]; the first two are independent.
        Eigen::VectorXd row = Eigen::VectorXd::Zero(9);
        const double x = c.left.x(), y = c.left.y();
        const double u = c.right.x(), v = c.right.y();
        if (which == 0) {
            row.segment<3>(3) << -x, -y, -1.0;
            row.segment<3>(6) << v * x, v * y, v;
        } else {
            row.segment<3>(0) << x, y, 1.0;
            row.segment<3>(6) << -u * x, -u * y, -u;
        }
        return row;
    }
    }
    throw std::logic_error("unknown problem id");
}

NullspaceParam nullspace_parametrize(ProblemId id, const std::vector<Correspondence> &corr,
                                     const SolveOptions &options) {
    const ElimProblem &p = problem(id);
    if (static_cast<int>(corr.size()) != p.min_correspondences)
        throw std::invalid_argument(p.name + " expects " + std::to_string(p.min_correspondences) +
                                    " correspondences, got " + std::to_string(corr.size()));
    for (const auto &c : corr)
        if (!c.left.allFinite() || !c.right.allFinite())
            throw std::invalid_argument("correspondence with non-finite coordinates");

    Eigen::MatrixXd m(p.linear_rows, p.linear_cols);
    if (id == ProblemId::Hf) {
        // Two rows per full point; the seventh equation is half of the last point.
        int r = 0;
        for (size_t i = 0; i < corr.size() && r < p.linear_rows; ++i) {
            m.row(r++) = linear_row(id, corr[i], 0);
            if (r < p.linear_rows)
                m.row(r++) = linear_row(id, corr[i], 1);
        }
    } else {
        for (int i = 0; i < p.linear_rows; ++i)
            m.row(i) = linear_row(id, corr[i]);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    const int expected_rank = p.linear_cols - p.nullspace_dim;
    if (sv(0) <= 0 || sv(expected_rank - 1) <= options.rank_tol * sv(0))
        throw DegenerateInput(p.name + ": coefficient matrix is rank-deficient (degenerate configuration)");

    NullspaceParam out{id, std::move(m), svd.matrixV().rightCols(p.nullspace_dim)};
    return out;
}

} // namespace eipose
