#include "eipose/solve/action.hpp"

#include <Eigen/Eigenvalues>

#include <unordered_map>

namespace eipose {

Eigen::MatrixXd fill_template(const SolverTemplate &tpl, const std::vector<NumPoly> &gens) {
    std::unordered_map<Monomial, int, MonomialHash> col_of;
    for (int c = 0; c < tpl.cols(); ++c)
        col_of.emplace(tpl.columns[c], c);
    Eigen::MatrixXd filled = Eigen::MatrixXd::Zero(tpl.rows(), tpl.cols());
    for (int r = 0; r < tpl.rows(); ++r) {
        const auto &[gi, mult] = tpl.multipliers[r];
        for (const auto &[mon, coef] : gens.at(gi).terms) {
            auto it = col_of.find(mon * mult);
            if (it == col_of.end())
                throw std::logic_error("instantiated generator has a term outside the template columns");
            filled(r, it->second) += coef;
        }
    }
    return filled;
}

namespace {

// Partial-pivot G-J restricted to the leading `lead` columns; on return rows
// 0..lead-1 hold the identity on those columns (row r pivots column r).
void gauss_jordan(Eigen::MatrixXd &m, int lead, double pivot_tol) {
    const double norm = m.cwiseAbs().maxCoeff();
    if (norm == 0)
        throw ConditioningError("filled template is identically zero");
    for (int col = 0; col < lead; ++col) {
        int pivot = -1;
        double best = 0;
        for (int r = col; r < m.rows(); ++r) {
            const double v = std::abs(m(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (pivot < 0 || best <= pivot_tol * norm)
            throw ConditioningError("pivot below threshold at template column " + std::to_string(col));
        if (pivot != col)
            m.row(pivot).swap(m.row(col));
        m.row(col) /= m(col, col);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == col)
                continue;
            const double f = m(r, col);
            if (f != 0.0)
                m.row(r) -= f * m.row(col);
        }
    }
}

} // namespace

std::vector<Eigen::VectorXd> action_eigensolve(const Eigen::MatrixXd &filled,
                                               const SolverTemplate &tpl,
                                               const SolveOptions &options) {
    if (filled.rows() != tpl.rows() || filled.cols() != tpl.cols())
        throw std::invalid_argument("filled matrix does not match the template dimensions");
    const int n = tpl.basis_size();
    const int lead = tpl.cols() - n;
    if (filled.rows() < lead)
        throw std::invalid_argument("template has fewer rows than reducible columns");

    Eigen::MatrixXd m = filled;
    for (int r = 0; r < m.rows(); ++r) {
        const double mx = m.row(r).cwiseAbs().maxCoeff();
        if (mx > 0)
            m.row(r) /= mx;
    }
    gauss_jordan(m, lead, options.pivot_tol);

    // After G-J, row r reads: column_r + sum_b m(r, lead+b') * basis_col = 0,
    // i.e. NF(column_r) = -sum m(r, ...) over the trailing basis columns.
    std::unordered_map<Monomial, int, MonomialHash> lead_row, basis_index;
    for (int c = 0; c < lead; ++c)
        lead_row.emplace(tpl.columns[c], c);
    for (int i = 0; i < n; ++i)
        basis_index.emplace(tpl.basis[i], i);
    // trailing columns are the basis in reverse order
    const auto basis_col_of = [&](int bi) { return tpl.cols() - 1 - bi; };

    const AmbientPtr y = tpl.y_ambient();
    const int action_var = y->index_of(tpl.action);
    if (action_var < 0)
        throw std::logic_error("action variable missing from the template ambient");

    Eigen::MatrixXd action = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        Monomial shifted = tpl.basis[i];
        shifted.set_exponent(action_var, shifted.exponent(action_var) + 1);
        auto bit = basis_index.find(shifted);
        if (bit != basis_index.end()) {
            action(i, bit->second) = 1.0;
            continue;
        }
        auto rit = lead_row.find(shifted);
        if (rit == lead_row.end())
            throw std::logic_error("action product outside the template column set");
        for (int b = 0; b < n; ++b)
            action(i, b) = -m(rit->second, basis_col_of(b));
    }

    Eigen::EigenSolver<Eigen::MatrixXd> eig(action);
    const auto &values = eig.eigenvalues();
    const auto &vectors = eig.eigenvectors();

    const int one_index = basis_index.at(Monomial(y->size()));
    std::vector<int> var_index(y->size());
    for (int v = 0; v < y->size(); ++v) {
        Monomial mv(y->size());
        mv.set_exponent(v, 1);
        auto it = basis_index.find(mv);
        var_index[v] = it == basis_index.end() ? -1 : it->second;
    }

    std::vector<Eigen::VectorXd> solutions;
    for (int k = 0; k < n; ++k) {
        const std::complex<double> lam = values[k];
        if (std::abs(lam.imag()) > options.imag_tol * (1.0 + std::abs(lam.real())))
            continue;
        const auto vec = vectors.col(k);
        const std::complex<double> denom = vec(one_index);
        if (std::abs(denom) < 1e-14 * vec.norm())
            continue; // solution at infinity in this chart
        Eigen::VectorXd sol(y->size());
        bool ok = true;
        for (int v = 0; v < y->size(); ++v) {
            std::complex<double> value;
            if (var_index[v] >= 0)
                value = vec(var_index[v]) / denom;
            else if (v == action_var)
                value = lam;
            else
                ok = false;
            if (std::abs(value.imag()) > options.imag_tol * (1.0 + std::abs(value.real())))
                ok = false;
            sol[v] = value.real();
        }
        if (ok)
            solutions.push_back(std::move(sol));
    }
    return solutions;
}

} // namespace eipose
