#include "eipose/solve/resultant.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <unordered_map>

#include "eipose/solve/univariate.hpp"

namespace eipose {

namespace {

// Dense grid c[i][j] = coefficient of x^i y^j.
std::vector<std::vector<double>> grid_of(const NumPoly &p, int *deg_x, int *deg_y) {
    if (p.ambient->size() != 2)
        throw std::invalid_argument("sylvester path expects bivariate polynomials");
    int dx = 0, dy = 0;
    for (const auto &[m, c] : p.terms) {
        dx = std::max(dx, m.exponent(0));
        dy = std::max(dy, m.exponent(1));
    }
    std::vector<std::vector<double>> g(dx + 1, std::vector<double>(dy + 1, 0.0));
    for (const auto &[m, c] : p.terms)
        g[m.exponent(0)][m.exponent(1)] += c;
    *deg_x = dx;
    *deg_y = dy;
    return g;
}

std::complex<double> eval_coeff_poly(const std::vector<double> &cy, std::complex<double> y) {
    std::complex<double> acc(0, 0);
    for (int j = static_cast<int>(cy.size()) - 1; j >= 0; --j)
        acc = acc * y + cy[j];
    return acc;
}

} // namespace

std::vector<double> sylvester_resultant(const NumPoly &p, const NumPoly &q) {
    int dp, dyp, dq, dyq;
    const auto gp = grid_of(p, &dp, &dyp);
    const auto gq = grid_of(q, &dq, &dyq);
    if (dp == 0 || dq == 0)
        throw std::invalid_argument("resultant inputs must both involve the first variable");

    const int s = dp + dq;
    const int bound = dq * dyp + dp * dyq; // row-degree bound on deg_y det
    int n = 1;
    while (n < bound + 1)
        n <<= 1;

    // Evaluate det S(y) at the n-th roots of unity, inverse DFT for the
    // coefficients.
    std::vector<std::complex<double>> values(n);
    Eigen::MatrixXcd syl(s, s);
    for (int k = 0; k < n; ++k) {
        const std::complex<double> y = std::polar(1.0, 2.0 * M_PI * k / n);
        syl.setZero();
        for (int r = 0; r < dq; ++r) // rows of p coefficients
            for (int i = 0; i <= dp; ++i)
                syl(r, r + dp - i) = eval_coeff_poly(gp[i], y);
        for (int r = 0; r < dp; ++r) // rows of q coefficients
            for (int i = 0; i <= dq; ++i)
                syl(dq + r, r + dq - i) = eval_coeff_poly(gq[i], y);
        values[k] = syl.fullPivLu().determinant();
    }

    std::vector<double> coeffs(bound + 1, 0.0);
    for (int k = 0; k <= bound; ++k) {
        std::complex<double> acc(0, 0);
        for (int j = 0; j < n; ++j)
            acc += values[j] * std::polar(1.0, -2.0 * M_PI * j * k / n);
        coeffs[k] = acc.real() / n;
    }
    return coeffs;
}

namespace {

NumPoly shear_x(const NumPoly &p, double a) {
    // x -> x + a*y
    NumPoly out{p.ambient, {}};
    std::unordered_map<Monomial, double, MonomialHash> acc;
    for (const auto &[m, c] : p.terms) {
        const int i = m.exponent(0), j = m.exponent(1);
        double binom = 1.0;
        for (int k = 0; k <= i; ++k) {
            // coefficient of x^(i-k) y^(j+k): C(i,k) a^k
            Monomial mm(2);
            mm.set_exponent(0, i - k);
            mm.set_exponent(1, j + k);
            acc[mm] += c * binom * std::pow(a, k);
            binom = binom * (i - k) / (k + 1);
        }
    }
    for (const auto &[m, c] : acc)
        if (c != 0.0)
            out.terms.push_back({m, c});
    return out;
}

std::vector<double> x_slice(const NumPoly &p, double y) {
    int dx = 0;
    for (const auto &[m, c] : p.terms)
        dx = std::max(dx, m.exponent(0));
    std::vector<double> cx(dx + 1, 0.0);
    for (const auto &[m, c] : p.terms)
        cx[m.exponent(0)] += c * std::pow(y, m.exponent(1));
    return cx;
}

} // namespace

std::vector<std::pair<double, double>> sylvester_fef(const NumPoly &cubic, const NumPoly &quintic,
                                                     const SolveOptions &options) {
    const double shears[] = {0.0, 0.61803398874989484, -1.3247179572447460, 0.75487766624669276};
    for (int attempt = 0; attempt < 4; ++attempt) {
        const double a = shears[attempt];
        const NumPoly p = attempt == 0 ? cubic : shear_x(cubic, a);
        const NumPoly q = attempt == 0 ? quintic : shear_x(quintic, a);

        int dp, dyp, dq, dyq;
        grid_of(p, &dp, &dyp);
        grid_of(q, &dq, &dyq);
        const int expected = dp * dq;

        std::vector<double> res = sylvester_resultant(p, q);
        double maxc = 0;
        for (double c : res)
            maxc = std::max(maxc, std::abs(c));
        if (maxc == 0)
            continue; // common factor; try sheared coordinates
        int eff = static_cast<int>(res.size()) - 1;
        while (eff > 0 && std::abs(res[eff]) <= 1e-10 * maxc)
            --eff;
        if (eff < expected && attempt + 1 < 4)
            continue; // degree drop

        std::vector<std::pair<double, double>> pairs;
        for (double ys : real_roots(res, options.imag_tol)) {
            for (double xs : real_roots(x_slice(p, ys), options.imag_tol)) {
                Eigen::VectorXd point(2);
                point << xs, ys;
                if (p.normalized_residual(point) > options.pair_residual_tol ||
                    q.normalized_residual(point) > options.pair_residual_tol)
                    continue;
                // back to original coordinates
                const double x0 = xs + a * ys;
                bool dup = false;
                for (const auto &[px, py] : pairs)
                    if (std::abs(px - x0) <= 1e-9 * (1 + std::abs(px)) &&
                        std::abs(py - ys) <= 1e-9 * (1 + std::abs(py)))
                        dup = true;
                if (!dup)
                    pairs.push_back({x0, ys});
            }
        }
        return pairs;
    }
    throw DegenerateInput("resultant degree drop persisted after 3 changes of variables");
}

} // namespace eipose
