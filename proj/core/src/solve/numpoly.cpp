#include "eipose/solve/numpoly.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace eipose {

int NumPoly::degree() const {
    int d = 0;
    for (const auto &[m, c] : terms)
        d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

double NumPoly::coeff_norm() const {
    double s = 0;
    for (const auto &[m, c] : terms)
        s += std::abs(c);
    return s;
}

double NumPoly::evaluate(const Eigen::VectorXd &point) const {
    double sum = 0;
    for (const auto &[m, c] : terms) {
        double prod = c;
        for (int v = 0; v < ambient->size(); ++v)
            for (int e = 0; e < m.exponent(v); ++e)
                prod *= point[v];
        sum += prod;
    }
    return sum;
}

double NumPoly::normalized_residual(const Eigen::VectorXd &point) const {
    const double norm = coeff_norm();
    if (norm == 0)
        return 0;
    double m = 1.0;
    for (int v = 0; v < point.size(); ++v)
        m = std::max(m, std::abs(point[v]));
    return std::abs(evaluate(point)) / (norm * std::pow(m, degree()));
}

NumPoly NumPoly::derivative(int var) const {
    NumPoly d{ambient, {}};
    for (const auto &[m, c] : terms) {
        const int e = m.exponent(var);
        if (e == 0)
            continue;
        Monomial n = m;
        n.set_exponent(var, e - 1);
        d.terms.push_back({n, c * e});
    }
    return d;
}

NumPoly to_numpoly(const Poly &p) {
    NumPoly out{p.ambient(), {}};
    out.terms.reserve(p.terms().size());
    for (const auto &t : p.terms())
        out.terms.push_back({t.mon, t.coef.get_d()});
    return out;
}

std::vector<NumPoly> instantiate_numeric(const std::vector<Poly> &gens,
                                         const Eigen::MatrixXd &chart,
                                         const AmbientPtr &y_ambient) {
    const int k = static_cast<int>(chart.cols()) - 1; // substitution unknowns
    if (y_ambient->size() != k)
        throw std::invalid_argument("chart width does not match the substitution ambient");

    using Dense = std::unordered_map<Monomial, double, MonomialHash>;
    const auto mul_linear = [&](const Dense &acc, int xl_var) {
        // multiply by (chart(xl_var, 0)*y_0 + ... + chart(xl_var, k-1)*y_{k-1} + chart(xl_var, k))
        Dense out;
        out.reserve(acc.size() * (k + 1));
        for (const auto &[m, c] : acc) {
            const double affine = chart(xl_var, k);
            if (affine != 0.0)
                out[m] += c * affine;
            for (int j = 0; j < k; ++j) {
                const double cj = chart(xl_var, j);
                if (cj == 0.0)
                    continue;
                Monomial n = m;
                n.set_exponent(j, n.exponent(j) + 1);
                out[n] += c * cj;
            }
        }
        return out;
    };

    std::vector<NumPoly> out;
    out.reserve(gens.size());
    for (const auto &g : gens) {
        if (g.ambient()->size() != chart.rows())
            throw std::invalid_argument("chart height does not match the generator ambient");
        Dense acc_total;
        for (const auto &t : g.terms()) {
            Dense acc{{Monomial(k), t.coef.get_d()}};
            for (int v = 0; v < g.ambient()->size(); ++v)
                for (int e = 0; e < t.mon.exponent(v); ++e)
                    acc = mul_linear(acc, v);
            for (const auto &[m, c] : acc)
                acc_total[m] += c;
        }
        NumPoly np{y_ambient, {}};
        np.terms.reserve(acc_total.size());
        for (const auto &[m, c] : acc_total)
            if (c != 0.0)
                np.terms.push_back({m, c});
        // canonical deterministic term order
        std::sort(np.terms.begin(), np.terms.end(), [](const auto &a, const auto &b) {
            if (a.first.degree() != b.first.degree())
                return a.first.degree() > b.first.degree();
            for (int i = a.first.nvars() - 1; i >= 0; --i)
                if (a.first.exponent(i) != b.first.exponent(i))
                    return a.first.exponent(i) < b.first.exponent(i);
            return false;
        });
        out.push_back(std::move(np));
    }
    return out;
}

} // namespace eipose
