#include "eipose/tmpl/solver_template.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "eipose/util/rng.hpp"

namespace eipose {

AmbientPtr substitution_ambient(ProblemId id) {
    switch (id) {
    case ProblemId::FEF:
    case ProblemId::EF:
        return make_ambient({"x", "y"});
    case ProblemId::EFK:
        return make_ambient({"x1", "x2", "x3", "x4"});
    case ProblemId::Hf:
        return make_ambient({"y1"});
    }
    throw std::logic_error("unknown problem id");
}

namespace {

std::vector<Monomial> monomials_up_to(const AmbientPtr &ambient, int degree) {
    const int n = ambient->size();
    std::vector<Monomial> all{Monomial(n)};
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i].degree() >= degree)
            continue;
        // extend only at the last touched variable or beyond, so each
        // monomial is produced exactly once
        int first = 0;
        for (int v = n - 1; v >= 0; --v)
            if (all[i].exponent(v) > 0) {
                first = v;
                break;
            }
        for (int v = first; v < n; ++v) {
            Monomial m = all[i];
            m.set_exponent(v, m.exponent(v) + 1);
            all.push_back(m);
        }
    }
    return all;
}

} // namespace

ExactInstance random_exact_instance(ProblemId id, uint64_t seed) {
    const ElimProblem &p = problem(id);
    Rng rng(seed);

    RatMat m(p.linear_rows, p.linear_cols);
    for (int r = 0; r < p.linear_rows; ++r)
        for (int c = 0; c < p.linear_cols; ++c)
            m.at(r, c) = mpq_class(rng.uniform_int(-50, 50));

    auto null_basis = m.null_space();
    if (static_cast<int>(null_basis.size()) != p.nullspace_dim)
        throw TemplateBuildError("degenerate random section: null space dimension " +
                                 std::to_string(null_basis.size()));

    const AmbientPtr y = substitution_ambient(id);
    // Affine chart X_L = y1*n1 + ... + yk*nk + n_{k+1}.
    const std::vector<Poly> &gens = reference::frozen_generators(id);
    const AmbientPtr &xl = gens.front().ambient();

    std::map<int, Poly> assignment;
    for (int v = 0; v < xl->size(); ++v) {
        Poly image = Poly::constant(y, null_basis.back()[v]);
        for (int j = 0; j + 1 < static_cast<int>(null_basis.size()); ++j)
            image += Poly::variable(y, j).scaled(null_basis[j][v]);
        assignment.emplace(v, std::move(image));
    }

    ExactInstance inst{id, y, std::move(null_basis), {}};
    inst.gens.reserve(gens.size());
    for (const auto &g : gens)
        inst.gens.push_back(g.substitute_linear(assignment, y));
    return inst;
}

std::vector<Monomial> quotient_basis(ProblemId id, uint64_t seed) {
    const ElimProblem &p = problem(id);
    std::string mismatches;
    for (int attempt = 0; attempt < 5; ++attempt) {
        ExactInstance inst = random_exact_instance(id, Rng::mix(seed, attempt));
        const MonomialOrder order = MonomialOrder::grevlex(inst.y_ambient->size());
        IdealBasis gb = buchberger(inst.gens, order);

        std::vector<Monomial> leads;
        for (const auto &g : gb.generators)
            leads.push_back(g.leading_term(order).mon);

        // Standard monomials form a divisibility down-set: breadth-first
        // growth from 1, stopping at reducible monomials.
        std::vector<Monomial> basis;
        std::vector<Monomial> frontier{Monomial(inst.y_ambient->size())};
        std::unordered_map<Monomial, bool, MonomialHash> seen;
        seen[frontier[0]] = true;
        const size_t limit = 4 * static_cast<size_t>(p.solution_count) + 64;
        while (!frontier.empty() && basis.size() <= limit) {
            Monomial m = frontier.back();
            frontier.pop_back();
            const bool reducible = std::any_of(leads.begin(), leads.end(),
                                               [&](const Monomial &l) { return l.divides(m); });
            if (reducible)
                continue;
            basis.push_back(m);
            for (int v = 0; v < inst.y_ambient->size(); ++v) {
                Monomial next = m;
                next.set_exponent(v, next.exponent(v) + 1);
                if (!seen[next]) {
                    seen[next] = true;
                    frontier.push_back(next);
                }
            }
        }
        if (static_cast<int>(basis.size()) == p.solution_count) {
            std::sort(basis.begin(), basis.end(),
                      [&](const Monomial &a, const Monomial &b) { return order.less(a, b); });
            return basis;
        }
        mismatches += (attempt ? ", " : "") + std::to_string(basis.size());
    }
    throw TemplateBuildError("quotient basis size never matched " +
                             std::to_string(p.solution_count) + " (got " + mismatches + ")");
}

int default_degree_cap(ProblemId id) {
    switch (id) {
    case ProblemId::FEF:
        return 7;
    case ProblemId::EF:
        return 6;
    case ProblemId::EFK:
        return 8;
    case ProblemId::Hf:
        return 4;
    }
    return 8;
}

namespace {

// Rows of the filled template: row (i, m) holds the coefficients of m*g_i
// scattered over the column map.
RatMat fill_exact(const SolverTemplate &tpl, const ExactInstance &inst,
                  const std::unordered_map<Monomial, int, MonomialHash> &col_of) {
    RatMat mat(tpl.rows(), tpl.cols());
    for (int r = 0; r < tpl.rows(); ++r) {
        const auto &[gi, mult] = tpl.multipliers[r];
        for (const auto &t : inst.gens[gi].terms()) {
            auto it = col_of.find(t.mon * mult);
            if (it == col_of.end())
                throw std::logic_error("template column set does not cover a product term");
            mat.at(r, it->second) = t.coef;
        }
    }
    return mat;
}

std::unordered_map<Monomial, int, MonomialHash> column_map(const SolverTemplate &tpl) {
    std::unordered_map<Monomial, int, MonomialHash> col_of;
    for (int c = 0; c < tpl.cols(); ++c)
        col_of.emplace(tpl.columns[c], c);
    return col_of;
}

} // namespace

bool template_closes(const SolverTemplate &tpl, const ExactInstance &inst) {
    const int non_basis = tpl.cols() - tpl.basis_size();
    RatMat mat = fill_exact(tpl, inst, column_map(tpl));
    const std::vector<int> pivots = mat.rref();
    if (static_cast<int>(pivots.size()) < non_basis)
        return false;
    for (int c = 0; c < non_basis; ++c)
        if (pivots[c] != c)
            return false;
    return true;
}

SolverTemplate build_template(ProblemId id, const std::string &action_variable, uint64_t seed,
                              int degree_cap, int validation_seeds) {
    const AmbientPtr y = substitution_ambient(id);
    if (y->index_of(action_variable) < 0)
        throw std::invalid_argument("action variable not among the substitution unknowns");
    if (degree_cap < 0)
        degree_cap = default_degree_cap(id);

    const std::vector<Poly> &gens = reference::frozen_generators(id);
    const MonomialOrder order = MonomialOrder::grevlex(y->size());
    const ExactInstance inst = random_exact_instance(id, Rng::mix(seed, 0));

    std::vector<Monomial> basis = quotient_basis(id, seed);
    std::unordered_map<Monomial, bool, MonomialHash> in_basis;
    for (const auto &b : basis)
        in_basis[b] = true;

    int max_gen_deg = 0, max_basis_deg = 0;
    for (const auto &g : gens)
        max_gen_deg = std::max(max_gen_deg, g.degree());
    for (const auto &b : basis)
        max_basis_deg = std::max(max_basis_deg, static_cast<int>(b.degree()));

    const int d_start = std::max(max_gen_deg, max_basis_deg + 1);
    int reached = 0;
    for (int degree = d_start; degree <= degree_cap; ++degree) {
        reached = degree;

        SolverTemplate tpl;
        tpl.problem = id;
        tpl.action = action_variable;
        tpl.y_names = y->names();
        tpl.basis = basis;

        std::vector<Monomial> non_basis;
        for (const auto &m : monomials_up_to(y, degree))
            if (!in_basis[m])
                non_basis.push_back(m);
        std::sort(non_basis.begin(), non_basis.end(),
                  [&](const Monomial &a, const Monomial &b) { return order.greater(a, b); });
        tpl.columns = non_basis;
        for (auto it = basis.rbegin(); it != basis.rend(); ++it)
            tpl.columns.push_back(*it);

        for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi)
            for (const auto &m : monomials_up_to(y, degree - inst.gens[gi].degree()))
                tpl.multipliers.push_back({gi, m});

        if (!template_closes(tpl, inst))
            continue;

        // Greedy pruning: keep only rows that grow the row space of the
        // filled matrix on the build instance.
        const auto col_of = column_map(tpl);
        RatMat full = fill_exact(tpl, inst, col_of);
        std::vector<std::vector<mpq_class>> reduced; // echelon rows, by leading column
        std::vector<int> lead_of;
        std::vector<std::pair<int, Monomial>> kept;
        for (int r = 0; r < full.rows(); ++r) {
            std::vector<mpq_class> row(tpl.cols());
            for (int c = 0; c < tpl.cols(); ++c)
                row[c] = full.at(r, c);
            for (size_t k = 0; k < reduced.size(); ++k) {
                const int lc = lead_of[k];
                if (row[lc] != 0) {
                    const mpq_class f = row[lc];
                    for (int c = lc; c < tpl.cols(); ++c)
                        row[c] -= f * reduced[k][c];
                }
            }
            int lead = -1;
            for (int c = 0; c < tpl.cols(); ++c)
                if (row[c] != 0) {
                    lead = c;
                    break;
                }
            if (lead < 0)
                continue; // dependent row
            const mpq_class inv = 1 / row[lead];
            for (int c = lead; c < tpl.cols(); ++c)
                row[c] *= inv;
            reduced.push_back(std::move(row));
            lead_of.push_back(lead);
            kept.push_back(tpl.multipliers[r]);
        }
        tpl.multipliers = std::move(kept);

        if (!template_closes(tpl, inst))
            continue;
        bool generic = true;
        for (int v = 1; v <= validation_seeds && generic; ++v)
            generic = template_closes(tpl, random_exact_instance(id, Rng::mix(seed, 1000 + v)));
        if (generic)
            return tpl;
    }
    throw TemplateBuildError("closure not achieved within the degree cap (reached degree " +
                             std::to_string(reached) + ")");
}

SolverTemplate build_template(ProblemId id) {
    switch (id) {
    case ProblemId::FEF:
    case ProblemId::EF:
        return build_template(id, "x");
    case ProblemId::EFK:
        return build_template(id, "x1");
    case ProblemId::Hf:
        return build_template(id, "y1");
    }
    throw std::logic_error("unknown problem id");
}

namespace {

nlohmann::ordered_json mon_to_json(const Monomial &m) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int v = 0; v < m.nvars(); ++v)
        a.push_back(m.exponent(v));
    return a;
}

Monomial mon_from_json(const nlohmann::json &a, int nvars) {
    if (!a.is_array() || static_cast<int>(a.size()) != nvars)
        throw std::runtime_error("template file: exponent vector of wrong arity");
    Monomial m(nvars);
    for (int v = 0; v < nvars; ++v)
        m.set_exponent(v, a[v].get<int>());
    return m;
}

} // namespace

void save_template(const SolverTemplate &tpl, std::ostream &os) {
    nlohmann::ordered_json j;
    j["version"] = SolverTemplate::kVersion;
    j["problem"] = problem(tpl.problem).name;
    j["action"] = tpl.action;
    j["vars"] = tpl.y_names;
    j["rows"] = tpl.rows();
    j["cols"] = tpl.cols();
    auto mults = nlohmann::ordered_json::array();
    for (const auto &[gi, m] : tpl.multipliers)
        mults.push_back({gi, mon_to_json(m)});
    j["multipliers"] = std::move(mults);
    auto cols = nlohmann::ordered_json::array();
    for (const auto &m : tpl.columns)
        cols.push_back(mon_to_json(m));
    j["monomials"] = std::move(cols);
    auto bas = nlohmann::ordered_json::array();
    for (const auto &m : tpl.basis)
        bas.push_back(mon_to_json(m));
    j["basis"] = std::move(bas);
    os << j.dump(1) << "\n";
}

void save_template_file(const SolverTemplate &tpl, const std::string &path) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write template file: " + path);
    save_template(tpl, os);
}

SolverTemplate load_template(std::istream &is) {
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error(std::string("malformed template file: ") + e.what());
    }
    if (!j.contains("version") || !j["version"].is_number_integer())
        throw std::runtime_error("template file: missing version field");
    if (j["version"].get<int>() != SolverTemplate::kVersion)
        throw std::runtime_error("template file: unsupported schema version " +
                                 std::to_string(j["version"].get<int>()));
    try {
        SolverTemplate tpl;
        const auto id = parse_problem_name(j.at("problem").get<std::string>());
        if (!id)
            throw std::runtime_error("template file: unknown problem name");
        tpl.problem = *id;
        tpl.action = j.at("action").get<std::string>();
        tpl.y_names = j.at("vars").get<std::vector<std::string>>();
        const int nv = static_cast<int>(tpl.y_names.size());
        for (const auto &e : j.at("multipliers"))
            tpl.multipliers.push_back({e.at(0).get<int>(), mon_from_json(e.at(1), nv)});
        for (const auto &e : j.at("monomials"))
            tpl.columns.push_back(mon_from_json(e, nv));
        for (const auto &e : j.at("basis"))
            tpl.basis.push_back(mon_from_json(e, nv));
        if (j.at("rows").get<int>() != tpl.rows() || j.at("cols").get<int>() != tpl.cols())
            throw std::runtime_error("template file: inconsistent dimensions");
        return tpl;
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error(std::string("malformed template file: ") + e.what());
    }
}

SolverTemplate load_template_file(const std::string &path) {
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open template file: " + path);
    return load_template(is);
}

} // namespace eipose
