#ifndef EIPOSE_TMPL_SOLVER_TEMPLATE_HPP
#define EIPOSE_TMPL_SOLVER_TEMPLATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eipose/elim/problems.hpp"
#include "eipose/la/ratmat.hpp"
#include "eipose/poly/poly.hpp"

namespace eipose {

/// One random exact-rational instantiation of a problem: a random linear
/// section M, its exact null space, and the elimination-ideal generators
/// with X_L substituted by the affine chart N*[y; 1].
struct ExactInstance {
    ProblemId id;
    AmbientPtr y_ambient;            // substitution unknowns (x,y / x1..x4 / y1)
    std::vector<std::vector<Rational>> null_basis; // one column per basis vector, affine part last
    std::vector<Poly> gens;          // instantiated generators over y_ambient
};

/// Substitution unknowns of the online stage: (x, y) for FEF/EF, x1..x4 for
/// EFK, y1 for Hf.
AmbientPtr substitution_ambient(ProblemId id);

/// Instantiates the frozen generators through a random rational coefficient
/// matrix. Deterministic given (id, seed). Throws when the random section is
/// degenerate (null space dimension differs from the expected one).
ExactInstance random_exact_instance(ProblemId id, uint64_t seed);

/// Quotient (standard monomial) basis of the instantiated ideal under
/// grevlex, ascending. The count certifies the problem degree; a count
/// mismatch is retried with fresh seeds and reported after 5 failures.
std::vector<Monomial> quotient_basis(ProblemId id, uint64_t seed = 17);

/// Offline elimination template: which multiples of which generators to
/// stack so that one G-J elimination of the filled matrix rewrites every
/// (variable x basis monomial) product in the quotient basis.
struct SolverTemplate {
    static constexpr int kVersion = 1;

    ProblemId problem;
    std::string action;               // default action variable name
    std::vector<std::string> y_names; // substitution variable names
    std::vector<std::pair<int, Monomial>> multipliers; // (generator index, monomial)
    std::vector<Monomial> columns; // non-basis grevlex-descending, then basis
    std::vector<Monomial> basis;   // quotient basis, grevlex ascending

    int rows() const { return static_cast<int>(multipliers.size()); }
    int cols() const { return static_cast<int>(columns.size()); }
    int basis_size() const { return static_cast<int>(basis.size()); }
    AmbientPtr y_ambient() const { return make_ambient(y_names); }
};

struct TemplateBuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds and validates a template: greedy row pruning in exact arithmetic
/// on the seed instance, then closure re-checked on `validation_seeds`
/// independent instances. Throws TemplateBuildError when closure is not
/// reached within the degree cap (the message carries the reached degree).
SolverTemplate build_template(ProblemId id, const std::string &action_variable,
                              uint64_t seed = 17, int degree_cap = -1,
                              int validation_seeds = 2);
SolverTemplate build_template(ProblemId id);

/// Default product-degree caps (FEF needs degree 7 for closure; the E+f+k
/// cap follows the degree-8 bound under which the problem is known solvable).
int default_degree_cap(ProblemId id);

/// Exact closure check: fill the template with `inst` and verify by G-J over
/// the rationals that every non-basis column is a pivot.
bool template_closes(const SolverTemplate &tpl, const ExactInstance &inst);

/// Versioned JSON (de)serialization; round trips bit-exactly.
void save_template(const SolverTemplate &tpl, std::ostream &os);
void save_template_file(const SolverTemplate &tpl, const std::string &path);
SolverTemplate load_template(std::istream &is);
SolverTemplate load_template_file(const std::string &path);

} // namespace eipose

#endif
