#ifndef EIPOSE_ELIM_PROBLEMS_HPP
#define EIPOSE_ELIM_PROBLEMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eipose/gb/groebner.hpp"
#include "eipose/poly/poly.hpp"

namespace eipose {

/// The four covered minimal problems:
///   FEF  two cameras sharing one unknown focal length (6pt)
///   EF   one calibrated camera, one unknown-focal camera (6pt)
///   EFK  one calibrated camera, one camera with unknown focal length and
///        one-parameter division-model radial distortion (7pt)
///   Hf   planar homography with unknown focal length (3.5pt)
enum class ProblemId { FEF, EF, EFK, Hf };

/// Static description of one problem: its offline ring, the split between
/// unknowns measured linearly (X_L) and unknowns to eliminate (X_N), and
/// the online dimensions.
struct ElimProblem {
    ProblemId id;
    std::string name;
    AmbientPtr ambient;                     // X_L ∪ X_N
    std::vector<std::string> x_linear;      // unknowns appearing in the linear equations
    std::vector<std::string> x_eliminated;  // unknowns removed offline
    int solution_count;                     // variety degree: 15 / 9 / 19 / 4
    int min_correspondences;                // 6 / 6 / 7 / 4 (Hf uses half of the 4th point)
    int linear_rows;                        // rows of the online coefficient matrix M
    int linear_cols;                        // |X_L|: 9 or 12
    int nullspace_dim;                      // 3 / 3 / 5 / 2
};

const ElimProblem &problem(ProblemId id);
const std::vector<ProblemId> &all_problems();
std::optional<ProblemId> parse_problem_name(std::string_view name);

/// The non-linear constraint set F_N of a problem, in the offline ring.
/// FEF and EF produce 10 polynomials, EFK 13, Hf 2. The focal length enters
/// through w (w = 1/f^2 for FEF/EF/EFK trace constraints, w = 1/f for Hf).
std::vector<Poly> build_constraints(ProblemId id);

/// Result of the offline stage: generators of the elimination ideal over
/// X_L only, both as a reduced Groebner basis and as the minimal
/// homogeneous generating set the solvers instantiate.
struct Derivation {
    ProblemId id;
    std::vector<Poly> generators; // minimal generators, sorted by degree
    IdealBasis groebner;          // reduced grevlex basis of the same ideal
};

/// Saturates by the product of the X_N variables, eliminates X_N and
/// extracts minimal generators.
Derivation derive_generators(ProblemId id, const GbConfig &config = {});

/// Minimal generating set of a homogeneous ideal given by a Groebner basis:
/// greedy by ascending degree, dropping members of the ideal generated by
/// the polynomials kept so far.
std::vector<Poly> minimal_generators(const IdealBasis &gb, const GbConfig &config = {});

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> checks;   // one line per executed check
    std::vector<std::string> failures; // offending polynomial / mismatch details
};

/// Compares a derivation against the embedded reference data: exact printed
/// generators for FEF and Hf, two-sided ideal equality with the four maximal
/// minors for EF, and the quadric pattern plus generator census for EFK.
VerifyReport verify_reference(const Derivation &d, const GbConfig &config = {});

/// Embedded reference polynomials and frozen derivation outputs.
namespace reference {

/// Ambient of the fundamental-matrix entries f11..f33.
AmbientPtr f_ambient();

const Poly &fef_cubic();   // det F
const Poly &fef_quintic(); // the printed 28-term quintic
const Poly &hf_quartic();  // the printed homography quartic

/// Four maximal minors of the 3x4 matrix [F^T | v], v = (c2.c3, -c1.c3, 0),
/// which generate the EF elimination ideal.
std::vector<Poly> ef_minors();

/// The three quadrics f_i3*y_j3 - f_j3*y_i3 in the EFK ring restricted to X_L.
std::vector<Poly> efk_quadrics();

/// Frozen copy of derive_generators(id).generators; the online stage
/// instantiates these without running the Groebner engine.
const std::vector<Poly> &frozen_generators(ProblemId id);

} // namespace reference

} // namespace eipose

#endif
