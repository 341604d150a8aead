#ifndef EIPOSE_POLY_POLY_HPP
#define EIPOSE_POLY_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eipose/poly/monomial.hpp"
#include "eipose/poly/order.hpp"

namespace eipose {

using Rational = mpq_class;

struct Term {
    Monomial mon;
    Rational coef;
};

/// Thrown when two operands live over different variable lists.
struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Multivariate polynomial with exact rational coefficients. Terms are kept
/// sorted descending under a fixed internal grevlex order, with no zero
/// coefficients, so equal polynomials compare equal term-by-term.
class Poly {
  public:
    Poly() = default;
    explicit Poly(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

    static Poly zero(AmbientPtr ambient) { return Poly(std::move(ambient)); }
    static Poly constant(AmbientPtr ambient, const Rational &c);
    static Poly variable(AmbientPtr ambient, int var);
    static Poly variable(AmbientPtr ambient, const std::string &name);
    static Poly term(AmbientPtr ambient, const Rational &c, const Monomial &m);
    /// Builds from unsorted (monomial, coefficient) pairs, merging duplicates.
    static Poly from_terms(AmbientPtr ambient, std::vector<Term> terms);

    const AmbientPtr &ambient() const { return ambient_; }
    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    Poly operator+(const Poly &q) const;
    Poly operator-(const Poly &q) const;
    Poly operator*(const Poly &q) const;
    Poly operator-() const;
    Poly scaled(const Rational &c) const;
    Poly &operator+=(const Poly &q) { return *this = *this + q; }
    Poly &operator-=(const Poly &q) { return *this = *this - q; }

    bool operator==(const Poly &q) const;
    bool operator!=(const Poly &q) const { return !(*this == q); }

    /// Largest term under `order`. Requires a nonzero polynomial.
    const Term &leading_term(const MonomialOrder &order) const;

    Rational evaluate(const std::vector<Rational> &point) const;

    /// Substitutes affine-linear expressions for a subset of variables.
    /// `assignment[v]`, when present, is the image of variable v; images and
    /// the result live over `target`. Unassigned variables must exist in
    /// `target` under the same name. Throws std::invalid_argument when an
    /// image is not affine-linear or a variable is left uncovered.
    Poly substitute_linear(const std::map<int, Poly> &assignment, const AmbientPtr &target) const;

    /// Rebuilds this polynomial over `target`, mapping variables by name.
    Poly renamed(const AmbientPtr &target) const;

    /// Clears denominators, divides by the integer content and makes the
    /// leading coefficient under `order` positive.
    Poly normalized(const MonomialOrder &order) const;

    /// True when p = c*q for some nonzero rational c.
    static bool proportional(const Poly &p, const Poly &q);

  private:
    void sort_and_prune();

    AmbientPtr ambient_;
    std::vector<Term> terms_;
};

void require_same_ambient(const Poly &p, const Poly &q);

} // namespace eipose

#endif
