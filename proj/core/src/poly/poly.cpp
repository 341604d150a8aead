#include "eipose/poly/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace eipose {

namespace {

// Fixed internal order keeping term vectors canonical regardless of how a
// polynomial was assembled.
int canonical_compare(const Monomial &a, const Monomial &b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i) ? -1 : 1;
    return 0;
}

bool canonical_desc(const Term &a, const Term &b) { return canonical_compare(a.mon, b.mon) > 0; }

} // namespace

void require_same_ambient(const Poly &p, const Poly &q) {
    if (!same_ambient(p.ambient(), q.ambient()))
        throw AmbientMismatch("polynomials live over different ambients");
}

Poly Poly::constant(AmbientPtr ambient, const Rational &c) {
    Poly p(std::move(ambient));
    if (c != 0)
        p.terms_.push_back({Monomial(p.ambient_->size()), c});
    return p;
}

Poly Poly::variable(AmbientPtr ambient, int var) {
    Poly p(std::move(ambient));
    Monomial m(p.ambient_->size());
    m.set_exponent(var, 1);
    p.terms_.push_back({m, Rational(1)});
    return p;
}

Poly Poly::variable(AmbientPtr ambient, const std::string &name) {
    const int idx = ambient->index_of(name);
    if (idx < 0)
        throw std::invalid_argument("unknown variable: " + name);
    return variable(std::move(ambient), idx);
}

Poly Poly::term(AmbientPtr ambient, const Rational &c, const Monomial &m) {
    Poly p(std::move(ambient));
    if (c != 0)
        p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(AmbientPtr ambient, std::vector<Term> terms) {
    Poly p(std::move(ambient));
    p.terms_ = std::move(terms);
    p.sort_and_prune();
    return p;
}

void Poly::sort_and_prune() {
    std::sort(terms_.begin(), terms_.end(), canonical_desc);
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!merged.empty() && merged.back().mon == t.mon)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term &t) { return t.coef == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

int Poly::degree() const {
    int d = -1;
    for (const auto &t : terms_)
        d = std::max(d, static_cast<int>(t.mon.degree()));
    return d;
}

Poly Poly::operator+(const Poly &q) const {
    require_same_ambient(*this, q);
    Poly r(ambient_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        const int c = canonical_compare(terms_[i].mon, q.terms_[j].mon);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(q.terms_[j++]);
        else {
            Rational s = terms_[i].coef + q.terms_[j].coef;
            if (s != 0)
                r.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j)
        r.terms_.push_back(q.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto &t : r.terms_)
        t.coef = -t.coef;
    return r;
}

Poly Poly::operator-(const Poly &q) const { return *this + (-q); }

Poly Poly::scaled(const Rational &c) const {
    if (c == 0)
        return Poly(ambient_);
    Poly r(*this);
    for (auto &t : r.terms_)
        t.coef *= c;
    return r;
}

Poly Poly::operator*(const Poly &q) const {
    require_same_ambient(*this, q);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * q.terms_.size());
    for (const auto &a : terms_)
        for (const auto &b : q.terms_)
            acc[a.mon * b.mon] += a.coef * b.coef;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto &kv : acc)
        if (kv.second != 0)
            terms.push_back({kv.first, std::move(kv.second)});
    return from_terms(ambient_, std::move(terms));
}

bool Poly::operator==(const Poly &q) const {
    if (!same_ambient(ambient_, q.ambient_))
        return false;
    if (terms_.size() != q.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != q.terms_[i].mon || terms_[i].coef != q.terms_[i].coef)
            return false;
    return true;
}

const Term &Poly::leading_term(const MonomialOrder &order) const {
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    const Term *best = &terms_[0];
    for (const auto &t : terms_)
        if (order.greater(t.mon, best->mon))
            best = &t;
    return *best;
}

Rational Poly::evaluate(const std::vector<Rational> &point) const {
    if (static_cast<int>(point.size()) != ambient_->size())
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum(0);
    for (const auto &t : terms_) {
        Rational prod = t.coef;
        for (int v = 0; v < ambient_->size(); ++v) {
            for (int e = 0; e < t.mon.exponent(v); ++e)
                prod *= point[v];
        }
        sum += prod;
    }
    return sum;
}

Poly Poly::substitute_linear(const std::map<int, Poly> &assignment, const AmbientPtr &target) const {
    for (const auto &[var, image] : assignment) {
        if (var < 0 || var >= ambient_->size())
            throw std::invalid_argument("assignment for a variable outside the ambient");
        if (!same_ambient(image.ambient(), target))
            throw AmbientMismatch("assignment image over a different ambient than the target");
        if (image.degree() > 1)
            throw std::invalid_argument("assignment image is not affine-linear");
    }
    // Unassigned variables map to themselves by name.
    std::vector<int> self_map(ambient_->size(), -1);
    for (int v = 0; v < ambient_->size(); ++v) {
        if (assignment.count(v))
            continue;
        self_map[v] = target->index_of(ambient_->name(v));
    }

    Poly result(target);
    for (const auto &t : terms_) {
        Poly factor = Poly::constant(target, t.coef);
        for (int v = 0; v < ambient_->size(); ++v) {
            const int e = t.mon.exponent(v);
            if (e == 0)
                continue;
            auto it = assignment.find(v);
            if (it != assignment.end()) {
                for (int k = 0; k < e; ++k)
                    factor = factor * it->second;
            } else {
                if (self_map[v] < 0)
                    throw std::invalid_argument("variable " + ambient_->name(v) +
                                                " is neither assigned nor present in the target");
                Monomial m(target->size());
                m.set_exponent(self_map[v], e);
                factor = factor * Poly::term(target, Rational(1), m);
            }
        }
        result += factor;
    }
    return result;
}

Poly Poly::renamed(const AmbientPtr &target) const {
    Poly result(target);
    std::vector<int> map(ambient_->size());
    for (int v = 0; v < ambient_->size(); ++v) {
        map[v] = target->index_of(ambient_->name(v));
        if (map[v] < 0 && degree() >= 0) {
            for (const auto &t : terms_)
                if (t.mon.exponent(v) > 0)
                    throw std::invalid_argument("variable " + ambient_->name(v) +
                                                " missing from the target ambient");
        }
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto &t : terms_) {
        Monomial m(target->size());
        for (int v = 0; v < ambient_->size(); ++v)
            if (t.mon.exponent(v) > 0)
                m.set_exponent(map[v], t.mon.exponent(v));
        terms.push_back({m, t.coef});
    }
    return from_terms(target, std::move(terms));
}

Poly Poly::normalized(const MonomialOrder &order) const {
    if (terms_.empty())
        return *this;
    mpz_class den_lcm(1);
    for (const auto &t : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    mpz_class content(0);
    for (const auto &t : terms_) {
        mpz_class num = t.coef.get_num() * (den_lcm / t.coef.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(den_lcm, content);
    scale.canonicalize();
    if (leading_term(order).coef < 0)
        scale = -scale;
    return scaled(scale);
}

bool Poly::proportional(const Poly &p, const Poly &q) {
    if (p.is_zero() || q.is_zero())
        return p.is_zero() && q.is_zero();
    if (p.terms_.size() != q.terms_.size())
        return false;
    const Rational ratio = p.terms_[0].coef / q.terms_[0].coef;
    for (size_t i = 0; i < p.terms_.size(); ++i)
        if (p.terms_[i].mon != q.terms_[i].mon || p.terms_[i].coef != q.terms_[i].coef * ratio)
            return false;
    return true;
}

} // namespace eipose
