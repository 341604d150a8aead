#include "eipose/gb/groebner.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace eipose {

std::string GbStats::summary() const {
    std::ostringstream os;
    os << "pairs=" << pairs_processed << " skipped=" << pairs_skipped
       << " max_degree=" << max_degree << " max_coeff_bits=" << max_coeff_bits
       << " zero_reductions=" << zero_reductions;
    return os.str();
}

namespace {

// Working representation: terms sorted descending under the active order.
using TermVec = std::vector<Term>;

TermVec to_sorted(const Poly &p, const MonomialOrder &order) {
    TermVec v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [&](const Term &a, const Term &b) { return order.greater(a.mon, b.mon); });
    return v;
}

Poly to_poly(const AmbientPtr &ambient, TermVec v) {
    return Poly::from_terms(ambient, std::move(v));
}

// r = a - c*m*b, all inputs sorted descending; single merge pass.
TermVec merge_subtract(const TermVec &a, const Rational &c, const Monomial &m, const TermVec &b,
                       const MonomialOrder &order) {
    TermVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Monomial bm = b[j].mon * m;
        const int cmp = order.compare(a[i].mon, bm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({bm, -c * b[j].coef});
            ++j;
        } else {
            Rational s = a[i].coef - c * b[j].coef;
            if (s != 0)
                r.push_back({a[i].mon, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i)
        r.push_back(a[i]);
    for (; j < b.size(); ++j)
        r.push_back({b[j].mon * m, -c * b[j].coef});
    return r;
}

long coeff_bits(const Rational &q) {
    return static_cast<long>(
        std::max(mpz_sizeinbase(q.get_num().get_mpz_t(), 2), mpz_sizeinbase(q.get_den().get_mpz_t(), 2)));
}

// Clear denominators, strip integer content, make the leading sign positive.
void normalize_content(TermVec &v) {
    if (v.empty())
        return;
    mpz_class den_lcm(1);
    for (const auto &t : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    mpz_class content(0);
    for (const auto &t : v) {
        mpz_class num = t.coef.get_num() * (den_lcm / t.coef.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class scale(den_lcm, content);
    scale.canonicalize();
    if (v.front().coef < 0)
        scale = -scale;
    for (auto &t : v)
        t.coef *= scale;
}

struct Reducer {
    const std::vector<TermVec> &basis;
    const MonomialOrder &order;
    GbStats *stats = nullptr;

    // Full normal form; every term of the output is irreducible.
    TermVec reduce(TermVec p) const {
        TermVec out;
        while (!p.empty()) {
            bool reduced_step = false;
            for (const auto &g : basis) {
                if (g.empty())
                    continue;
                if (g.front().mon.divides(p.front().mon)) {
                    const Rational c = p.front().coef / g.front().coef;
                    const Monomial m = p.front().mon / g.front().mon;
                    p = merge_subtract(p, c, m, g, order);
                    reduced_step = true;
                    break;
                }
            }
            if (!reduced_step) {
                out.push_back(p.front());
                p.erase(p.begin());
            }
            if (stats && !p.empty())
                stats->max_degree = std::max(stats->max_degree, static_cast<int>(p.front().mon.degree()));
        }
        return out;
    }
};

struct Pair {
    int i, j;
    Monomial lcm;
};

// Normal selection strategy: lowest lcm degree, then the term order, then
// generator indices.
bool pair_before(const Pair &a, const Pair &b, const MonomialOrder &order) {
    if (a.lcm.degree() != b.lcm.degree())
        return a.lcm.degree() < b.lcm.degree();
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0)
        return c < 0;
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

class BuchbergerRun {
  public:
    BuchbergerRun(const MonomialOrder &order, const GbConfig &config)
        : order_(order), config_(config) {}

    void add_input(TermVec v) {
        if (v.empty())
            return;
        normalize_content(v);
        update_pairs_and_insert(std::move(v));
    }

    void run() {
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                         [&](const Pair &a, const Pair &b) { return pair_before(a, b, order_); });
            Pair p = *best;
            pairs_.erase(best);

            if (++stats_.pairs_processed > config_.max_pairs)
                throw GbLimitError("pair cap exceeded: " + stats_.summary(), stats_);

            TermVec s = spoly(p);
            Reducer red{gens_, order_, &stats_};
            TermVec nf = red.reduce(std::move(s));
            if (nf.empty()) {
                ++stats_.zero_reductions;
                continue;
            }
            normalize_content(nf);
            for (const auto &t : nf) {
                const long bits = coeff_bits(t.coef);
                stats_.max_coeff_bits = std::max(stats_.max_coeff_bits, bits);
                if (bits > config_.max_coeff_bits)
                    throw GbLimitError("coefficient cap exceeded: " + stats_.summary(), stats_);
            }
            update_pairs_and_insert(std::move(nf));
        }
    }

    // Minimalize and tail-reduce into the unique reduced basis.
    std::vector<TermVec> reduced_basis() {
        std::vector<TermVec> kept;
        for (size_t i = 0; i < gens_.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < gens_.size() && !redundant; ++j) {
                if (i == j)
                    continue;
                if (gens_[j].front().mon.divides(gens_[i].front().mon) &&
                    (gens_[j].front().mon != gens_[i].front().mon || j < i))
                    redundant = true;
            }
            if (!redundant)
                kept.push_back(gens_[i]);
        }
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<TermVec> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i)
                    others.push_back(kept[j]);
            Reducer red{others, order_, nullptr};
            kept[i] = red.reduce(kept[i]);
            normalize_content(kept[i]);
        }
        std::sort(kept.begin(), kept.end(), [&](const TermVec &a, const TermVec &b) {
            return order_.less(a.front().mon, b.front().mon);
        });
        return kept;
    }

    const GbStats &stats() const { return stats_; }

  private:
    TermVec spoly(const Pair &p) {
        const TermVec &f = gens_[p.i];
        const TermVec &g = gens_[p.j];
        // lcm/lt(f) * f / lc(f)  -  lcm/lt(g) * g / lc(g)
        TermVec left;
        left.reserve(f.size());
        const Monomial mf = p.lcm / f.front().mon;
        const Rational cf = 1 / f.front().coef;
        for (const auto &t : f)
            left.push_back({t.mon * mf, t.coef * cf});
        const Monomial mg = p.lcm / g.front().mon;
        const Rational cg = 1 / g.front().coef;
        return merge_subtract(left, cg, mg, g, order_);
    }

    // Gebauer-Moeller pair update for a new basis element.
    void update_pairs_and_insert(TermVec h) {
        const int t = static_cast<int>(gens_.size());
        const Monomial lt_h = h.front().mon;

        std::vector<Pair> surviving;
        surviving.reserve(pairs_.size());
        for (auto &p : pairs_) {
            const Monomial l = p.lcm;
            if (lt_h.divides(l) && Monomial::lcm(gens_[p.i].front().mon, lt_h) != l &&
                Monomial::lcm(gens_[p.j].front().mon, lt_h) != l) {
                ++stats_.pairs_skipped;
                continue;
            }
            surviving.push_back(std::move(p));
        }
        pairs_ = std::move(surviving);

        std::vector<Pair> fresh;
        fresh.reserve(t);
        for (int i = 0; i < t; ++i)
            fresh.push_back({i, t, Monomial::lcm(gens_[i].front().mon, lt_h)});

        // Drop pairs whose lcm is properly divided by another new pair's lcm;
        // within an equal-lcm class keep one pair, or none when any member
        // has coprime leading terms (product criterion).
        for (size_t a = 0; a < fresh.size(); ++a) {
            bool drop = false;
            for (size_t b = 0; b < fresh.size() && !drop; ++b) {
                if (a == b)
                    continue;
                if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm))
                    drop = true;
            }
            if (!drop) {
                for (size_t b = 0; b < fresh.size() && !drop; ++b) {
                    if (fresh[b].lcm != fresh[a].lcm)
                        continue;
                    if (Monomial::coprime(gens_[fresh[b].i].front().mon, lt_h))
                        drop = true; // whole class handled by the product criterion
                    else if (b < a)
                        drop = true; // one representative per class
                }
            }
            if (drop)
                ++stats_.pairs_skipped;
            else
                pairs_.push_back(fresh[a]);
        }

        gens_.push_back(std::move(h));
    }

    const MonomialOrder &order_;
    const GbConfig &config_;
    std::vector<TermVec> gens_;
    std::vector<Pair> pairs_;
    GbStats stats_;
};

} // namespace

Poly reduce(const Poly &p, const std::vector<Poly> &basis, const MonomialOrder &order) {
    std::vector<TermVec> bs;
    bs.reserve(basis.size());
    for (const auto &g : basis) {
        require_same_ambient(p, g);
        if (!g.is_zero())
            bs.push_back(to_sorted(g, order));
    }
    Reducer red{bs, order, nullptr};
    return to_poly(p.ambient(), red.reduce(to_sorted(p, order)));
}

Poly reduce(const Poly &p, const IdealBasis &basis) {
    return reduce(p, basis.generators, basis.order);
}

IdealBasis buchberger(const std::vector<Poly> &gens, const MonomialOrder &order,
                      const GbConfig &config) {
    if (gens.empty())
        throw std::invalid_argument("buchberger requires at least one generator");
    const AmbientPtr ambient = gens.front().ambient();

    // Canonical input: normalized, deduplicated, sorted by leading monomial.
    std::vector<TermVec> input;
    for (const auto &g : gens) {
        require_same_ambient(gens.front(), g);
        if (g.is_zero())
            continue;
        TermVec v = to_sorted(g, order);
        normalize_content(v);
        input.push_back(std::move(v));
    }
    std::sort(input.begin(), input.end(), [&](const TermVec &a, const TermVec &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (size_t k = 0; k < a.size(); ++k) {
            const int c = order.compare(a[k].mon, b[k].mon);
            if (c != 0)
                return c < 0;
            if (a[k].coef != b[k].coef)
                return a[k].coef < b[k].coef;
        }
        return false;
    });
    input.erase(std::unique(input.begin(), input.end(),
                            [](const TermVec &a, const TermVec &b) {
                                if (a.size() != b.size())
                                    return false;
                                for (size_t k = 0; k < a.size(); ++k)
                                    if (a[k].mon != b[k].mon || a[k].coef != b[k].coef)
                                        return false;
                                return true;
                            }),
                input.end());

    BuchbergerRun run(order, config);
    for (auto &v : input)
        run.add_input(std::move(v));
    run.run();

    IdealBasis out{std::vector<Poly>{}, order, true, run.stats()};
    for (auto &v : run.reduced_basis())
        out.generators.push_back(to_poly(ambient, std::move(v)));
    return out;
}

IdealBasis eliminate(const std::vector<Poly> &gens, const std::vector<int> &drop_vars,
                     const GbConfig &config) {
    if (gens.empty())
        throw std::invalid_argument("eliminate requires at least one generator");
    const AmbientPtr ambient = gens.front().ambient();
    for (int v : drop_vars)
        if (v < 0 || v >= ambient->size())
            throw std::invalid_argument("drop variable outside the ambient");

    const MonomialOrder order = MonomialOrder::block_elimination(drop_vars, ambient->size());
    IdealBasis gb = buchberger(gens, order, config);

    std::vector<bool> dropped(ambient->size(), false);
    for (int v : drop_vars)
        dropped[v] = true;
    std::vector<std::string> keep_names;
    for (int v = 0; v < ambient->size(); ++v)
        if (!dropped[v])
            keep_names.push_back(ambient->name(v));
    AmbientPtr keep = make_ambient(keep_names);

    IdealBasis out{std::vector<Poly>{}, MonomialOrder::grevlex(keep->size()), true, gb.stats};
    for (const auto &g : gb.generators) {
        bool uses_dropped = false;
        for (const auto &t : g.terms())
            for (int v : drop_vars)
                if (t.mon.exponent(v) > 0)
                    uses_dropped = true;
        if (!uses_dropped)
            out.generators.push_back(g.renamed(keep));
    }
    return out;
}

IdealBasis eliminate(const std::vector<Poly> &gens, const std::vector<std::string> &drop_names,
                     const GbConfig &config) {
    if (gens.empty())
        throw std::invalid_argument("eliminate requires at least one generator");
    std::vector<int> vars;
    for (const auto &n : drop_names) {
        const int idx = gens.front().ambient()->index_of(n);
        if (idx < 0)
            throw std::invalid_argument("unknown variable: " + n);
        vars.push_back(idx);
    }
    return eliminate(gens, vars, config);
}

namespace {

// Ambient with one fresh variable (for Rabinowitsch saturation).
AmbientPtr extended_ambient(const AmbientPtr &ambient, std::string *fresh_name) {
    std::string name = "_t";
    while (ambient->index_of(name) >= 0)
        name += "_";
    std::vector<std::string> names = ambient->names();
    names.insert(names.begin(), name);
    *fresh_name = name;
    return make_ambient(names);
}

} // namespace

IdealBasis saturate(const std::vector<Poly> &gens, const Poly &f, const GbConfig &config) {
    if (f.is_zero())
        throw std::invalid_argument("cannot saturate by the zero polynomial");
    const AmbientPtr ambient = gens.empty() ? f.ambient() : gens.front().ambient();
    std::string fresh;
    AmbientPtr ext = extended_ambient(ambient, &fresh);

    std::vector<Poly> ext_gens;
    for (const auto &g : gens)
        ext_gens.push_back(g.renamed(ext));
    const Poly t = Poly::variable(ext, fresh);
    ext_gens.push_back(t * f.renamed(ext) - Poly::constant(ext, 1));

    IdealBasis elim = eliminate(ext_gens, std::vector<std::string>{fresh}, config);
    // eliminate() already restricted the ambient back to the original names.
    IdealBasis out{std::vector<Poly>{}, MonomialOrder::grevlex(ambient->size()), true, elim.stats};
    for (const auto &g : elim.generators)
        out.generators.push_back(g.renamed(ambient));
    return out;
}

bool member(const Poly &p, const IdealBasis &gb) { return reduce(p, gb).is_zero(); }

bool member(const Poly &p, const std::vector<Poly> &gens, const GbConfig &config) {
    const MonomialOrder order = MonomialOrder::grevlex(p.ambient()->size());
    return member(p, buchberger(gens, order, config));
}

IdealBasis saturate_and_eliminate(const std::vector<Poly> &gens, const Poly &f,
                                  const std::vector<int> &drop_vars, const GbConfig &config) {
    if (gens.empty())
        throw std::invalid_argument("empty generator list");
    const AmbientPtr ambient = gens.front().ambient();
    std::string fresh;
    AmbientPtr ext = extended_ambient(ambient, &fresh);

    std::vector<Poly> ext_gens;
    for (const auto &g : gens)
        ext_gens.push_back(g.renamed(ext));
    ext_gens.push_back(Poly::variable(ext, fresh) * f.renamed(ext) - Poly::constant(ext, 1));

    std::vector<std::string> drop_names{fresh};
    for (int v : drop_vars)
        drop_names.push_back(ambient->name(v));
    return eliminate(ext_gens, drop_names, config);
}

} // namespace eipose
