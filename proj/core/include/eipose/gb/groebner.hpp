#ifndef EIPOSE_GB_GROEBNER_HPP
#define EIPOSE_GB_GROEBNER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "eipose/poly/poly.hpp"

namespace eipose {

struct GbConfig {
    long max_pairs = 200000;     // S-pairs processed before giving up
    long max_coeff_bits = 65536; // per-coefficient size cap
};

struct GbStats {
    long pairs_processed = 0;
    long pairs_skipped = 0; // dropped by the Gebauer-Moeller criteria
    int max_degree = 0;     // largest intermediate degree seen
    long max_coeff_bits = 0;
    long zero_reductions = 0;

    std::string summary() const;
};

/// Raised when a Buchberger run exceeds its resource caps; carries the
/// progress counters reached at that point.
struct GbLimitError : std::runtime_error {
    GbLimitError(const std::string &what, GbStats s) : std::runtime_error(what), stats(s) {}
    GbStats stats;
};

/// Generator set with the order it was computed under. When `reduced` is
/// set the generators form the unique reduced Groebner basis of the ideal.
struct IdealBasis {
    std::vector<Poly> generators;
    MonomialOrder order;
    bool reduced = false;
    GbStats stats;
};

/// Full normal form: no term of the result is divisible by any generator's
/// leading term. Total function; p - reduce(p) lies in <basis>.
Poly reduce(const Poly &p, const std::vector<Poly> &basis, const MonomialOrder &order);
Poly reduce(const Poly &p, const IdealBasis &basis);

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// Gebauer-Moeller update. Deterministic: identical inputs produce an
/// identical reduced basis.
IdealBasis buchberger(const std::vector<Poly> &gens, const MonomialOrder &order,
                      const GbConfig &config = {});

/// Groebner basis of the elimination ideal <gens> ∩ C[ambient \ drop_vars],
/// over the restricted ambient, computed under a block elimination order.
IdealBasis eliminate(const std::vector<Poly> &gens, const std::vector<int> &drop_vars,
                     const GbConfig &config = {});
IdealBasis eliminate(const std::vector<Poly> &gens, const std::vector<std::string> &drop_names,
                     const GbConfig &config = {});

/// Saturation <gens> : f^inf via the Rabinowitsch construction (adjoin
/// t*f - 1, eliminate t). Result lives over the original ambient.
IdealBasis saturate(const std::vector<Poly> &gens, const Poly &f, const GbConfig &config = {});

/// Ideal membership through normal-form reduction.
bool member(const Poly &p, const IdealBasis &gb);
bool member(const Poly &p, const std::vector<Poly> &gens, const GbConfig &config = {});

/// Saturate by f, then eliminate drop_vars, in one pass (the two-step
/// composition used by every offline derivation).
IdealBasis saturate_and_eliminate(const std::vector<Poly> &gens, const Poly &f,
                                  const std::vector<int> &drop_vars, const GbConfig &config = {});

} // namespace eipose

#endif
