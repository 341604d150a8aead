#ifndef EIPOSE_POLY_ORDER_HPP
#define EIPOSE_POLY_ORDER_HPP

#include <vector>

#include "eipose/poly/monomial.hpp"

namespace eipose {

/// Total monomial order: lex, grevlex, or a two-block elimination order
/// (front-block grevlex, then back-block grevlex). Variable priority is a
/// permutation of the ambient indices, highest first.
class MonomialOrder {
  public:
    enum class Kind { lex, grevlex, block };

    static MonomialOrder lex(int nvars);
    static MonomialOrder grevlex(int nvars);
    static MonomialOrder lex(std::vector<int> priority);
    static MonomialOrder grevlex(std::vector<int> priority);
    /// Elimination order: every monomial containing a front variable beats
    /// every monomial in the back block alone.
    static MonomialOrder block_elimination(const std::vector<int> &front_vars, int nvars);

    Kind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(priority_.size()); }
    const std::vector<int> &priority() const { return priority_; }
    /// Number of leading priority positions forming the front block (block
    /// orders only; 0 otherwise).
    int front_size() const { return front_size_; }

    /// <0, 0, >0 when a < b, a = b, a > b.
    int compare(const Monomial &a, const Monomial &b) const;
    bool less(const Monomial &a, const Monomial &b) const { return compare(a, b) < 0; }
    bool greater(const Monomial &a, const Monomial &b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder &other) const;

    /// True when the front block equals `vars` as a set (block orders).
    bool eliminates(const std::vector<int> &vars) const;

  private:
    MonomialOrder(Kind kind, std::vector<int> priority, int front_size);

    int grevlex_compare(const Monomial &a, const Monomial &b, int from, int to) const;

    Kind kind_;
    std::vector<int> priority_; // priority_[pos] = ambient variable index
    int front_size_ = 0;
};

} // namespace eipose

#endif
