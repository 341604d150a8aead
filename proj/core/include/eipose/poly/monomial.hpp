#ifndef EIPOSE_POLY_MONOMIAL_HPP
#define EIPOSE_POLY_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eipose {

/// Ordered list of variable names shared by all polynomials of one ring.
class Ambient {
  public:
    explicit Ambient(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string &name(int i) const { return names_[i]; }
    const std::vector<std::string> &names() const { return names_; }

    /// Index of a variable name, or -1 when absent.
    int index_of(const std::string &name) const;

    bool operator==(const Ambient &other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(std::vector<std::string> names);

inline bool same_ambient(const AmbientPtr &a, const AmbientPtr &b) {
    return a == b || (a && b && *a == *b);
}

/// Dense exponent vector. All covered problems live in <= 16 variables.
class Monomial {
  public:
    static constexpr int kMaxVars = 16;

    Monomial() = default;
    explicit Monomial(int nvars) : nvars_(static_cast<uint8_t>(nvars)) {}
    Monomial(int nvars, const std::vector<int> &exponents);

    int nvars() const { return nvars_; }
    int exponent(int var) const { return exp_[var]; }
    int degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    void set_exponent(int var, int e);

    Monomial operator*(const Monomial &other) const;
    bool divides(const Monomial &other) const;
    /// Quotient this / other; caller must ensure divisibility.
    Monomial operator/(const Monomial &other) const;
    static Monomial lcm(const Monomial &a, const Monomial &b);
    static bool coprime(const Monomial &a, const Monomial &b);

    bool operator==(const Monomial &other) const;
    bool operator!=(const Monomial &other) const { return !(*this == other); }

    size_t hash() const;

  private:
    std::array<uint8_t, kMaxVars> exp_{};
    uint8_t nvars_ = 0;
    uint16_t degree_ = 0;
};

struct MonomialHash {
    size_t operator()(const Monomial &m) const { return m.hash(); }
};

} // namespace eipose

#endif
