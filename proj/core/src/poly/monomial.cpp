#include "eipose/poly/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace eipose {

Ambient::Ambient(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > Monomial::kMaxVars)
        throw std::invalid_argument("ambient exceeds the supported variable count");
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
}

int Ambient::index_of(const std::string &name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

AmbientPtr make_ambient(std::vector<std::string> names) {
    return std::make_shared<const Ambient>(std::move(names));
}

Monomial::Monomial(int nvars, const std::vector<int> &exponents) : nvars_(static_cast<uint8_t>(nvars)) {
    if (static_cast<int>(exponents.size()) != nvars)
        throw std::invalid_argument("exponent vector length does not match the ambient");
    for (int i = 0; i < nvars; ++i)
        set_exponent(i, exponents[i]);
}

void Monomial::set_exponent(int var, int e) {
    if (e < 0 || e > 255)
        throw std::invalid_argument("exponent out of range");
    degree_ = static_cast<uint16_t>(degree_ - exp_[var] + e);
    exp_[var] = static_cast<uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial &other) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        const int e = exp_[i] + other.exp_[i];
        if (e > 255)
            throw std::overflow_error("monomial exponent overflow");
        r.exp_[i] = static_cast<uint8_t>(e);
    }
    r.degree_ = static_cast<uint16_t>(degree_ + other.degree_);
    return r;
}

bool Monomial::divides(const Monomial &other) const {
    for (int i = 0; i < nvars_; ++i)
        if (exp_[i] > other.exp_[i])
            return false;
    return true;
}

Monomial Monomial::operator/(const Monomial &other) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i)
        r.exp_[i] = static_cast<uint8_t>(exp_[i] - other.exp_[i]);
    r.degree_ = static_cast<uint16_t>(degree_ - other.degree_);
    return r;
}

Monomial Monomial::lcm(const Monomial &a, const Monomial &b) {
    Monomial r(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) {
        r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        r.degree_ = static_cast<uint16_t>(r.degree_ + r.exp_[i]);
    }
    return r;
}

bool Monomial::coprime(const Monomial &a, const Monomial &b) {
    for (int i = 0; i < a.nvars_; ++i)
        if (a.exp_[i] > 0 && b.exp_[i] > 0)
            return false;
    return true;
}

bool Monomial::operator==(const Monomial &other) const {
    if (nvars_ != other.nvars_ || degree_ != other.degree_)
        return false;
    return std::equal(exp_.begin(), exp_.begin() + nvars_, other.exp_.begin());
}

size_t Monomial::hash() const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < nvars_; ++i) {
        h ^= exp_[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace eipose
