#include "eipose/poly/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eipose {

namespace {
std::vector<int> identity_priority(int nvars) {
    std::vector<int> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return p;
}
} // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> priority, int front_size)
    : kind_(kind), priority_(std::move(priority)), front_size_(front_size) {
    std::vector<bool> seen(priority_.size(), false);
    for (int v : priority_) {
        if (v < 0 || v >= static_cast<int>(priority_.size()) || seen[v])
            throw std::invalid_argument("priority is not a permutation");
        seen[v] = true;
    }
}

MonomialOrder MonomialOrder::lex(int nvars) { return lex(identity_priority(nvars)); }
MonomialOrder MonomialOrder::grevlex(int nvars) { return grevlex(identity_priority(nvars)); }

MonomialOrder MonomialOrder::lex(std::vector<int> priority) {
    return MonomialOrder(Kind::lex, std::move(priority), 0);
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> priority) {
    return MonomialOrder(Kind::grevlex, std::move(priority), 0);
}

MonomialOrder MonomialOrder::block_elimination(const std::vector<int> &front_vars, int nvars) {
    std::vector<bool> front(nvars, false);
    for (int v : front_vars) {
        if (v < 0 || v >= nvars)
            throw std::invalid_argument("front variable outside the ambient");
        front[v] = true;
    }
    std::vector<int> priority;
    priority.reserve(nvars);
    for (int v = 0; v < nvars; ++v)
        if (front[v])
            priority.push_back(v);
    const int fs = static_cast<int>(priority.size());
    for (int v = 0; v < nvars; ++v)
        if (!front[v])
            priority.push_back(v);
    return MonomialOrder(Kind::block, std::move(priority), fs);
}

// Graded reverse lex on the priority positions [from, to): higher block degree
// wins; on ties the smaller exponent at the least significant position wins.
int MonomialOrder::grevlex_compare(const Monomial &a, const Monomial &b, int from, int to) const {
    int da = 0, db = 0;
    for (int pos = from; pos < to; ++pos) {
        da += a.exponent(priority_[pos]);
        db += b.exponent(priority_[pos]);
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (int pos = to - 1; pos >= from; --pos) {
        const int ea = a.exponent(priority_[pos]);
        const int eb = b.exponent(priority_[pos]);
        if (ea != eb)
            return ea > eb ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
    if (a.nvars() != nvars() || b.nvars() != nvars())
        throw std::invalid_argument("monomial/ordering ambient mismatch");
    switch (kind_) {
    case Kind::lex:
        for (int pos = 0; pos < nvars(); ++pos) {
            const int ea = a.exponent(priority_[pos]);
            const int eb = b.exponent(priority_[pos]);
            if (ea != eb)
                return ea < eb ? -1 : 1;
        }
        return 0;
    case Kind::grevlex:
        return grevlex_compare(a, b, 0, nvars());
    case Kind::block: {
        if (int c = grevlex_compare(a, b, 0, front_size_))
            return c;
        return grevlex_compare(a, b, front_size_, nvars());
    }
    }
    return 0;
}

bool MonomialOrder::operator==(const MonomialOrder &other) const {
    return kind_ == other.kind_ && priority_ == other.priority_ && front_size_ == other.front_size_;
}

bool MonomialOrder::eliminates(const std::vector<int> &vars) const {
    if (kind_ == Kind::lex)
        return static_cast<int>(vars.size()) <= nvars() &&
               std::equal(vars.begin(), vars.end(), priority_.begin());
    if (kind_ != Kind::block || static_cast<int>(vars.size()) != front_size_)
        return false;
    std::vector<int> a(vars), b(priority_.begin(), priority_.begin() + front_size_);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace eipose
