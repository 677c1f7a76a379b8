#ifndef MACDUAL_ORDER_HPP
#define MACDUAL_ORDER_HPP

#include "macdual/monomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace macdual {

enum class OrderKind { Grevlex, Lex };

// Monomial order with an explicit variable priority (highest first).
// Grevlex compares total degree first and breaks ties reverse
// lexicographically from the lowest-priority variable; lex scans from the
// highest-priority variable and ignores degree.
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, std::vector<int> priority)
        : kind_(kind), priority_(std::move(priority)) {
        std::vector<bool> seen(priority_.size(), false);
        for (int v : priority_) {
            if (v < 0 || v >= static_cast<int>(priority_.size()) || seen[v])
                throw std::invalid_argument("MonomialOrder: priority must be a permutation");
            seen[v] = true;
        }
    }

    static MonomialOrder grevlex(int nvars) {
        std::vector<int> p(nvars);
        std::iota(p.begin(), p.end(), 0);
        return MonomialOrder(OrderKind::Grevlex, std::move(p));
    }

    static MonomialOrder lex(int nvars) {
        std::vector<int> p(nvars);
        std::iota(p.begin(), p.end(), 0);
        return MonomialOrder(OrderKind::Lex, std::move(p));
    }

    static MonomialOrder grevlex(std::vector<int> priority) {
        return MonomialOrder(OrderKind::Grevlex, std::move(priority));
    }

    static MonomialOrder lex(std::vector<int> priority) {
        return MonomialOrder(OrderKind::Lex, std::move(priority));
    }

    OrderKind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(priority_.size()); }
    const std::vector<int>& priority() const { return priority_; }

    // <0, 0, >0 for u < v, u == v, u > v.
    int compare(const Monomial& u, const Monomial& v) const {
        if (u.nvars() != nvars() || v.nvars() != nvars())
            throw std::invalid_argument("MonomialOrder: variable count mismatch");
        if (kind_ == OrderKind::Grevlex) {
            if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
            for (int i = nvars() - 1; i >= 0; --i) {
                int p = priority_[i];
                if (u[p] != v[p]) return u[p] > v[p] ? -1 : 1;
            }
            return 0;
        }
        for (int p : priority_) {
            if (u[p] != v[p]) return u[p] < v[p] ? -1 : 1;
        }
        return 0;
    }

    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }
    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

    // Does the order rank variable i above variable j?
    bool var_greater(int i, int j) const {
        return compare(Monomial::var(i, nvars()), Monomial::var(j, nvars())) > 0;
    }

    // Asserts a constraint list such as "variable v above all of others".
    bool satisfies_above(int v, const std::vector<int>& others) const {
        for (int o : others)
            if (!var_greater(v, o)) return false;
        return true;
    }

    std::string describe(const std::vector<std::string>& names) const;

private:
    OrderKind kind_;
    std::vector<int> priority_;
};

} // namespace macdual

#endif
