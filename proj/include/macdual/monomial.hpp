#ifndef MACDUAL_MONOMIAL_HPP
#define MACDUAL_MONOMIAL_HPP

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace macdual {

// Monomial in a fixed number of variables, stored as an exponent vector.
// The ambient variable count is part of the value; mixing widths is an error.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_) {
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
            deg_ += e;
        }
    }

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    static Monomial var(int i, int nvars, int power = 1) {
        std::vector<int> e(nvars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return deg_; }
    int operator[](int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& other) const {
        check_same_width(other);
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_same_width(o);
        std::vector<int> e(exps_);
        for (int i = 0; i < nvars(); ++i) e[i] += o.exps_[i];
        return Monomial(std::move(e));
    }

    // Componentwise quotient; nullopt when any exponent would go negative.
    std::optional<Monomial> divide(const Monomial& by) const {
        check_same_width(by);
        std::vector<int> e(exps_);
        for (int i = 0; i < nvars(); ++i) {
            e[i] -= by.exps_[i];
            if (e[i] < 0) return std::nullopt;
        }
        return Monomial(std::move(e));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same_width(b);
        std::vector<int> e(a.exps_);
        for (int i = 0; i < a.nvars(); ++i)
            if (b.exps_[i] > e[i]) e[i] = b.exps_[i];
        return Monomial(std::move(e));
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_same_width(b);
        std::vector<int> e(a.exps_);
        for (int i = 0; i < a.nvars(); ++i)
            if (b.exps_[i] < e[i]) e[i] = b.exps_[i];
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    void check_same_width(const Monomial& o) const {
        if (nvars() != o.nvars())
            throw std::invalid_argument("Monomial: mixed variable counts");
    }

private:
    std::vector<int> exps_;
    int deg_ = 0;
};

// Canonical term order used for storage, printing and matrix column bases:
// graded reverse lexicographic with the natural variable priority, largest
// monomial first.
struct CanonicalTermLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        for (int i = a.nvars() - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// All monomials of the given degree, in canonical (descending) order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

inline long dim_of_degree(int nvars, int degree) {
    if (degree < 0) return 0;
    long num = 1, den = 1;
    for (int i = 1; i < nvars; ++i) {
        num *= degree + i;
        den *= i;
    }
    return num / den;
}

} // namespace macdual

#endif
