#ifndef MACDUAL_POLY_HPP
#define MACDUAL_POLY_HPP

#include "macdual/monomial.hpp"
#include "macdual/order.hpp"
#include "macdual/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace macdual {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored in canonical descending order; no zero coefficient is
// ever kept. Values are immutable in spirit: operations return new objects.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, CanonicalTermLess>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const Rat& c) {
        Poly p(nvars);
        p.add_term(Monomial::one(nvars), c);
        return p;
    }

    static Poly term(const Monomial& m, const Rat& c) {
        Poly p(m.nvars());
        p.add_term(m, c);
        return p;
    }

    static Poly monomial(const Monomial& m) { return term(m, 1); }

    static Poly variable(int i, int nvars, int power = 1) {
        return monomial(Monomial::var(i, nvars, power));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c) {
        if (m.nvars() != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_)
            if (m.degree() > d) d = m.degree();
        return d; // -1 for the zero polynomial
    }

    bool is_homogeneous() const {
        int d = -1;
        for (auto& [m, c] : terms_) {
            if (d < 0) d = m.degree();
            else if (m.degree() != d) return false;
        }
        return true;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Poly operator+(const Poly& o) const {
        check_ring(o);
        Poly r(*this);
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        check_ring(o);
        Poly r(*this);
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_ring(o);
        Poly r(nvars_);
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    Poly operator*(const Rat& c) const {
        Poly r(nvars_);
        if (c == 0) return r;
        for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Poly mul_monomial(const Monomial& m, const Rat& c = 1) const {
        Poly r(nvars_);
        if (c == 0) return r;
        for (auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
        return r;
    }

    Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r = constant(nvars_, 1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Evaluation at a rational point.
    Rat evaluate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("Poly::evaluate: point dimension mismatch");
        Rat total = 0;
        for (auto& [m, c] : terms_) {
            Rat v = c;
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < m[i]; ++e) v *= point[i];
            total += v;
        }
        return total;
    }

    // Substitution x_i -> lambda * x_i.
    Poly scale_variable(int var, const Rat& lambda) const {
        Poly r(nvars_);
        for (auto& [m, c] : terms_) r.add_term(m, c * rat_pow(lambda, m[var]));
        return r;
    }

private:
    void check_ring(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Contraction action of the polynomial ring on its dual: a monomial acts by
// componentwise exponent subtraction and any term that would acquire a
// negative exponent is dropped.
Poly contract(const Poly& f, const Poly& dual);

// Leading term with respect to an explicit monomial order; the zero
// polynomial has none.
std::pair<Monomial, Rat> leading_term(const MonomialOrder& ord, const Poly& f);
Monomial leading_monomial(const MonomialOrder& ord, const Poly& f);

} // namespace macdual

#endif
