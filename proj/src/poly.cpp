#include "macdual/poly.hpp"

#include <algorithm>

namespace macdual {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || nvars <= 0) return out;
    std::vector<int> exps(nvars, 0);
    // Enumerate compositions of `degree` into nvars parts.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            exps[var] = remaining;
            out.emplace_back(exps);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return CanonicalTermLess{}(a, b);
    });
    return out;
}

Poly contract(const Poly& f, const Poly& dual) {
    if (f.nvars() != dual.nvars())
        throw std::invalid_argument("contract: variable count mismatch");
    Poly result(f.nvars());
    for (auto& [mf, cf] : f.terms()) {
        for (auto& [mF, cF] : dual.terms()) {
            auto q = mF.divide(mf);
            if (!q) continue; // negative exponent: term vanishes
            result.add_term(*q, cf * cF);
        }
    }
    return result;
}

std::pair<Monomial, Rat> leading_term(const MonomialOrder& ord, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
    auto it = f.terms().begin();
    const Monomial* best = &it->first;
    const Rat* coef = &it->second;
    for (++it; it != f.terms().end(); ++it) {
        if (ord.greater(it->first, *best)) {
            best = &it->first;
            coef = &it->second;
        }
    }
    return {*best, *coef};
}

Monomial leading_monomial(const MonomialOrder& ord, const Poly& f) {
    return leading_term(ord, f).first;
}

std::string MonomialOrder::describe(const std::vector<std::string>& names) const {
    std::string s = kind_ == OrderKind::Grevlex ? "grevlex:" : "lex:";
    for (size_t i = 0; i < priority_.size(); ++i) {
        if (i) s += ",";
        s += names[priority_[i]];
    }
    return s;
}

} // namespace macdual
