#include "macdual/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace macdual {

std::pair<std::vector<Poly>, Poly> divide(const Poly& f, const std::vector<Poly>& G,
                                          const MonomialOrder& ord) {
    if (G.empty()) throw std::invalid_argument("divide: empty divisor list");
    const int n = f.nvars();
    std::vector<std::pair<Monomial, Rat>> lts;
    for (const Poly& g : G) {
        if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
        lts.push_back(leading_term(ord, g));
    }
    std::vector<Poly> quotients(G.size(), Poly(n));
    Poly remainder(n);
    Poly work = f;
    while (!work.is_zero()) {
        auto [wm, wc] = leading_term(ord, work);
        bool divided = false;
        for (size_t i = 0; i < G.size(); ++i) {
            auto q = wm.divide(lts[i].first);
            if (!q) continue;
            Rat factor = wc / lts[i].second;
            quotients[i].add_term(*q, factor);
            work = work - G[i].mul_monomial(*q, factor);
            divided = true;
            break;
        }
        if (!divided) {
            remainder.add_term(wm, wc);
            work.add_term(wm, -wc);
        }
    }
    return {std::move(quotients), std::move(remainder)};
}

Poly division_remainder(const Poly& f, const std::vector<Poly>& G, const MonomialOrder& ord) {
    return divide(f, G, ord).second;
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_poly: zero input");
    auto [mf, cf] = leading_term(ord, f);
    auto [mg, cg] = leading_term(ord, g);
    Monomial l = Monomial::lcm(mf, mg);
    return f.mul_monomial(*l.divide(mf), 1 / cf) - g.mul_monomial(*l.divide(mg), 1 / cg);
}

bool is_groebner(const std::vector<Poly>& G, const MonomialOrder& ord) {
    for (const Poly& g : G) {
        if (g.is_zero()) throw std::invalid_argument("is_groebner: zero member");
        if (!g.is_homogeneous()) throw std::invalid_argument("is_groebner: members must be homogeneous");
    }
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            Poly s = s_poly(G[i], G[j], ord);
            if (s.is_zero()) continue;
            if (!division_remainder(s, G, ord).is_zero()) return false;
        }
    }
    return true;
}

namespace {

// Tail-reduces every member against the others and drops members whose
// leading monomial is divisible by another's; result sorted by leading
// monomial, monic.
std::vector<Poly> interreduce(std::vector<Poly> basis, const MonomialOrder& ord) {
    // minimalize leading terms
    std::vector<Monomial> lms;
    for (const Poly& g : basis) lms.push_back(leading_monomial(ord, g));
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) {
                keep[i] = false;
                break;
            }
        }
    std::vector<Poly> kept;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) kept.push_back(basis[i]);
    // full reduction of each member against the rest
    std::vector<Poly> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Poly r = others.empty() ? kept[i] : division_remainder(kept[i], others, ord);
        if (r.is_zero()) continue;
        auto [m, c] = leading_term(ord, r);
        out.push_back(r * (1 / c));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return ord.greater(leading_monomial(ord, a), leading_monomial(ord, b));
    });
    return out;
}

} // namespace

BuchbergerResult buchberger(const std::vector<Poly>& G, const MonomialOrder& ord, int degree_cap) {
    std::vector<Poly> basis;
    for (const Poly& g : G) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("buchberger: generators must be homogeneous");
        if (g.degree() > degree_cap)
            throw std::invalid_argument("buchberger: degree cap below a generator degree");
        basis.push_back(g);
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

    bool truncated = false;
    // S-pair queue keyed by lcm degree, processed degree by degree.
    using Pair = std::pair<size_t, size_t>;
    std::multimap<int, Pair> queue;
    auto push_pairs = [&](size_t j) {
        Monomial lj = leading_monomial(ord, basis[j]);
        for (size_t i = 0; i < j; ++i) {
            Monomial li = leading_monomial(ord, basis[i]);
            if (Monomial::gcd(li, lj).is_one()) continue; // coprime criterion
            int deg = Monomial::lcm(li, lj).degree();
            if (deg > degree_cap) {
                truncated = true;
                continue;
            }
            queue.emplace(deg, Pair{i, j});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto it = queue.begin();
        auto [i, j] = it->second;
        queue.erase(it);
        Poly s = s_poly(basis[i], basis[j], ord);
        if (s.is_zero()) continue;
        Poly r = division_remainder(s, basis, ord);
        if (r.is_zero()) continue;
        auto [m, c] = leading_term(ord, r);
        basis.push_back(r * (1 / c));
        push_pairs(basis.size() - 1);
    }
    return {interreduce(std::move(basis), ord), truncated};
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return CanonicalTermLess{}(a, b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Monomial> initial_ideal(const std::vector<Poly>& GB, const MonomialOrder& ord) {
    if (!is_groebner(GB, ord))
        throw std::invalid_argument("initial_ideal: input is not a Groebner basis");
    std::vector<Monomial> lms;
    for (const Poly& g : GB) lms.push_back(leading_monomial(ord, g));
    return minimalize_monomials(std::move(lms));
}

struct GradedIdeal::Cache {
    std::mutex mutex; // idempotent per-degree fill
    std::map<int, std::pair<QMat, std::vector<int>>> pieces;
};

GradedIdeal::GradedIdeal(int nvars, std::vector<Poly> generators)
    : nvars_(nvars), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const Poly& g : gens_) {
        if (g.is_zero()) throw std::invalid_argument("GradedIdeal: zero generator");
        if (!g.is_homogeneous())
            throw std::invalid_argument("GradedIdeal: generators must be homogeneous");
        if (g.nvars() != nvars_) throw std::invalid_argument("GradedIdeal: ring mismatch");
    }
}

std::pair<QMat, std::vector<int>>& GradedIdeal::piece_data(int j) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->pieces.find(j);
    if (it != cache_->pieces.end()) return it->second;
    auto mons = monomials_of_degree(nvars_, j);
    QMat span(0, static_cast<int>(mons.size()));
    for (const Poly& g : gens_) {
        int dg = g.degree();
        if (dg > j) continue;
        for (const Monomial& m : monomials_of_degree(nvars_, j - dg)) {
            QMat row(1, static_cast<int>(mons.size()));
            auto v = coefficient_vector(g.mul_monomial(m), mons);
            for (size_t c = 0; c < v.size(); ++c) row(0, static_cast<int>(c)) = v[c];
            span = span.vstack(row);
        }
    }
    std::vector<int> pivots;
    QMat rref = span.rref(&pivots);
    // keep only the nonzero rows
    QMat trimmed(static_cast<int>(pivots.size()), span.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int c = 0; c < span.cols(); ++c) trimmed(static_cast<int>(r), c) = rref(static_cast<int>(r), c);
    auto [ins, ok] = cache_->pieces.emplace(j, std::make_pair(std::move(trimmed), std::move(pivots)));
    return ins->second;
}

int GradedIdeal::dim(int j) const { return static_cast<int>(piece_data(j).second.size()); }

const QMat& GradedIdeal::piece(int j) const { return piece_data(j).first; }

bool GradedIdeal::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous())
        throw std::invalid_argument("GradedIdeal::contains: homogeneous input required");
    int j = f.degree();
    auto& [rref, pivots] = piece_data(j);
    auto mons = monomials_of_degree(nvars_, j);
    std::vector<Rat> v = coefficient_vector(f, mons);
    for (size_t r = 0; r < pivots.size(); ++r) {
        const Rat c = v[pivots[r]];
        if (c == 0) continue;
        for (size_t col = 0; col < mons.size(); ++col) {
            const Rat& e = rref(static_cast<int>(r), static_cast<int>(col));
            if (e != 0) v[col] -= c * e;
        }
    }
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

Int GradedIdeal::quotient_hf(int j) const {
    if (j < 0) return 0;
    return Int(dim_of_degree(nvars_, j)) - dim(j);
}

GradedQuotient GradedIdeal::quotient(int degree_cap) const {
    std::vector<GradedQuotient::Piece> pieces;
    for (int j = 0; j <= degree_cap; ++j) {
        auto& [rref, pivots] = piece_data(j);
        GradedQuotient::Piece piece;
        piece.monomials = monomials_of_degree(nvars_, j);
        piece.ideal_rref = rref;
        piece.pivot_cols = pivots;
        std::vector<bool> is_pivot(piece.monomials.size(), false);
        for (int p : pivots) is_pivot[p] = true;
        for (size_t c = 0; c < piece.monomials.size(); ++c)
            if (!is_pivot[c]) {
                piece.std_cols.push_back(static_cast<int>(c));
                piece.std_monomials.push_back(piece.monomials[c]);
            }
        bool artinian_here = piece.std_monomials.empty();
        pieces.push_back(std::move(piece));
        if (artinian_here && j > 0) return GradedQuotient(nvars_, std::move(pieces));
    }
    throw std::domain_error("GradedIdeal::quotient: not Artinian within the degree cap");
}

bool ideals_equal(const GradedIdeal& a, const GradedIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("ideals_equal: ring mismatch");
    for (const Poly& g : a.generators())
        if (!b.contains(g)) return false;
    for (const Poly& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

HilbertSeries monomial_quotient_hilbert(const std::vector<Monomial>& gens, int nvars) {
    for (const Monomial& g : gens)
        if (g.nvars() != nvars)
            throw std::invalid_argument("monomial_quotient_hilbert: ring mismatch");
    // Artinian check: some generator must be a pure power of each variable.
    for (int v = 0; v < nvars; ++v) {
        bool pure = false;
        for (const Monomial& g : gens) {
            bool only_v = g[v] > 0;
            for (int w = 0; w < nvars && only_v; ++w)
                if (w != v && g[w] > 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw std::invalid_argument("monomial_quotient_hilbert: quotient is not Artinian");
    }
    std::vector<Int> h;
    for (int j = 0;; ++j) {
        Int count = 0;
        for (const Monomial& m : monomials_of_degree(nvars, j)) {
            bool in_ideal = false;
            for (const Monomial& g : gens)
                if (g.divides(m)) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) ++count;
        }
        if (count == 0) break;
        h.push_back(count);
    }
    return HilbertSeries(std::move(h), 0);
}

} // namespace macdual
