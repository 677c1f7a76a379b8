#include "macdual/binomial3.hpp"

#include "macdual/apolar.hpp"
#include "macdual/groebner.hpp"

#include <sstream>
#include <stdexcept>

namespace macdual {

std::string case_name(Binomial3Case c) {
    switch (c) {
        case Binomial3Case::VarSplit: return "VARSPLIT";
        case Binomial3Case::CiP: return "CI_P";
        case Binomial3Case::Type3: return "TYPE3";
        case Binomial3Case::R0: return "R0";
        case Binomial3Case::Other: return "OTHER";
    }
    return "?";
}

Binomial3Params Binomial3Params::make(int a, int b, int c, int e, int m) {
    if (a < 0 || b < 0 || c < 0 || e < 0 || m < 0)
        throw std::invalid_argument("Binomial3Params: exponents must be non-negative");
    Binomial3Params p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.e = e;
    p.m = m;
    p.n = e + m;
    if (p.n == 0) throw std::invalid_argument("Binomial3Params: n = e + m must be positive");
    p.q = (c + 1) / p.n;
    p.r = (c + 1) - p.n * p.q;
    p.d = a + b + c + p.n;
    if (e == 0 || m == 0)
        p.tag = Binomial3Case::VarSplit;
    else if (a < p.q * e || b < p.q * m)
        p.tag = Binomial3Case::CiP;
    else if (a >= (p.q + 1) * e && b >= (p.q + 1) * m && p.r > 0)
        p.tag = Binomial3Case::Type3;
    else if (a >= (p.q + 1) * e && b >= (p.q + 1) * m)
        p.tag = Binomial3Case::R0;
    else
        p.tag = Binomial3Case::Other;
    return p;
}

std::string Binomial3Params::id() const {
    std::ostringstream os;
    os << "a" << a << "b" << b << "c" << c << "e" << e << "m" << m;
    return os.str();
}

namespace {

Poly mono3(int i, int j, int k) { return Poly::monomial(Monomial({i, j, k})); }

} // namespace

Poly dual_generator(const Binomial3Params& p) {
    return mono3(p.a, p.b, p.c + p.n) - mono3(p.a + p.e, p.b + p.m, p.c);
}

Poly p_poly(const Binomial3Params& p) {
    if (p.tag == Binomial3Case::VarSplit)
        throw std::domain_error("p_poly: undefined in the variable-split case");
    Poly out(3);
    for (int i = 0; i <= p.q; ++i)
        out.add_term(Monomial({p.e * i, p.m * i, p.c + 1 - p.n * i}), 1);
    return out;
}

namespace {

// Two-variable annihilator of the non-split factor, computed by the
// brute-force oracle and embedded back into the three-variable ring.
std::vector<Poly> varsplit_tail_generators(const Binomial3Params& p) {
    // e = 0: factor Y^b Z^c (Z^n - Y^n) in (y, z); m = 0: X^a Z^c (Z^n - X^n)
    // in (x, z).
    const bool split_x = (p.e == 0);
    const int u = split_x ? p.b : p.a;
    Poly g2 = Poly::monomial(Monomial({u, p.c + p.n})) - Poly::monomial(Monomial({u + p.n, p.c}));
    ApolarAlgebra tail(g2);
    auto gens = tail.min_generators();
    if (gens.size() != 2)
        throw std::logic_error("varsplit: two-variable annihilator is not a complete intersection");
    int to0 = split_x ? 1 : 0; // first 2-var slot maps to y or x
    std::vector<Poly> out;
    for (auto& [deg, g] : gens) {
        Poly lifted(3);
        for (auto& [mm, cc] : g.terms()) {
            std::vector<int> e3(3, 0);
            e3[to0] = mm[0];
            e3[2] = mm[1];
            lifted.add_term(Monomial(e3), cc);
        }
        out.push_back(lifted);
    }
    return out;
}

} // namespace

std::vector<Poly> ann_generators(const Binomial3Params& p) {
    const int a = p.a, b = p.b, e = p.e, m = p.m, q = p.q, r = p.r, n = p.n, c = p.c;
    switch (p.tag) {
        case Binomial3Case::VarSplit: {
            std::vector<Poly> gens;
            gens.push_back(e == 0 ? mono3(a + 1, 0, 0) : mono3(0, b + 1, 0));
            for (Poly& g : varsplit_tail_generators(p)) gens.push_back(std::move(g));
            return gens;
        }
        case Binomial3Case::CiP:
            return {mono3(a + e + 1, 0, 0), mono3(0, b + m + 1, 0), p_poly(p)};
        case Binomial3Case::Type3: {
            Poly P = p_poly(p);
            Poly T = mono3(0, 0, n - r) * P + mono3((q + 1) * e, (q + 1) * m, 0);
            return {mono3(a + e + 1, 0, 0),
                    mono3(0, b + m + 1, 0),
                    mono3(0, 0, n + c + 1),
                    mono3(a - (q + 1) * e + 1, 0, 0) * T,
                    mono3(0, b - (q + 1) * m + 1, 0) * T,
                    mono3(a - q * e + 1, 0, 0) * P,
                    mono3(0, b - q * m + 1, 0) * P};
        }
        case Binomial3Case::R0: {
            Poly P = p_poly(p);
            return {mono3(a + e + 1, 0, 0), mono3(0, b + m + 1, 0),
                    mono3(a - q * e + 1, 0, 0) * P, mono3(0, b - q * m + 1, 0) * P,
                    mono3(0, 0, n + c + 1)};
        }
        case Binomial3Case::Other: {
            Poly P = p_poly(p);
            Poly T = mono3(0, 0, n - r) * P + mono3((q + 1) * e, (q + 1) * m, 0);
            return {mono3(a + e + 1, 0, 0), mono3(0, b + m + 1, 0),
                    mono3(a - q * e + 1, 0, 0) * P, mono3(0, b - q * m + 1, 0) * P, T};
        }
    }
    throw std::logic_error("ann_generators: unreachable");
}

bool is_complete_intersection(const Binomial3Params& p) {
    return p.e == 0 || p.m == 0 || p.a < p.q * p.e || p.b < p.q * p.m;
}

void BettiTable::add(int i, int j, long count) {
    if (count == 0) return;
    beta_[{i, j}] += count;
}

long BettiTable::beta(int i, int j) const {
    auto it = beta_.find({i, j});
    return it == beta_.end() ? 0 : it->second;
}

std::multiset<int> BettiTable::degrees(int homological_index) const {
    std::multiset<int> out;
    for (auto& [key, count] : beta_)
        if (key.first == homological_index)
            for (long k = 0; k < count; ++k) out.insert(key.second);
    return out;
}

long BettiTable::total(int homological_index) const {
    long t = 0;
    for (auto& [key, count] : beta_)
        if (key.first == homological_index) t += count;
    return t;
}

bool BettiTable::self_dual(int socle_degree) const {
    for (auto& [key, count] : beta_) {
        if (key.first == 1 && beta(2, socle_degree + 3 - key.second) != count) return false;
        if (key.first == 2 && beta(1, socle_degree + 3 - key.second) != count) return false;
    }
    return true;
}

HilbertSeries BettiTable::euler_characteristic() const {
    std::vector<Int> num;
    for (auto& [key, count] : beta_) {
        auto [i, j] = key;
        if (j >= static_cast<int>(num.size())) num.resize(j + 1, 0);
        num[j] += (i % 2 == 0 ? Int(count) : Int(-count));
    }
    return HilbertSeries(std::move(num), 3).reduced();
}

namespace {

BettiTable koszul_table(const std::vector<int>& degs) {
    BettiTable t;
    t.add(0, 0);
    for (int g : degs) t.add(1, g);
    for (size_t i = 0; i < degs.size(); ++i)
        for (size_t j = i + 1; j < degs.size(); ++j) t.add(2, degs[i] + degs[j]);
    t.add(3, degs[0] + degs[1] + degs[2]);
    return t;
}

} // namespace

BettiTable betti_table(const Binomial3Params& p) {
    const int a = p.a, b = p.b, c = p.c, e = p.e, m = p.m, q = p.q, r = p.r, n = p.n, d = p.d;
    switch (p.tag) {
        case Binomial3Case::VarSplit: {
            std::vector<int> degs;
            for (const Poly& g : ann_generators(p)) degs.push_back(g.degree());
            return koszul_table(degs);
        }
        case Binomial3Case::CiP:
            return koszul_table({a + e + 1, b + m + 1, c + 1});
        case Binomial3Case::Type3: {
            BettiTable t;
            t.add(0, 0);
            for (int j : {a + e + 1, b + m + 1, n + c + 1, b + (q + 1) * e + 1,
                          a + (q + 1) * m + 1, a + q * m + r + 1, b + q * e + r + 1})
                t.add(1, j);
            for (int j : {b + c + m + 2, a + c + e + 2, a + b + 2, a + (q + 1) * m + r + 1,
                          b + (q + 1) * e + r + 1, b + (q + 1) * e + m + 1,
                          a + (q + 1) * m + e + 1})
                t.add(2, j);
            t.add(3, d + 3);
            return t;
        }
        case Binomial3Case::R0: {
            BettiTable t;
            t.add(0, 0);
            for (int j : {a + e + 1, b + m + 1, a + q * m + 1, b + q * e + 1, c + n + 1})
                t.add(1, j);
            for (int j : {b + c + m + 2, a + c + e + 2, b + (q + 1) * e + m + 1,
                          a + (q + 1) * m + e + 1, a + b + 2})
                t.add(2, j);
            t.add(3, d + 3);
            return t;
        }
        case Binomial3Case::Other: {
            BettiTable t;
            t.add(0, 0);
            for (int j : {a + e + 1, b + m + 1, a + q * m + r + 1, b + q * e + r + 1,
                          c + n - r + 1})
                t.add(1, j);
            for (int j : {b + c + m + 2, a + c + e + 2, b + (q + 1) * e + m + 1,
                          a + (q + 1) * m + e + 1, a + b + r + 2})
                t.add(2, j);
            t.add(3, d + 3);
            return t;
        }
    }
    throw std::logic_error("betti_table: unreachable");
}

SkewPolyMatrix pfaffian_matrix(const Binomial3Params& p) {
    if (is_complete_intersection(p))
        throw std::domain_error("pfaffian_matrix: complete intersection (Koszul, no skew presentation)");
    const int a = p.a, b = p.b, e = p.e, m = p.m, q = p.q, r = p.r, n = p.n;
    const Poly P = p_poly(p);
    if (p.tag == Binomial3Case::Type3) {
        PolyMat M(7, 7, 3);
        auto set = [&](int i, int j, const Poly& v) {
            M(i, j) = v;
            M(j, i) = -v;
        };
        set(0, 4, -mono3(0, 0, r));
        set(0, 5, -mono3(e, 0, 0));
        set(0, 6, -mono3(0, b - (q + 1) * m + 1, 0));
        set(1, 3, -P);
        set(1, 5, mono3(0, (q + 1) * m, 0));
        set(2, 3, mono3((q + 1) * e, 0, 0));
        set(2, 4, mono3(0, m, 0));
        set(2, 5, mono3(0, 0, n - r));
        set(4, 6, mono3(a - (q + 1) * e + 1, 0, 0));
        return SkewPolyMatrix(std::move(M));
    }
    if (p.tag == Binomial3Case::R0) {
        Poly Q = mono3(0, 0, n) - mono3(e, m, 0);
        PolyMat M(5, 5, 3);
        auto set = [&](int i, int j, const Poly& v) {
            M(i, j) = v;
            M(j, i) = -v;
        };
        set(0, 3, mono3(0, (q + 1) * m, 0));
        set(0, 4, -P);
        set(1, 2, mono3(0, b - q * m + 1, 0));
        set(1, 3, -mono3(a - q * e + 1, 0, 0));
        set(2, 3, Q);
        set(2, 4, mono3((q + 1) * e, 0, 0));
        return SkewPolyMatrix(std::move(M));
    }
    // Other
    PolyMat M(5, 5, 3);
    auto set = [&](int i, int j, const Poly& v) {
        M(i, j) = v;
        M(j, i) = -v;
    };
    set(0, 2, -mono3((q + 1) * e, 0, 0));
    set(0, 4, P);
    set(1, 2, -mono3(0, 0, n - r));
    set(1, 3, mono3(a - q * e + 1, 0, 0));
    set(1, 4, -mono3(0, (q + 1) * m, 0));
    set(2, 3, -mono3(0, b - q * m + 1, 0));
    return SkewPolyMatrix(std::move(M));
}

std::vector<Monomial> initial_ideal_formula(const Binomial3Params& p) {
    const int a = p.a, b = p.b, c = p.c, e = p.e, m = p.m, q = p.q, n = p.n;
    std::vector<Monomial> gens;
    switch (p.tag) {
        case Binomial3Case::VarSplit:
            throw std::domain_error("initial_ideal_formula: no closed form in the variable-split case");
        case Binomial3Case::CiP:
            // lt(P) = z^{c+1} for every order with z above x and y
            gens = {Monomial({a + e + 1, 0, 0}), Monomial({0, b + m + 1, 0}),
                    Monomial({0, 0, c + 1})};
            break;
        case Binomial3Case::Type3:
            gens = {Monomial({a + e + 1, 0, 0}),
                    Monomial({0, b + m + 1, 0}),
                    Monomial({0, 0, c + n + 1}),
                    Monomial({a - (q + 1) * e + 1, 0, (q + 1) * n}),
                    Monomial({0, b - (q + 1) * m + 1, (q + 1) * n}),
                    Monomial({a - q * e + 1, 0, c + 1}),
                    Monomial({0, b - q * m + 1, c + 1})};
            break;
        case Binomial3Case::R0:
            gens = {Monomial({a + e + 1, 0, 0}), Monomial({0, b + m + 1, 0}),
                    Monomial({0, 0, n + c + 1}), Monomial({a - q * e + 1, 0, c + 1}),
                    Monomial({0, b - q * m + 1, c + 1})};
            break;
        case Binomial3Case::Other:
            gens = {Monomial({a + e + 1, 0, 0}), Monomial({0, b + m + 1, 0}),
                    Monomial({0, 0, (q + 1) * n}), Monomial({a - q * e + 1, 0, c + 1}),
                    Monomial({0, b - q * m + 1, c + 1})};
            break;
    }
    return minimalize_monomials(std::move(gens));
}

Binomial3Params swap_xy(const Binomial3Params& p) {
    return Binomial3Params::make(p.b, p.a, p.c, p.m, p.e);
}

std::vector<Binomial3Params> sweep_grid(int abc_max, int em_max) {
    std::vector<Binomial3Params> grid;
    for (int a = 0; a <= abc_max; ++a)
        for (int b = 0; b <= abc_max; ++b)
            for (int c = 0; c <= abc_max; ++c)
                for (int e = 0; e <= em_max; ++e)
                    for (int m = 0; m <= em_max; ++m) {
                        if (e + m == 0) continue;
                        // x<->y symmetry: keep (a,e) <= (b,m) lexicographically
                        if (std::pair(a, e) > std::pair(b, m)) continue;
                        grid.push_back(Binomial3Params::make(a, b, c, e, m));
                    }
    return grid;
}

} // namespace macdual
