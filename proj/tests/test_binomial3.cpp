#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "macdual/apolar.hpp"
#include "macdual/binomial3.hpp"
#include "macdual/groebner.hpp"
#include "macdual/poly_io.hpp"

#include <random>

using namespace macdual;

namespace {
Poly p3(const std::string& s) { return parse_poly(s, VarTable::standard(3)); }
using B3 = Binomial3Params;
} // namespace

TEST_CASE("classification") {
    CHECK(B3::make(1, 1, 1, 1, 1).tag == Binomial3Case::Other); // a=1 < 2=(q+1)e
    CHECK(B3::make(0, 0, 2, 1, 1).tag == Binomial3Case::CiP);   // a=0 < qe=1
    CHECK(B3::make(3, 3, 2, 1, 1).tag == Binomial3Case::Type3); // q=1, r=1
    CHECK(B3::make(2, 2, 3, 1, 1).tag == Binomial3Case::Other); // a=2 < 3=(q+1)e
    CHECK(B3::make(2, 2, 1, 1, 1).tag == Binomial3Case::R0);    // q=1, r=0
    CHECK(B3::make(1, 1, 1, 0, 2).tag == Binomial3Case::VarSplit);
    CHECK_THROWS_AS(B3::make(1, 1, 1, 0, 0), std::invalid_argument);

    B3 t = B3::make(3, 3, 2, 1, 1);
    CHECK(t.n == 2);
    CHECK(t.q == 1);
    CHECK(t.r == 1);
    CHECK(t.d == 3 + 3 + 2 + 2);
}

TEST_CASE("P and its contraction identity") {
    B3 p = B3::make(1, 1, 1, 1, 1);
    CHECK(p_poly(p) == p3("z^2 + x*y"));

    B3 q0 = B3::make(2, 2, 0, 1, 1); // c+1 = 1 < n: q = 0
    CHECK(q0.q == 0);
    CHECK(p_poly(q0) == p3("z"));

    CHECK_THROWS_AS(p_poly(B3::make(1, 1, 1, 0, 2)), std::domain_error);

    // P o F = X^{a-qe} Y^{b-qm} Z^{c+n-r} whenever a >= qe and b >= qm
    std::mt19937_64 rng(77);
    int checked = 0;
    while (checked < 25) {
        int a = rng() % 4, b = rng() % 4, c = rng() % 4, e = 1 + rng() % 2, m = 1 + rng() % 2;
        B3 pp = B3::make(a, b, c, e, m);
        if (a < pp.q * e || b < pp.q * m) continue;
        Poly expected(3);
        expected.add_term(Monomial({a - pp.q * e, b - pp.q * m, c + pp.n - pp.r}), 1);
        CHECK(contract(p_poly(pp), dual_generator(pp)) == expected);
        ++checked;
    }
}

TEST_CASE("leading terms of the structured generators under z-first orders") {
    // lt(z^{n-r} P + x^{(q+1)e} y^{(q+1)m}) = z^{(q+1)n} for any order withz
    // above x and y
    for (auto pt : {B3::make(3, 3, 2, 1, 1), B3::make(1, 1, 1, 1, 1), B3::make(2, 3, 0, 1, 2)}) {
        Poly T = Poly::monomial(Monomial({0, 0, pt.n - pt.r})) * p_poly(pt) +
                 Poly::monomial(Monomial({(pt.q + 1) * pt.e, (pt.q + 1) * pt.m, 0}));
        for (const auto& ord :
             {MonomialOrder::grevlex({2, 0, 1}), MonomialOrder::lex({2, 1, 0})}) {
            CHECK(leading_monomial(ord, T) == Monomial({0, 0, (pt.q + 1) * pt.n}));
            CHECK(leading_monomial(ord, p_poly(pt)) == Monomial({0, 0, pt.c + 1}));
        }
    }
}

TEST_CASE("closed-form generators match the stated instances") {
    auto gens = ann_generators(B3::make(1, 1, 1, 1, 1));
    std::vector<Poly> expected = {p3("x^3"), p3("y^3"), p3("x*(z^2 + x*y)"),
                                  p3("y*(z^2 + x*y)"), p3("z^2*(z^2 + x*y) + x^2*y^2")};
    REQUIRE(gens.size() == 5);
    for (size_t i = 0; i < expected.size(); ++i) CHECK(gens[i] == expected[i]);

    auto ci = ann_generators(B3::make(0, 0, 2, 1, 1));
    REQUIRE(ci.size() == 3);
    CHECK(ci[0] == p3("x^2"));
    CHECK(ci[1] == p3("y^2"));
    CHECK(ci[2] == p3("z^3 + x*y*z"));

    // case with the x^{a-(q+1)e+1}[z^{n-r}P + x^{(q+1)e} y^{(q+1)m}] generator
    auto t3 = ann_generators(B3::make(3, 3, 2, 1, 1));
    REQUIRE(t3.size() == 7);
    Poly P = p_poly(B3::make(3, 3, 2, 1, 1)); // z^3 + x*y*z... degree c+1 = 3
    Poly T = p3("z") * P + p3("x^2*y^2");
    CHECK(t3[3] == p3("x^2") * T);
}

TEST_CASE("every generator annihilates the dual form") {
    for (const B3& p : sweep_grid(2, 2)) {
        Poly F = dual_generator(p);
        for (const Poly& g : ann_generators(p)) CHECK(contract(g, F).is_zero());
    }
}

TEST_CASE("complete intersection criterion") {
    CHECK(is_complete_intersection(B3::make(0, 0, 2, 1, 1)));
    CHECK(!is_complete_intersection(B3::make(1, 1, 1, 1, 1)));
    CHECK(is_complete_intersection(B3::make(2, 2, 2, 0, 1)));
    // three-way agreement handled in the acceptance sweep; spot-check here
    B3 p = B3::make(0, 1, 3, 1, 1);
    CHECK(is_complete_intersection(p) == (ann_generators(p).size() == 3));
}

TEST_CASE("formula generators equal the oracle annihilator (spot grid)") {
    std::vector<B3> pts = {B3::make(1, 1, 1, 1, 1), B3::make(0, 0, 2, 1, 1),
                           B3::make(3, 3, 2, 1, 1), B3::make(2, 2, 3, 1, 1),
                           B3::make(2, 2, 1, 1, 1),
                           B3::make(1, 2, 0, 1, 2), B3::make(0, 3, 1, 1, 1),
                           B3::make(2, 2, 2, 0, 1), B3::make(0, 2, 3, 0, 2)};
    for (const B3& p : pts) {
        ApolarAlgebra A(dual_generator(p));
        std::vector<Poly> oracle;
        for (auto& [d, g] : A.min_generators()) oracle.push_back(g);
        GradedIdeal I(3, ann_generators(p)), J(3, oracle);
        CHECK(ideals_equal(I, J));
        CHECK(ann_generators(p).size() == A.min_generators().size());
    }
}

TEST_CASE("betti tables") {
    // complete intersection row: Koszul
    B3 ci = B3::make(0, 0, 2, 1, 1);
    BettiTable t = betti_table(ci);
    CHECK(t.degrees(1) == std::multiset<int>{2, 2, 3});
    CHECK(t.degrees(2) == std::multiset<int>{4, 5, 5});
    CHECK(t.beta(3, ci.d + 3) == 1);
    CHECK(t.self_dual(ci.d));

    for (const B3& p : sweep_grid(2, 2)) {
        BettiTable bt = betti_table(p);
        CHECK(bt.beta(0, 0) == 1);
        CHECK(bt.self_dual(p.d));
        CHECK(bt.total(1) == bt.total(2));
        CHECK(bt.beta(3, p.d + 3) == 1);
        // Euler characteristic reproduces the oracle h-vector
        ApolarAlgebra A(dual_generator(p));
        CHECK(bt.euler_characteristic() == A.hilbert_fn());
        // beta_1 degrees match the oracle generator degrees
        std::multiset<int> oracle_degs;
        for (auto& [d, g] : A.min_generators()) oracle_degs.insert(d);
        CHECK(bt.degrees(1) == oracle_degs);
    }
}

TEST_CASE("pfaffian matrices are skew with the displayed entries") {
    B3 t3 = B3::make(3, 3, 2, 1, 1);
    SkewPolyMatrix M = pfaffian_matrix(t3);
    CHECK(M.size() == 7);
    // skew symmetry is enforced by the type; spot-check displayed entries
    CHECK(M(0, 4) == -p3("z"));       // -z^r, r = 1
    CHECK(M(0, 5) == -p3("x"));       // -x^e
    CHECK(M(2, 3) == p3("x^2"));      // x^{(q+1)e}
    CHECK(M(4, 6) == p3("x^2"));      // x^{a-(q+1)e+1}
    CHECK(M(1, 3) == -p_poly(t3));

    B3 other = B3::make(1, 1, 1, 1, 1);
    SkewPolyMatrix M4 = pfaffian_matrix(other);
    CHECK(M4.size() == 5);
    CHECK(M4(0, 4) == p_poly(other));

    B3 r0 = B3::make(2, 2, 1, 1, 1);
    SkewPolyMatrix M3 = pfaffian_matrix(r0);
    CHECK(M3(2, 3) == p3("z^2 - x*y")); // Q = z^n - x^e y^m

    CHECK_THROWS_AS(pfaffian_matrix(B3::make(0, 0, 2, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(pfaffian_matrix(B3::make(1, 1, 1, 0, 2)), std::domain_error);
}

TEST_CASE("sub-pfaffians: base case and Pf^2 = det") {
    // 3x3 skew with off-diagonal entries f, g, h -> {h, -g, f}
    PolyMat m(3, 3, 3);
    Poly f = p3("x"), g = p3("y"), h = p3("z");
    m(0, 1) = f; m(1, 0) = -f;
    m(0, 2) = g; m(2, 0) = -g;
    m(1, 2) = h; m(2, 1) = -h;
    SkewPolyMatrix s(std::move(m));
    auto pf = s.sub_pfaffians();
    REQUIRE(pf.size() == 3);
    CHECK(pf[0] == h);
    CHECK(pf[1] == -g);
    CHECK(pf[2] == f);

    // Pf(M)^2 = det(M) for random small skew matrices over Q
    std::mt19937_64 rng(4242);
    for (int size : {2, 4, 6}) {
        for (int trial = 0; trial < 4; ++trial) {
            PolyMat sk(size, size, 1);
            for (int r = 0; r < size; ++r)
                for (int c = r + 1; c < size; ++c) {
                    Rat v(static_cast<long>(rng() % 19) - 9);
                    sk(r, c) = Poly::constant(1, v);
                    sk(c, r) = Poly::constant(1, -v);
                }
            Poly pf2 = sk.pfaffian() * sk.pfaffian();
            CHECK(pf2 == sk.determinant());
        }
    }
}

TEST_CASE("sub-pfaffians generate the annihilator") {
    for (const B3& p : sweep_grid(2, 2)) {
        if (is_complete_intersection(p)) continue;
        auto pf = pfaffian_matrix(p).sub_pfaffians();
        GradedIdeal from_pf(3, pf), from_gens(3, ann_generators(p));
        CHECK(ideals_equal(from_pf, from_gens));
    }
}

TEST_CASE("initial ideal closed forms") {
    B3 ci = B3::make(0, 0, 2, 1, 1);
    auto in_ci = initial_ideal_formula(ci);
    CHECK(in_ci == minimalize_monomials({Monomial({2, 0, 0}), Monomial({0, 2, 0}),
                                         Monomial({0, 0, 3})}));

    // r = 0 makes the R0 and Other lists coincide
    B3 r0 = B3::make(2, 2, 1, 1, 1);
    CHECK(r0.tag == Binomial3Case::R0);
    auto in_r0 = initial_ideal_formula(r0);
    B3 other_r0 = B3::make(1, 2, 1, 1, 1); // Other with r = 0: n=2, c+1=2, q=1, r=0, a=1<2
    CHECK(other_r0.tag == Binomial3Case::Other);
    CHECK(other_r0.r == 0);
    auto in_other = initial_ideal_formula(other_r0);
    // same template: z^{n+c+1} vs z^{(q+1)n} agree when r = 0
    CHECK(in_other[2] == Monomial({0, 0, (other_r0.q + 1) * other_r0.n}));
    CHECK((other_r0.q + 1) * other_r0.n == other_r0.n + other_r0.c + 1);

    CHECK(in_r0.size() == 5);
    CHECK_THROWS_AS(initial_ideal_formula(B3::make(1, 1, 1, 0, 2)), std::domain_error);
}

TEST_CASE("the paired structured generators have vanishing S-polynomial") {
    // S(x^{a-(q+1)e+1} T, y^{b-(q+1)m+1} T) = 0 exactly in the seven-generator case
    B3 p = B3::make(3, 3, 2, 1, 1);
    auto gens = ann_generators(p); // [3] and [4] are the T-multiples
    for (const auto& ord : {MonomialOrder::grevlex({2, 0, 1}), MonomialOrder::lex({2, 1, 0})})
        CHECK(s_poly(gens[3], gens[4], ord).is_zero());
    // S(x^{a-qe+1} P, y^{b-qm+1} P) = 0 as well
    CHECK(s_poly(gens[5], gens[6], MonomialOrder::grevlex({2, 0, 1})).is_zero());
}

TEST_CASE("closed-form generators are a Groebner basis; initial ideals agree (spot)") {
    std::vector<B3> pts = {B3::make(1, 1, 1, 1, 1), B3::make(0, 0, 2, 1, 1),
                           B3::make(3, 3, 2, 1, 1), B3::make(2, 2, 3, 1, 1),
                           B3::make(2, 2, 1, 1, 1), B3::make(1, 2, 0, 2, 1)};
    std::vector<MonomialOrder> orders = {
        MonomialOrder::grevlex({2, 0, 1}), MonomialOrder::grevlex({2, 1, 0}),
        MonomialOrder::lex({2, 0, 1}), MonomialOrder::lex({2, 1, 0})};
    for (const B3& p : pts) {
        auto gens = ann_generators(p);
        for (const auto& ord : orders) {
            CHECK(is_groebner(gens, ord));
            CHECK(initial_ideal(gens, ord) == initial_ideal_formula(p));
        }
        // two-path: completion from scratch yields the same initial ideal
        auto res = buchberger(gens, orders[0], p.d + 1);
        CHECK(!res.truncated);
        CHECK(initial_ideal(res.basis, orders[0]) == initial_ideal_formula(p));
    }
}

TEST_CASE("socle degree of the formula ideal equals d") {
    for (const B3& p : sweep_grid(2, 1)) {
        GradedIdeal I(3, ann_generators(p));
        CHECK(I.quotient_hf(p.d) == 1);
        CHECK(I.quotient_hf(p.d + 1) == 0);
    }
}

TEST_CASE("sweep grid shape") {
    auto grid = sweep_grid(3, 2);
    CHECK(grid.size() == 272);
    for (const auto& p : grid) {
        CHECK(p.n > 0);
        CHECK(std::pair(p.a, p.e) <= std::pair(p.b, p.m));
    }
}
