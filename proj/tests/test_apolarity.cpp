#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "macdual/apolar.hpp"
#include "macdual/poly_io.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace macdual;

namespace {

Poly parse_n(const std::string& s, int n) { return parse_poly(s, VarTable::standard(n)); }

std::multiset<int> generator_degrees(const ApolarAlgebra& A) {
    std::multiset<int> out;
    for (auto& [deg, g] : A.min_generators()) out.insert(deg);
    return out;
}

std::vector<int> hvec(const ApolarAlgebra& A) { return A.h_vector(); }

} // namespace

TEST_CASE("catalecticant ranks") {
    // F = X^2 in three variables: only x acts nontrivially in degree 1
    ApolarAlgebra sq(parse_n("x^2", 3));
    CHECK(sq.cat_map(1).rank() == 1);

    // codimension-4 example: rank of the middle catalecticant is h_2 = 7
    ApolarAlgebra ef(parse_n("x^3*y*z - x*y^3*t", 4));
    CHECK(ef.cat_map(2).rank() == 7);

    // F = XYZ(Z^2 - XY): rank equals h_2 read from the symmetric h-vector
    ApolarAlgebra w(parse_n("x*y*z^4 - x^2*y^2*z^2", 3).scale_variable(0, Rat(1)));
    ApolarAlgebra v(parse_n("x*y*z*(z^2 - x*y)", 3));
    CHECK(v.cat_map(2).rank() == v.h(2));
    CHECK(v.h(2) == v.h(v.socle_degree() - 2));
    (void)w;
}

TEST_CASE("graded annihilator pieces") {
    ApolarAlgebra sq(parse_n("x^2", 3));
    auto a1 = sq.ann_graded(1);
    REQUIRE(a1.size() == 2);
    // span{y, z}
    std::set<std::string> reps;
    for (auto& p : a1) reps.insert(to_string(p));
    CHECK(reps == std::set<std::string>{"y", "z"});

    ApolarAlgebra ef(parse_n("x^3*y*z - x*y^3*t", 4));
    auto a2 = ef.ann_graded(2);
    CHECK(a2.size() == 3); // dim R_2 - h_2 = 10 - 7
    std::set<std::string> reps2;
    for (auto& p : a2) reps2.insert(to_string(p));
    CHECK(reps2 == std::set<std::string>{"z^2", "z*t", "t^2"});

    ApolarAlgebra v(parse_n("x*y*z*(z^2 - x*y)", 3));
    CHECK(static_cast<int>(v.ann_graded(3).size()) == dim_of_degree(3, 3) - v.h(3));
}

TEST_CASE("minimal generators: monomial complete intersection") {
    ApolarAlgebra sq(parse_n("x^2", 3));
    auto degs = generator_degrees(sq);
    CHECK(degs == std::multiset<int>{1, 1, 3});
    // generators are y, z, x^3 up to echelon choice
    std::set<std::string> reps;
    for (auto& [d, g] : sq.min_generators()) reps.insert(to_string(g));
    CHECK(reps == std::set<std::string>{"y", "z", "x^3"});
}

TEST_CASE("minimal generators: codimension-4 example") {
    ApolarAlgebra ef(parse_n("x^3*y*z - x*y^3*t", 4));
    CHECK(hvec(ef) == std::vector<int>{1, 4, 7, 7, 4, 1});
    auto degs = generator_degrees(ef);
    CHECK(degs == std::multiset<int>{2, 2, 2, 3, 3, 3, 4, 4, 4});
}

TEST_CASE("hilbert functions") {
    ApolarAlgebra ef(parse_n("x^3*y*z - x*y^3*t", 4));
    CHECK(ef.hilbert_fn().h_vector() == std::vector<Int>{1, 4, 7, 7, 4, 1});

    // single power: (1,...,1)
    ApolarAlgebra pw(parse_n("x^4", 2));
    CHECK(hvec(pw) == std::vector<int>{1, 1, 1, 1, 1});

    ApolarAlgebra three(parse_n("z*(z^2 - x*y)", 3));
    CHECK(hvec(three) == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("pairing symmetry and socle (properties)") {
    std::mt19937_64 rng(5150);
    std::vector<Poly> samples = {
        parse_n("x^2*y + z^3", 3),
        parse_n("x^3*y*z - x*y^3*t", 4),
        parse_n("x*y*z*(z^2 - x*y)", 3),
        parse_n("x^2 + y^2 + z^2", 3),
        parse_n("x^5 - y^3*z^2", 3),
        parse_n("x*y^2 + y^3 - z^3 + x^2*z", 3),
    };
    for (int trial = 0; trial < 6; ++trial) {
        // random homogeneous cubic in 3 variables
        Poly p(3);
        for (const Monomial& m : monomials_of_degree(3, 3)) {
            long c = static_cast<long>(rng() % 7) - 3;
            if (c != 0) p.add_term(m, Rat(c));
        }
        if (!p.is_zero()) samples.push_back(p);
    }
    for (const Poly& F : samples) {
        ApolarAlgebra A(F);
        int d = A.socle_degree();
        CHECK(A.h(0) == 1);
        CHECK(A.h(d) == 1);
        for (int j = 0; j <= d; ++j) CHECK(A.h(j) == A.h(d - j));
        // Gorenstein socle is one-dimensional, concentrated in degree d
        CHECK(A.quotient().socle_dim(d) == 1);
        for (int j = 0; j < d; ++j) CHECK(A.quotient().socle_dim(j) == 0);
    }
}

TEST_CASE("minimal generators generate and are minimal (properties)") {
    std::vector<Poly> samples = {
        parse_n("x^3*y*z - x*y^3*t", 4),
        parse_n("x*y*z*(z^2 - x*y)", 3),
        parse_n("x^2*y^2*z^2", 3),
        parse_n("z^4*x - y^5", 3),
    };
    for (const Poly& F : samples) {
        ApolarAlgebra A(F);
        const int n = A.nvars();
        const int d = A.socle_degree();
        auto& gens = A.min_generators();

        // the graded span of generator multiples equals the annihilator in
        // every degree <= d+1
        for (int j = 0; j <= d + 1; ++j) {
            auto mons = monomials_of_degree(n, j);
            QMat span(0, static_cast<int>(mons.size()));
            for (auto& [dg, g] : gens) {
                if (dg > j) continue;
                for (const Monomial& m : monomials_of_degree(n, j - dg)) {
                    Poly prod = g.mul_monomial(m);
                    QMat row(1, static_cast<int>(mons.size()));
                    auto v = coefficient_vector(prod, mons);
                    for (size_t c = 0; c < v.size(); ++c) row(0, static_cast<int>(c)) = v[c];
                    span = span.vstack(row);
                }
            }
            CHECK(span.rank() == static_cast<int>(A.ann_graded(j).size()));
        }

        // minimality: dropping any generator strictly shrinks some graded piece
        for (size_t skip = 0; skip < gens.size(); ++skip) {
            int jd = gens[skip].first;
            auto mons = monomials_of_degree(n, jd);
            QMat span(0, static_cast<int>(mons.size()));
            for (size_t i = 0; i < gens.size(); ++i) {
                if (i == skip) continue;
                auto& [dg, g] = gens[i];
                if (dg > jd) continue;
                for (const Monomial& m : monomials_of_degree(n, jd - dg)) {
                    Poly prod = g.mul_monomial(m);
                    QMat row(1, static_cast<int>(mons.size()));
                    auto v = coefficient_vector(prod, mons);
                    for (size_t c = 0; c < v.size(); ++c) row(0, static_cast<int>(c)) = v[c];
                    span = span.vstack(row);
                }
            }
            CHECK(span.rank() < static_cast<int>(A.ann_graded(jd).size()));
        }
    }
}

TEST_CASE("scaling invariance of the annihilator") {
    Poly F = parse_n("x*y*z*(z^2 - x*y)", 3);
    ApolarAlgebra A(F), B(F * Rat(7, 3));
    CHECK(A.h_vector() == B.h_vector());
    for (int j = 0; j <= A.socle_degree() + 1; ++j) {
        auto a = A.ann_graded(j), b = B.ann_graded(j);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]); // canonical echelon reps
    }
}

TEST_CASE("quotient multiplication matrices") {
    ApolarAlgebra A(parse_n("x^2*y^2", 2));
    const GradedQuotient& Q = A.quotient();
    // x * (class of x) in degree 1 -> 2
    QMat m = Q.mult_matrix(parse_n("x", 2), 1, 1);
    CHECK(m.rows() == Q.h(2));
    CHECK(m.cols() == Q.h(1));
    // multiplication by x+y on K[x,y]/(x^3, y^3) patterns
    QMat mm = Q.mult_matrix(parse_n("x + y", 2), 2, 1);
    CHECK(mm.rank() == 2);
    CHECK_THROWS_AS(Q.mult_matrix(parse_n("x", 2), 0, 1), std::invalid_argument);
}

TEST_CASE("rejects bad dual generators") {
    CHECK_THROWS_AS(ApolarAlgebra(Poly::zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(ApolarAlgebra(parse_n("x^2 + y", 3)), std::invalid_argument);
    ApolarAlgebra A(parse_n("x^2", 3));
    CHECK_THROWS_AS(A.cat_map(3), std::out_of_range);
    CHECK_THROWS_AS(A.cat_map(-1), std::out_of_range);
}

TEST_CASE("single-variable power dual") {
    ApolarAlgebra A(parse_poly("x^5", VarTable::standard(1)));
    CHECK(hvec(A) == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(A.min_generators().size() == 1);
    CHECK(A.min_generators()[0].first == 6);
}
