#ifndef MACDUAL_BINOMIAL3_HPP
#define MACDUAL_BINOMIAL3_HPP

#include "macdual/hilbert.hpp"
#include "macdual/poly.hpp"
#include "macdual/skew.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace macdual {

// Case classification for dual generators X^a Y^b Z^c (Z^n - X^e Y^m) with
// n = e + m > 0, tested in priority order.
enum class Binomial3Case {
    VarSplit, // e = 0 or m = 0: splits off a variable, complete intersection
    CiP,      // a < qe or b < qm: complete intersection with P as third generator
    Type3,    // a >= (q+1)e, b >= (q+1)m, r > 0: seven generators
    R0,       // a >= (q+1)e, b >= (q+1)m, r = 0: five generators
    Other     // remaining parameters: five generators
};

std::string case_name(Binomial3Case c);

// Parameters (a,b,c,e,m) with the derived data: n = e+m, the division
// c+1 = nq + r with 0 <= r < n, socle degree d = a+b+c+n, and the case tag.
struct Binomial3Params {
    int a, b, c, e, m;
    int n, q, r, d;
    Binomial3Case tag;

    static Binomial3Params make(int a, int b, int c, int e, int m);

    std::string id() const; // stable instance id for reports
};

// F = X^a Y^b Z^c (Z^n - X^e Y^m) in the three-variable dual ring.
Poly dual_generator(const Binomial3Params& p);

// P = sum_{i=0}^{q} x^{ei} y^{mi} z^{c+1-ni}, homogeneous of degree c+1;
// undefined in the variable-split case.
Poly p_poly(const Binomial3Params& p);

// Closed-form minimal generators of Ann(F). The variable-split case is
// oracle-backed: the pure power of the split variable plus the two-variable
// annihilator of the remaining factor.
std::vector<Poly> ann_generators(const Binomial3Params& p);

bool is_complete_intersection(const Binomial3Params& p);

// Graded Betti numbers beta_{i,j} of R/Ann(F).
class BettiTable {
public:
    void add(int i, int j, long count = 1);
    long beta(int i, int j) const;
    const std::map<std::pair<int, int>, long>& entries() const { return beta_; }

    std::multiset<int> degrees(int homological_index) const;
    long total(int homological_index) const;

    // beta_{1,j} == beta_{2, d+3-j} for all j.
    bool self_dual(int socle_degree) const;

    // Alternating sum over (1-t)^3: the Hilbert series of the quotient.
    HilbertSeries euler_characteristic() const;

private:
    std::map<std::pair<int, int>, long> beta_;
};

BettiTable betti_table(const Binomial3Params& p);

// Skew-symmetric presentation matrix whose sub-Pfaffians generate Ann(F);
// complete-intersection cases are Koszul and have none (error).
SkewPolyMatrix pfaffian_matrix(const Binomial3Params& p);

// Initial ideal of Ann(F) for any monomial order with z above x and y,
// transcribed case by case; minimal monomial generators. Undefined for the
// variable-split case.
std::vector<Monomial> initial_ideal_formula(const Binomial3Params& p);

// The x<->y parameter swap (a,e) <-> (b,m); grid deduplication symmetry.
Binomial3Params swap_xy(const Binomial3Params& p);

// Sweep grid: a,b,c in [0,abc_max], e,m in [0,em_max], n > 0, deduplicated
// by the x<->y symmetry.
std::vector<Binomial3Params> sweep_grid(int abc_max = 3, int em_max = 2);

} // namespace macdual

#endif
