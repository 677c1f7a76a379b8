#ifndef MACDUAL_STRUCTURE_HPP
#define MACDUAL_STRUCTURE_HPP

#include "macdual/binomial3.hpp"
#include "macdual/hilbert.hpp"
#include "macdual/poly.hpp"
#include "macdual/skew.hpp"

#include <optional>
#include <string>
#include <vector>

namespace macdual {

// Data of a dual generator F = g (m1 - m2) with gcd(m1, m2) = 1 and neither
// monomial dividing g: the shape whose algebra splits as a connected sum
// over the subalgebra dual to g.
struct ConnectedSumSpec {
    Monomial g, m1, m2;
    int d; // socle degree, deg(g m1)
    int k; // deg g

    ConnectedSumSpec(Monomial g, Monomial m1, Monomial m2);

    Poly dual_generator() const; // g*m1 - g*m2
};

// h-vector of the connected-sum algebra:
// [prod (1-t^{a_i+1}) + prod (1-t^{b_i+1}) - (1+t^{d-k}) prod (1-t^{c_i+1})]
// / (1-t)^n, with (a), (b), (c) the exponent vectors of g*m1, g*m2, g.
HilbertSeries connected_sum_hilbert(const ConnectedSumSpec& spec);

// Closed-form h-vector of R/U for the type-two monomial ideal
// U = (x^{a+e+1}, y^{b+m+1}, z^{(q+1)n}, x^{a-qe+1} z^{c+1}, y^{b-qm+1} z^{c+1}):
// s(a+e)s(b+m)s(c) + s(a-qe)s(b-qm)s(n-r-1) t^{c+1}, where c+1 = nq + r.
// Requires a+1 > qe and b+1 > qm.
HilbertSeries hf_of_U(int a, int b, int c, int e, int m);

// The monomial ideal U itself (for two-path checks).
std::vector<Monomial> u_ideal_generators(int a, int b, int c, int e, int m);

struct NormalizeResult {
    enum class Status { Normalized, IrrationalScaling };
    Status status = Status::IrrationalScaling;
    Poly result;  // m1 - m2 when normalized
    int variable = -1;
    Rat lambda;   // substitution x_variable -> lambda * x_variable
};

// Rescales a two-term form alpha*m1 - beta*m2 to m1 - m2 by a rational
// substitution on one variable when such a lambda exists over Q; otherwise
// reports irrational scaling (callers fall back to the direct computation).
NormalizeResult normalize_binomial(const Poly& G);

// Hilbert series of omega_{R/J}(-e+3) read off a Hilbert-Burch resolution
// with generator twists p (n+1 of them) and syzygy twists q (n of them):
// [sum t^{e-q_i} - sum t^{e-p_j} + t^e] / (1-t)^3.
HilbertSeries canonical_module_hilbert(const std::vector<int>& gen_twists,
                                       const std::vector<int>& syz_twists, int e);

struct DoublingCertificate {
    enum class Status {
        Verified,          // zero block + codimension-2 minors + Hilbert identity
        NotBlockCertified, // no permutation exhibits the zero block (indeterminate)
        Failed             // a block was found but some check disagreed
    };
    Status status = Status::NotBlockCertified;
    bool complete_intersection = false; // certified via the Koszul presentation
    std::vector<int> permutation;       // row/column permutation applied
    PolyMat a_block;                    // n x (n+1) block whose minors cut out J
    std::vector<Poly> j_generators;
    bool codim2_ok = false;
    bool hilbert_ok = false;
    HilbertSeries omega_series; // of omega_{R/J}(-d)
    std::string detail;

    bool verified() const { return status == Status::Verified; }
};

// Verifies the doubling presentation for a grid point: permutes the skew
// presentation to exhibit the zero block, extracts the Hilbert-Burch block A,
// checks that its maximal minors cut out a codimension-2 ideal J, and checks
// HF_{R/I}(j) = HF_{R/J}(j) - HF_{omega_{R/J}(-d)}(j) for all j <= d.
// Complete intersections run through the same pipeline on their Koszul
// presentation.
DoublingCertificate doubling_verify(const Binomial3Params& params);

} // namespace macdual

#endif
