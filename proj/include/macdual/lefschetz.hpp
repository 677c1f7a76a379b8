#ifndef MACDUAL_LEFSCHETZ_HPP
#define MACDUAL_LEFSCHETZ_HPP

#include "macdual/apolar.hpp"
#include "macdual/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace macdual {

// Linear form given by its coefficient vector.
struct LinearForm {
    std::vector<Rat> coeffs;

    Poly to_poly() const;
    static LinearForm all_ones(int nvars);
    bool is_zero() const;
};

struct LefschetzOptions {
    std::uint64_t seed = 20240801;
    int random_forms = 5;
    long coeff_min = 1, coeff_max = 997;
    int hessian_trials = 4;
    int witness_max_degree = 4;
    bool symbolic_certificates = true;
};

// Exact rank of multiplication by ell^k from degree i to degree i+k.
int mult_rank(const GradedQuotient& A, const LinearForm& ell, int i, int k);

enum class Verdict { Holds, Fails, Inconclusive };

struct MapRank {
    int i, k;
    int best_rank; // best sampled rank
    int required;  // min(h_i, h_{i+k})
};

struct LefschetzVerdict {
    std::string property; // "WLP" or "SLP"
    Verdict holds = Verdict::Inconclusive;
    std::optional<LinearForm> witness;  // present when holds
    std::string method;                 // rank-sampling | hessian | kernel-witness
    std::vector<MapRank> failures;      // maps where every sample fell short
    std::string certificate;            // description of the failure certificate
};

// Weak Lefschetz verdict. For Gorenstein algebras only the single map from
// floor((d-1)/2) is tested; for general Artinian quotients every consecutive
// map is. holds = Fails is only reported with a certificate valid for every
// linear form (identically vanishing Hessian determinant or a symbolic
// kernel witness); sampled rank deficiency alone yields Inconclusive.
LefschetzVerdict wlp_verdict(const ApolarAlgebra& A, const LefschetzOptions& opts = {});
LefschetzVerdict wlp_verdict(const GradedQuotient& Q, bool gorenstein,
                             const LefschetzOptions& opts = {});

// Strong Lefschetz verdict: all maps ell^k : A_i -> A_{i+k}.
LefschetzVerdict slp_verdict(const ApolarAlgebra& A, const LefschetzOptions& opts = {});
LefschetzVerdict slp_verdict(const GradedQuotient& Q, bool gorenstein,
                             const LefschetzOptions& opts = {});

// Hessian matrix of order t: entries contract(w_i w_j, F) over the standard
// monomial basis of A_t.
struct HessianMatrix {
    int order;
    std::vector<Monomial> basis;
    PolyMat entries;
};

HessianMatrix hessian(const ApolarAlgebra& A, int t);

// Multiplication-map criterion matrix attached to the order-t Hessian: its
// entry (i,j) is the polynomial whose value at the coefficient vector of a
// linear form ell equals the pairing <w_i, ell^{d-2t} w_j>. For d - 2t = 1
// this is the Hessian itself; in general each coefficient of X^delta picks
// up the multinomial weight (d-2t)!/delta!, making rank-at-a-point equal to
// the rank of multiplication by ell^{d-2t} from A_t to A_{d-t}.
PolyMat hessian_criterion_matrix(const HessianMatrix& H, int socle_degree);

struct HessianCertificate {
    enum class Kind {
        NonvanishingPoint,        // det != 0 at an explicit rational point
        SymbolicDeterminantZero,  // det computed symbolically, identically 0
        KernelWitness,            // polynomial vector u != 0 with C u == 0
        Indeterminate
    };
    Kind kind = Kind::Indeterminate;
    bool vanishes = false;
    std::vector<Rat> point;        // for NonvanishingPoint
    std::vector<Poly> witness;     // for KernelWitness
    std::string note;
};

// Determines whether det of the order-t criterion matrix vanishes
// identically: random evaluations certify non-vanishing; an all-zero sample
// triggers the symbolic determinant for sizes <= 8 and a kernel-witness
// search at any size.
HessianCertificate hessian_det_vanishes(const ApolarAlgebra& A, int t, int trials = 4,
                                        std::uint64_t seed = 20240801);

// Ansatz for a symbolic kernel vector: entries supported on the given
// columns, each of the form factor * (homogeneous polynomial of the
// complementary degree in the chosen coefficient variables).
struct AnsatzSpec {
    int degree = 1;                 // total degree of each entry
    std::vector<int> support;       // column indices; empty = all columns
    std::vector<Monomial> factors;  // per support entry; empty = no factors
    std::vector<int> coeff_vars;    // empty = all variables
};

// Searches for u != 0 with M u == 0 identically (entries of M are
// polynomials); exact linear algebra over the ansatz coefficients.
std::optional<std::vector<Poly>> polymat_kernel_witness(const PolyMat& M, const AnsatzSpec& spec);

// Exact verification that M u == 0 and u != 0.
bool verify_kernel_witness(const PolyMat& M, const std::vector<Poly>& u);

// Symbolic matrix of multiplication by a generic linear form sum a_v x_v
// from degree i to i+k; entries are polynomials of degree k in the a's.
PolyMat symbolic_mult_matrix(const GradedQuotient& Q, int i, int k = 1);

// Monomial-ideal criterion for the strong Lefschetz property of
// K[x,y,z]/(x^a, y^b, z^c, x^alpha z^gamma, y^beta z^gamma); requires
// 0 < alpha < a and 0 < gamma < c. Returns true when any of the three
// sufficient conditions holds.
bool chase_criterion(int a, int b, int c, int alpha, int beta, int gamma);

} // namespace macdual

#endif
