#ifndef MACDUAL_GROEBNER_HPP
#define MACDUAL_GROEBNER_HPP

#include "macdual/apolar.hpp"
#include "macdual/hilbert.hpp"
#include "macdual/matrix.hpp"
#include "macdual/poly.hpp"

#include <map>
#include <memory>
#include <vector>

namespace macdual {

// Multivariate division with remainder. Deterministic: for each term the
// first divisor in list order whose leading monomial divides it wins.
// Returns quotients (one per divisor) and the remainder; no remainder term
// is divisible by any leading monomial of G.
std::pair<std::vector<Poly>, Poly> divide(const Poly& f, const std::vector<Poly>& G,
                                          const MonomialOrder& ord);

Poly division_remainder(const Poly& f, const std::vector<Poly>& G, const MonomialOrder& ord);

// S(f, g) = lcm/lt(f) * f - lcm/lt(g) * g (leading coefficients cancelled).
Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Buchberger criterion over all pairs; members must be homogeneous and
// nonzero.
bool is_groebner(const std::vector<Poly>& G, const MonomialOrder& ord);

struct BuchbergerResult {
    std::vector<Poly> basis; // reduced basis, sorted by leading monomial
    bool truncated;          // pairs above the cap were skipped
};

// Degree-truncated Buchberger completion with the coprime-leading-term skip,
// processing S-pairs degree by degree; complete for Artinian ideals when the
// cap is at least socle degree + 1. The output is the reduced basis.
BuchbergerResult buchberger(const std::vector<Poly>& G, const MonomialOrder& ord, int degree_cap);

// Minimal monomial generating set of the leading-term ideal of a verified
// Groebner basis; throws when the input fails the Buchberger criterion.
std::vector<Monomial> initial_ideal(const std::vector<Poly>& GB, const MonomialOrder& ord);

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

// Homogeneous ideal with cached graded pieces (echelon bases per degree).
class GradedIdeal {
public:
    GradedIdeal(int nvars, std::vector<Poly> generators);

    int nvars() const { return nvars_; }
    const std::vector<Poly>& generators() const { return gens_; }

    // Dimension of the degree-j piece.
    int dim(int j) const;

    // Echelon basis of the degree-j piece over the canonical monomial basis.
    const QMat& piece(int j) const;

    bool contains(const Poly& f) const;

    // Hilbert function of R/I in degree j.
    Int quotient_hf(int j) const;

    // Builds the Artinian quotient R/I; throws when R/I is not Artinian
    // within the degree cap.
    GradedQuotient quotient(int degree_cap) const;

private:
    struct Cache;
    int nvars_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
    std::pair<QMat, std::vector<int>>& piece_data(int j) const;
};

bool ideals_equal(const GradedIdeal& a, const GradedIdeal& b);

// h-vector of R/(monomial ideal) by standard-monomial counting, degree by
// degree; requires an Artinian quotient (a pure power of every variable).
HilbertSeries monomial_quotient_hilbert(const std::vector<Monomial>& gens, int nvars);

} // namespace macdual

#endif
