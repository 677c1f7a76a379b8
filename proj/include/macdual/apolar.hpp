#ifndef MACDUAL_APOLAR_HPP
#define MACDUAL_APOLAR_HPP

#include "macdual/hilbert.hpp"
#include "macdual/matrix.hpp"
#include "macdual/poly.hpp"

#include <map>
#include <memory>
#include <vector>

namespace macdual {

// Graded Artinian quotient R/I presented degree by degree: each piece holds a
// reduced-echelon basis of I_j over the canonical monomial basis of R_j, the
// pivot (leading) columns, and the complementary standard monomials that
// descend to a basis of the quotient.
class GradedQuotient {
public:
    struct Piece {
        std::vector<Monomial> monomials;   // canonical descending column basis of R_j
        QMat ideal_rref;                   // rows: reduced-echelon basis of I_j
        std::vector<int> pivot_cols;
        std::vector<int> std_cols;
        std::vector<Monomial> std_monomials;
    };

    GradedQuotient(int nvars, std::vector<Piece> pieces);

    int nvars() const { return nvars_; }

    // Largest degree with a nonzero graded piece.
    int top_degree() const { return top_; }

    int h(int j) const;
    std::vector<int> h_vector() const;

    const Piece& piece(int j) const;
    const std::vector<Monomial>& basis(int j) const { return piece(j).std_monomials; }

    // Coordinates of the class of p in the standard-monomial basis of degree j.
    std::vector<Rat> reduce(int j, const Poly& p) const;

    // Matrix of multiplication by ell^k from degree i to degree i+k, in
    // standard-monomial coordinates (h(i+k) x h(i)).
    QMat mult_matrix(const Poly& ell, int k, int i) const;

    // Matrix of multiplication by the single variable v from degree i.
    QMat var_mult_matrix(int v, int i) const;

    // Dimension of the degree-j part of the socle (0 : m).
    int socle_dim(int j) const;

private:
    int nvars_;
    int top_;
    std::vector<Piece> pieces_;
};

// Artinian Gorenstein algebra A = R / Ann(F) presented by a homogeneous
// Macaulay dual generator F. All graded data is computed eagerly up to
// degree d+1, after which the annihilator is everything; the object is
// immutable and safe to share across threads.
class ApolarAlgebra {
public:
    explicit ApolarAlgebra(Poly dual_generator);

    int nvars() const { return F_.nvars(); }
    int socle_degree() const { return d_; }
    const Poly& dual_generator() const { return F_; }

    // Matrix of the catalecticant pairing R_i -> R'_{d-i}, f |-> f o F.
    // Rows are indexed by the canonical monomial basis of R'_{d-i}, columns
    // by the canonical monomial basis of R_i.
    const QMat& cat_map(int i) const;

    // Reduced-echelon basis of Ann(F)_j (the full monomial basis for j > d).
    std::vector<Poly> ann_graded(int j) const;

    const std::vector<int>& h_vector() const { return h_; }
    int h(int j) const { return (j < 0 || j > d_) ? 0 : h_[j]; }
    HilbertSeries hilbert_fn() const { return HilbertSeries::from_h_vector(h_); }

    // Inclusion-minimal homogeneous generators of Ann(F), extracted degree by
    // degree with echelon-selected complements; deterministic.
    const std::vector<std::pair<int, Poly>>& min_generators() const { return gens_; }

    const GradedQuotient& quotient() const { return *quotient_; }

    const std::vector<Monomial>& std_basis(int j) const { return quotient_->basis(j); }

private:
    Poly F_;
    int d_;
    std::vector<QMat> cat_;
    std::vector<int> h_;
    std::vector<std::pair<int, Poly>> gens_;
    std::shared_ptr<const GradedQuotient> quotient_;
};

// Coefficient vector of p over the canonical monomial basis of its degree.
std::vector<Rat> coefficient_vector(const Poly& p, const std::vector<Monomial>& basis);
Poly poly_from_vector(const std::vector<Rat>& v, const std::vector<Monomial>& basis, int nvars);

} // namespace macdual

#endif
