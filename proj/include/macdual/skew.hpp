#ifndef MACDUAL_SKEW_HPP
#define MACDUAL_SKEW_HPP

#include "macdual/matrix.hpp"
#include "macdual/poly.hpp"

#include <vector>

namespace macdual {

// Odd-size skew-symmetric matrix of homogeneous polynomials: the carrier of
// Buchsbaum-Eisenbud presentations of codimension-3 Gorenstein ideals.
class SkewPolyMatrix {
public:
    explicit SkewPolyMatrix(PolyMat entries);

    int size() const { return m_.rows(); }
    int nvars() const { return m_.nvars(); }
    const PolyMat& entries() const { return m_; }
    const Poly& operator()(int r, int c) const { return m_(r, c); }

    // The 2n+1 signed sub-Pfaffians (-1)^{i+1} Pf(M with row/column i
    // deleted), normalized so that Pf [[0,a],[-a,0]] = a.
    std::vector<Poly> sub_pfaffians() const;

    // Applies the same permutation to rows and columns (preserves skew
    // symmetry).
    SkewPolyMatrix permuted(const std::vector<int>& perm) const;

    // Index sets S of size (size-1)/2 with M[S x S] = 0; candidates for the
    // zero block of a doubling presentation, in lexicographic order.
    std::vector<std::vector<int>> zero_block_subsets() const;

private:
    PolyMat m_;
};

} // namespace macdual

#endif
