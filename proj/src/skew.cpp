#include "macdual/skew.hpp"

#include <stdexcept>

namespace macdual {

SkewPolyMatrix::SkewPolyMatrix(PolyMat entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SkewPolyMatrix: not square");
    if (m_.rows() % 2 == 0) throw std::invalid_argument("SkewPolyMatrix: size must be odd");
    for (int r = 0; r < m_.rows(); ++r) {
        if (!m_(r, r).is_zero()) throw std::invalid_argument("SkewPolyMatrix: nonzero diagonal");
        for (int c = r + 1; c < m_.cols(); ++c) {
            if (m_(r, c) != -m_(c, r))
                throw std::invalid_argument("SkewPolyMatrix: not skew-symmetric");
            if (!m_(r, c).is_homogeneous())
                throw std::invalid_argument("SkewPolyMatrix: entries must be homogeneous");
        }
    }
}

std::vector<Poly> SkewPolyMatrix::sub_pfaffians() const {
    const int n = size();
    std::vector<Poly> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> keep;
        for (int k = 0; k < n; ++k)
            if (k != i) keep.push_back(k);
        Poly pf = m_.submatrix(keep, keep).pfaffian();
        out.push_back(i % 2 == 0 ? pf : -pf); // (-1)^{i+1} with 1-based i
    }
    return out;
}

SkewPolyMatrix SkewPolyMatrix::permuted(const std::vector<int>& perm) const {
    const int n = size();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("SkewPolyMatrix::permuted: bad permutation");
    PolyMat p(n, n, nvars());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) p(r, c) = m_(perm[r], perm[c]);
    return SkewPolyMatrix(std::move(p));
}

std::vector<std::vector<int>> SkewPolyMatrix::zero_block_subsets() const {
    const int n = size();
    const int want = (n - 1) / 2;
    std::vector<std::vector<int>> found;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == want) {
            found.push_back(subset);
            return;
        }
        for (int i = start; i < n; ++i) {
            bool ok = true;
            for (int j : subset)
                if (!m_(i, j).is_zero() || !m_(j, i).is_zero()) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

} // namespace macdual
