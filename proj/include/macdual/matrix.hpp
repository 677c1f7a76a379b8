#ifndef MACDUAL_MATRIX_HPP
#define MACDUAL_MATRIX_HPP

#include "macdual/poly.hpp"
#include "macdual/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace macdual {

// Dense matrix over the rationals. Desk-scale sizes; exactness over speed.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    static QMat identity(int n);

    QMat transpose() const;

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref_inplace();

    QMat rref(std::vector<int>* pivots = nullptr) const;

    int rank() const;

    // Reduced-echelon basis of the right kernel, one row per basis vector,
    // normalized by a second echelon pass so the result is canonical for the
    // given column order.
    QMat kernel() const;

    // Solves A x = b exactly; nullopt when inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    // Exact determinant by fraction-free (Bareiss) elimination.
    Rat determinant() const;

    QMat vstack(const QMat& below) const;

    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Dense matrix of polynomials; used for skew presentations, Hessians and
// symbolic multiplication maps.
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          a_(static_cast<size_t>(rows) * cols, Poly(nvars)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    Poly& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Poly& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    PolyMat transpose() const;
    PolyMat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    QMat evaluate(const std::vector<Rat>& point) const;
    bool is_zero() const;

    // Cofactor expansion along the sparsest row; fine for desk-scale sizes.
    Poly determinant() const;

    // Pfaffian of an even-size skew-symmetric matrix, normalized so that
    // Pf [[0, a], [-a, 0]] = a.
    Poly pfaffian() const;

    // Multiplies by a vector of polynomials.
    std::vector<Poly> apply(const std::vector<Poly>& v) const;

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<Poly> a_;
};

} // namespace macdual

#endif
