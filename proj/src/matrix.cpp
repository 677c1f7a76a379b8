#include "macdual/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace macdual {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<int> QMat::rref_inplace() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pr = -1;
        for (int r = row; r < rows_; ++r) {
            if ((*this)(r, col) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = col; c < cols_; ++c) std::swap((*this)(row, c), (*this)(pr, c));
        Rat inv = 1 / (*this)(row, col);
        for (int c = col; c < cols_; ++c) (*this)(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row) continue;
            const Rat f = (*this)(r, col);
            if (f == 0) continue;
            for (int c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

QMat QMat::rref(std::vector<int>* pivots) const {
    QMat m(*this);
    auto p = m.rref_inplace();
    if (pivots) *pivots = std::move(p);
    return m;
}

int QMat::rank() const {
    std::vector<int> p;
    rref(&p);
    return static_cast<int>(p.size());
}

QMat QMat::kernel() const {
    std::vector<int> pivots;
    QMat r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    int dim = cols_ - static_cast<int>(pivots.size());
    QMat k(dim, cols_);
    int out = 0;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        k(out, free) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) k(out, pivots[i]) = -r(static_cast<int>(i), free);
        ++out;
    }
    k.rref_inplace(); // canonical representative set
    return k;
}

std::optional<std::vector<Rat>> QMat::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("QMat::solve: size mismatch");
    QMat aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    std::vector<int> pivots = aug.rref_inplace();
    std::vector<Rat> x(cols_);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols_) return std::nullopt; // inconsistent
        x[pivots[i]] = aug(static_cast<int>(i), cols_);
    }
    return x;
}

Rat QMat::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("QMat::determinant: not square");
    int n = rows_;
    if (n == 0) return 1;
    // Clear denominators rowwise, then run Bareiss on the integer matrix.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Rat scale = 1;
    for (int r = 0; r < n; ++r) {
        Int l = 1;
        for (int c = 0; c < n; ++c) {
            const Int& den = (*this)(r, c).get_den();
            l = lcm(l, den);
        }
        scale /= Rat(l);
        for (int c = 0; c < n; ++c) {
            Rat v = (*this)(r, c) * Rat(l);
            m[r][c] = v.get_num();
        }
    }
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return Rat(sign) * scale * Rat(m[n - 1][n - 1]);
}

QMat QMat::vstack(const QMat& below) const {
    if (cols_ != below.cols_ && rows_ != 0 && below.rows_ != 0)
        throw std::invalid_argument("QMat::vstack: column mismatch");
    int cols = rows_ ? cols_ : below.cols_;
    QMat m(rows_ + below.rows_, cols);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = (*this)(r, c);
    for (int r = 0; r < below.rows_; ++r)
        for (int c = 0; c < cols; ++c) m(rows_ + r, c) = below(r, c);
    return m;
}

bool QMat::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

PolyMat PolyMat::transpose() const {
    PolyMat t(cols_, rows_, nvars_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

PolyMat PolyMat::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    PolyMat s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), nvars_);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            s(static_cast<int>(r), static_cast<int>(c)) = (*this)(rows[r], cols[c]);
    return s;
}

QMat PolyMat::evaluate(const std::vector<Rat>& point) const {
    QMat m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
    return m;
}

bool PolyMat::is_zero() const {
    for (const Poly& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

Poly det_rec(const PolyMat& m, std::vector<int>& rows, std::vector<int>& cols) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) return Poly::constant(m.nvars(), 1);
    if (n == 1) return m(rows[0], cols[0]);
    // Expand along the row with fewest nonzero entries.
    int best = 0, best_count = n + 1;
    for (int r = 0; r < n; ++r) {
        int count = 0;
        for (int c = 0; c < n; ++c)
            if (!m(rows[r], cols[c]).is_zero()) ++count;
        if (count < best_count) {
            best_count = count;
            best = r;
        }
    }
    if (best_count == 0) return Poly::zero(m.nvars());
    int row = rows[best];
    std::vector<int> sub_rows;
    for (int r = 0; r < n; ++r)
        if (r != best) sub_rows.push_back(rows[r]);
    Poly total(m.nvars());
    for (int c = 0; c < n; ++c) {
        const Poly& e = m(row, cols[c]);
        if (e.is_zero()) continue;
        std::vector<int> sub_cols;
        for (int cc = 0; cc < n; ++cc)
            if (cc != c) sub_cols.push_back(cols[cc]);
        Poly minor = det_rec(m, sub_rows, sub_cols);
        int sign = ((best + c) % 2 == 0) ? 1 : -1;
        total = total + e * minor * Rat(sign);
    }
    return total;
}

Poly pf_rec(const PolyMat& m, std::vector<int> idx) {
    const int n = static_cast<int>(idx.size());
    if (n == 0) return Poly::constant(m.nvars(), 1);
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
    Poly total(m.nvars());
    // Pf(M) = sum_j (-1)^j m_{1j} Pf(M with rows/cols 1, j removed).
    for (int j = 1; j < n; ++j) {
        const Poly& e = m(idx[0], idx[j]);
        if (e.is_zero()) continue;
        std::vector<int> rest;
        for (int k = 1; k < n; ++k)
            if (k != j) rest.push_back(idx[k]);
        int sign = (j % 2 == 1) ? 1 : -1; // (-1)^j with 1-based column index
        total = total + e * pf_rec(m, rest) * Rat(sign);
    }
    return total;
}

} // namespace

Poly PolyMat::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMat::determinant: not square");
    std::vector<int> rows(rows_), cols(cols_);
    for (int i = 0; i < rows_; ++i) rows[i] = i;
    for (int i = 0; i < cols_; ++i) cols[i] = i;
    return det_rec(*this, rows, cols);
}

Poly PolyMat::pfaffian() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMat::pfaffian: not square");
    if (rows_ % 2 != 0) throw std::invalid_argument("PolyMat::pfaffian: odd size");
    std::vector<int> idx(rows_);
    for (int i = 0; i < rows_; ++i) idx[i] = i;
    return pf_rec(*this, idx);
}

std::vector<Poly> PolyMat::apply(const std::vector<Poly>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("PolyMat::apply: size mismatch");
    std::vector<Poly> out(rows_, Poly(nvars_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero())
                out[r] = out[r] + (*this)(r, c) * v[c];
    return out;
}

} // namespace macdual
