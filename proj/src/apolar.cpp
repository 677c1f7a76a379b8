#include "macdual/apolar.hpp"

#include <algorithm>
#include <stdexcept>

namespace macdual {

std::vector<Rat> coefficient_vector(const Poly& p, const std::vector<Monomial>& basis) {
    std::vector<Rat> v(basis.size());
    size_t found = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        Rat c = p.coefficient(basis[i]);
        if (c != 0) ++found;
        v[i] = std::move(c);
    }
    if (found != p.terms().size())
        throw std::invalid_argument("coefficient_vector: polynomial not supported on basis");
    return v;
}

Poly poly_from_vector(const std::vector<Rat>& v, const std::vector<Monomial>& basis, int nvars) {
    Poly p(nvars);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) p.add_term(basis[i], v[i]);
    return p;
}

GradedQuotient::GradedQuotient(int nvars, std::vector<Piece> pieces)
    : nvars_(nvars), pieces_(std::move(pieces)) {
    top_ = -1;
    for (size_t j = 0; j < pieces_.size(); ++j)
        if (!pieces_[j].std_monomials.empty()) top_ = static_cast<int>(j);
}

int GradedQuotient::h(int j) const {
    if (j < 0 || j >= static_cast<int>(pieces_.size()))
        return 0;
    return static_cast<int>(pieces_[j].std_monomials.size());
}

std::vector<int> GradedQuotient::h_vector() const {
    std::vector<int> h;
    for (int j = 0; j <= top_; ++j) h.push_back(this->h(j));
    return h;
}

const GradedQuotient::Piece& GradedQuotient::piece(int j) const {
    if (j < 0 || j >= static_cast<int>(pieces_.size()))
        throw std::out_of_range("GradedQuotient::piece: degree out of computed range");
    return pieces_[j];
}

std::vector<Rat> GradedQuotient::reduce(int j, const Poly& p) const {
    const Piece& pc = piece(j);
    std::vector<Rat> v = coefficient_vector(p, pc.monomials);
    // Eliminate pivot coordinates with the echelon rows of I_j.
    for (size_t r = 0; r < pc.pivot_cols.size(); ++r) {
        const Rat f = v[pc.pivot_cols[r]];
        if (f == 0) continue;
        int cols = pc.ideal_rref.cols();
        for (int c = 0; c < cols; ++c) {
            const Rat& e = pc.ideal_rref(static_cast<int>(r), c);
            if (e != 0) v[c] -= f * e;
        }
    }
    std::vector<Rat> coords(pc.std_cols.size());
    for (size_t i = 0; i < pc.std_cols.size(); ++i) coords[i] = v[pc.std_cols[i]];
    return coords;
}

QMat GradedQuotient::mult_matrix(const Poly& ell, int k, int i) const {
    if (k < 1) throw std::invalid_argument("mult_matrix: power must be >= 1");
    Poly lk = ell.pow(k);
    const auto& dom = basis(i);
    QMat m(h(i + k), static_cast<int>(dom.size()));
    for (size_t c = 0; c < dom.size(); ++c) {
        std::vector<Rat> col = reduce(i + k, lk.mul_monomial(dom[c]));
        for (size_t r = 0; r < col.size(); ++r) m(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    return m;
}

QMat GradedQuotient::var_mult_matrix(int v, int i) const {
    return mult_matrix(Poly::variable(v, nvars_), 1, i);
}

int GradedQuotient::socle_dim(int j) const {
    if (h(j) == 0) return 0;
    QMat stacked(0, h(j));
    for (int v = 0; v < nvars_; ++v) stacked = stacked.vstack(var_mult_matrix(v, j));
    return h(j) - stacked.rank();
}

namespace {

GradedQuotient::Piece make_piece(int nvars, int degree, QMat ideal_rref,
                                 std::vector<int> pivots) {
    GradedQuotient::Piece piece;
    piece.monomials = monomials_of_degree(nvars, degree);
    piece.ideal_rref = std::move(ideal_rref);
    piece.pivot_cols = std::move(pivots);
    std::vector<bool> is_pivot(piece.monomials.size(), false);
    for (int p : piece.pivot_cols) is_pivot[p] = true;
    for (size_t c = 0; c < piece.monomials.size(); ++c) {
        if (!is_pivot[c]) {
            piece.std_cols.push_back(static_cast<int>(c));
            piece.std_monomials.push_back(piece.monomials[c]);
        }
    }
    return piece;
}

// Incremental row reducer over a fixed column basis.
class Reducer {
public:
    explicit Reducer(int cols) : cols_(cols) {}

    // Reduces v against the rows collected so far (in place).
    void reduce(std::vector<Rat>& v) const {
        for (const auto& [pivot, row] : rows_) {
            const Rat f = v[pivot];
            if (f == 0) continue;
            for (int c = 0; c < cols_; ++c)
                if (row[c] != 0) v[c] -= f * row[c];
        }
    }

    // Returns true when v was nonzero mod the current span; the normalized
    // remainder is inserted.
    bool insert(std::vector<Rat> v) {
        reduce(v);
        int pivot = -1;
        for (int c = 0; c < cols_; ++c)
            if (v[c] != 0) {
                pivot = c;
                break;
            }
        if (pivot < 0) return false;
        Rat inv = 1 / v[pivot];
        for (int c = 0; c < cols_; ++c) v[c] *= inv;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    int dim() const { return static_cast<int>(rows_.size()); }

private:
    int cols_;
    std::map<int, std::vector<Rat>> rows_; // pivot column -> normalized row
};

} // namespace

ApolarAlgebra::ApolarAlgebra(Poly dual_generator) : F_(std::move(dual_generator)) {
    if (F_.is_zero()) throw std::invalid_argument("ApolarAlgebra: dual generator is zero");
    if (!F_.is_homogeneous())
        throw std::invalid_argument("ApolarAlgebra: dual generator must be homogeneous");
    d_ = F_.degree();
    const int n = F_.nvars();

    std::vector<GradedQuotient::Piece> pieces;
    cat_.resize(d_ + 2);
    for (int j = 0; j <= d_ + 1; ++j) {
        std::vector<Monomial> cols = monomials_of_degree(n, j);
        std::vector<Monomial> rows = monomials_of_degree(n, d_ - j);
        std::map<Monomial, int, CanonicalTermLess> row_index;
        for (size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<int>(r));
        QMat cat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            Poly image = contract(Poly::monomial(cols[c]), F_);
            for (auto& [m, coef] : image.terms()) cat(row_index.at(m), static_cast<int>(c)) = coef;
        }
        std::vector<int> pivots;
        QMat ann2 = cat.kernel().rref(&pivots); // kernel is already echelon; this just reads pivots
        cat_[j] = std::move(cat);
        pieces.push_back(make_piece(n, j, std::move(ann2), std::move(pivots)));
        if (j <= d_) h_.push_back(static_cast<int>(pieces.back().std_monomials.size()));
    }
    quotient_ = std::make_shared<GradedQuotient>(n, std::move(pieces));

    // Non-degeneracy of the apolarity pairing forces h_0 = h_d = 1 and the
    // symmetric h-vector; cheap internal sanity checks.
    if (h_[0] != 1 || h_[d_] != 1)
        throw std::logic_error("ApolarAlgebra: pairing degenerated (h_0 or h_d != 1)");

    // Minimal generators: in each degree take an echelon-selected complement
    // of R_1 * Ann(F)_{j-1} inside Ann(F)_j.
    std::vector<Poly> prev_basis; // basis of Ann(F)_{j-1}
    for (int j = 1; j <= d_ + 1; ++j) {
        const auto& pc = quotient_->piece(j);
        Reducer red(static_cast<int>(pc.monomials.size()));
        for (const Poly& p : prev_basis)
            for (int v = 0; v < n; ++v)
                red.insert(coefficient_vector(p.mul_monomial(Monomial::var(v, n)), pc.monomials));
        std::vector<Poly> cur_basis;
        const QMat& ann = pc.ideal_rref;
        for (int r = 0; r < ann.rows(); ++r) {
            std::vector<Rat> v(pc.monomials.size());
            for (size_t c = 0; c < pc.monomials.size(); ++c) v[c] = ann(r, static_cast<int>(c));
            cur_basis.push_back(poly_from_vector(v, pc.monomials, n));
            red.reduce(v);
            bool is_new = false;
            for (const Rat& x : v)
                if (x != 0) {
                    is_new = true;
                    break;
                }
            if (is_new) {
                // Normalize the remainder on its leading column.
                int lead = -1;
                for (size_t c = 0; c < v.size(); ++c)
                    if (v[c] != 0) {
                        lead = static_cast<int>(c);
                        break;
                    }
                Rat inv = 1 / v[lead];
                for (Rat& x : v) x *= inv;
                gens_.emplace_back(j, poly_from_vector(v, pc.monomials, n));
                red.insert(std::move(v));
            }
        }
        prev_basis = std::move(cur_basis);
    }
}

const QMat& ApolarAlgebra::cat_map(int i) const {
    if (i < 0 || i > d_) throw std::out_of_range("cat_map: degree out of range");
    return cat_[i];
}

std::vector<Poly> ApolarAlgebra::ann_graded(int j) const {
    if (j < 0) throw std::invalid_argument("ann_graded: negative degree");
    const int n = nvars();
    if (j > d_ + 1) {
        std::vector<Poly> all;
        for (const Monomial& m : monomials_of_degree(n, j)) all.push_back(Poly::monomial(m));
        return all;
    }
    const auto& pc = quotient_->piece(j);
    std::vector<Poly> out;
    for (int r = 0; r < pc.ideal_rref.rows(); ++r) {
        std::vector<Rat> v(pc.monomials.size());
        for (size_t c = 0; c < pc.monomials.size(); ++c) v[c] = pc.ideal_rref(r, static_cast<int>(c));
        out.push_back(poly_from_vector(v, pc.monomials, n));
    }
    return out;
}

} // namespace macdual
