#pragma once

#include <utility>
#include <vector>

#include "deltakit/field.hpp"
#include "deltakit/labels.hpp"

namespace deltakit {

namespace detail {

// Gaussian elimination kernels on row-major buffers. Pivot selection is the
// smallest row index with a nonzero entry in the current column.

inline Fp det_in_place(std::vector<Fp>& a, int n) {
    Fp d = fp(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a[static_cast<std::size_t>(r) * n + c].is_zero()) { piv = r; break; }
        if (piv < 0) return Fp();
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * n + j], a[static_cast<std::size_t>(c) * n + j]);
            d = -d;
        }
        const Fp pv = a[static_cast<std::size_t>(c) * n + c];
        d *= pv;
        const Fp pinv = pv.inv();
        for (int r = c + 1; r < n; ++r) {
            const Fp f = a[static_cast<std::size_t>(r) * n + c] * pinv;
            if (f.is_zero()) continue;
            Fp* row = &a[static_cast<std::size_t>(r) * n];
            const Fp* prow = &a[static_cast<std::size_t>(c) * n];
            for (int j = c; j < n; ++j) row[j] -= f * prow[j];
        }
    }
    return d;
}

inline int rank_in_place(std::vector<Fp>& a, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[static_cast<std::size_t>(r) * cols + c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * cols + j], a[static_cast<std::size_t>(rank) * cols + j]);
        const Fp pinv = a[static_cast<std::size_t>(rank) * cols + c].inv();
        for (int r = rank + 1; r < rows; ++r) {
            const Fp f = a[static_cast<std::size_t>(r) * cols + c] * pinv;
            if (f.is_zero()) continue;
            Fp* row = &a[static_cast<std::size_t>(r) * cols];
            const Fp* prow = &a[static_cast<std::size_t>(rank) * cols];
            for (int j = c; j < cols; ++j) row[j] -= f * prow[j];
        }
        ++rank;
    }
    return rank;
}

// Reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref_in_place(std::vector<Fp>& a, int rows, int cols) {
    std::vector<int> pivots;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[static_cast<std::size_t>(r) * cols + c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * cols + j], a[static_cast<std::size_t>(rank) * cols + j]);
        const Fp pinv = a[static_cast<std::size_t>(rank) * cols + c].inv();
        for (int j = c; j < cols; ++j) a[static_cast<std::size_t>(rank) * cols + j] *= pinv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Fp f = a[static_cast<std::size_t>(r) * cols + c];
            if (f.is_zero()) continue;
            Fp* row = &a[static_cast<std::size_t>(r) * cols];
            const Fp* prow = &a[static_cast<std::size_t>(rank) * cols];
            for (int j = c; j < cols; ++j) row[j] -= f * prow[j];
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

inline bool invert_in_place(std::vector<Fp>& a, int n) {
    std::vector<Fp> aug(static_cast<std::size_t>(n) * 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i) * 2 * n + j] = a[static_cast<std::size_t>(i) * n + j];
        aug[static_cast<std::size_t>(i) * 2 * n + n + i] = fp(1);
    }
    std::vector<int> pivots = rref_in_place(aug, n, 2 * n);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = aug[static_cast<std::size_t>(i) * 2 * n + n + j];
    return true;
}

// Greedy column basis in the given column order: a column enters iff it is
// independent of the columns already chosen. Runs a left-to-right elimination
// over the permuted columns.
inline std::vector<int> greedy_column_basis(const std::vector<Fp>& a, int rows, int cols,
                                            const std::vector<int>& order) {
    std::vector<Fp> w(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < static_cast<int>(order.size()); ++k)
            w[static_cast<std::size_t>(r) * cols + k] = a[static_cast<std::size_t>(r) * cols + order[k]];
    std::vector<int> chosen;
    int rank = 0;
    for (int k = 0; k < static_cast<int>(order.size()) && rank < rows; ++k) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!w[static_cast<std::size_t>(r) * cols + k].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = k; j < static_cast<int>(order.size()); ++j)
                std::swap(w[static_cast<std::size_t>(piv) * cols + j], w[static_cast<std::size_t>(rank) * cols + j]);
        const Fp pinv = w[static_cast<std::size_t>(rank) * cols + k].inv();
        for (int r = rank + 1; r < rows; ++r) {
            const Fp f = w[static_cast<std::size_t>(r) * cols + k] * pinv;
            if (f.is_zero()) continue;
            Fp* row = &w[static_cast<std::size_t>(r) * cols];
            const Fp* prow = &w[static_cast<std::size_t>(rank) * cols];
            for (int j = k; j < static_cast<int>(order.size()); ++j) row[j] -= f * prow[j];
        }
        chosen.push_back(order[k]);
        ++rank;
    }
    return chosen;
}

} // namespace detail

// Dense matrix over GF(p) with labelled rows and columns.
class GeneralMatrix {
public:
    GeneralMatrix(Labels row_labels, Labels col_labels, std::vector<Fp> entries)
        : rows_(std::move(row_labels)), cols_(std::move(col_labels)), a_(std::move(entries)) {
        require_distinct(rows_, "matrix rows");
        require_distinct(cols_, "matrix columns");
        if (a_.size() != rows_.size() * cols_.size())
            throw ValidationError("matrix entry count does not match shape");
    }
    static GeneralMatrix zero(Labels row_labels, Labels col_labels) {
        std::size_t n = row_labels.size() * col_labels.size();
        return GeneralMatrix(std::move(row_labels), std::move(col_labels), std::vector<Fp>(n));
    }
    static GeneralMatrix identity(Labels labels) {
        GeneralMatrix m = zero(labels, labels);
        for (int i = 0; i < m.rows(); ++i) m.at(i, i) = fp(1);
        return m;
    }

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return static_cast<int>(cols_.size()); }
    const Labels& row_labels() const { return rows_; }
    const Labels& col_labels() const { return cols_; }

    Fp& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_.size() + c]; }
    Fp at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_.size() + c]; }
    const std::vector<Fp>& entries() const { return a_; }

    int col_index(const Label& l) const {
        for (int i = 0; i < cols(); ++i)
            if (cols_[i] == l) return i;
        throw LabelMismatch("unknown column label: " + l);
    }

    GeneralMatrix submatrix(const std::vector<int>& ridx, const std::vector<int>& cidx) const {
        Labels rl, cl;
        for (int r : ridx) rl.push_back(rows_[r]);
        for (int c : cidx) cl.push_back(cols_[c]);
        std::vector<Fp> e;
        e.reserve(ridx.size() * cidx.size());
        for (int r : ridx)
            for (int c : cidx) e.push_back(at(r, c));
        return GeneralMatrix(std::move(rl), std::move(cl), std::move(e));
    }

private:
    Labels rows_, cols_;
    std::vector<Fp> a_;
};

inline GeneralMatrix transpose(const GeneralMatrix& m) {
    GeneralMatrix t = GeneralMatrix::zero(m.col_labels(), m.row_labels());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

inline GeneralMatrix matmul(const GeneralMatrix& a, const GeneralMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matmul: inner dimensions differ");
    GeneralMatrix c = GeneralMatrix::zero(a.row_labels(), b.col_labels());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Fp v = a.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

inline Fp det(const GeneralMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("det: matrix is not square");
    std::vector<Fp> a = m.entries();
    return detail::det_in_place(a, m.rows());
}

inline int rank(const GeneralMatrix& m) {
    std::vector<Fp> a = m.entries();
    return detail::rank_in_place(a, m.rows(), m.cols());
}

inline GeneralMatrix inverse(const GeneralMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("inverse: matrix is not square");
    std::vector<Fp> a = m.entries();
    if (!detail::invert_in_place(a, m.rows())) throw Singular("inverse: matrix is singular");
    return GeneralMatrix(m.row_labels(), m.col_labels(), std::move(a));
}

inline GeneralMatrix echelon(const GeneralMatrix& m) {
    std::vector<Fp> a = m.entries();
    detail::rref_in_place(a, m.rows(), m.cols());
    return GeneralMatrix(m.row_labels(), m.col_labels(), std::move(a));
}

// Greedy column basis over the given column order; the result has size
// rank(A) and is the lexicographically smallest basis w.r.t. that order.
inline LabelSet lexmin_column_basis(const GeneralMatrix& m, const Labels& order) {
    if (order.size() != static_cast<std::size_t>(m.cols()))
        throw ValidationError("lexmin_column_basis: order must be a permutation of the columns");
    std::vector<int> ord;
    ord.reserve(order.size());
    for (const Label& l : order) ord.push_back(m.col_index(l));
    std::vector<int> sorted = ord;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("lexmin_column_basis: order must be a permutation of the columns");
    std::vector<int> chosen = detail::greedy_column_basis(m.entries(), m.rows(), m.cols(), ord);
    LabelSet out;
    for (int c : chosen) out.push_back(m.col_labels()[c]);
    return out;
}

} // namespace deltakit
