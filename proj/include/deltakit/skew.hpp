#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "deltakit/matrix.hpp"

namespace deltakit {

// Dense skew-symmetric matrix over GF(p) with zero diagonal, rows and columns
// labelled by ground-set elements. The label order is the ambient total order.
class SkewMatrix {
public:
    SkewMatrix(Labels labels, std::vector<Fp> entries)
        : labels_(std::move(labels)), a_(std::move(entries)) {
        require_distinct(labels_, "skew matrix labels");
        const std::size_t n = labels_.size();
        if (a_.size() != n * n) throw ValidationError("skew matrix entry count does not match label count");
        for (std::size_t i = 0; i < n; ++i) {
            if (!a_[i * n + i].is_zero()) throw ValidationError("skew matrix has nonzero diagonal");
            for (std::size_t j = i + 1; j < n; ++j)
                if (a_[i * n + j] != -a_[j * n + i])
                    throw ValidationError("matrix is not skew-symmetric at (" + labels_[i] + "," + labels_[j] + ")");
        }
    }

    static SkewMatrix zero(Labels labels) {
        std::size_t n = labels.size();
        return SkewMatrix(std::move(labels), std::vector<Fp>(n * n));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const Labels& labels() const { return labels_; }

    Fp at(int i, int j) const { return a_[static_cast<std::size_t>(i) * labels_.size() + j]; }
    const std::vector<Fp>& entries() const { return a_; }

    // Sets entries (i,j) = v and (j,i) = -v.
    void set_pair(int i, int j, Fp v) {
        if (i == j) throw ValidationError("skew matrix diagonal must stay zero");
        a_[static_cast<std::size_t>(i) * labels_.size() + j] = v;
        a_[static_cast<std::size_t>(j) * labels_.size() + i] = -v;
    }

    int index_of(const Label& l) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == l) return i;
        throw LabelMismatch("unknown label: " + l);
    }

    bool has_label(const Label& l) const {
        return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
    }

    // Indices of the given label set, in ambient order.
    std::vector<int> indices_of(const LabelSet& s) const {
        std::vector<int> idx;
        idx.reserve(s.size());
        for (const Label& l : s) idx.push_back(index_of(l));
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw ValidationError("label set contains duplicates");
        return idx;
    }

    // Principal submatrix on ascending index list; preserves relative order.
    SkewMatrix submatrix(const std::vector<int>& idx) const {
        const std::size_t n = labels_.size();
        Labels ls;
        ls.reserve(idx.size());
        for (int i : idx) ls.push_back(labels_[i]);
        std::vector<Fp> e;
        e.reserve(idx.size() * idx.size());
        for (int i : idx)
            for (int j : idx) e.push_back(a_[static_cast<std::size_t>(i) * n + j]);
        return SkewMatrix(std::move(ls), std::move(e));
    }

    SkewMatrix submatrix(const LabelSet& s) const { return submatrix(indices_of(s)); }

    GeneralMatrix as_general() const {
        return GeneralMatrix(labels_, labels_, a_);
    }

private:
    Labels labels_;
    std::vector<Fp> a_;
};

inline Fp det(const SkewMatrix& m) {
    std::vector<Fp> a = m.entries();
    return detail::det_in_place(a, m.size());
}

inline int rank(const SkewMatrix& m) {
    std::vector<Fp> a = m.entries();
    return detail::rank_in_place(a, m.size(), m.size());
}

inline SkewMatrix inverse(const SkewMatrix& m) {
    std::vector<Fp> a = m.entries();
    if (!detail::invert_in_place(a, m.size())) throw Singular("inverse: matrix is singular");
    return SkewMatrix(m.labels(), std::move(a));
}

namespace detail {

// Pfaffian by skew-symmetric elimination. Each step clears column k below
// row k+1 with a congruence (a rank-2 update of the trailing block), after
// which Pf A = A[k,k+1] * Pf(trailing block past k+1). Row swaps flip the
// sign. O(n^3).
inline Fp pfaffian_in_place(std::vector<Fp>& a, int n) {
    if (n % 2 != 0) return Fp();
    Fp pf = fp(1);
    for (int k = 0; k + 1 < n; k += 2) {
        int piv = -1;
        for (int r = k + 1; r < n; ++r)
            if (!a[static_cast<std::size_t>(r) * n + k].is_zero()) { piv = r; break; }
        if (piv < 0) return Fp();
        if (piv != k + 1) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * n + j], a[static_cast<std::size_t>(k + 1) * n + j]);
            for (int i = 0; i < n; ++i)
                std::swap(a[static_cast<std::size_t>(i) * n + piv], a[static_cast<std::size_t>(i) * n + k + 1]);
            pf = -pf;
        }
        const Fp pivval = a[static_cast<std::size_t>(k + 1) * n + k];
        pf *= a[static_cast<std::size_t>(k) * n + k + 1];
        const Fp pinv = pivval.inv();
        // Trailing update: T[i][j] += (u_i w_j - u_j w_i) / pivval with
        // u = column k, w = column k+1 below row k+1.
        for (int i = k + 2; i < n; ++i) {
            const Fp ui = a[static_cast<std::size_t>(i) * n + k] * pinv;
            if (ui.is_zero()) continue;
            const Fp* wcol = &a[0];
            Fp* row = &a[static_cast<std::size_t>(i) * n];
            for (int j = k + 2; j < n; ++j)
                row[j] += ui * wcol[static_cast<std::size_t>(j) * n + k + 1];
        }
        for (int j = k + 2; j < n; ++j) {
            const Fp uj = a[static_cast<std::size_t>(j) * n + k] * pinv;
            if (uj.is_zero()) continue;
            for (int i = k + 2; i < n; ++i)
                a[static_cast<std::size_t>(i) * n + j] -= a[static_cast<std::size_t>(i) * n + k + 1] * uj;
        }
    }
    return pf;
}

// Parity of the number of inversions in a short sequence.
inline int inversion_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace detail

// Pf A. Odd order yields 0 (no perfect matching); the empty matrix has Pf 1.
inline Fp pfaffian(const SkewMatrix& m) {
    std::vector<Fp> a = m.entries();
    return detail::pfaffian_in_place(a, m.size());
}

// Signed sum over all perfect matchings of the support graph, with explicit
// permutation-sign computation. Reference oracle for pfaffian().
inline Fp pfaffian_bruteforce(const SkewMatrix& m) {
    const int n = m.size();
    if (n > 12) throw TooLarge("pfaffian_bruteforce: order above 12");
    if (n % 2 != 0) return Fp();
    Fp total;
    std::vector<int> seq;       // matched vertices in order v1 v1' v2 v2' ...
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        int lo = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i]) { lo = i; break; }
        if (lo < 0) {
            Fp term = fp(detail::inversion_sign(seq));
            for (std::size_t k = 0; k < seq.size(); k += 2) term *= m.at(seq[k], seq[k + 1]);
            total += term;
            return;
        }
        used[lo] = true;
        for (int j = lo + 1; j < n; ++j) {
            if (used[j] || m.at(lo, j).is_zero()) continue;
            used[j] = true;
            seq.push_back(lo);
            seq.push_back(j);
            self(self);
            seq.pop_back();
            seq.pop_back();
            used[j] = false;
        }
        used[lo] = false;
    };
    rec(rec);
    return total;
}

// det M computed through the Pfaffian of the block embedding
// [[O, M], [-M^T, O]], scaled by (-1)^{n(n-1)/2}.
inline Fp det_via_pf_embedding(const GeneralMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("det_via_pf_embedding: matrix is not square");
    const int n = m.rows();
    Labels ls;
    for (int i = 0; i < n; ++i) ls.push_back("r" + std::to_string(i));
    for (int j = 0; j < n; ++j) ls.push_back("c" + std::to_string(j));
    SkewMatrix e = SkewMatrix::zero(ls);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.set_pair(i, n + j, m.at(i, j));
    Fp pf = pfaffian(e);
    const long long q = static_cast<long long>(n) * (n - 1) / 2;
    return q % 2 == 0 ? pf : -pf;
}

// Pivoting A*S: the skew-symmetric partial inverse with blocks
// [[B^-1, B^-1 C], [C^T B^-1, D + C^T B^-1 C]] for B = A[S].
// (A*S)[X] is nonsingular iff A[X (symdiff) S] is.
inline SkewMatrix pivot(const SkewMatrix& m, const LabelSet& s) {
    std::vector<int> sidx = m.indices_of(s);
    if (sidx.empty()) return m;
    const int n = m.size();
    std::vector<int> rest;
    {
        std::vector<bool> in_s(n, false);
        for (int i : sidx) in_s[i] = true;
        for (int i = 0; i < n; ++i)
            if (!in_s[i]) rest.push_back(i);
    }
    const int k = static_cast<int>(sidx.size());
    const int r = static_cast<int>(rest.size());
    std::vector<Fp> b(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) b[static_cast<std::size_t>(i) * k + j] = m.at(sidx[i], sidx[j]);
    if (!detail::invert_in_place(b, k)) throw SingularPivotBlock("pivot: A[S] is singular");
    // u = B^-1 C where C = A[S, rest]
    std::vector<Fp> c(static_cast<std::size_t>(k) * r);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) c[static_cast<std::size_t>(i) * r + j] = m.at(sidx[i], rest[j]);
    std::vector<Fp> u(static_cast<std::size_t>(k) * r);
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < k; ++t) {
            const Fp f = b[static_cast<std::size_t>(i) * k + t];
            if (f.is_zero()) continue;
            for (int j = 0; j < r; ++j)
                u[static_cast<std::size_t>(i) * r + j] += f * c[static_cast<std::size_t>(t) * r + j];
        }
    SkewMatrix out = SkewMatrix::zero(m.labels());
    std::vector<Fp> raw(static_cast<std::size_t>(n) * n);
    auto put = [&](int i, int j, Fp v) { raw[static_cast<std::size_t>(i) * n + j] = v; };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) put(sidx[i], sidx[j], b[static_cast<std::size_t>(i) * k + j]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) {
            const Fp v = u[static_cast<std::size_t>(i) * r + j];
            put(sidx[i], rest[j], v);
            put(rest[j], sidx[i], -v);
        }
    // D + C^T B^-1 C = D + C^T u
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Fp v = m.at(rest[i], rest[j]);
            for (int t = 0; t < k; ++t)
                v += c[static_cast<std::size_t>(t) * r + i] * u[static_cast<std::size_t>(t) * r + j];
            put(rest[i], rest[j], v);
        }
    return SkewMatrix(m.labels(), std::move(raw));
}

// (Pf A[S], Pf of the Schur complement D + C^T B^-1 C); the product is Pf A.
// The block identity assumes S occupies the leading rows, so the second
// component carries the sign of the permutation that brings S to the front.
inline std::pair<Fp, Fp> schur_pf(const SkewMatrix& m, const LabelSet& s) {
    std::vector<int> sidx = m.indices_of(s);
    if (sidx.size() % 2 != 0) throw ValidationError("schur_pf: |S| must be even");
    Fp pf_block = pfaffian(m.submatrix(sidx));
    if (pf_block.is_zero()) throw SingularPivotBlock("schur_pf: A[S] is singular");
    SkewMatrix piv = pivot(m, s);
    std::vector<int> rest, seq = sidx;
    std::vector<bool> in_s(m.size(), false);
    for (int i : sidx) in_s[i] = true;
    for (int i = 0; i < m.size(); ++i)
        if (!in_s[i]) rest.push_back(i);
    seq.insert(seq.end(), rest.begin(), rest.end());
    Fp pf_schur = fp(detail::inversion_sign(seq)) * pfaffian(piv.submatrix(rest));
    return {pf_block, pf_schur};
}

// Evaluates the Pfaffian-sum expansion
//   sum over U of sign(U) * Pf A1[U] * Pf A2[V \ U]
// where sign(U) is the parity of the permutation listing U ascending followed
// by V \ U ascending. Test oracle for Pf(A1 + A2).
inline Fp pfaffian_sum_check(const SkewMatrix& a1, const SkewMatrix& a2) {
    if (a1.labels() != a2.labels()) throw LabelMismatch("pfaffian_sum_check: label sets differ");
    const int n = a1.size();
    if (n % 2 != 0) throw ValidationError("pfaffian_sum_check: |V| must be even");
    if (n > 12) throw TooLarge("pfaffian_sum_check: order above 12");
    Fp total;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> u, w, seq;
        for (int i = 0; i < n; ++i)
            (mask >> i & 1 ? u : w).push_back(i);
        if (u.size() % 2 != 0) continue;
        seq = u;
        seq.insert(seq.end(), w.begin(), w.end());
        Fp term = fp(detail::inversion_sign(seq));
        term *= pfaffian(a1.submatrix(u));
        if (term.is_zero()) continue;
        term *= pfaffian(a2.submatrix(w));
        total += term;
    }
    return total;
}

// Evaluates sum over U in C([2n], 2k) of det B[.,U] * Pf A[U], which equals
// Pf(B A B^T) for skew A (2n x 2n) and B (2k x 2n).
inline Fp ishikawa_wakayama_check(const SkewMatrix& a, const GeneralMatrix& b) {
    const int n2 = a.size();
    const int k2 = b.rows();
    if (n2 % 2 != 0 || k2 % 2 != 0) throw ValidationError("ishikawa_wakayama_check: dimensions must be even");
    if (b.cols() != n2) throw ValidationError("ishikawa_wakayama_check: B must have 2n columns");
    if (k2 > n2) throw ValidationError("ishikawa_wakayama_check: requires k <= n");
    if (n2 > 10) throw TooLarge("ishikawa_wakayama_check: 2n above 10");
    std::vector<int> all_rows(k2);
    for (int i = 0; i < k2; ++i) all_rows[i] = i;
    Fp total;
    std::vector<int> u(k2);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k2) {
            Fp term = det(b.submatrix(all_rows, u));
            if (term.is_zero()) return;
            total += term * pfaffian(a.submatrix(u));
            return;
        }
        for (int i = start; i < n2; ++i) {
            u[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

// B A B^T as a skew matrix with B's row labels.
inline SkewMatrix congruence(const GeneralMatrix& b, const SkewMatrix& a) {
    GeneralMatrix prod = matmul(matmul(b, a.as_general()), transpose(b));
    return SkewMatrix(prod.row_labels(), prod.entries());
}

inline SkewMatrix random_skew(const Labels& labels, Rng& rng, double density = 1.0) {
    SkewMatrix m = SkewMatrix::zero(labels);
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (density >= 1.0 || rng.uniform_real() < density) m.set_pair(i, j, rng.uniform_field());
    return m;
}

} // namespace deltakit
