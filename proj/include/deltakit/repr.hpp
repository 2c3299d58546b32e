#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "deltakit/skew.hpp"

namespace deltakit {

// Twist representation D = D(A) (symdiff) S: a set F is feasible iff
// A[F (symdiff) S] is nonsingular. Always names a nonempty family (S itself
// is feasible, since the empty principal submatrix is nonsingular).
struct TwistRep {
    SkewMatrix A;
    LabelSet twist_set;

    TwistRep(SkewMatrix a, LabelSet s) : A(std::move(a)), twist_set(std::move(s)) {
        A.indices_of(twist_set); // validates membership and distinctness
    }
    const Labels& ground() const { return A.labels(); }
};

// Contraction representation D = D(A)/T over labels V + T: a set F in V is
// feasible iff A[F + T] is nonsingular. Construction checks the family is
// nonempty, i.e. the columns of T are independent in A.
class ContractionRep {
public:
    ContractionRep(SkewMatrix a, LabelSet contract) : A_(std::move(a)), contract_(std::move(contract)) {
        std::vector<int> tidx = A_.indices_of(contract_);
        std::vector<bool> in_t(A_.size(), false);
        for (int i : tidx) in_t[i] = true;
        for (int i = 0; i < A_.size(); ++i)
            if (!in_t[i]) ground_.push_back(A_.labels()[i]);
        if (!columns_independent(tidx))
            throw EmptyDeltaMatroid("contraction representation names an empty family");
    }

    const SkewMatrix& matrix() const { return A_; }
    const LabelSet& contract_set() const { return contract_; }
    const Labels& ground() const { return ground_; }

private:
    bool columns_independent(const std::vector<int>& tidx) const {
        if (tidx.empty()) return true;
        const int n = A_.size();
        std::vector<Fp> cols(static_cast<std::size_t>(n) * tidx.size());
        for (int r = 0; r < n; ++r)
            for (std::size_t j = 0; j < tidx.size(); ++j)
                cols[static_cast<std::size_t>(r) * tidx.size() + j] = A_.at(r, tidx[j]);
        return detail::rank_in_place(cols, n, static_cast<int>(tidx.size())) == static_cast<int>(tidx.size());
    }

    SkewMatrix A_;
    LabelSet contract_;
    Labels ground_;
};

// Projected linear delta-matroid D' | X: F is feasible iff some completion
// S inside X makes F + S feasible in the inner representation.
struct ProjectedRep {
    ContractionRep inner;
    LabelSet project;

    ProjectedRep(ContractionRep in, LabelSet x) : inner(std::move(in)), project(std::move(x)) {
        if (!is_subset(project, inner.ground()))
            throw LabelMismatch("projection set must lie inside the inner ground set");
        require_distinct(project, "projection set");
    }
    Labels ground() const { return set_minus(inner.ground(), project); }
    bool is_linear() const { return project.empty(); }
};

inline ProjectedRep as_projected(ContractionRep d) { return ProjectedRep(std::move(d), {}); }

// Simple undirected graph on labelled vertices.
struct Graph {
    Labels vertices;
    std::vector<std::pair<Label, Label>> edges;

    Graph(Labels vs, std::vector<std::pair<Label, Label>> es)
        : vertices(std::move(vs)), edges(std::move(es)) {
        require_distinct(vertices, "graph vertices");
        std::vector<std::pair<Label, Label>> seen;
        for (auto& [u, v] : edges) {
            if (u == v) throw ValidationError("graph has a loop at " + u);
            if (!contains_label(vertices, u) || !contains_label(vertices, v))
                throw ValidationError("edge endpoint is not a vertex");
            auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                throw ValidationError("duplicate edge " + u + "-" + v);
            seen.push_back(key);
        }
    }
};

namespace detail {

inline void require_ground_subset(const LabelSet& f, const Labels& ground, const char* what) {
    require_distinct(f, what);
    if (!is_subset(f, ground)) throw LabelMismatch(std::string(what) + ": not a subset of the ground set");
}

// Rank of the column block A[., cols] restricted to rows `rows`.
inline int column_rank(const SkewMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<Fp> m(rows.size() * cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m[i * cols.size() + j] = a.at(rows[i], cols[j]);
    return rank_in_place(m, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
}

} // namespace detail

inline bool feasible(const ContractionRep& d, const LabelSet& f) {
    detail::require_ground_subset(f, d.ground(), "feasible");
    LabelSet ft = set_union(f, d.contract_set());
    return !det(d.matrix().submatrix(ft)).is_zero();
}

inline bool feasible(const TwistRep& d, const LabelSet& f) {
    detail::require_ground_subset(f, d.ground(), "feasible");
    return !det(d.A.submatrix(set_symdiff(f, d.twist_set))).is_zero();
}

// Exact: F extends to a feasible set of the inner representation iff the
// columns F + T are independent inside A[F + X + T]. A greedy column basis of
// that skew block seeded with F + T is then a nonsingular principal
// submatrix, which provides the completion inside X.
inline bool feasible(const ProjectedRep& d, const LabelSet& f) {
    detail::require_ground_subset(f, d.ground(), "feasible");
    const SkewMatrix& a = d.inner.matrix();
    std::vector<int> need = a.indices_of(set_union(f, d.inner.contract_set()));
    std::vector<int> all = a.indices_of(set_union(set_union(f, d.project), d.inner.contract_set()));
    return detail::column_rank(a, all, need) == static_cast<int>(need.size());
}

// Separation query: is there a feasible set containing S and avoiding T_avoid?
inline bool separable(const ContractionRep& d, const LabelSet& s, const LabelSet& t_avoid) {
    detail::require_ground_subset(s, d.ground(), "separable");
    detail::require_ground_subset(t_avoid, d.ground(), "separable");
    if (!set_intersect(s, t_avoid).empty()) throw OverlappingSets("separable: S and T overlap");
    const SkewMatrix& a = d.matrix();
    std::vector<int> need = a.indices_of(set_union(s, d.contract_set()));
    std::vector<int> rows = a.indices_of(set_minus(set_union(LabelSet(d.ground()), d.contract_set()), t_avoid));
    return detail::column_rank(a, rows, need) == static_cast<int>(need.size());
}

namespace detail {

// Builds, over labels V + T_new, the pivoted form of the twist gadget: the
// result represents (D(A)/T) (symdiff) S as D(A')/(T + T_new) with
// |T_new| = |S|. Writing R for the non-S labels of A:
//   A'[S,S] = O, A'[S,T_new] = -I, A'[S,R] = O,
//   A'[T_new,T_new] = A[S], A'[T_new,R] = A[S,R], A'[R,R] = A[R].
inline SkewMatrix twist_gadget(const SkewMatrix& a, const LabelSet& s, const Labels& t_new) {
    std::vector<int> sidx = a.indices_of(s);
    Labels labels = a.labels();
    labels.insert(labels.end(), t_new.begin(), t_new.end());
    const int n = a.size();
    const int k = static_cast<int>(sidx.size());
    SkewMatrix out = SkewMatrix::zero(labels);
    std::vector<bool> in_s(n, false);
    for (int i : sidx) in_s[i] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (in_s[i] || in_s[j]) continue;
            out.set_pair(i, j, a.at(i, j));
        }
    for (int si = 0; si < k; ++si) {
        out.set_pair(sidx[si], n + si, -fp(1));
        for (int sj = si + 1; sj < k; ++sj) out.set_pair(n + si, n + sj, a.at(sidx[si], sidx[sj]));
        for (int j = 0; j < n; ++j) {
            if (in_s[j]) continue;
            out.set_pair(n + si, j, a.at(sidx[si], j));
        }
    }
    return out;
}

} // namespace detail

// Twist of a contraction-represented delta-matroid by S, staying in
// contraction form. Adds |S| fresh auxiliary elements to the contraction set.
inline ContractionRep twist(const ContractionRep& d, const LabelSet& s) {
    detail::require_ground_subset(s, d.ground(), "twist");
    if (s.empty()) return d;
    Labels t_new = fresh_aux_labels({&d.matrix().labels()}, static_cast<int>(s.size()));
    SkewMatrix a = detail::twist_gadget(d.matrix(), s, t_new);
    LabelSet contract = d.contract_set();
    contract.insert(contract.end(), t_new.begin(), t_new.end());
    return ContractionRep(std::move(a), std::move(contract));
}

inline TwistRep twist(const TwistRep& d, const LabelSet& s) {
    detail::require_ground_subset(s, d.ground(), "twist");
    return TwistRep(d.A, set_symdiff(d.twist_set, s));
}

inline ContractionRep dual(const ContractionRep& d) { return twist(d, LabelSet(d.ground())); }
inline TwistRep dual(const TwistRep& d) { return twist(d, LabelSet(d.ground())); }

// Deletion D \ S: drop the rows and columns of S.
inline ContractionRep delete_elements(const ContractionRep& d, const LabelSet& s) {
    detail::require_ground_subset(s, d.ground(), "delete");
    const SkewMatrix& a = d.matrix();
    std::vector<int> keep;
    for (int i = 0; i < a.size(); ++i)
        if (!contains_label(s, a.labels()[i])) keep.push_back(i);
    try {
        return ContractionRep(a.submatrix(keep), d.contract_set());
    } catch (const EmptyDeltaMatroid&) {
        throw InfeasibleMinor("delete: no feasible set avoids the deleted elements");
    }
}

// Contraction D / S: move S into the contraction set.
inline ContractionRep contract(const ContractionRep& d, const LabelSet& s) {
    detail::require_ground_subset(s, d.ground(), "contract");
    try {
        return ContractionRep(d.matrix(), set_union(d.contract_set(), s));
    } catch (const EmptyDeltaMatroid&) {
        throw InfeasibleMinor("contract: no feasible set contains the contracted elements");
    }
}

// Minors and twists of a projection act on the inner representation; the
// twisting/deletion set must avoid the projected elements.
inline ProjectedRep twist(const ProjectedRep& d, const LabelSet& s) {
    detail::require_ground_subset(s, d.ground(), "twist");
    return ProjectedRep(twist(d.inner, s), d.project);
}

inline ProjectedRep dual(const ProjectedRep& d) { return twist(d, d.ground()); }

inline ProjectedRep delete_elements(const ProjectedRep& d, const LabelSet& s) {
    detail::require_ground_subset(s, d.ground(), "delete");
    return ProjectedRep(delete_elements(d.inner, s), d.project);
}

inline ProjectedRep contract(const ProjectedRep& d, const LabelSet& s) {
    detail::require_ground_subset(s, d.ground(), "contract");
    return ProjectedRep(contract(d.inner, s), d.project);
}

// Twist representation -> contraction representation, deterministically and
// without field operations beyond copying entries.
inline ContractionRep twist_to_contraction(const TwistRep& d) {
    if (d.twist_set.empty()) return ContractionRep(d.A, {});
    Labels t_new = fresh_aux_labels({&d.A.labels()}, static_cast<int>(d.twist_set.size()));
    SkewMatrix a = detail::twist_gadget(d.A, d.twist_set, t_new);
    return ContractionRep(std::move(a), LabelSet(t_new.begin(), t_new.end()));
}

// Contraction representation -> twist representation: find S with A[S + T]
// nonsingular via a greedy T-first column basis, pivot there, drop T.
inline TwistRep contraction_to_twist(const ContractionRep& d) {
    const SkewMatrix& a = d.matrix();
    Labels order = d.contract_set();
    for (const Label& l : d.ground()) order.push_back(l);
    LabelSet basis = lexmin_column_basis(a.as_general(), order);
    if (!is_subset(d.contract_set(), basis))
        throw EmptyDeltaMatroid("contraction_to_twist: representation names an empty family");
    SkewMatrix piv = pivot(a, basis);
    std::vector<int> keep;
    for (int i = 0; i < a.size(); ++i)
        if (!contains_label(d.contract_set(), a.labels()[i])) keep.push_back(i);
    return TwistRep(piv.submatrix(keep), set_minus(basis, d.contract_set()));
}

// Shrinks the contraction set to at most |ground| elements: pivot on a column
// basis B of A[T] (feasible by the column-basis property) and delete B.
inline ContractionRep reduce_contraction_set(const ContractionRep& d) {
    if (d.contract_set().size() <= d.ground().size()) return d;
    const SkewMatrix& a = d.matrix();
    SkewMatrix at = a.submatrix(d.contract_set());
    LabelSet basis = lexmin_column_basis(at.as_general(), at.labels());
    SkewMatrix piv = pivot(a, basis);
    std::vector<int> keep;
    for (int i = 0; i < a.size(); ++i)
        if (!contains_label(basis, a.labels()[i])) keep.push_back(i);
    return ContractionRep(piv.submatrix(keep), set_minus(d.contract_set(), basis));
}

// Matching delta-matroid of G: the Tutte matrix with each edge variable
// replaced by a uniform field element. One-sided: sets whose induced subgraph
// has no perfect matching are never feasible; each matchable set is feasible
// with probability at least 1 - eps.
inline ContractionRep matching_dm(const Graph& g, Rng& rng, double eps) {
    const std::uint64_t n = g.vertices.size();
    if (eps <= 0 || static_cast<double>(field_prime()) < static_cast<double>(n) * std::ceil(1.0 / eps))
        throw FieldTooSmall("matching_dm: field has fewer than n/eps elements");
    SkewMatrix a = SkewMatrix::zero(g.vertices);
    for (const auto& [u, v] : g.edges) {
        int i = a.index_of(u), j = a.index_of(v);
        if (i > j) std::swap(i, j);
        a.set_pair(i, j, rng.uniform_field());
    }
    return ContractionRep(std::move(a), {});
}

// Delta-matroid whose feasible sets are the column bases of M, via the block
// embedding [[O, M], [-M^T, O]] contracted on the row side.
inline ContractionRep matroid_bases_dm(const GeneralMatrix& m) {
    if (rank(m) != m.rows()) throw RankDeficient("matroid_bases_dm: matrix must have full row rank");
    Labels t = fresh_aux_labels({&m.col_labels()}, m.rows());
    Labels labels = t;
    labels.insert(labels.end(), m.col_labels().begin(), m.col_labels().end());
    SkewMatrix a = SkewMatrix::zero(labels);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.set_pair(i, m.rows() + j, m.at(i, j));
    return ContractionRep(std::move(a), LabelSet(t.begin(), t.end()));
}

// Projected variant: projecting the row side out instead yields the
// independent sets of M. Deterministic.
inline ProjectedRep matroid_independent_dm(const GeneralMatrix& m) {
    Labels t = fresh_aux_labels({&m.col_labels()}, m.rows());
    Labels labels = t;
    labels.insert(labels.end(), m.col_labels().begin(), m.col_labels().end());
    SkewMatrix a = SkewMatrix::zero(labels);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.set_pair(i, m.rows() + j, m.at(i, j));
    return ProjectedRep(ContractionRep(std::move(a), {}), LabelSet(t.begin(), t.end()));
}

} // namespace deltakit
