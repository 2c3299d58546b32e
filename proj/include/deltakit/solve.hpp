#pragma once

#include <map>
#include <optional>

#include "deltakit/compose.hpp"
#include "deltakit/oracle.hpp"
#include "deltakit/poly.hpp"

namespace deltakit {

// Integer element weights, defined on exactly the ground set of the operand.
struct WeightMap {
    std::map<Label, long long> w;

    long long at(const Label& l) const {
        auto it = w.find(l);
        if (it == w.end()) throw LabelMismatch("weight map: no weight for " + l);
        return it->second;
    }
    long long total(const LabelSet& f) const {
        long long s = 0;
        for (const Label& l : f) s += at(l);
        return s;
    }
    static WeightMap ones(const Labels& ground) {
        WeightMap m;
        for (const Label& l : ground) m.w[l] = 1;
        return m;
    }
    static WeightMap zeros(const Labels& ground) {
        WeightMap m;
        for (const Label& l : ground) m.w[l] = 0;
        return m;
    }
    WeightMap restricted(const Labels& ground) const {
        WeightMap m;
        for (const Label& l : ground) m.w[l] = at(l);
        return m;
    }
};

// Partition of the ground set into pairs.
using PairPartition = std::vector<std::pair<Label, Label>>;

namespace detail {

inline void require_weights_on(const WeightMap& w, const Labels& ground, const char* what) {
    if (w.w.size() != ground.size())
        throw LabelMismatch(std::string(what) + ": weights must be defined on exactly the ground set");
    for (const Label& l : ground) w.at(l);
}

inline void require_pairing(const PairPartition& pi, const Labels& ground, const char* what) {
    if (ground.size() % 2 != 0) throw ValidationError(std::string(what) + ": ground set has odd size");
    LabelSet seen;
    for (const auto& [u, v] : pi) {
        if (u == v) throw ValidationError(std::string(what) + ": pair with equal endpoints");
        if (!contains_label(ground, u) || !contains_label(ground, v))
            throw LabelMismatch(std::string(what) + ": pair element outside the ground set");
        if (contains_label(seen, u) || contains_label(seen, v))
            throw ValidationError(std::string(what) + ": pairs are not disjoint");
        seen.push_back(u);
        seen.push_back(v);
    }
    if (seen.size() != ground.size()) throw ValidationError(std::string(what) + ": pairs do not cover the ground set");
}

inline int broken_pairs(const LabelSet& f, const PairPartition& pi) {
    int b = 0;
    for (const auto& [u, v] : pi)
        if (contains_label(f, u) != contains_label(f, v)) ++b;
    return b;
}

} // namespace detail

struct MaxWeightResult {
    LabelSet set;
    long long weight = 0;
};

// Max-weight feasible set: twist away the negative elements, then a greedy
// column basis ordered by non-increasing weight (contraction columns first)
// is a max-weight basis; untwist to recover the feasible set. Deterministic.
inline MaxWeightResult max_weight_feasible(const ContractionRep& d, const WeightMap& w) {
    detail::require_weights_on(w, d.ground(), "max_weight_feasible");
    LabelSet neg;
    for (const Label& l : d.ground())
        if (w.at(l) < 0) neg.push_back(l);
    ContractionRep twisted = twist(d, neg);

    Labels by_weight = twisted.ground();
    std::stable_sort(by_weight.begin(), by_weight.end(), [&](const Label& a, const Label& b) {
        return std::abs(w.at(a)) > std::abs(w.at(b));
    });
    Labels order = twisted.contract_set();
    order.insert(order.end(), by_weight.begin(), by_weight.end());
    LabelSet basis = lexmin_column_basis(twisted.matrix().as_general(), order);
    LabelSet f = set_symdiff(set_minus(basis, twisted.contract_set()), neg);

    // Keep ambient order in the reported set.
    LabelSet out;
    for (const Label& l : d.ground())
        if (contains_label(f, l)) out.push_back(l);
    return {out, w.total(out)};
}

// Projected variant: optimize over the inner representation with zero weight
// on the projection elements, then drop them.
inline MaxWeightResult max_weight_feasible(const ProjectedRep& d, const WeightMap& w) {
    detail::require_weights_on(w, d.ground(), "max_weight_feasible");
    WeightMap inner_w = w;
    for (const Label& x : d.project) inner_w.w[x] = 0;
    MaxWeightResult r = max_weight_feasible(d.inner, inner_w);
    LabelSet f = set_minus(r.set, d.project);
    return {f, w.total(f)};
}

// Exact representation of the delta-matroid whose feasible sets are the
// unions of pairs: the support graph is the perfect matching itself, so unit
// entries suffice.
inline ContractionRep pairing_dm(const Labels& ground, const PairPartition& pi) {
    detail::require_pairing(pi, ground, "pairing_dm");
    SkewMatrix a = SkewMatrix::zero(ground);
    for (const auto& [u, v] : pi) {
        int i = a.index_of(u), j = a.index_of(v);
        if (i > j) std::swap(i, j);
        a.set_pair(i, j, fp(1));
    }
    return ContractionRep(std::move(a), {});
}

// Largest |F1 (symdiff) F2| = max feasible set size in the delta-sum. Never
// overestimates; underestimates with probability at most eps.
inline long long delta_covering_value(const ProjectedRep& d1, const ProjectedRep& d2, Rng& rng, double eps) {
    ProjectedRep ds = delta_sum(d1, d2, rng, eps);
    if (ds.is_linear())
        return rank(ds.inner.matrix()) - static_cast<long long>(ds.inner.contract_set().size());
    return max_weight_feasible(ds, WeightMap::ones(ds.ground())).weight;
}

inline long long delta_covering_value(const ContractionRep& d1, const ContractionRep& d2, Rng& rng, double eps) {
    return delta_covering_value(as_projected(d1), as_projected(d2), rng, eps);
}

// Minimum number of broken pairs over feasible sets, via the delta-sum with
// the pairing delta-matroid.
inline long long parity_value(const ProjectedRep& d, const PairPartition& pi, Rng& rng, double eps) {
    detail::require_pairing(pi, d.ground(), "parity_value");
    ContractionRep dpi = pairing_dm(d.ground(), pi);
    long long tau = delta_covering_value(d, as_projected(dpi), rng, eps);
    return static_cast<long long>(d.ground().size()) - tau;
}

inline long long parity_value(const ContractionRep& d, const PairPartition& pi, Rng& rng, double eps) {
    return parity_value(as_projected(d), pi, rng, eps);
}

// A component of marked entries for delete_edges. Components must be
// pairwise vertex-disjoint and each marked entry must join two of its
// component's vertices.
struct MarkedComponent {
    LabelSet vertices;
    std::vector<std::pair<Label, Label>> edges;
};

namespace detail {

struct EdgeDeleter {
    SkewMatrix& a;
    const std::vector<std::vector<int>>& comp_verts;          // a-indices per component
    const std::vector<std::vector<std::pair<int, int>>>& comp_edges;
    std::vector<std::pair<int, int>> deleted;

    // N is the inverse of the current matrix restricted to the vertices of
    // components [lo, hi), concatenated; pos maps a-index -> N position.
    void run(int lo, int hi, std::vector<Fp>& n_block, const std::vector<int>& verts) {
        const int m = static_cast<int>(verts.size());
        std::vector<int> pos(a.size(), -1);
        for (int k = 0; k < m; ++k) pos[verts[k]] = k;
        if (hi - lo == 1) {
            for (const auto& [u, v] : comp_edges[lo]) {
                const Fp yhat = a.at(u, v);
                if (yhat.is_zero()) { deleted.emplace_back(u, v); continue; }
                const int lu = pos[u], lv = pos[v];
                const Fp nu = n_block[static_cast<std::size_t>(lu) * m + lv];
                const Fp test = fp(1) + yhat * nu;
                if (test.is_zero()) continue; // zeroing this entry would make A singular
                a.set_pair(u, v, Fp());
                deleted.emplace_back(u, v);
                const Fp gy = test.inv() * yhat;
                std::vector<Fp> colu(m), colv(m), rowu(m), rowv(m);
                for (int k = 0; k < m; ++k) {
                    colu[k] = n_block[static_cast<std::size_t>(k) * m + lu];
                    colv[k] = n_block[static_cast<std::size_t>(k) * m + lv];
                    rowu[k] = n_block[static_cast<std::size_t>(lu) * m + k];
                    rowv[k] = n_block[static_cast<std::size_t>(lv) * m + k];
                }
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c)
                        n_block[static_cast<std::size_t>(r) * m + c] += gy * (colu[r] * rowv[c] - colv[r] * rowu[c]);
            }
            return;
        }
        const int mid = lo + (hi - lo + 1) / 2;
        std::vector<int> left, right;
        for (int i = lo; i < mid; ++i) left.insert(left.end(), comp_verts[i].begin(), comp_verts[i].end());
        for (int i = mid; i < hi; ++i) right.insert(right.end(), comp_verts[i].begin(), comp_verts[i].end());
        const int nl = static_cast<int>(left.size()), nr = static_cast<int>(right.size());

        std::vector<Fp> before(static_cast<std::size_t>(nl) * nl);
        for (int r = 0; r < nl; ++r)
            for (int c = 0; c < nl; ++c) before[static_cast<std::size_t>(r) * nl + c] = a.at(left[r], left[c]);
        std::vector<Fp> n_left(static_cast<std::size_t>(nl) * nl);
        for (int r = 0; r < nl; ++r)
            for (int c = 0; c < nl; ++c)
                n_left[static_cast<std::size_t>(r) * nl + c] =
                    n_block[static_cast<std::size_t>(pos[left[r]]) * m + pos[left[c]]];
        run(lo, mid, n_left, left);

        std::vector<Fp> delta(static_cast<std::size_t>(nl) * nl);
        bool changed = false;
        for (int r = 0; r < nl; ++r)
            for (int c = 0; c < nl; ++c) {
                delta[static_cast<std::size_t>(r) * nl + c] =
                    a.at(left[r], left[c]) - before[static_cast<std::size_t>(r) * nl + c];
                if (!delta[static_cast<std::size_t>(r) * nl + c].is_zero()) changed = true;
            }
        std::vector<Fp> n_right(static_cast<std::size_t>(nr) * nr);
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nr; ++c)
                n_right[static_cast<std::size_t>(r) * nr + c] =
                    n_block[static_cast<std::size_t>(pos[right[r]]) * m + pos[right[c]]];
        if (changed) {
            // n_right -= N[R,L] (I + delta N[L,L])^-1 delta N[L,R]
            std::vector<Fp> k(static_cast<std::size_t>(nl) * nl);
            for (int r = 0; r < nl; ++r) {
                for (int c = 0; c < nl; ++c) {
                    Fp s;
                    for (int t = 0; t < nl; ++t)
                        s += delta[static_cast<std::size_t>(r) * nl + t] *
                             n_block[static_cast<std::size_t>(pos[left[t]]) * m + pos[left[c]]];
                    k[static_cast<std::size_t>(r) * nl + c] = s;
                }
                k[static_cast<std::size_t>(r) * nl + r] += fp(1);
            }
            if (!invert_in_place(k, nl))
                throw SingularInput("delete_edges: internal inverse update failed");
            std::vector<Fp> kd(static_cast<std::size_t>(nl) * nl);
            for (int r = 0; r < nl; ++r)
                for (int c = 0; c < nl; ++c) {
                    Fp s;
                    for (int t = 0; t < nl; ++t)
                        s += k[static_cast<std::size_t>(r) * nl + t] * delta[static_cast<std::size_t>(t) * nl + c];
                    kd[static_cast<std::size_t>(r) * nl + c] = s;
                }
            std::vector<Fp> kdnlr(static_cast<std::size_t>(nl) * nr);
            for (int r = 0; r < nl; ++r)
                for (int c = 0; c < nr; ++c) {
                    Fp s;
                    for (int t = 0; t < nl; ++t)
                        s += kd[static_cast<std::size_t>(r) * nl + t] *
                             n_block[static_cast<std::size_t>(pos[left[t]]) * m + pos[right[c]]];
                    kdnlr[static_cast<std::size_t>(r) * nr + c] = s;
                }
            for (int r = 0; r < nr; ++r)
                for (int c = 0; c < nr; ++c) {
                    Fp s;
                    for (int t = 0; t < nl; ++t)
                        s += n_block[static_cast<std::size_t>(pos[right[r]]) * m + pos[left[t]]] *
                             kdnlr[static_cast<std::size_t>(t) * nr + c];
                    n_right[static_cast<std::size_t>(r) * nr + c] -= s;
                }
        }
        run(mid, hi, n_right, right);
    }
};

} // namespace detail

// Finds an inclusion-wise maximal subset of the marked entries that can be
// set to zero while A stays nonsingular, maintaining blocks of the inverse
// through rank-2 updates with divide-and-conquer over the components.
// Mutates A and returns the zeroed positions.
inline std::vector<std::pair<Label, Label>> delete_edges(SkewMatrix& a,
                                                         const std::vector<MarkedComponent>& components) {
    SkewMatrix inv = [&] {
        try {
            return inverse(a);
        } catch (const Singular&) {
            throw SingularInput("delete_edges: matrix is singular");
        }
    }();
    if (components.empty()) return {};

    std::vector<std::vector<int>> comp_verts;
    std::vector<std::vector<std::pair<int, int>>> comp_edges;
    std::vector<bool> used(a.size(), false);
    for (const MarkedComponent& c : components) {
        std::vector<int> verts;
        for (const Label& l : c.vertices) {
            int i = a.index_of(l);
            if (used[i]) throw ValidationError("delete_edges: components share a vertex");
            used[i] = true;
            verts.push_back(i);
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& [u, v] : c.edges) {
            if (!contains_label(c.vertices, u) || !contains_label(c.vertices, v))
                throw ValidationError("delete_edges: marked entry outside its component");
            edges.emplace_back(a.index_of(u), a.index_of(v));
        }
        comp_verts.push_back(std::move(verts));
        comp_edges.push_back(std::move(edges));
    }

    std::vector<int> all;
    for (const auto& vs : comp_verts) all.insert(all.end(), vs.begin(), vs.end());
    const int m = static_cast<int>(all.size());
    std::vector<Fp> n_block(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) n_block[static_cast<std::size_t>(r) * m + c] = inv.at(all[r], all[c]);

    detail::EdgeDeleter del{a, comp_verts, comp_edges, {}};
    del.run(0, static_cast<int>(comp_verts.size()), n_block, all);

    std::vector<std::pair<Label, Label>> out;
    for (auto [u, v] : del.deleted) out.emplace_back(a.labels()[u], a.labels()[v]);
    return out;
}

struct WitnessPair {
    LabelSet f1, f2;
};

// Recovers feasible sets F1, F2 with F1 (symdiff) F2 = S from the raw
// delta-sum gadget: after a maximal round of edge deletions the Pfaffian of
// the target submatrix retains a single matching monomial, and the surviving
// triangle entries spell out the pair. Self-validating; retries on up to 3
// fresh gadgets before reporting failure. attempts_used, when given, receives
// the number of gadgets built.
inline WitnessPair target_delta_sum(const ProjectedRep& d1, const ProjectedRep& d2, const LabelSet& s_in, Rng& rng,
                                    int* attempts_used = nullptr) {
    Labels g = d1.ground();
    for (const Label& l : d2.ground())
        if (!contains_label(g, l)) g.push_back(l);
    detail::require_ground_subset(s_in, g, "target_delta_sum");
    const double n = std::max<double>(1.0, static_cast<double>(g.size()));
    if (static_cast<double>(field_prime()) < n * n * n)
        throw FieldTooSmall("target_delta_sum: field has fewer than n^3 elements");
    const double eps = 1.0 / (n * n);

    bool completion_found = false;
    for (int attempt = 0; attempt < 3; ++attempt) {
        ProjectedRep ds = delta_sum(d1, d2, rng, eps);
        const SkewMatrix& a = ds.inner.matrix();
        const LabelSet& contract = ds.inner.contract_set();
        const LabelSet& x = ds.project;

        // Complete S inside the projection set, if any.
        LabelSet s_plus = sorted_set(s_in);
        if (!x.empty()) {
            SkewMatrix sub = a.submatrix(set_union(set_union(s_plus, x), contract));
            Labels order = set_union(s_plus, contract);
            LabelSet x_here = set_minus(LabelSet(sub.labels()), order);
            order.insert(order.end(), x_here.begin(), x_here.end());
            LabelSet basis = lexmin_column_basis(sub.as_general(), order);
            if (!is_subset(set_union(s_plus, contract), basis)) continue;
            s_plus = set_minus(basis, contract);
        } else {
            if (det(a.submatrix(set_union(s_plus, contract))).is_zero()) continue;
        }
        completion_found = true;

        SkewMatrix a_s = a.submatrix(set_union(s_plus, contract));
        // Triangle components: the copies are the first 2|W| contraction
        // labels, in (W1, W2) blocks aligned with the extended ground W.
        const Labels w_ground = ds.inner.ground();
        const int nw = static_cast<int>(w_ground.size());
        std::vector<MarkedComponent> comps;
        for (int i = 0; i < nw; ++i) {
            const Label& v = w_ground[i];
            const Label& v1 = contract[i];
            const Label& v2 = contract[nw + i];
            MarkedComponent c;
            if (contains_label(s_plus, v)) {
                c.vertices = {v, v1, v2};
                c.edges = {{v, v1}, {v, v2}, {v1, v2}};
            } else {
                c.vertices = {v1, v2};
                c.edges = {{v1, v2}};
            }
            comps.push_back(std::move(c));
        }
        std::vector<std::pair<Label, Label>> deleted;
        try {
            deleted = delete_edges(a_s, comps);
        } catch (const SingularInput&) {
            continue;
        }
        auto removed = [&](const Label& u, const Label& v) {
            return std::find(deleted.begin(), deleted.end(), std::make_pair(u, v)) != deleted.end();
        };
        LabelSet f1, f2;
        for (int i = 0; i < nw; ++i) {
            const Label& v = w_ground[i];
            const Label& v1 = contract[i];
            const Label& v2 = contract[nw + i];
            if (contains_label(s_plus, v)) {
                if (!removed(v, v2)) f1.push_back(v);
                else if (!removed(v, v1)) f2.push_back(v);
            } else {
                if (removed(v1, v2)) {
                    f1.push_back(v);
                    f2.push_back(v);
                }
            }
        }
        f1 = set_minus(f1, x);
        f2 = set_minus(f2, x);
        LabelSet f1g = set_intersect(f1, LabelSet(d1.ground()));
        LabelSet f2g = set_intersect(f2, LabelSet(d2.ground()));
        if (f1g.size() != f1.size() || f2g.size() != f2.size()) continue;
        if (!set_equal(set_symdiff(f1, f2), s_in)) continue;
        if (!feasible(d1, f1) || !feasible(d2, f2)) continue;
        if (attempts_used) *attempts_used = attempt + 1;
        return {sorted_set(f1), sorted_set(f2)};
    }
    if (!completion_found) throw InfeasibleTarget("target_delta_sum: S is not feasible in the delta-sum");
    throw RandomizationFailure("target_delta_sum: witness decoding failed on 3 fresh gadgets");
}

inline WitnessPair target_delta_sum(const ContractionRep& d1, const ContractionRep& d2, const LabelSet& s, Rng& rng,
                                    int* attempts_used = nullptr) {
    return target_delta_sum(as_projected(d1), as_projected(d2), s, rng, attempts_used);
}

struct CoverWitness {
    LabelSet f1, f2;
    long long value = 0;
};

// Disjoint pair F1, F2 maximizing |F1 + F2|: take a maximum feasible set F of
// the union delta-matroid, restrict both operands to F and split it there.
inline CoverWitness search_covering(const ProjectedRep& d1, const ProjectedRep& d2, Rng& rng, double eps) {
    ProjectedRep u = dm_union(d1, d2, rng, eps);
    MaxWeightResult best = max_weight_feasible(u, WeightMap::ones(u.ground()));
    LabelSet rest1 = set_minus(LabelSet(d1.ground()), best.set);
    LabelSet rest2 = set_minus(LabelSet(d2.ground()), best.set);
    WitnessPair pair = target_delta_sum(delete_elements(d1, rest1), delete_elements(d2, rest2), best.set, rng);
    return {pair.f1, pair.f2, best.weight};
}

inline CoverWitness search_covering(const ContractionRep& d1, const ContractionRep& d2, Rng& rng, double eps) {
    return search_covering(as_projected(d1), as_projected(d2), rng, eps);
}

// Strong witness for delta-covering: the weak witness is a maximum feasible
// set of the delta-sum, realized by target_delta_sum.
inline CoverWitness search_delta_covering(const ProjectedRep& d1, const ProjectedRep& d2, Rng& rng, double eps) {
    ProjectedRep ds = delta_sum(d1, d2, rng, eps);
    MaxWeightResult best = max_weight_feasible(ds, WeightMap::ones(ds.ground()));
    WitnessPair pair = target_delta_sum(d1, d2, best.set, rng);
    return {pair.f1, pair.f2, best.weight};
}

inline CoverWitness search_delta_covering(const ContractionRep& d1, const ContractionRep& d2, Rng& rng, double eps) {
    return search_delta_covering(as_projected(d1), as_projected(d2), rng, eps);
}

// Common feasible set, or nothing (certified up to the one-sided error):
// targets the empty set in the delta-sum.
inline std::optional<LabelSet> search_intersection(const ProjectedRep& d1, const ProjectedRep& d2, Rng& rng) {
    try {
        WitnessPair p = target_delta_sum(d1, d2, {}, rng);
        return p.f1;
    } catch (const InfeasibleTarget&) {
        return std::nullopt;
    }
}

inline std::optional<LabelSet> search_intersection(const ContractionRep& d1, const ContractionRep& d2, Rng& rng) {
    return search_intersection(as_projected(d1), as_projected(d2), rng);
}

// Partition V = P + Q with P feasible in D1 and Q feasible in D2: targets the
// full ground set in the delta-sum, so F2 is forced to be the complement.
inline std::optional<std::pair<LabelSet, LabelSet>> search_partition(const ProjectedRep& d1, const ProjectedRep& d2,
                                                                     Rng& rng) {
    Labels g = d1.ground();
    for (const Label& l : d2.ground())
        if (!contains_label(g, l)) g.push_back(l);
    try {
        WitnessPair p = target_delta_sum(d1, d2, LabelSet(g), rng);
        return std::make_pair(p.f1, p.f2);
    } catch (const InfeasibleTarget&) {
        return std::nullopt;
    }
}

inline std::optional<std::pair<LabelSet, LabelSet>> search_partition(const ContractionRep& d1,
                                                                     const ContractionRep& d2, Rng& rng) {
    return search_partition(as_projected(d1), as_projected(d2), rng);
}

struct ParityWitness {
    LabelSet f;
    long long broken = 0;
};

// Feasible set minimizing the number of broken pairs.
inline ParityWitness search_parity(const ProjectedRep& d, const PairPartition& pi, Rng& rng, double eps) {
    detail::require_pairing(pi, d.ground(), "search_parity");
    ContractionRep dpi = pairing_dm(d.ground(), pi);
    ProjectedRep ds = delta_sum(d, as_projected(dpi), rng, eps);
    MaxWeightResult best = max_weight_feasible(ds, WeightMap::ones(ds.ground()));
    WitnessPair pair = target_delta_sum(d, as_projected(dpi), best.set, rng);
    return {pair.f1, detail::broken_pairs(pair.f1, pi)};
}

inline ParityWitness search_parity(const ContractionRep& d, const PairPartition& pi, Rng& rng, double eps) {
    return search_parity(as_projected(d), pi, rng, eps);
}

// Determinant of a polynomial matrix by evaluation at degree_bound + 1
// distinct points and interpolation.
inline ZPoly poly_det(const std::vector<std::vector<ZPoly>>& m, int degree_bound) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw NotSquare("poly_det: matrix is not square");
    if (degree_bound < 0) throw ValidationError("poly_det: negative degree bound");
    if (static_cast<double>(field_prime()) <= static_cast<double>(degree_bound))
        throw FieldTooSmall("poly_det: need more field elements than the degree bound");
    std::vector<Fp> xs, ys;
    for (int k = 0; k <= degree_bound; ++k) {
        const Fp x = fp(k);
        std::vector<Fp> vals(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) vals[static_cast<std::size_t>(i) * n + j] = m[i][j].eval(x);
        xs.push_back(x);
        ys.push_back(detail::det_in_place(vals, n));
    }
    return interpolate(xs, ys);
}

namespace detail {

// Max weight of a common feasible set of two linear operands: couple two
// copies of the ground through entries y_v z^{w(v)} and read off the lowest
// surviving power of z in the determinant.
inline std::optional<long long> weighted_intersection_linear(const ContractionRep& d1, const ContractionRep& d2,
                                                             const WeightMap& w, Rng& rng) {
    Labels g = d1.ground();
    if (!set_equal(LabelSet(g), LabelSet(d2.ground())))
        throw LabelMismatch("weighted_intersection: operands must share a ground set");
    require_weights_on(w, g, "weighted_intersection");
    long long wv = 0;
    for (const Label& l : g) {
        const long long wl = w.at(l);
        if (wl < 1) throw ValidationError("weighted_intersection: weights must be positive integers");
        wv += wl;
    }
    const double n = static_cast<double>(g.size());
    if (static_cast<double>(field_prime()) <= 2.0 * static_cast<double>(wv) ||
        static_cast<double>(field_prime()) < n * n)
        throw FieldTooSmall("weighted_intersection: field too small for the weight range");

    const SkewMatrix& a1 = d1.matrix();
    const SkewMatrix& a2 = d2.matrix();
    const int n1 = a1.size(), n2 = a2.size();
    const int total = n1 + n2;
    std::vector<std::vector<ZPoly>> m(total, std::vector<ZPoly>(total));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) m[i][j] = ZPoly::constant(a1.at(i, j));
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) m[n1 + i][n1 + j] = ZPoly::constant(a2.at(i, j));
    for (const Label& v : g) {
        const int i = a1.index_of(v), j = a2.index_of(v);
        ZPoly coupling = ZPoly::monomial(rng.uniform_field(), static_cast<int>(w.at(v)));
        m[i][n1 + j] = coupling;
        m[n1 + j][i] = ZPoly() - coupling;
    }
    ZPoly dz = poly_det(m, static_cast<int>(2 * wv));
    if (dz.is_zero()) return std::nullopt;
    int k = 0;
    while (dz.coeff(k).is_zero()) ++k;
    if (k % 2 != 0) throw RandomizationFailure("weighted_intersection: odd leading order in a squared Pfaffian");
    return wv - k / 2;
}

// Even/odd slices turn a projected operand into at most two linear ones.
inline std::vector<ContractionRep> linear_slices(const ProjectedRep& d, Rng& rng) {
    if (d.is_linear()) return {d.inner};
    std::vector<ContractionRep> out;
    const double n = std::max<double>(1.0, static_cast<double>(d.inner.ground().size()));
    const double eps = 1.0 / n;
    for (int parity : {0, 1}) {
        try {
            out.push_back(parity == 0 ? even_part(d, rng, eps) : odd_part(d, rng, eps));
        } catch (const EmptySlice&) {
        }
    }
    return out;
}

} // namespace detail

// Maximum weight of a common feasible set, or nothing if no common set was
// certified (one-sided). Projected operands are split into their even and odd
// linear parts first.
inline std::optional<long long> weighted_intersection_value(const ProjectedRep& d1, const ProjectedRep& d2,
                                                            const WeightMap& w, Rng& rng) {
    std::optional<long long> best;
    for (const ContractionRep& c1 : detail::linear_slices(d1, rng))
        for (const ContractionRep& c2 : detail::linear_slices(d2, rng)) {
            auto v = detail::weighted_intersection_linear(c1, c2, w, rng);
            if (v && (!best || *v > *best)) best = v;
        }
    return best;
}

inline std::optional<long long> weighted_intersection_value(const ContractionRep& d1, const ContractionRep& d2,
                                                            const WeightMap& w, Rng& rng) {
    return weighted_intersection_value(as_projected(d1), as_projected(d2), w, rng);
}

// Self-reduction: delete an element if doing so preserves the optimum,
// otherwise contract it into the solution. Validates the assembled set and
// retries with fresh randomness if the randomized values misled a branch.
inline std::optional<LabelSet> weighted_intersection_search(const ProjectedRep& d1, const ProjectedRep& d2,
                                                            const WeightMap& w, Rng& rng) {
    std::optional<long long> opt = weighted_intersection_value(d1, d2, w, rng);
    if (!opt) return std::nullopt;
    for (int attempt = 0; attempt < 3; ++attempt) {
        ProjectedRep c1 = d1, c2 = d2;
        LabelSet chosen;
        long long remaining = *opt;
        bool failed = false;
        for (const Label& v : Labels(d1.ground())) {
            bool did_delete = false;
            try {
                ProjectedRep e1 = delete_elements(c1, {v});
                ProjectedRep e2 = delete_elements(c2, {v});
                WeightMap wr = w.restricted(e1.ground());
                auto val = weighted_intersection_value(e1, e2, wr, rng);
                if (val && *val == remaining) {
                    c1 = std::move(e1);
                    c2 = std::move(e2);
                    did_delete = true;
                }
            } catch (const InfeasibleMinor&) {
            }
            if (did_delete) continue;
            try {
                c1 = contract(c1, {v});
                c2 = contract(c2, {v});
                chosen.push_back(v);
                remaining -= w.at(v);
            } catch (const InfeasibleMinor&) {
                failed = true;
                break;
            }
        }
        if (failed || remaining != 0) continue;
        if (feasible(d1, chosen) && feasible(d2, chosen) && w.total(chosen) == *opt) return sorted_set(chosen);
    }
    throw RandomizationFailure("weighted_intersection_search: witness assembly failed on 3 attempts");
}

inline std::optional<LabelSet> weighted_intersection_search(const ContractionRep& d1, const ContractionRep& d2,
                                                            const WeightMap& w, Rng& rng) {
    return weighted_intersection_search(as_projected(d1), as_projected(d2), w, rng);
}

namespace oracle {

// Checker for a claimed parity min-max certificate: (1) the matrix restricted
// to V + (T - T0) must be a direct sum of the claimed parts, (2) every pair
// must stay within one part, (3) the number of parts with odd |T_i| must
// equal the parity value plus |T0|. The certificate is supplied, never
// constructed.
inline bool check_minmax_certificate(const ContractionRep& d, const PairPartition& pi,
                                     const MinMaxDecomposition& dec, Rng& rng, double eps) {
    deltakit::detail::require_pairing(pi, d.ground(), "check_minmax_certificate");
    LabelSet v_seen, t_seen = dec.t0;
    if (!is_subset(dec.t0, d.contract_set()))
        throw MalformedDecomposition("check_minmax_certificate: T0 is not part of the contraction set");
    for (const auto& [vi, ti] : dec.parts) {
        for (const Label& l : vi) {
            if (!contains_label(d.ground(), l) || contains_label(v_seen, l))
                throw MalformedDecomposition("check_minmax_certificate: parts do not partition the ground set");
            v_seen.push_back(l);
        }
        for (const Label& l : ti) {
            if (!contains_label(d.contract_set(), l) || contains_label(t_seen, l))
                throw MalformedDecomposition("check_minmax_certificate: parts do not partition the contraction set");
            t_seen.push_back(l);
        }
    }
    if (v_seen.size() != d.ground().size() || t_seen.size() != d.contract_set().size())
        throw MalformedDecomposition("check_minmax_certificate: decomposition does not cover the representation");

    const SkewMatrix& a = d.matrix();
    for (std::size_t i = 0; i < dec.parts.size(); ++i)
        for (std::size_t j = i + 1; j < dec.parts.size(); ++j) {
            LabelSet pi_labels = set_union(dec.parts[i].first, dec.parts[i].second);
            LabelSet pj_labels = set_union(dec.parts[j].first, dec.parts[j].second);
            for (const Label& u : pi_labels)
                for (const Label& v : pj_labels)
                    if (!a.at(a.index_of(u), a.index_of(v)).is_zero()) return false;
        }
    for (const auto& [u, v] : pi) {
        bool together = false;
        for (const auto& [vi, ti] : dec.parts)
            if (contains_label(vi, u) && contains_label(vi, v)) together = true;
        if (!together) return false;
    }
    long long odd = 0;
    for (const auto& [vi, ti] : dec.parts)
        if (ti.size() % 2 == 1) ++odd;
    return odd == parity_value(d, pi, rng, eps) + static_cast<long long>(dec.t0.size());
}

} // namespace oracle

} // namespace deltakit
