#pragma once

#include <cmath>

#include "deltakit/repr.hpp"

namespace deltakit {

namespace detail {

inline void require_field_size(std::size_t n, double eps, const char* what) {
    if (eps <= 0) throw FieldTooSmall(std::string(what) + ": eps must be positive");
    if (static_cast<double>(field_prime()) < static_cast<double>(n) * std::ceil(1.0 / eps))
        throw FieldTooSmall(std::string(what) + ": field has fewer than n/eps elements");
}

} // namespace detail

// Adds missing ground elements as loops: they never enter a feasible set.
inline ContractionRep pad_ground(const ContractionRep& d, const Labels& v_full) {
    if (!is_subset(d.ground(), v_full)) throw LabelMismatch("pad_ground: ground is not a subset of the target");
    LabelSet extra = set_minus(LabelSet(v_full), d.ground());
    if (extra.empty()) return d;
    Labels labels = d.matrix().labels();
    labels.insert(labels.end(), extra.begin(), extra.end());
    SkewMatrix a = SkewMatrix::zero(labels);
    const int n = d.matrix().size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.set_pair(i, j, d.matrix().at(i, j));
    return ContractionRep(std::move(a), d.contract_set());
}

inline ProjectedRep pad_ground(const ProjectedRep& d, const Labels& v_full) {
    if (!is_subset(d.ground(), v_full)) throw LabelMismatch("pad_ground: ground is not a subset of the target");
    Labels inner_full = v_full;
    for (const Label& x : d.project)
        if (!contains_label(inner_full, x)) inner_full.push_back(x);
    return ProjectedRep(pad_ground(d.inner, inner_full), d.project);
}

namespace detail {

// Renames the auxiliary (contraction / projection) labels of b so they avoid
// everything in scope. Ground labels are left untouched.
inline ProjectedRep freshen_aux(const ProjectedRep& b, const std::vector<const Labels*>& scope) {
    LabelSet internal = set_union(b.inner.contract_set(), b.project);
    if (internal.empty()) return b;
    std::vector<const Labels*> full = scope;
    const Labels& own = b.inner.matrix().labels();
    full.push_back(&own);
    Labels fresh = fresh_aux_labels(full, static_cast<int>(internal.size()));
    Labels labels;
    LabelSet contract, project;
    std::size_t next = 0;
    for (const Label& l : own) {
        if (contains_label(internal, l)) {
            labels.push_back(fresh[next++]);
            if (contains_label(b.inner.contract_set(), l)) contract.push_back(labels.back());
            else project.push_back(labels.back());
        } else {
            labels.push_back(l);
        }
    }
    return ProjectedRep(ContractionRep(SkewMatrix(std::move(labels), b.inner.matrix().entries()), std::move(contract)),
                        std::move(project));
}

} // namespace detail

// Delta-matroid union: feasible sets are the disjoint unions of feasible sets
// of the operands. The second operand is congruence-scaled by fresh random
// multipliers y_v so that each union term contributes a distinct monomial.
// One-sided: the output family is always a subfamily of the union; each union
// set survives with probability at least 1 - eps.
inline ProjectedRep dm_union(const ProjectedRep& d1_in, const ProjectedRep& d2_in, Rng& rng, double eps) {
    Labels v = d1_in.ground();
    for (const Label& l : d2_in.ground())
        if (!contains_label(v, l)) v.push_back(l);
    detail::require_field_size(v.size(), eps, "union");
    ProjectedRep d1 = pad_ground(d1_in, v);
    const Labels& scope1 = d1.inner.matrix().labels();
    ProjectedRep d2 = detail::freshen_aux(pad_ground(d2_in, v), {&scope1});

    const SkewMatrix& a1 = d1.inner.matrix();
    const SkewMatrix& a2 = d2.inner.matrix();
    LabelSet aux1 = set_union(d1.inner.contract_set(), d1.project);
    LabelSet aux2 = set_union(d2.inner.contract_set(), d2.project);

    Labels labels = v;
    labels.insert(labels.end(), aux1.begin(), aux1.end());
    labels.insert(labels.end(), aux2.begin(), aux2.end());
    SkewMatrix a = SkewMatrix::zero(labels);

    std::vector<Fp> y(v.size());
    for (auto& yi : y) yi = rng.uniform_field();

    const int nv = static_cast<int>(v.size());
    const int total = a.size();
    std::vector<int> in1(total, -1), in2(total, -1); // output index -> operand index
    for (int i = 0; i < total; ++i) {
        const Label& li = a.labels()[i];
        if (i < nv || contains_label(aux1, li)) in1[i] = a1.index_of(li);
        if (i < nv || contains_label(aux2, li)) in2[i] = a2.index_of(li);
    }
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j) {
            Fp val;
            if (in1[i] >= 0 && in1[j] >= 0) val += a1.at(in1[i], in1[j]);
            if (in2[i] >= 0 && in2[j] >= 0) {
                Fp w = a2.at(in2[i], in2[j]);
                if (i < nv) w *= y[i];
                if (j < nv) w *= y[j];
                val += w;
            }
            if (!val.is_zero()) a.set_pair(i, j, val);
        }
    return ProjectedRep(ContractionRep(std::move(a), set_union(d1.inner.contract_set(), d2.inner.contract_set())),
                        set_union(d1.project, d2.project));
}

inline ContractionRep dm_union(const ContractionRep& d1, const ContractionRep& d2, Rng& rng, double eps) {
    return dm_union(as_projected(d1), as_projected(d2), rng, eps).inner;
}

// Delta-sum: feasible sets are the symmetric differences F1 (symdiff) F2.
// Built from two disjoint copies of the common ground coupled through a layer
// of triangle gadgets with fresh random edge values; the copies and the
// operand contraction sets are contracted away. One-sided as for the union.
inline ProjectedRep delta_sum(const ProjectedRep& d1_in, const ProjectedRep& d2_in, Rng& rng, double eps) {
    Labels g = d1_in.ground();
    for (const Label& l : d2_in.ground())
        if (!contains_label(g, l)) g.push_back(l);
    detail::require_field_size(g.size(), eps, "delta_sum");
    ProjectedRep d1p = pad_ground(d1_in, g);
    const Labels& scope1 = d1p.inner.matrix().labels();
    ProjectedRep d2p = detail::freshen_aux(pad_ground(d2_in, g), {&scope1});

    // Inner operands live over the extended common ground W = g + X1 + X2,
    // with the other operand's projection elements padded in as loops.
    Labels w = g;
    for (const Label& x : d1p.project) w.push_back(x);
    for (const Label& x : d2p.project) w.push_back(x);
    ContractionRep inner1 = pad_ground(d1p.inner, w);
    ContractionRep inner2 = pad_ground(d2p.inner, w);

    const int nw = static_cast<int>(w.size());
    const Labels& t1 = inner1.contract_set();
    const Labels& t2 = inner2.contract_set();
    Labels copies = fresh_aux_labels({&inner1.matrix().labels(), &inner2.matrix().labels()}, 2 * nw);
    Labels w1(copies.begin(), copies.begin() + nw);
    Labels w2(copies.begin() + nw, copies.end());

    Labels labels = w;
    labels.insert(labels.end(), w1.begin(), w1.end());
    labels.insert(labels.end(), t1.begin(), t1.end());
    labels.insert(labels.end(), w2.begin(), w2.end());
    labels.insert(labels.end(), t2.begin(), t2.end());
    SkewMatrix a = SkewMatrix::zero(labels);

    // Triangle layer over {v, v1, v2}.
    const int off1 = nw, offt1 = 2 * nw;
    const int off2 = offt1 + static_cast<int>(t1.size());
    const int offt2 = off2 + nw;
    for (int i = 0; i < nw; ++i) {
        a.set_pair(i, off1 + i, rng.uniform_field());
        a.set_pair(i, off2 + i, rng.uniform_field());
        a.set_pair(off1 + i, off2 + i, rng.uniform_field());
    }
    // Operand copies on (W1 + T1) and (W2 + T2).
    auto embed = [&](const ContractionRep& inner, int off_v, int off_t) {
        const SkewMatrix& m = inner.matrix();
        std::vector<int> to_out(m.size());
        for (int i = 0; i < m.size(); ++i) {
            const Label& l = m.labels()[i];
            auto wit = std::find(w.begin(), w.end(), l);
            if (wit != w.end()) {
                to_out[i] = off_v + static_cast<int>(wit - w.begin());
            } else {
                const LabelSet& t = inner.contract_set();
                auto tit = std::find(t.begin(), t.end(), l);
                to_out[i] = off_t + static_cast<int>(tit - t.begin());
            }
        }
        for (int i = 0; i < m.size(); ++i)
            for (int j = i + 1; j < m.size(); ++j)
                if (!m.at(i, j).is_zero()) a.set_pair(to_out[i], to_out[j], m.at(i, j));
    };
    embed(inner1, off1, offt1);
    embed(inner2, off2, offt2);

    // The contraction list leads with the two copy blocks aligned with the
    // ground order; witness decoding relies on this layout.
    LabelSet contract(w1.begin(), w1.end());
    contract.insert(contract.end(), w2.begin(), w2.end());
    contract.insert(contract.end(), t1.begin(), t1.end());
    contract.insert(contract.end(), t2.begin(), t2.end());
    LabelSet project = set_union(d1p.project, d2p.project);
    return ProjectedRep(ContractionRep(std::move(a), std::move(contract)), std::move(project));
}

inline ContractionRep delta_sum(const ContractionRep& d1, const ContractionRep& d2, Rng& rng, double eps) {
    return delta_sum(as_projected(d1), as_projected(d2), rng, eps).inner;
}

// Composition of partially overlapping delta-matroids: delta-sum followed by
// deletion of the shared ground elements.
inline ProjectedRep composition(const ProjectedRep& d1, const ProjectedRep& d2, Rng& rng, double eps) {
    LabelSet shared = set_intersect(LabelSet(d1.ground()), LabelSet(d2.ground()));
    return delete_elements(delta_sum(d1, d2, rng, eps), shared);
}

inline ContractionRep composition(const ContractionRep& d1, const ContractionRep& d2, Rng& rng, double eps) {
    return composition(as_projected(d1), as_projected(d2), rng, eps).inner;
}

// Rewrites a projection over X as an elementary projection (|X'| <= 1).
// A clique on X alone does not suffice: a feasible set whose only completions
// contain the chosen survivor x has no even leftover inside X - x. Instead,
// union with the matching delta-matroid of a clique on X plus one fresh
// element x*, contract all of X, and project {x*}: the clique absorbs
// whatever part of X a completion leaves unused, with x* fixing the parity.
inline ProjectedRep elementary_projection(const ProjectedRep& d, Rng& rng, double eps) {
    if (d.project.size() <= 1) return d;
    detail::require_field_size(d.inner.ground().size() + 1, eps, "elementary_projection");
    const Label xstar = fresh_aux_labels({&d.inner.matrix().labels()}, 1).front();
    Labels extended = d.inner.ground();
    extended.push_back(xstar);
    ContractionRep padded = pad_ground(d.inner, extended);

    LabelSet clique_verts = d.project;
    clique_verts.push_back(xstar);
    std::vector<std::pair<Label, Label>> clique_edges;
    for (std::size_t i = 0; i < clique_verts.size(); ++i)
        for (std::size_t j = i + 1; j < clique_verts.size(); ++j)
            clique_edges.emplace_back(clique_verts[i], clique_verts[j]);
    ContractionRep dk = matching_dm(Graph(extended, std::move(clique_edges)), rng, eps / 2);
    ContractionRep u = dm_union(padded, dk, rng, eps / 2);
    return ProjectedRep(ContractionRep(u.matrix(), set_union(u.contract_set(), d.project)), {xstar});
}

namespace detail {

inline ContractionRep parity_slice(const ProjectedRep& d, Rng& rng, double eps, int parity, const char* what) {
    if (d.project.empty()) {
        if (static_cast<int>(d.inner.contract_set().size()) % 2 == parity) return d.inner;
        throw EmptySlice(std::string(what) + ": the requested parity slice is empty");
    }
    ProjectedRep e = elementary_projection(d, rng, eps);
    const Label x = e.project.front();
    // Feasible sets using x have |F| = |T| + 1 mod 2; those avoiding x have
    // |F| = |T| mod 2.
    const int t_par = static_cast<int>(e.inner.contract_set().size()) % 2;
    try {
        if ((t_par + 1) % 2 == parity) return contract(e.inner, {x});
        return delete_elements(e.inner, {x});
    } catch (const InfeasibleMinor&) {
        throw EmptySlice(std::string(what) + ": the requested parity slice is empty");
    }
}

} // namespace detail

// Linear representations of the even / odd cardinality slices of a projected
// delta-matroid, obtained by contracting or deleting the surviving projection
// element.
inline ContractionRep even_part(const ProjectedRep& d, Rng& rng, double eps) {
    return detail::parity_slice(d, rng, eps, 0, "even_part");
}

inline ContractionRep odd_part(const ProjectedRep& d, Rng& rng, double eps) {
    return detail::parity_slice(d, rng, eps, 1, "odd_part");
}

} // namespace deltakit
