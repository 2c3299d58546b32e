#pragma once

#include <cstdint>
#include <optional>

#include "deltakit/repr.hpp"

namespace deltakit {
namespace oracle {

// Explicit set family over a small ground set, each subset encoded as a
// bitmask over the ground order. The ground truth for every property test.
struct FeasibleFamily {
    Labels ground;                    // at most 16 elements
    std::vector<std::uint32_t> sets;  // sorted, distinct

    FeasibleFamily(Labels g, std::vector<std::uint32_t> s) : ground(std::move(g)), sets(std::move(s)) {
        if (ground.size() > 16) throw TooLarge("feasible family: ground set above 16 elements");
        require_distinct(ground, "feasible family ground");
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        for (std::uint32_t m : sets)
            if (m >> ground.size()) throw ValidationError("feasible family: mask outside the ground set");
    }

    bool contains(std::uint32_t mask) const {
        return std::binary_search(sets.begin(), sets.end(), mask);
    }

    std::uint32_t mask_of(const LabelSet& f) const {
        std::uint32_t m = 0;
        for (const Label& l : f) {
            auto it = std::find(ground.begin(), ground.end(), l);
            if (it == ground.end()) throw LabelMismatch("family: unknown label " + l);
            m |= 1u << (it - ground.begin());
        }
        return m;
    }

    LabelSet labels_of(std::uint32_t mask) const {
        LabelSet f;
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (mask >> i & 1) f.push_back(ground[i]);
        return f;
    }

    bool operator==(const FeasibleFamily& o) const { return ground == o.ground && sets == o.sets; }
};

namespace detail_oracle {

template <typename Rep>
FeasibleFamily enumerate_impl(const Rep& d, const Labels& ground) {
    if (ground.size() > 16) throw TooLarge("enumerate_family: ground set above 16 elements");
    std::vector<std::uint32_t> sets;
    const std::uint32_t top = 1u << ground.size();
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        LabelSet f;
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (mask >> i & 1) f.push_back(ground[i]);
        if (feasible(d, f)) sets.push_back(mask);
    }
    return FeasibleFamily(ground, std::move(sets));
}

} // namespace detail_oracle

inline FeasibleFamily enumerate_family(const ContractionRep& d) {
    return detail_oracle::enumerate_impl(d, d.ground());
}
inline FeasibleFamily enumerate_family(const TwistRep& d) {
    return detail_oracle::enumerate_impl(d, d.ground());
}
inline FeasibleFamily enumerate_family(const ProjectedRep& d) {
    return detail_oracle::enumerate_impl(d, d.ground());
}

struct ExchangeCounterexample {
    std::uint32_t f1, f2;
    int x; // index into ground
};

// Symmetric exchange axiom. y = x is allowed, in which case the witness set
// is F1 with x flipped.
inline std::optional<ExchangeCounterexample> check_symmetric_exchange(const FeasibleFamily& fam) {
    if (fam.sets.empty()) throw ValidationError("check_symmetric_exchange: family is empty");
    const int n = static_cast<int>(fam.ground.size());
    for (std::uint32_t f1 : fam.sets)
        for (std::uint32_t f2 : fam.sets) {
            const std::uint32_t diff = f1 ^ f2;
            for (int x = 0; x < n; ++x) {
                if (!(diff >> x & 1)) continue;
                bool ok = false;
                for (int y = 0; y < n && !ok; ++y) {
                    if (!(diff >> y & 1)) continue;
                    if (fam.contains(f1 ^ (1u << x) ^ (x == y ? 0u : 1u << y))) ok = true;
                }
                if (!ok) return ExchangeCounterexample{f1, f2, x};
            }
        }
    return std::nullopt;
}

// Matroid basis exchange: all sets must have equal cardinality.
inline bool check_basis_exchange(const FeasibleFamily& fam) {
    if (fam.sets.empty()) throw ValidationError("check_basis_exchange: family is empty");
    const int card = std::popcount(fam.sets.front());
    for (std::uint32_t b : fam.sets)
        if (std::popcount(b) != card) throw MixedCardinality("check_basis_exchange: sets of mixed cardinality");
    const int n = static_cast<int>(fam.ground.size());
    for (std::uint32_t a : fam.sets)
        for (std::uint32_t b : fam.sets)
            for (int x = 0; x < n; ++x) {
                if (!((a & ~b) >> x & 1)) continue;
                bool ok = false;
                for (int y = 0; y < n && !ok; ++y) {
                    if (!((b & ~a) >> y & 1)) continue;
                    if (fam.contains(a ^ (1u << x) ^ (1u << y))) ok = true;
                }
                if (!ok) return false;
            }
    return true;
}

namespace detail_oracle {

inline void require_same_ground(const FeasibleFamily& a, const FeasibleFamily& b) {
    if (a.ground != b.ground) throw LabelMismatch("family operation: ground sets differ");
}

} // namespace detail_oracle

// Disjoint unions F1 + F2.
inline FeasibleFamily family_union(const FeasibleFamily& a, const FeasibleFamily& b) {
    detail_oracle::require_same_ground(a, b);
    std::vector<std::uint32_t> out;
    for (std::uint32_t f1 : a.sets)
        for (std::uint32_t f2 : b.sets)
            if ((f1 & f2) == 0) out.push_back(f1 | f2);
    return FeasibleFamily(a.ground, std::move(out));
}

inline FeasibleFamily family_delta_sum(const FeasibleFamily& a, const FeasibleFamily& b) {
    detail_oracle::require_same_ground(a, b);
    std::vector<std::uint32_t> out;
    for (std::uint32_t f1 : a.sets)
        for (std::uint32_t f2 : b.sets) out.push_back(f1 ^ f2);
    return FeasibleFamily(a.ground, std::move(out));
}

inline FeasibleFamily family_twist(const FeasibleFamily& a, const LabelSet& s) {
    const std::uint32_t smask = a.mask_of(s);
    std::vector<std::uint32_t> out;
    for (std::uint32_t f : a.sets) out.push_back(f ^ smask);
    return FeasibleFamily(a.ground, std::move(out));
}

// Existential projection: drop X from every feasible set.
inline FeasibleFamily family_projection(const FeasibleFamily& a, const LabelSet& x) {
    const std::uint32_t xmask = a.mask_of(x);
    Labels ground;
    std::vector<int> keep;
    for (std::size_t i = 0; i < a.ground.size(); ++i)
        if (!(xmask >> i & 1)) {
            keep.push_back(static_cast<int>(i));
            ground.push_back(a.ground[i]);
        }
    std::vector<std::uint32_t> out;
    for (std::uint32_t f : a.sets) {
        std::uint32_t m = 0;
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (f >> keep[k] & 1) m |= 1u << k;
        out.push_back(m);
    }
    return FeasibleFamily(std::move(ground), std::move(out));
}

// Sets whose cardinality has the given parity (0 = even, 1 = odd).
inline FeasibleFamily family_parity_slice(const FeasibleFamily& a, int parity) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f : a.sets)
        if (std::popcount(f) % 2 == parity) out.push_back(f);
    return FeasibleFamily(a.ground, std::move(out));
}

// Does G[mask] have a perfect matching? Simple recursive matcher.
inline bool has_perfect_matching(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    if (mask == 0) return true;
    const int lo = std::countr_zero(mask);
    std::uint32_t partners = adj[lo] & mask & ~(1u << lo);
    while (partners) {
        const int j = std::countr_zero(partners);
        partners &= partners - 1;
        if (has_perfect_matching(adj, mask & ~(1u << lo) & ~(1u << j))) return true;
    }
    return false;
}

// Exact matching delta-matroid family by matching enumeration.
inline FeasibleFamily matching_family(const Graph& g) {
    if (g.vertices.size() > 16) throw TooLarge("matching_family: more than 16 vertices");
    const int n = static_cast<int>(g.vertices.size());
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges) {
        int i = static_cast<int>(std::find(g.vertices.begin(), g.vertices.end(), u) - g.vertices.begin());
        int j = static_cast<int>(std::find(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin());
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    std::vector<std::uint32_t> sets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (has_perfect_matching(adj, mask)) sets.push_back(mask);
    return FeasibleFamily(g.vertices, std::move(sets));
}

// Exact column-basis family of a matroid representation.
inline FeasibleFamily basis_family(const GeneralMatrix& m) {
    if (m.col_labels().size() > 16) throw TooLarge("basis_family: more than 16 columns");
    const int r = rank(m);
    std::vector<int> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(i);
    std::vector<std::uint32_t> sets;
    for (std::uint32_t mask = 0; mask < (1u << m.cols()); ++mask) {
        if (std::popcount(mask) != r) continue;
        std::vector<int> cols;
        for (int c = 0; c < m.cols(); ++c)
            if (mask >> c & 1) cols.push_back(c);
        if (rank(m.submatrix(rows, cols)) == r) sets.push_back(mask);
    }
    return FeasibleFamily(m.col_labels(), std::move(sets));
}

// Exact independent-set family of a matroid representation.
inline FeasibleFamily independent_family(const GeneralMatrix& m) {
    if (m.col_labels().size() > 16) throw TooLarge("independent_family: more than 16 columns");
    std::vector<int> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(i);
    std::vector<std::uint32_t> sets;
    for (std::uint32_t mask = 0; mask < (1u << m.cols()); ++mask) {
        std::vector<int> cols;
        for (int c = 0; c < m.cols(); ++c)
            if (mask >> c & 1) cols.push_back(c);
        if (rank(m.submatrix(rows, cols)) == static_cast<int>(cols.size())) sets.push_back(mask);
    }
    return FeasibleFamily(m.col_labels(), std::move(sets));
}

// Claimed direct-sum decomposition for the parity min-max certificate.
struct MinMaxDecomposition {
    LabelSet t0;
    std::vector<std::pair<LabelSet, LabelSet>> parts; // (V_i, T_i)
};

} // namespace oracle
} // namespace deltakit
