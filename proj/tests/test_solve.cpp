#include "doctest.h"

#include "deltakit/solve.hpp"
#include "test_util.hpp"

using namespace deltakit;
using namespace testutil;
using oracle::enumerate_family;
using oracle::FeasibleFamily;

namespace {

WeightMap weights_of(std::initializer_list<std::pair<const char*, long long>> init) {
    WeightMap w;
    for (auto& [k, v] : init) w.w[k] = v;
    return w;
}

long long brute_force_max_weight(const FeasibleFamily& fam, const WeightMap& w) {
    long long best = std::numeric_limits<long long>::min();
    for (std::uint32_t m : fam.sets) best = std::max(best, w.total(fam.labels_of(m)));
    return best;
}

// Naive symbolic determinant by cofactor expansion over ZPoly entries.
ZPoly symbolic_det(const std::vector<std::vector<ZPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return ZPoly::constant(fp(1));
    ZPoly acc;
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<ZPoly>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<ZPoly> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        ZPoly term = m[0][j] * symbolic_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

TEST_CASE("max weight feasible set on a path") {
    Rng rng(41);
    ContractionRep d = matching_dm(path_graph({"a", "b", "c"}), rng, 1e-9);
    auto [set, weight] = max_weight_feasible(d, weights_of({{"a", 3}, {"b", -1}, {"c", 2}}));
    CHECK(weight == 2);
    CHECK(set_equal(set, {"a", "b"}));

    auto zero = max_weight_feasible(d, weights_of({{"a", 0}, {"b", 0}, {"c", 0}}));
    CHECK(zero.weight == 0);
    CHECK(feasible(d, zero.set));

    CHECK_THROWS_AS(max_weight_feasible(d, weights_of({{"a", 1}})), LabelMismatch);
}

TEST_CASE("max weight feasible set equals the brute-force optimum") {
    Rng rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        ContractionRep d = random_dm(rng, 3 + static_cast<int>(rng.uniform_u64(6)));
        WeightMap w;
        for (const Label& l : d.ground()) w.w[l] = rng.uniform_int(-5, 5);
        auto [set, weight] = max_weight_feasible(d, w);
        CHECK(feasible(d, set));
        CHECK(weight == w.total(set));
        CHECK(weight == brute_force_max_weight(enumerate_family(d), w));
    }
}

TEST_CASE("max weight feasible set on projected representations") {
    Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        ProjectedRep d = random_projected_rep(rng, 4, 2, trial % 2, 0.55);
        WeightMap w;
        for (const Label& l : d.ground()) w.w[l] = rng.uniform_int(-5, 5);
        auto [set, weight] = max_weight_feasible(d, w);
        CHECK(feasible(d, set));
        CHECK(weight == brute_force_max_weight(enumerate_family(d), w));
    }
}

TEST_CASE("delta covering value") {
    Rng rng(44);
    ContractionRep edge = matching_dm(Graph({"a", "b"}, {{"a", "b"}}), rng, 1e-9);
    CHECK(delta_covering_value(edge, edge, rng, 1e-9) == 2);

    ContractionRep trivial(SkewMatrix::zero({"a", "b"}), {});
    CHECK(delta_covering_value(trivial, trivial, rng, 1e-9) == 0);

    for (int trial = 0; trial < 60; ++trial) {
        ContractionRep d1 = random_dm(rng, 5);
        ContractionRep d2 = random_dm(rng, 5);
        long long expect = 0;
        for (std::uint32_t f1 : enumerate_family(d1).sets)
            for (std::uint32_t f2 : enumerate_family(d2).sets)
                expect = std::max<long long>(expect, std::popcount(f1 ^ f2));
        long long got = delta_covering_value(d1, d2, rng, 0.05);
        CHECK(got <= expect); // never overestimates
        CHECK(got == expect); // and at p = 2^61 - 1 misses with probability ~0
    }
}

TEST_CASE("parity value") {
    Rng rng(45);
    ContractionRep split = twist(matching_dm(Graph({"a", "b"}, {{"a", "b"}}), rng, 1e-9), {"a"});
    CHECK(parity_value(split, {{"a", "b"}}, rng, 1e-9) == 1);

    ContractionRep edge = matching_dm(Graph({"a", "b"}, {{"a", "b"}}), rng, 1e-9);
    CHECK(parity_value(edge, {{"a", "b"}}, rng, 1e-9) == 0);

    ContractionRep p4 = matching_dm(path_graph({"a", "b", "c", "d"}), rng, 1e-9);
    CHECK(parity_value(p4, {{"a", "c"}, {"b", "d"}}, rng, 1e-9) == 0);

    CHECK_THROWS_AS(parity_value(p4, PairPartition{{"a", "b"}}, rng, 1e-9), ValidationError);

    for (int trial = 0; trial < 40; ++trial) {
        ContractionRep d = random_dm(rng, 6);
        Labels g = d.ground();
        PairPartition pi = {{g[0], g[3]}, {g[1], g[5]}, {g[2], g[4]}};
        long long expect = 6;
        for (std::uint32_t f : enumerate_family(d).sets) {
            LabelSet fs = enumerate_family(d).labels_of(f);
            expect = std::min<long long>(expect, detail::broken_pairs(fs, pi));
        }
        CHECK(parity_value(d, pi, rng, 0.05) == expect);
    }
}

TEST_CASE("delete_edges basics") {
    // No marked entries: nothing changes.
    Rng rng(46);
    SkewMatrix a = random_skew(labels_n(4), rng, 1.0);
    if (det(a).is_zero()) a.set_pair(0, 1, fp(1));
    SkewMatrix before = a;
    CHECK(delete_edges(a, {}).empty());
    CHECK(a.entries() == before.entries());

    // J2 with its single entry marked: the entry must be kept.
    SkewMatrix j2 = SkewMatrix::zero({"u", "v"});
    j2.set_pair(0, 1, fp(1));
    auto deleted = delete_edges(j2, {MarkedComponent{{"u", "v"}, {{"u", "v"}}}});
    CHECK(deleted.empty());
    CHECK(j2.at(0, 1) == fp(1));

    SkewMatrix sing = SkewMatrix::zero({"u", "v"});
    CHECK_THROWS_AS(delete_edges(sing, {}), SingularInput);
}

TEST_CASE("delete_edges outputs are maximal") {
    Rng rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        // Random nonsingular skew matrix with marked entries grouped into
        // disjoint pairs/triples of vertices.
        const int n = 6 + 2 * static_cast<int>(rng.uniform_u64(2));
        Labels ls = labels_n(n);
        SkewMatrix a = random_skew(ls, rng, 0.9);
        if (det(a).is_zero()) { --trial; continue; }
        std::vector<MarkedComponent> comps;
        int i = 0;
        while (i + 1 < n) {
            const bool triple = i + 2 < n && rng.uniform_real() < 0.5;
            MarkedComponent c;
            if (triple) {
                c.vertices = {ls[i], ls[i + 1], ls[i + 2]};
                c.edges = {{ls[i], ls[i + 1]}, {ls[i], ls[i + 2]}, {ls[i + 1], ls[i + 2]}};
                i += 3;
            } else {
                c.vertices = {ls[i], ls[i + 1]};
                c.edges = {{ls[i], ls[i + 1]}};
                i += 2;
            }
            comps.push_back(std::move(c));
        }
        SkewMatrix work = a;
        auto deleted = delete_edges(work, comps);
        CHECK_FALSE(det(work).is_zero());
        // Deleted entries are zero; survivors keep their value.
        for (const auto& c : comps)
            for (const auto& [u, v] : c.edges) {
                const bool was_deleted =
                    std::find(deleted.begin(), deleted.end(), std::make_pair(u, v)) != deleted.end();
                const Fp now = work.at(work.index_of(u), work.index_of(v));
                if (was_deleted) {
                    CHECK(now == fp(0));
                } else {
                    CHECK(now == a.at(a.index_of(u), a.index_of(v)));
                    // Maximality: zeroing any survivor makes the matrix singular.
                    SkewMatrix probe = work;
                    probe.set_pair(probe.index_of(u), probe.index_of(v), fp(0));
                    CHECK(det(probe).is_zero());
                }
            }
    }
}

TEST_CASE("target_delta_sum recovers witness pairs") {
    Rng rng(48);
    ContractionRep edge = matching_dm(Graph({"a", "b"}, {{"a", "b"}}), rng, 1e-9);
    WitnessPair p = target_delta_sum(edge, edge, {}, rng);
    CHECK(p.f1 == p.f2); // symmetric difference empty

    // Forced decomposition: D2 = {emptyset}.
    ContractionRep trivial(SkewMatrix::zero({"a", "b"}), {});
    WitnessPair q = target_delta_sum(edge, trivial, {"a", "b"}, rng);
    CHECK(set_equal(q.f1, {"a", "b"}));
    CHECK(q.f2.empty());

    CHECK_THROWS_AS(target_delta_sum(edge, trivial, {"a"}, rng), InfeasibleTarget);
}

TEST_CASE("target_delta_sum succeeds on every feasible target") {
    Rng rng(49);
    for (int trial = 0; trial < 25; ++trial) {
        ContractionRep d1 = random_dm(rng, 5);
        ContractionRep d2 = random_dm(rng, 5);
        FeasibleFamily f1 = enumerate_family(d1), f2 = enumerate_family(d2);
        FeasibleFamily target = oracle::family_delta_sum(f1, f2);
        for (std::uint32_t s : target.sets) {
            LabelSet sset = target.labels_of(s);
            WitnessPair p = target_delta_sum(d1, d2, sset, rng);
            CHECK(feasible(d1, p.f1));
            CHECK(feasible(d2, p.f2));
            CHECK(set_equal(set_symdiff(p.f1, p.f2), sset));
        }
    }
}

TEST_CASE("target_delta_sum with projected operands") {
    Rng rng(50);
    for (int trial = 0; trial < 15; ++trial) {
        ProjectedRep d1 = random_projected_rep(rng, 4, 2, 0, 0.6);
        ProjectedRep d2 = random_projected_rep(rng, 4, 1, 0, 0.6);
        FeasibleFamily target = oracle::family_delta_sum(enumerate_family(d1), enumerate_family(d2));
        for (std::uint32_t s : target.sets) {
            LabelSet sset = target.labels_of(s);
            WitnessPair p = target_delta_sum(d1, d2, sset, rng);
            CHECK(feasible(d1, p.f1));
            CHECK(feasible(d2, p.f2));
            CHECK(set_equal(set_symdiff(p.f1, p.f2), sset));
        }
    }
}

TEST_CASE("target_delta_sum with projected operands carrying contraction sets") {
    Rng rng(148);
    for (int trial = 0; trial < 10; ++trial) {
        ProjectedRep d1 = random_projected_rep(rng, 3, 2, 2, 0.6);
        ProjectedRep d2 = random_projected_rep(rng, 3, 1, 1, 0.6);
        FeasibleFamily target = oracle::family_delta_sum(enumerate_family(d1), enumerate_family(d2));
        for (std::uint32_t s : target.sets) {
            LabelSet sset = target.labels_of(s);
            WitnessPair p = target_delta_sum(d1, d2, sset, rng);
            CHECK(feasible(d1, p.f1));
            CHECK(feasible(d2, p.f2));
            CHECK(set_equal(set_symdiff(p.f1, p.f2), sset));
        }
    }
}

TEST_CASE("covering search across mismatched ground sets") {
    Rng rng(149);
    for (int trial = 0; trial < 10; ++trial) {
        ContractionRep d1 = random_dm(rng, 4); // ground e0..e3
        ContractionRep d2 = random_dm(rng, 5); // ground e0..e4
        Labels full = d2.ground();
        FeasibleFamily f1 = enumerate_family(pad_ground(d1, full));
        FeasibleFamily f2 = enumerate_family(d2);
        long long expect = -1;
        for (std::uint32_t a : f1.sets)
            for (std::uint32_t b : f2.sets)
                if ((a & b) == 0) expect = std::max<long long>(expect, std::popcount(a | b));
        if (expect < 0) continue;
        CoverWitness cw = search_covering(d1, d2, rng, 1e-9);
        CHECK(cw.value == expect);
        CHECK(feasible(d1, cw.f1));
        CHECK(feasible(d2, cw.f2));
        CHECK(set_intersect(cw.f1, cw.f2).empty());
    }
}

TEST_CASE("search_intersection finds a common feasible set") {
    Rng rng(51);
    ContractionRep d1 = matching_dm(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), rng, 1e-9);
    ContractionRep d2 = matching_dm(Graph({"a", "b", "c", "d"}, {{"b", "c"}, {"a", "d"}}), rng, 1e-9);
    auto common = search_intersection(d1, d2, rng);
    REQUIRE(common.has_value());
    CHECK((common->empty() || set_equal(*common, {"a", "b", "c", "d"})));

    for (int trial = 0; trial < 30; ++trial) {
        ContractionRep a = random_dm(rng, 5);
        ContractionRep b = random_dm(rng, 5);
        FeasibleFamily fa = enumerate_family(a), fb = enumerate_family(b);
        bool expect = false;
        for (std::uint32_t m : fa.sets)
            if (fb.contains(m)) expect = true;
        auto got = search_intersection(a, b, rng);
        CHECK(got.has_value() == expect);
        if (got) {
            CHECK(feasible(a, *got));
            CHECK(feasible(b, *got));
        }
    }
}

TEST_CASE("search_partition splits the ground set") {
    Rng rng(52);
    // With D2 the dual of D1, any feasible set and its complement partition V.
    for (int trial = 0; trial < 20; ++trial) {
        ContractionRep d1 = random_dm(rng, 5);
        ContractionRep d2 = dual(d1);
        auto part = search_partition(d1, d2, rng);
        REQUIRE(part.has_value());
        auto [p, q] = *part;
        CHECK(feasible(d1, p));
        CHECK(feasible(d2, q));
        CHECK(set_intersect(p, q).empty());
        CHECK(set_equal(set_union(p, q), LabelSet(d1.ground())));
    }
    // Impossible partition: both operands only have the empty set feasible.
    ContractionRep trivial(SkewMatrix::zero({"a", "b"}), {});
    CHECK_FALSE(search_partition(trivial, trivial, rng).has_value());
}

TEST_CASE("search_covering returns disjoint witnesses") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        ContractionRep d1 = random_dm(rng, 5);
        ContractionRep d2 = random_dm(rng, 5);
        FeasibleFamily f1 = enumerate_family(d1), f2 = enumerate_family(d2);
        long long expect = -1;
        for (std::uint32_t a : f1.sets)
            for (std::uint32_t b : f2.sets)
                if ((a & b) == 0) expect = std::max<long long>(expect, std::popcount(a | b));
        if (expect < 0) continue; // no disjoint pair: union names no family
        CoverWitness cw = search_covering(d1, d2, rng, 1e-9);
        CHECK(cw.value == expect);
        CHECK(feasible(d1, cw.f1));
        CHECK(feasible(d2, cw.f2));
        CHECK(set_intersect(cw.f1, cw.f2).empty());
        CHECK(static_cast<long long>(cw.f1.size() + cw.f2.size()) == cw.value);
    }
}

TEST_CASE("search_delta_covering matches the covering value") {
    Rng rng(54);
    for (int trial = 0; trial < 20; ++trial) {
        ContractionRep d1 = random_dm(rng, 5);
        ContractionRep d2 = random_dm(rng, 5);
        long long expect = 0;
        for (std::uint32_t a : enumerate_family(d1).sets)
            for (std::uint32_t b : enumerate_family(d2).sets)
                expect = std::max<long long>(expect, std::popcount(a ^ b));
        CoverWitness cw = search_delta_covering(d1, d2, rng, 1e-9);
        CHECK(cw.value == expect);
        CHECK(feasible(d1, cw.f1));
        CHECK(feasible(d2, cw.f2));
        CHECK(static_cast<long long>(set_symdiff(cw.f1, cw.f2).size()) == expect);
    }
}

TEST_CASE("search_parity returns an optimal witness") {
    Rng rng(55);
    ContractionRep split = twist(matching_dm(Graph({"a", "b"}, {{"a", "b"}}), rng, 1e-9), {"a"});
    ParityWitness w = search_parity(split, {{"a", "b"}}, rng, 1e-9);
    CHECK(w.broken == 1);
    CHECK((set_equal(w.f, {"a"}) || set_equal(w.f, {"b"})));

    for (int trial = 0; trial < 25; ++trial) {
        ContractionRep d = random_dm(rng, 6);
        Labels g = d.ground();
        PairPartition pi = {{g[0], g[1]}, {g[2], g[3]}, {g[4], g[5]}};
        long long expect = parity_value(d, pi, rng, 1e-9);
        ParityWitness pw = search_parity(d, pi, rng, 1e-9);
        CHECK(feasible(d, pw.f));
        CHECK(pw.broken == expect);
    }
}

TEST_CASE("poly_det small cases") {
    ZPoly z = ZPoly::monomial(fp(1), 1);
    ZPoly one = ZPoly::constant(fp(1));
    CHECK(poly_det({{z, ZPoly()}, {ZPoly(), z}}, 2) == z * z);
    CHECK(poly_det({{z, one}, {one, z}}, 2) == z * z - one);
    CHECK(poly_det({}, 0) == one);
    CHECK_THROWS_AS(poly_det({{z, one}}, 2), NotSquare);
}

TEST_CASE("poly_det agrees with symbolic cofactor expansion") {
    Rng rng(56);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::vector<ZPoly>> m(4, std::vector<ZPoly>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                std::vector<Fp> cs(1 + rng.uniform_u64(3));
                for (auto& c : cs) c = fp(rng.uniform_int(-4, 4));
                m[i][j] = ZPoly(std::move(cs));
            }
        ZPoly expect = symbolic_det(m);
        ZPoly got = poly_det(m, 8);
        CHECK(got == expect);
        // Evaluation at a fresh random point agrees with direct elimination.
        Fp x = rng.uniform_field();
        std::vector<Fp> vals(16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) vals[i * 4 + j] = m[i][j].eval(x);
        CHECK(got.eval(x) == detail::det_in_place(vals, 4));
    }
}

TEST_CASE("weighted intersection value") {
    Rng rng(57);
    ContractionRep d1 = matching_dm(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), rng, 1e-9);
    ContractionRep d2 = matching_dm(Graph({"a", "b", "c", "d"}, {{"b", "c"}, {"a", "d"}}), rng, 1e-9);
    WeightMap ones = WeightMap::ones(d1.ground());
    auto v = weighted_intersection_value(d1, d2, ones, rng);
    REQUIRE(v.has_value());
    CHECK(*v == 4);

    // Same operand: max cardinality feasible set.
    auto same = weighted_intersection_value(d1, d1, ones, rng);
    REQUIRE(same.has_value());
    CHECK(*same == 4);

    // Families intersecting only in the empty set give weight 0.
    ContractionRep trivial(SkewMatrix::zero({"a", "b"}), {});
    CHECK(weighted_intersection_value(trivial, trivial, WeightMap::ones({"a", "b"}), rng) == 0);

    // A single-set family forces its unique member as the witness.
    ContractionRep unique = matroid_bases_dm(GeneralMatrix::identity({"a", "b"}));
    auto witness = weighted_intersection_search(unique, unique, WeightMap::ones({"a", "b"}), rng);
    REQUIRE(witness.has_value());
    CHECK(set_equal(*witness, {"a", "b"}));

    CHECK_THROWS_AS(weighted_intersection_value(d1, d2, weights_of({{"a", 0}, {"b", 1}, {"c", 1}, {"d", 1}}), rng),
                    ValidationError);
}

TEST_CASE("weighted intersection matches brute force") {
    Rng rng(58);
    for (int trial = 0; trial < 60; ++trial) {
        ContractionRep d1 = random_dm(rng, 5);
        ContractionRep d2 = random_dm(rng, 5);
        WeightMap w;
        for (const Label& l : d1.ground()) w.w[l] = rng.uniform_int(1, 5);
        FeasibleFamily f1 = enumerate_family(d1), f2 = enumerate_family(d2);
        std::optional<long long> expect;
        for (std::uint32_t m : f1.sets)
            if (f2.contains(m)) {
                long long weight = w.total(f1.labels_of(m));
                if (!expect || weight > *expect) expect = weight;
            }
        auto got = weighted_intersection_value(d1, d2, w, rng);
        CHECK(got == expect);
        if (expect) {
            auto witness = weighted_intersection_search(d1, d2, w, rng);
            REQUIRE(witness.has_value());
            CHECK(feasible(d1, *witness));
            CHECK(feasible(d2, *witness));
            CHECK(w.total(*witness) == *expect);
        } else {
            CHECK_FALSE(weighted_intersection_search(d1, d2, w, rng).has_value());
        }
    }
}

TEST_CASE("weighted intersection with projected operands") {
    Rng rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        ProjectedRep d1 = random_projected_rep(rng, 4, 2, 0, 0.6);
        ProjectedRep d2 = random_projected_rep(rng, 4, 1, 0, 0.6);
        WeightMap w;
        for (const Label& l : d1.ground()) w.w[l] = rng.uniform_int(1, 4);
        FeasibleFamily f1 = enumerate_family(d1), f2 = enumerate_family(d2);
        std::optional<long long> expect;
        for (std::uint32_t m : f1.sets)
            if (f2.contains(m)) {
                long long weight = w.total(f1.labels_of(m));
                if (!expect || weight > *expect) expect = weight;
            }
        CHECK(weighted_intersection_value(d1, d2, w, rng) == expect);
    }
}

TEST_CASE("weighted intersection respects field preconditions") {
    PrimeGuard guard(2147483659ull); // just above 2^31
    Rng rng(60);
    ContractionRep edge = matching_dm(Graph({"a", "b"}, {{"a", "b"}}), rng, 0.01);
    WeightMap heavy;
    heavy.w["a"] = 1;
    heavy.w["b"] = 2'000'000'000;
    CHECK_THROWS_AS(weighted_intersection_value(edge, edge, heavy, rng), FieldTooSmall);
}

TEST_CASE("minmax certificate checker") {
    Rng rng(61);
    // Two disjoint edges, pairs aligned with the edges: delta = 0 and the
    // trivial decomposition into the two edge components certifies it.
    Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    ContractionRep d = matching_dm(g, rng, 1e-9);
    PairPartition pi = {{"a", "b"}, {"c", "d"}};
    oracle::MinMaxDecomposition dec;
    dec.parts = {{{"a", "b"}, {}}, {{"c", "d"}, {}}};
    CHECK(oracle::check_minmax_certificate(d, pi, dec, rng, 1e-9));

    // Pairs crossing the parts fail condition 2.
    PairPartition cross = {{"a", "c"}, {"b", "d"}};
    CHECK_FALSE(oracle::check_minmax_certificate(d, cross, dec, rng, 1e-9));

    // Claimed direct sum with nonzero cross entries fails condition 1.
    ContractionRep k4 = matching_dm(complete_graph({"a", "b", "c", "d"}), rng, 1e-9);
    CHECK_FALSE(oracle::check_minmax_certificate(k4, pi, dec, rng, 1e-9));

    // Malformed decompositions are rejected.
    oracle::MinMaxDecomposition bad;
    bad.parts = {{{"a", "b"}, {}}};
    CHECK_THROWS_AS(oracle::check_minmax_certificate(d, pi, bad, rng, 1e-9), MalformedDecomposition);

    // A twisted edge has delta = 1, certified by an odd contraction part.
    ContractionRep split = twist(matching_dm(Graph({"a", "b"}, {{"a", "b"}}), rng, 1e-9), {"a"});
    REQUIRE(split.contract_set().size() == 1);
    oracle::MinMaxDecomposition odd_dec;
    odd_dec.parts = {{{"a", "b"}, {split.contract_set().front()}}};
    CHECK(oracle::check_minmax_certificate(split, {{"a", "b"}}, odd_dec, rng, 1e-9));
}
