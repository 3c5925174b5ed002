#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grel/relation.hpp"
#include "grel/parallel.hpp"
#include "oracles.hpp"

using namespace grel;

TEST_CASE("compose and transpose") {
    std::mt19937_64 rng(9001);
    for (int trial = 0; trial < 100; ++trial) {
        Relation r = oracle::random_relation(rng, 4, 3, false);
        Relation id4 = Relation::identity(4), id3 = Relation::identity(3);
        CHECK(compose(id4, r) == r);
        CHECK(compose(r, id3) == r);
        CHECK(transpose(transpose(r)) == r);
    }

    Relation r = Relation::from_pairs(1, 2, {{0, 0}, {0, 1}});
    Relation s = Relation::from_pairs(2, 1, {{1, 0}});
    CHECK(compose(r, s) == Relation::from_pairs(1, 1, {{0, 0}}));
    CHECK_THROWS_AS(compose(r, Relation::identity(3)), InvalidParameterError);

    CHECK(transpose(Relation::from_pairs(2, 2, {{0, 1}})) ==
          Relation::from_pairs(2, 2, {{1, 0}}));

    // associativity and the transpose law on random triples
    for (int trial = 0; trial < 200; ++trial) {
        Relation a = oracle::random_relation(rng, 3, 4, false);
        Relation b = oracle::random_relation(rng, 4, 3, false);
        Relation c = oracle::random_relation(rng, 3, 5, false);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(transpose(compose(a, b)) == compose(transpose(b), transpose(a)));
    }
}

TEST_CASE("predicates") {
    RelationFacts id = predicates(Relation::identity(3));
    CHECK(id.full_domain);
    CHECK(id.full_image);
    CHECK(id.functional);
    CHECK(id.injective);

    RelationFacts f = predicates(Relation::from_pairs(2, 1, {{0, 0}, {1, 0}}));
    CHECK(f.functional);
    CHECK(!f.injective);
    CHECK(f.full_domain);
    CHECK(f.full_image);

    RelationFacts empty = predicates(Relation(2, 2));
    CHECK(!empty.full_domain);
    CHECK(empty.domain.empty());
}

TEST_CASE("apply_strong worked examples") {
    // C_3 {u,v,w} with R = {(u,x),(v,y)} -> K_2
    Graph c3 = generate(Family::Cycle, 3);
    Relation r = Relation::from_pairs(3, 2, {{0, 0}, {1, 1}});
    CHECK(apply_strong(c3, r) == generate(Family::Complete, 2));

    // P_2 {x,y} * {(x,u),(x,w),(y,v)} = P_3 on u-v-w
    Graph p2 = generate(Family::Path, 2);
    Relation spread = Relation::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}});
    CHECK(apply_strong(p2, spread) == generate(Family::Path, 3));

    std::mt19937_64 rng(9002);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(rng, 5, trial % 2 == 1, true);
        CHECK(apply_strong(g, Relation::identity(5)) == g);
    }

    // non-full image names the uncovered vertex
    Relation partial = Relation::from_pairs(3, 2, {{0, 0}});
    CHECK_THROWS_WITH_AS(apply_strong(c3, partial),
                         doctest::Contains("target vertex 1"), PreconditionError);
}

TEST_CASE("apply_weak: diagonal removal and the composition failure") {
    // K_3 {x,y,z}, R = {(x,1),(z,1),(y,2)} -> K_2
    Graph k3 = generate(Family::Complete, 3);
    Relation r = Relation::from_pairs(3, 2, {{0, 0}, {2, 0}, {1, 1}});
    CHECK(apply_weak(k3, r) == generate(Family::Complete, 2));

    // (K_3 * R) * S = path, K_3 * (R ∘ S) = K_3
    Relation s = Relation::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}});
    Graph two_step = apply_weak(apply_weak(k3, r), s);
    CHECK(is_isomorphic(two_step, generate(Family::Path, 3)).isomorphic);
    Graph one_step = apply_weak(k3, compose(r, s));
    CHECK(one_step == generate(Family::Complete, 3));

    // a weak relation K_5 -> K_3 exists
    CHECK(oracle::weak_relation_exists(generate(Family::Complete, 5),
                                       generate(Family::Complete, 3)));

    CHECK_THROWS_AS(apply_weak(generate(Family::SingleLoop, 1), Relation::identity(1)),
                    PreconditionError);
}

TEST_CASE("apply_weighted") {
    WeightMatrix one{{1}};
    CHECK(apply_weighted(one, Relation::identity(1)) == one);

    // support equals the strong composition on unweighted graphs
    std::mt19937_64 rng(9003);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(rng, 4, false, true);
        Relation r = oracle::random_relation(rng, 4, 3);
        WeightMatrix w(4, std::vector<long long>(4, 0));
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (g.has_edge(u, v)) w[u][v] = 1;
        WeightMatrix out = apply_weighted(w, r);
        Graph strong = apply_strong(g, r);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) CHECK((out[a][b] > 0) == strong.has_edge(a, b));
    }

    // duplicating one vertex doubles its row and column
    Graph k2 = generate(Family::Complete, 2);
    WeightMatrix w{{0, 1}, {1, 0}};
    Relation dup = Relation::from_pairs(2, 3, {{0, 0}, {0, 1}, {1, 2}});
    WeightMatrix out = apply_weighted(w, dup);
    CHECK(out == WeightMatrix{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});

    CHECK_THROWS_AS(apply_weighted(w, Relation::identity(3)), InvalidParameterError);
}

TEST_CASE("decompose") {
    Decomposition id = decompose(Relation::identity(3));
    CHECK(id.identity_part == Relation::identity(3));
    CHECK(compose(id.identity_part, compose(id.duplicator, id.contractor)) ==
          Relation::identity(3));

    Relation r = Relation::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}});
    Decomposition d = decompose(r);
    CHECK(d.duplicator.dst_n() == 3);  // |B| = |r|
    CHECK(compose(d.identity_part, compose(d.duplicator, d.contractor)) == r);
    RelationFacts dup = predicates(d.duplicator);
    CHECK(dup.injective);
    CHECK(dup.full_domain);
    CHECK(predicates(d.contractor).functional);

    std::mt19937_64 rng(9004);
    for (int trial = 0; trial < 500; ++trial) {
        Relation rr = oracle::random_relation(rng, 5, 4, false);
        Decomposition dd = decompose(rr);
        CHECK(dd.duplicator.dst_n() == rr.size());
        CHECK(compose(dd.identity_part, compose(dd.duplicator, dd.contractor)) == rr);
    }

    // three-factor graph identity (applied in renumbered dom-r coordinates)
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(rng, 5, false, true);
        Relation rr = oracle::random_relation(rng, 5, 4);
        Graph h = apply_strong(g, rr);
        Decomposition dd = decompose(rr);
        auto dom = predicates(rr).domain;
        Graph induced = induced_subgraph(g, dom);
        Relation dup_renumbered((int)dom.size(), dd.duplicator.dst_n());
        for (size_t i = 0; i < dom.size(); ++i)
            for (int b = dd.duplicator.image_of(dom[i]).next(); b >= 0;
                 b = dd.duplicator.image_of(dom[i]).next(b + 1))
                dup_renumbered.add((int)i, b);
        CHECK(apply_strong(apply_strong(induced, dup_renumbered), dd.contractor) == h);
    }
}

TEST_CASE("hall_check") {
    HallResult id = hall_check(Relation::identity(4));
    CHECK(id.satisfied);
    CHECK(id.matching.size() == 4);

    // two sources sharing one target
    HallResult bad = hall_check(Relation::from_pairs(3, 3, {{1, 2}, {2, 2}}));
    CHECK(!bad.satisfied);
    CHECK(bad.deficient == std::vector<int>{1, 2});

    // agreement with the exhaustive subset check
    std::mt19937_64 rng(9005);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + (int)(rng() % 7);
        Relation r = oracle::random_relation(rng, n, 2 + (int)(rng() % 5), false, false, 0.3);
        HallResult res = hall_check(r);
        bool expected = true;
        for (uint32_t subset = 1; subset < (1u << n); ++subset) {
            Bitset images(r.dst_n());
            int size = 0;
            bool all_in_domain = true;
            for (int x = 0; x < n; ++x)
                if (subset & (1u << x)) {
                    if (r.image_of(x).none()) all_in_domain = false;
                    images |= r.image_of(x);
                    ++size;
                }
            if (!all_in_domain) continue;  // Hall condition ranges over dom r
            if (images.count() < size) expected = false;
        }
        CHECK(res.satisfied == expected);
        if (!res.satisfied) {
            Bitset images(r.dst_n());
            for (int x : res.deficient) images |= r.image_of(x);
            CHECK((int)res.deficient.size() > images.count());
        }
    }
}

TEST_CASE("extract_monomorphism") {
    // functional injective relation: comes back as itself
    Graph p3 = generate(Family::Path, 3);
    Relation self = Relation::identity(3);
    auto f = extract_monomorphism(p3, self, p3);
    REQUIRE(f.has_value());
    CHECK(*f == std::vector<int>{0, 1, 2});

    // P_2 -> P_3 spread relation
    Graph p2 = generate(Family::Path, 2);
    Relation spread = Relation::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}});
    auto mono = extract_monomorphism(p2, spread, p3);
    REQUIRE(mono.has_value());
    CHECK(spread.contains(0, (*mono)[0]));
    CHECK(spread.contains(1, (*mono)[1]));
    CHECK(check_hom(*mono, p2, p3, HomConstraint::Mono));

    // Hall-violating relation on a fixture where the equation still holds:
    // C_4 * {(0,x),(2,x),(1,y),(3,y), (0,y)}? keep it simple with a direct pair
    Graph c4 = generate(Family::Cycle, 4);
    Relation collapse =
        Relation::from_pairs(4, 2, {{0, 0}, {2, 0}, {1, 1}, {3, 1}});
    CHECK(apply_strong(c4, collapse) == generate(Family::Complete, 2));
    auto none = extract_monomorphism(c4, collapse, generate(Family::Complete, 2));
    CHECK(!none.has_value());  // 4 sources cannot match injectively into 2 targets

    CHECK_THROWS_AS(extract_monomorphism(p2, spread, generate(Family::Complete, 3)),
                    PreconditionError);
}

TEST_CASE("is_reversible") {
    std::mt19937_64 rng(9006);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 5, false, true);
        CHECK(is_reversible(g, Relation::identity(5)));
    }

    Graph c3 = generate(Family::Cycle, 3);
    CHECK(!is_reversible(c3, Relation::from_pairs(3, 2, {{0, 0}, {1, 1}})));

    // criterion<->equation agreement is asserted inside; sweep random cases
    for (int trial = 0; trial < 1500; ++trial) {
        int n = 1 + (int)(rng() % 4);
        Graph g = oracle::random_graph(rng, n, false, true);
        Relation r = oracle::random_relation(rng, n, 1 + (int)(rng() % 4));
        (void)is_reversible(g, r);  // throws on disagreement
    }
}

TEST_CASE("composition law of strong applications") {
    std::mt19937_64 rng(9007);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, 4, false, true);
        Relation r = oracle::random_relation(rng, 4, 3);
        Relation s = oracle::random_relation(rng, 3, 4);
        CHECK(apply_strong(apply_strong(g, r), s) == apply_strong(g, compose(r, s)));
    }
}

TEST_CASE("structural properties preserved by relations") {
    std::mt19937_64 rng(9008);

    // chromatic bound chi(g) <= chi(g*r) for full-domain relations
    int checked = 0;
    while (checked < 40) {
        Graph g = oracle::random_graph(rng, 4, false, false, 0.45);
        Relation r = oracle::random_relation(rng, 4, 3, true, true);
        Graph h = apply_strong(g, r);
        if (h.has_any_loop()) continue;
        ++checked;
        CHECK(chromatic_number(g) <= chromatic_number(h));
    }

    // restriction to the components of the image, exhaustive over masks
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(rng, 4, false, true, 0.4);
        Relation r = oracle::random_relation(rng, 4, 4);
        Graph h = apply_strong(g, r);
        auto comps = components(h);
        for (const auto& comp : comps) {
            Relation restricted(4, (int)comp.size());
            for (size_t j = 0; j < comp.size(); ++j)
                for (int x = 0; x < 4; ++x)
                    if (r.contains(x, comp[j])) restricted.add(x, (int)j);
            CHECK(apply_strong(g, restricted) == induced_subgraph(h, comp));
        }
    }

    // distance contraction and the radius bound, sampled
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, 5, false, false, 0.5);
        Relation r = oracle::random_relation(rng, 5, 4, true, true);
        Graph h = apply_strong(g, r);
        for (auto [x, u] : r.pairs())
            for (auto [y, v] : r.pairs()) {
                if (x == y) continue;
                auto dg = distance(g, x, y);
                auto dh = distance(h, u, v);
                if (dg.has_value()) {
                    REQUIRE(dh.has_value());
                    CHECK(*dh <= *dg);
                }
            }
        if (components(g).size() == 1 && components(h).size() == 1)
            CHECK(*radius(h) <= std::max(*radius(g), 2));
    }
}

TEST_CASE("complete-graph images, strong and weak") {
    auto complete_multipartite_parts = [](const Graph& h) -> int {
        // parts = components of the simple complement; every one must be a clique
        Graph comp = complement(h, ComplementMode::Simple);
        auto comps = components(comp);
        for (const auto& block : comps)
            for (size_t i = 0; i < block.size(); ++i)
                for (size_t j = i + 1; j < block.size(); ++j)
                    if (!comp.has_edge(block[i], block[j])) return -1;
        return (int)comps.size();
    };

    auto universe = enumerate_canonical_serial({false, false, 4});
    for (int k = 1; k <= 3; ++k) {
        Graph kk = generate(Family::Complete, k);
        for (const Graph& h : universe) {
            bool strong = oracle::relation_exists(kk, h, false);
            int parts = complete_multipartite_parts(h);
            CHECK(strong == (parts >= 0 && parts <= k));

            bool weak = oracle::weak_relation_exists(kk, h);
            Graph hbar = complement(h, ComplementMode::Simple);
            auto comps = components(hbar);
            bool all_cliques = true;
            int big = 0;
            for (const auto& block : comps) {
                for (size_t i = 0; i < block.size(); ++i)
                    for (size_t j = i + 1; j < block.size(); ++j)
                        if (!hbar.has_edge(block[i], block[j])) all_cliques = false;
                if (block.size() >= 2) ++big;
            }
            if (k == 1) {
                // Degenerate case: K_1 has no edges, so the image must be
                // edgeless. The stated complement characterization needs a
                // second source vertex to wire distinct complement
                // components together.
                CHECK(weak == (h.edge_count() == 0));
            } else {
                CHECK(weak == (all_cliques && big <= k));
            }
        }
    }
}

TEST_CASE("neighborhood-deleted subgraphs inherit the relation") {
    // exhaustive at 3 vertices over all full-image relations, sampled at 4
    auto check_graph = [](const Graph& g, const Relation& r) {
        Graph h = apply_strong_unchecked(g, r);
        for (auto [x, u] : r.pairs()) {
            if (g.has_loop(x)) continue;
            auto gbar_set = g.closed_neighbors(x).complement();
            auto hbar_set = h.closed_neighbors(u).complement();
            Graph gbar = induced_subgraph(g, gbar_set);
            Graph hbar = induced_subgraph(h, hbar_set);
            auto gv = gbar_set.to_vector();
            auto hv = hbar_set.to_vector();
            Relation restricted((int)gv.size(), (int)hv.size());
            for (size_t i = 0; i < gv.size(); ++i)
                for (size_t j = 0; j < hv.size(); ++j)
                    if (r.contains(gv[i], hv[j])) restricted.add((int)i, (int)j);
            CHECK(apply_strong_unchecked(gbar, restricted) == hbar);
        }
    };

    auto universe3 = enumerate_canonical_serial({false, true, 3});
    for (const Graph& g : universe3) {
        bool isolated = false;
        for (int v = 0; v < g.n(); ++v) isolated |= g.is_isolated(v);
        if (isolated) continue;
        for (int m = 1; m <= 3; ++m)
            for (uint64_t mask = 0; mask < (uint64_t(1) << (g.n() * m)); ++mask) {
                Relation r(g.n(), m);
                for (int i = 0; i < g.n() * m; ++i)
                    if (mask & (uint64_t(1) << i)) r.add(i / m, i % m);
                if (!has_full_image(r)) continue;
                check_graph(g, r);
            }
    }

    std::mt19937_64 rng(9009);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = oracle::random_graph(rng, 4, false, true, 0.5);
        bool isolated = false;
        for (int v = 0; v < g.n(); ++v) isolated |= g.is_isolated(v);
        if (isolated) continue;
        check_graph(g, oracle::random_relation(rng, 4, 1 + (int)(rng() % 4)));
    }
}

TEST_CASE("solutions are closed under inclusion intervals") {
    // exhaustive: all pairs r' ⊆ r'' of solutions over tiny masks
    Graph g = generate(Family::Path, 3);
    Graph h = generate(Family::Complete, 2);
    int bits = g.n() * h.n();
    std::vector<uint32_t> solutions;
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        Relation r(g.n(), h.n());
        for (int i = 0; i < bits; ++i)
            if (mask & (1u << i)) r.add(i / h.n(), i % h.n());
        if (has_full_image(r) && apply_strong_unchecked(g, r) == h) solutions.push_back(mask);
    }
    REQUIRE(!solutions.empty());
    for (uint32_t lo : solutions)
        for (uint32_t hi : solutions) {
            if ((lo & hi) != lo) continue;  // need lo ⊆ hi
            // walk all masks between lo and hi
            uint32_t extra = hi & ~lo;
            for (uint32_t sub = extra;; sub = (sub - 1) & extra) {
                uint32_t mid = lo | sub;
                Relation r(g.n(), h.n());
                for (int i = 0; i < bits; ++i)
                    if (mid & (1u << i)) r.add(i / h.n(), i % h.n());
                CHECK(apply_strong_unchecked(g, r) == h);
                if (sub == 0) break;
            }
        }
}
