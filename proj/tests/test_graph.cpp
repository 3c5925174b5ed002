#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grel/graph.hpp"
#include "grel/parallel.hpp"
#include "oracles.hpp"

using namespace grel;

TEST_CASE("generators: canonical numbering and counts") {
    Graph p3 = generate(Family::Path, 3);
    CHECK(p3.n() == 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph d3 = generate(Family::Dragon, 3);
    CHECK(d3.n() == 5);
    CHECK(d3.edge_count() == 7);  // d(d+1)/2 + 1
    CHECK(generate(Family::Dragon, 4).edge_count() == 11);

    Graph s5 = generate(Family::Sunlet, 5);
    CHECK(s5.n() == 10);
    CHECK(s5.edge_count() == 10);
    for (int i = 0; i < 5; ++i) {
        CHECK(s5.degree(i) == 3);
        CHECK(s5.degree(5 + i) == 1);
        CHECK(s5.has_edge(i, 5 + i));
    }

    Graph o = generate(Family::SingleLoop, 1);
    CHECK(o.n() == 1);
    CHECK(o.has_loop(0));

    CHECK_THROWS_AS(generate(Family::Cycle, 2), InvalidParameterError);
    CHECK_THROWS_AS(generate(Family::Path, 0), InvalidParameterError);

    Graph c6 = generate(Family::Cycle, 6);
    CHECK(c6.edge_count() == 6);
    for (int i = 0; i < 6; ++i) CHECK(c6.degree(i) == 2);

    Graph dc = generate(Family::Dicycle, 4);
    CHECK(dc.directed());
    CHECK(dc.has_edge(3, 0));
    CHECK(!dc.has_edge(0, 3));
}

TEST_CASE("disjoint union") {
    Graph k1 = generate(Family::Complete, 1);
    Graph u = disjoint_union(k1, k1);
    CHECK(u.n() == 2);
    CHECK(u.edge_count() == 0);

    Graph e5 = disjoint_union(generate(Family::Dicycle, 5), generate(Family::Dicycle, 3));
    CHECK(e5.n() == 8);
    CHECK(e5.edge_count() == 8);
    CHECK(e5.has_edge(4, 0));
    CHECK(e5.has_edge(7, 5));

    Graph g = generate(Family::Cycle, 5);
    CHECK(disjoint_union(g, Graph(0, false)) == g);
    CHECK_THROWS_AS(disjoint_union(g, generate(Family::Dicycle, 3)), InvalidParameterError);
}

TEST_CASE("complement") {
    Graph kn = generate(Family::Complete, 4);
    Graph empty = complement(kn, ComplementMode::Simple);
    CHECK(empty.edge_count() == 0);
    CHECK(empty.n() == 4);

    // with-loops mode complements the diagonal too
    Graph full = complement(kn);
    CHECK(full.edge_count() == 4);  // just the loops
    for (int v = 0; v < 4; ++v) CHECK(full.has_loop(v));

    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, 5, trial % 2 == 1, true);
        CHECK(complement(complement(g)) == g);
        CHECK(complement(complement(g, ComplementMode::Simple), ComplementMode::Simple) == g);
    }

    Graph c5 = generate(Family::Cycle, 5);
    CHECK(is_isomorphic(complement(c5, ComplementMode::Simple), c5).isomorphic);
}

TEST_CASE("induced subgraphs and neighborhood deletion") {
    Graph k3 = generate(Family::Complete, 3);
    Graph k2 = induced_subgraph(k3, std::vector<int>{0, 1});
    CHECK(k2 == generate(Family::Complete, 2));

    Graph p3 = generate(Family::Path, 3);
    std::vector<int> all{0, 1, 2};
    CHECK(induced_subgraph(p3, all) == p3);
    CHECK(induced_subgraph(p3, std::vector<int>{0, 2}).edge_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(p3, std::vector<int>{0, 9}), InvalidParameterError);

    Graph p5 = generate(Family::Path, 5);
    Graph rest = delete_closed_neighborhoods(p5, {2});
    CHECK(rest.n() == 2);  // vertices 0 and 4
    CHECK(rest.edge_count() == 0);
    CHECK(delete_closed_neighborhoods(p5, {}) == p5);

    Graph star = generate(Family::Complete, 4);
    CHECK(delete_closed_neighborhoods(star, {0}).n() == 0);
}

TEST_CASE("quotient") {
    Graph c4 = generate(Family::Cycle, 4);
    Partition bip{{{0, 2}, {1, 3}}};
    Graph q = quotient(c4, bip);
    CHECK(q == generate(Family::Complete, 2));

    Graph k3 = generate(Family::Complete, 3);
    Graph q2 = quotient(k3, Partition{{{0, 1}, {2}}});
    CHECK(q2.n() == 2);
    CHECK(q2.has_loop(0));
    CHECK(q2.has_edge(0, 1));
    CHECK(!q2.has_loop(1));

    CHECK_THROWS_AS(quotient(k3, Partition{{{0, 1}}}), InvalidParameterError);
    CHECK_THROWS_AS(quotient(k3, Partition{{{0, 1}, {1, 2}}}), InvalidParameterError);

    // singleton quotient is the identity, exhaustively up to 5 vertices
    for (auto loops : {false, true}) {
        auto universe = enumerate_canonical_serial({false, loops, 5});
        for (const Graph& g : universe)
            CHECK(quotient(g, singleton_partition(g.n())) == g);
    }
}

TEST_CASE("duplication and multiplication") {
    Graph k2 = generate(Family::Complete, 2);
    Graph dup = duplicate_vertex(k2, 0);
    CHECK(dup.n() == 3);
    CHECK(dup.has_edge(0, 1));
    CHECK(dup.has_edge(2, 1));
    CHECK(!dup.has_edge(0, 2));

    Graph p4 = generate(Family::Path, 4);
    Graph mult = vertex_multiplication(p4, {2, 1, 2, 1});
    CHECK(mult.n() == 6);
    CHECK(mult.edge_count() == 6);
    // expected: two copies of 0 joined to 1; 1 joined to both copies of 2;
    // both copies of 2 joined to 3
    Graph expected(6, false);
    expected.add_edge(0, 2);
    expected.add_edge(1, 2);
    expected.add_edge(2, 3);
    expected.add_edge(2, 4);
    expected.add_edge(3, 5);
    expected.add_edge(4, 5);
    CHECK(is_isomorphic(mult, expected).isomorphic);

    CHECK(vertex_multiplication(p4, {1, 1, 1, 1}) == p4);
    CHECK_THROWS_AS(vertex_multiplication(p4, {1, 1, 1}), InvalidParameterError);
    CHECK_THROWS_AS(vertex_multiplication(p4, {1, 0, 1, 1}), InvalidParameterError);

    // loop vertex duplicates into a looped twin
    Graph o = generate(Family::SingleLoop, 1);
    Graph twin = duplicate_vertex(o, 0);
    CHECK(twin.has_loop(0));
    CHECK(twin.has_loop(1));
    CHECK(twin.has_edge(0, 1));

    // duplicate then contract the pair: back to the original
    auto universe = enumerate_canonical_serial({false, true, 4});
    for (const Graph& g : universe)
        for (int x = 0; x < g.n(); ++x) {
            Graph d = duplicate_vertex(g, x);
            Partition contract;
            for (int v = 0; v < g.n(); ++v)
                if (v == x)
                    contract.blocks.push_back({x, g.n()});
                else
                    contract.blocks.push_back({v});
            CHECK(is_isomorphic(quotient(d, contract), g).isomorphic);
        }
}

TEST_CASE("line graph") {
    Graph k3 = generate(Family::Complete, 3);
    CHECK(is_isomorphic(line_graph(k3).graph, k3).isomorphic);

    Graph p3 = generate(Family::Path, 3);
    CHECK(line_graph(p3).graph == generate(Family::Complete, 2));

    LineGraph ld3 = line_graph(generate(Family::Dragon, 3));
    CHECK(ld3.graph.n() == 7);
    CHECK(ld3.legend.size() == 7);

    CHECK_THROWS_AS(line_graph(generate(Family::Dicycle, 3)), UnsupportedInputError);
    CHECK_THROWS_AS(line_graph(generate(Family::SingleLoop, 1)), UnsupportedInputError);

    // node count == undirected edge count, exhaustively up to 5 vertices
    for (const Graph& g : enumerate_canonical_serial({false, false, 5}))
        CHECK(line_graph(g).graph.n() == (int)g.edge_count());
}

TEST_CASE("indicator product") {
    // single edge with indicator a-c-b: a path on 3 vertices
    Graph edge = generate(Family::Complete, 2);
    Graph path_acb(3, false);
    path_acb.add_edge(0, 1);
    path_acb.add_edge(1, 2);
    IndicatorProduct ip = indicator_product(edge, path_acb, 0, 2);
    CHECK(is_isomorphic(ip.graph, generate(Family::Path, 3)).isomorphic);

    CHECK_THROWS_AS(indicator_product(edge, path_acb, 1, 1), InvalidParameterError);

    // class count: n + m * (|V_I| - 2)
    Graph s3 = generate(Family::Sunlet, 3);
    IndicatorProduct counted = indicator_product(s3, path_acb, 0, 2);
    CHECK(counted.graph.n() == 6 + 6 * 1);

    // result independent of the per-edge orientation choice: relabel the
    // base so edge orientations flip, with a symmetric indicator
    Graph flipped(6, false);
    auto relabel = [](int v) { return 5 - v; };
    for (auto [u, v] : s3.edges()) flipped.add_edge(relabel(u), relabel(v));
    CHECK(is_isomorphic(indicator_product(flipped, path_acb, 0, 2).graph, counted.graph)
              .isomorphic);
}

TEST_CASE("neighborhoods") {
    Graph g(3, false);
    g.add_edge(1, 1);  // loop
    Neighborhoods iso = neighborhoods(g, 0);
    CHECK(iso.open.empty());
    CHECK(iso.closed == std::vector<int>{0});
    Neighborhoods loop = neighborhoods(g, 1);
    CHECK(loop.open == std::vector<int>{1});

    Graph p3 = generate(Family::Path, 3);
    CHECK(neighborhoods(p3, 1).open == std::vector<int>{0, 2});

    Graph dig(3, true);
    dig.add_edge(0, 1);
    dig.add_edge(2, 1);
    Neighborhoods mid = neighborhoods(dig, 1);
    CHECK(mid.in == std::vector<int>{0, 2});
    CHECK(mid.out.empty());
    CHECK(mid.open == std::vector<int>{0, 2});
}

TEST_CASE("components, distance, radius, diameter") {
    CHECK(diameter(generate(Family::Path, 4)) == 3);
    CHECK(radius(generate(Family::Path, 4)) == 2);

    // isolated vertex + loop + a connected part: three components
    Graph g(5, false);
    g.add_edge(1, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    CHECK(components(g).size() == 3);
    CHECK(!distance(g, 0, 2).has_value());
    CHECK(distance(g, 2, 4) == 2);
    CHECK(distance(g, 2, 2) == 0);
    CHECK(!diameter(g).has_value());

    Graph dc = generate(Family::Dicycle, 5);
    CHECK(distance(dc, 0, 4) == 1);  // underlying undirected graph
}

TEST_CASE("isomorphism") {
    Graph c6 = generate(Family::Cycle, 6);
    Graph shifted(6, false);
    for (auto [u, v] : c6.edges()) shifted.add_edge((u + 2) % 6, (v + 2) % 6);
    auto iso = is_isomorphic(c6, shifted);
    CHECK(iso.isomorphic);
    REQUIRE(iso.witness.has_value());
    for (auto [u, v] : c6.edges())
        CHECK(shifted.has_edge((*iso.witness)[u], (*iso.witness)[v]));

    CHECK(!is_isomorphic(generate(Family::Cycle, 3), generate(Family::Path, 3)).isomorphic);

    // relabeled random graphs, with witness verification (loops, directed)
    std::mt19937_64 rng(7002);
    for (int trial = 0; trial < 50; ++trial) {
        bool directed = trial % 2 == 1;
        Graph g = oracle::random_graph(rng, 8, directed, true);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(8, directed);
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v)
                if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
        auto result = is_isomorphic(g, h);
        REQUIRE(result.isomorphic);
        const auto& f = *result.witness;
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v)
                CHECK(g.has_edge(u, v) == h.has_edge(f[u], f[v]));
    }

    // equivalence-relation spot checks: reflexive, symmetric, transitive
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = oracle::random_graph(rng, 6, false, true);
        CHECK(is_isomorphic(a, a).isomorphic);
        std::vector<int> perm{3, 1, 4, 0, 5, 2};
        Graph b(6, false), c(6, false);
        for (int u = 0; u < 6; ++u)
            for (int v = 0; v < 6; ++v)
                if (a.has_edge(u, v)) {
                    b.add_edge(perm[u], perm[v]);
                    c.add_edge(perm[perm[u]], perm[perm[v]]);
                }
        CHECK(is_isomorphic(a, b).isomorphic == is_isomorphic(b, a).isomorphic);
        if (is_isomorphic(a, b).isomorphic && is_isomorphic(b, c).isomorphic)
            CHECK(is_isomorphic(a, c).isomorphic);
    }
}
