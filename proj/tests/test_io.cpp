#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "grel/io.hpp"
#include "oracles.hpp"

using namespace grel;

TEST_CASE("graph format round trip") {
    std::mt19937_64 rng(8601);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + (int)(rng() % 8), trial % 2 == 1, true);
        CHECK(graph_from_string(to_string(g)) == g);
    }

    Graph parsed = graph_from_string("# fixture\ngraph 3\n0 1\n1 2 # tail comment\n\n");
    CHECK(parsed == generate(Family::Path, 3));

    Graph loops = graph_from_string("graph 1\n0 0\n");
    CHECK(loops.has_loop(0));

    Graph dig = graph_from_string("digraph 2\n0 1\n");
    CHECK(dig.has_edge(0, 1));
    CHECK(!dig.has_edge(1, 0));
}

TEST_CASE("graph format diagnostics carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            graph_from_string(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("graph x\n") == 1);
    CHECK(line_of("graph 3\n0 1\n1 9\n") == 3);
    CHECK(line_of("graph 3\n0 1\n1 2 3\n") == 3);
    CHECK(line_of("triangle 3\n") == 1);
    CHECK(line_of("graph 3\n0 q\n") == 2);
}

TEST_CASE("relation format") {
    std::ostringstream out;
    Relation r = Relation::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}});
    write_relation(out, r);
    std::istringstream in(out.str());
    CHECK(read_relation(in) == r);

    std::istringstream bad("relation 2 2\n0 5\n");
    CHECK_THROWS_AS(read_relation(bad), ParseError);
}

TEST_CASE("poset format") {
    std::istringstream in("poset 4\n3 5 7 11\n7 3\n7 5\n11 5\n3 5\n7 11\n");
    Poset p = read_poset(in);
    CHECK(p.leq_labels(7, 5));
    CHECK(p.leq_labels(7, 11));
    CHECK(!p.leq_labels(3, 11));

    std::ostringstream out;
    write_poset(out, p);
    std::istringstream back(out.str());
    Poset again = read_poset(back);
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) CHECK(p.leq(i, j) == again.leq(i, j));

    std::istringstream cyclic("poset 2\n1 2\n1 2\n2 1\n");
    CHECK_THROWS_AS(read_poset(cyclic), ParseError);
}
