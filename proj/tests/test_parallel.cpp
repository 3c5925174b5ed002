#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grel/embed.hpp"
#include "grel/parallel.hpp"
#include "oracles.hpp"

using namespace grel;

TEST_CASE("parallel enumeration equals the serial reference") {
    for (UniverseSpec spec : {UniverseSpec{false, false, 4}, UniverseSpec{false, true, 4},
                              UniverseSpec{true, true, 3}}) {
        auto serial = enumerate_canonical_serial(spec);
        auto parallel = enumerate_canonical_parallel(spec);
        CHECK(serial == parallel);
        // and once more: determinism across repeated parallel runs
        CHECK(parallel == enumerate_canonical_parallel(spec));
    }
}

TEST_CASE("parallel hom matrix equals the serial reference") {
    Poset p = Poset::from_pairs({3, 5, 7, 11}, {{7, 3}, {7, 5}, {11, 5}, {3, 5}, {7, 11}});
    auto images = embed_into_dicycles(p);
    for (auto c : {HomConstraint::Plain, HomConstraint::Mono}) {
        HomMatrix serial = hom_matrix_serial(images, c);
        HomMatrix parallel = hom_matrix_parallel(images, c);
        CHECK(serial.cells == parallel.cells);
    }

    auto universe = enumerate_canonical_serial({false, false, 4});
    HomMatrix serial = hom_matrix_serial(universe, HomConstraint::Full);
    HomMatrix parallel = hom_matrix_parallel(universe, HomConstraint::Full);
    CHECK(serial.cells == parallel.cells);
}

TEST_CASE("parallel self-relation scan equals the serial reference") {
    std::mt19937_64 rng(8501);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracle::random_graph(rng, 4, false, true);
        auto serial = scan_self_relations_serial(g);
        auto parallel = scan_self_relations_parallel(g);
        CHECK(serial.solutions == parallel.solutions);
        CHECK(serial.all_automorphic == parallel.all_automorphic);
        CHECK(serial.all_automorphic == has_property_N(g));
    }

    // one 5-vertex case through the parallel path
    Graph c5 = generate(Family::Cycle, 5);
    auto scan = scan_self_relations_parallel(c5);
    CHECK(scan.all_automorphic == has_property_N(c5));
    CHECK(scan.solutions == 10);  // the dihedral automorphisms

    CHECK_THROWS_AS(scan_self_relations_serial(generate(Family::Cycle, 6)), BudgetError);
}
