#pragma once

#include <string>
#include <vector>

#include "grel/graph.hpp"
#include "grel/hom.hpp"

namespace grel {

// Data-parallel kernels with serial reference implementations. The parallel
// versions split work across OpenMP threads and merge with order-independent
// reductions, so both variants of each kernel produce identical results; the
// test suite asserts this and bench/ compares their throughput.

void set_thread_count(int threads);  // 0 = library default
int thread_count();

// Canonical certificate: colour refinement signature, then the
// lexicographically minimal adjacency encoding over colour-respecting
// relabelings. Equal keys <=> isomorphic.
std::string canonical_key(const Graph& g);

struct UniverseSpec {
    bool directed = false;
    bool loops = false;
    int max_n = 4;
};

// All graphs with 1..max_n vertices up to isomorphism, one canonical
// representative each, sorted by (vertex count, canonical key).
std::vector<Graph> enumerate_canonical_serial(const UniverseSpec& spec);
std::vector<Graph> enumerate_canonical_parallel(const UniverseSpec& spec);

// Pairwise comparability grid: cell (i,j) answers images[i] -> images[j]
// under the constraint.
struct HomMatrix {
    int n = 0;
    std::vector<char> cells;  // Outcome per ordered pair
    Outcome at(int i, int j) const { return (Outcome)cells[i * n + j]; }
};
HomMatrix hom_matrix_serial(const std::vector<Graph>& images, HomConstraint c,
                            uint64_t node_budget = kDefaultNodeBudget);
HomMatrix hom_matrix_parallel(const std::vector<Graph>& images, HomConstraint c,
                              uint64_t node_budget = kDefaultNodeBudget);

// Scan of every relation r on g (g.n() <= 5): counts full-image solutions of
// g * r = g and reports whether all of them are automorphisms.
struct SelfRelationScan {
    unsigned long long solutions = 0;
    bool all_automorphic = true;
};
SelfRelationScan scan_self_relations_serial(const Graph& g);
SelfRelationScan scan_self_relations_parallel(const Graph& g);

}  // namespace grel
