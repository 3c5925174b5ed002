#pragma once

#include <set>
#include <vector>

#include "grel/graph.hpp"
#include "grel/hom.hpp"
#include "grel/poset.hpp"

namespace grel {

// E(x) = labels of the down-set of x; x <= y iff E(x) ⊆ E(y).
struct DownsetEmbedding {
    std::vector<std::set<int>> sets;  // indexed like the poset elements
};
DownsetEmbedding downset_embedding(const Poset& p);

// The strict pairs of leq split by the numeric label order: (a, b) with
// a <=_P b lands in forward when a < b and in backward when a > b.
struct SplitFB {
    std::vector<std::pair<int, int>> forward, backward;  // label pairs
};
SplitFB split_fb(const Poset& p);

// Backward-order up-set f(y) = {labels z : y <=_P z, z <= y}; the family
// U(x) = { f(y) : y <=_f x }. Dominance with inner ⊇ reproduces leq.
struct LayeredEmbedding {
    std::vector<std::vector<std::set<int>>> families;
};
LayeredEmbedding layered_embedding(const Poset& p);
bool dominated_by(const std::vector<std::set<int>>& a, const std::vector<std::set<int>>& b);

// Element x becomes the disjoint union of one directed cycle per set S in
// U(x), of length prod(S). Labels must be distinct odd primes.
std::vector<Graph> embed_into_dicycles(const Poset& p, long long max_vertices = 5000);

// Sunlet gadgets: H(n) is a left sunlet of length 2*p(n), a right sunlet of
// length 2^min(n, right_exponent_cap), and one bridge edge between the
// pendants at left position p(n) and right position 0. The element graph
// also carries one copy of every numerically smaller comparable element's
// graph, attached by an internal edge into the right sunlet.
struct SunletOptions {
    int right_exponent_cap = 6;
    long long max_left_cycle = 4000;
};
std::vector<Graph> embed_into_sunlet_gadgets(const Poset& p, SunletOptions opt = {});
// The bare two-sunlet gadget (no recursion), for direct pairwise checks.
Graph sunlet_gadget(const Poset& p, int element, SunletOptions opt = {});

// S_n * I_d(a, b) and its line graph.
Graph sunlet_indicator_graph(int n, int d);
LineGraph line_graph_interval_member(int n, int d);
// Disjoint union of L(G_{a,d}) over the set; realizes the divisibility-set
// order under plain homomorphisms.
Graph embed_into_line_graphs(const std::vector<int>& a_set, int d);
// Explicit witness for L(G_{n,d}) -> L(G_{n',d}) when n' divides n, induced
// by the cyclic wrap of the sunlets.
std::vector<int> cyclic_line_hom(int n, int nprime, int d);

// Divisibility-set order: A <= B iff every a in A has a divisor in B.
bool divisibility_set_leq(const std::vector<int>& a, const std::vector<int>& b);

struct EmbeddingReport {
    struct Cell {
        int i, j;
        bool expected;
        Outcome got;
    };
    int cells = 0;
    std::vector<Cell> mismatches;
    std::vector<Cell> budget_cells;
    bool ok() const { return mismatches.empty() && budget_cells.empty(); }
};
// Pairwise comparator check of a claimed embedding against leq.
EmbeddingReport verify_embedding(const std::vector<Graph>& images, const Poset& p,
                                 HomConstraint comparator,
                                 uint64_t node_budget = kDefaultNodeBudget);

}  // namespace grel
