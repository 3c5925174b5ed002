#pragma once

#include <string>
#include <vector>

#include "grel/cores.hpp"
#include "grel/parallel.hpp"

namespace grel {

// Canonical representatives of every graph in scope, one per isomorphism
// class, in a deterministic order.
struct Universe {
    UniverseSpec spec;
    std::vector<Graph> graphs;
};
Universe enumerate_universe(const UniverseSpec& spec);

// Order being probed: a homomorphism variant, or the existence of a relation
// (with or without the full-domain requirement).
struct Comparator {
    enum class Kind { Hom, RelationFull, RelationPartial };
    Kind kind = Kind::Hom;
    HomConstraint constraint = HomConstraint::Plain;

    static Comparator hom(HomConstraint c) { return {Kind::Hom, c}; }
    static Comparator relation(bool full_domain) {
        return {full_domain ? Kind::RelationFull : Kind::RelationPartial,
                HomConstraint::Plain};
    }
    std::string name() const;
};
Outcome comparator_check(const Comparator& cmp, const Graph& g, const Graph& h,
                         uint64_t node_budget = kDefaultNodeBudget);

// Universe-relative gaps: strictly comparable pairs with no universe element
// strictly between. Over-approximates true gaps of the full order; reports
// carry the universe-relative caveat.
struct GapReport {
    struct Gap {
        int lower, upper;  // universe indices
    };
    std::vector<Gap> gaps;
    std::vector<std::vector<char>> leq;  // comparability matrix used
};
GapReport find_gaps(const Universe& u, const Comparator& cmp,
                    uint64_t node_budget = kDefaultNodeBudget);

struct DualityPair {
    std::vector<Graph> f_side, d_side;
    Comparator comparator;
};

// Constructed F-sets: graphs up to the stated size bound avoiding every
// D-member, reduced to minimal elements of the comparator order.
std::vector<Graph> duality_for_embeddings(const std::vector<Graph>& d_set, bool mono,
                                          uint64_t node_budget = kDefaultNodeBudget);
std::vector<Graph> duality_for_full_homs(const std::vector<Graph>& d_set,
                                         uint64_t node_budget = kDefaultNodeBudget);

struct DualityReport {
    int checked = 0;
    std::vector<int> violations;  // universe indices failing the xor
    bool ok() const { return violations.empty(); }
};
DualityReport verify_duality(const DualityPair& pair, const Universe& u,
                             uint64_t node_budget = kDefaultNodeBudget);

// Instance transformations of the homomorphism / full-relation / surjective-
// homomorphism reduction chain.
Graph reduce_hom_to_fulrel(const Graph& g, const Graph& h);     // g ⊕ h
Graph reduce_fulrel_to_surhom(const Graph& g, const Graph& h);  // g ∘ (|V_h|,...)

// Brute-force PR-core: minimal universe representative connected to g by
// partial-domain relations both ways.
Graph pr_core_bruteforce(const Graph& g, const Universe& candidates,
                         uint64_t node_budget = kDefaultNodeBudget);

struct PrCoreReport {
    bool cocore_agreement = true;  // PR-core == cocore over the universe
    // Complement-of-cycle grids for n, m in 4..6: does a (partial-domain)
    // relation complement(C_n) -> complement(C_m) exist? Computed under both
    // complement conventions. With simple complements the grid is the exact
    // antichain; with loops everywhere, the target m = 4 is degenerate
    // (opposite C_4 vertices miss the same pair, so the complement is a pair
    // of reflexive edges reachable by deletion plus twin duplication) and
    // the cells (5,4) and (6,4) come out related as well.
    std::vector<std::vector<bool>> simple_grid, loopy_grid;
    std::vector<std::string> lines;  // deterministic, stable sort
};
PrCoreReport pr_core_checks(int max_n, uint64_t node_budget = kDefaultNodeBudget);

}  // namespace grel
