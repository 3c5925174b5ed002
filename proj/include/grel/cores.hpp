#pragma once

#include <optional>
#include <vector>

#include "grel/hom.hpp"
#include "grel/relation.hpp"

namespace grel {

// No two vertices share a neighbourhood (open for undirected graphs, the
// (in, out) pair for directed ones).
bool is_point_determining(const Graph& g);

// Thinness quotient: classes of the thinness relation, the quotient graph
// G_pd, and the membership relation R_S. apply_strong(quotient,
// transpose(membership)) reconstructs g.
struct PdQuotient {
    Graph quotient;
    Partition classes;    // ordered by smallest member
    Relation membership;  // V_g x classes
};
PdQuotient pd_quotient(const Graph& g);

bool strongly_equivalent(const Graph& g, const Graph& h);

// Minimum-vertex representative of the weak relational equivalence class,
// by the iterated neighbourhood-deletion rule. Undirected, loops allowed.
Graph r_core(const Graph& g);
bool weakly_equivalent(const Graph& g, const Graph& h);

// Minimal induced subgraph admitting an identity-containing relation onto
// the whole graph, by the same deletion rule without the containment clause.
Graph cocore(const Graph& g);

// N:  N(x) ⊆ N(y) forces x = y.
// N*: no N(x) is the union of the neighbourhoods of a non-empty set of
//     other vertices.
bool has_property_N(const Graph& g);
bool has_property_Nstar(const Graph& g);

// Unique minimal vertex set whose neighbourhoods generate every
// neighbourhood by union. Precondition: g point-determining.
std::vector<int> minimal_basis(const Graph& g);

// Smallest retract, found by a size-ascending retraction search.
Graph graph_core(const Graph& g, uint64_t node_budget = kDefaultNodeBudget);

// Criterion: property N. Oracle (exhaustive scan of all full-image solutions
// of g*r = g): run when g.n() <= oracle_max_n; the two verdicts are asserted
// to agree.
struct SelfRelationVerdict {
    bool automorphic;
    bool oracle_checked;
};
SelfRelationVerdict all_self_relations_automorphic(const Graph& g, int oracle_max_n = 4);

struct RelSearch {
    Outcome outcome;
    std::optional<Relation> witness;
    uint64_t nodes = 0;
};

// Backtracking over the preimage sets of target vertices (descending target
// degree) for a relation with apply_strong(g, r) == h.
RelSearch find_relation(const Graph& g, const Graph& h, bool full_domain,
                        uint64_t node_budget = kDefaultNodeBudget);

// Inclusion-minimal and -maximal members of Rel(g, h), by exhaustive scan.
// Guarded: g.n() * h.n() must stay below the mask width.
struct RelExtremes {
    std::vector<Relation> minimal, maximal;
};
RelExtremes rel_extremes(const Graph& g, const Graph& h);

}  // namespace grel
