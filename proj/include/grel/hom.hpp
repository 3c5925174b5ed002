#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grel/graph.hpp"

namespace grel {

// The homomorphism variants the search engine answers. Embedding = Mono ∧
// Full, Surjective = VS ∧ ES, LocallyBijective = LI ∧ LS; the checker
// enforces the conjunctions structurally.
enum class HomConstraint {
    Plain,
    Mono,
    Embedding,
    Full,
    VertexSurjective,
    EdgeSurjective,
    Surjective,
    LocallyInjective,
    LocallySurjective,
    LocallyBijective,
};

constexpr int kHomConstraintCount = 10;
const char* hom_constraint_name(HomConstraint c);
std::optional<HomConstraint> hom_constraint_from_name(const std::string& name);

enum class Outcome { Found, None, Budget };

struct HomSearch {
    Outcome outcome;
    std::optional<std::vector<int>> witness;
    uint64_t nodes = 0;
};

inline constexpr uint64_t kDefaultNodeBudget = 10'000'000;

// Pure verifier for a total mapping f : V_g -> V_h.
bool check_hom(const std::vector<int>& f, const Graph& g, const Graph& h, HomConstraint c);

// Backtracking search: min-remaining-candidates variable order, forward
// checking on edges (and non-edges for full variants), count pruning for the
// surjective variants, incremental sound rejection for the local ones.
// Budget exhaustion is reported distinctly from definitive absence.
HomSearch find_hom(const Graph& g, const Graph& h, HomConstraint c,
                   uint64_t node_budget = kDefaultNodeBudget);

// Plain-constraint search with some vertices pre-assigned (-1 = free).
// Used for retraction searches.
HomSearch find_hom_with_fixed(const Graph& g, const Graph& h, const std::vector<int>& fixed,
                              uint64_t node_budget = kDefaultNodeBudget);

int chromatic_number(const Graph& g, uint64_t node_budget = kDefaultNodeBudget);
int chromatic_index(const Graph& g, uint64_t node_budget = kDefaultNodeBudget);

// Degree refinement matrix: the coarsest equitable partition with blocks in
// a canonical order derived from the refinement history, so drm(g) == drm(h)
// is plain matrix equality.
struct Drm {
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> matrix;
    bool operator==(const Drm& o) const { return matrix == o.matrix; }
};
Drm drm(const Graph& g);

bool is_core(const Graph& g, uint64_t node_budget = kDefaultNodeBudget);

}  // namespace grel
