#include "grel/enumerate.hpp"

#include <algorithm>

namespace grel {

Universe enumerate_universe(const UniverseSpec& spec) {
    Universe u;
    u.spec = spec;
    u.graphs = enumerate_canonical_parallel(spec);
    return u;
}

std::string Comparator::name() const {
    switch (kind) {
        case Kind::Hom: return std::string("hom:") + hom_constraint_name(constraint);
        case Kind::RelationFull: return "relation-full-domain";
        case Kind::RelationPartial: return "relation";
    }
    return "?";
}

Outcome comparator_check(const Comparator& cmp, const Graph& g, const Graph& h,
                         uint64_t node_budget) {
    switch (cmp.kind) {
        case Comparator::Kind::Hom:
            return find_hom(g, h, cmp.constraint, node_budget).outcome;
        case Comparator::Kind::RelationFull:
            return find_relation(g, h, true, node_budget).outcome;
        case Comparator::Kind::RelationPartial:
            return find_relation(g, h, false, node_budget).outcome;
    }
    return Outcome::None;
}

namespace {

std::vector<std::vector<char>> leq_matrix(const std::vector<Graph>& graphs,
                                          const Comparator& cmp, uint64_t budget) {
    int n = (int)graphs.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    int budget_hit = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) collapse(2) reduction(| : budget_hit)
#endif
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Outcome o = comparator_check(cmp, graphs[i], graphs[j], budget);
            if (o == Outcome::Budget) budget_hit |= 1;
            leq[i][j] = o == Outcome::Found;
        }
    if (budget_hit) throw BudgetError("comparability matrix: search budget exhausted");
    return leq;
}

}  // namespace

GapReport find_gaps(const Universe& u, const Comparator& cmp, uint64_t node_budget) {
    GapReport report;
    int n = (int)u.graphs.size();
    report.leq = leq_matrix(u.graphs, cmp, node_budget);
    auto strictly = [&](int a, int b) { return report.leq[a][b] && !report.leq[b][a]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!strictly(i, j)) continue;
            bool between = false;
            for (int z = 0; z < n && !between; ++z)
                if (z != i && z != j && strictly(i, z) && strictly(z, j)) between = true;
            if (!between) report.gaps.push_back({i, j});
        }
    return report;
}

namespace {

bool any_leq(const Comparator& cmp, const Graph& g, const std::vector<Graph>& targets,
             uint64_t budget) {
    for (const Graph& t : targets) {
        Outcome o = comparator_check(cmp, g, t, budget);
        if (o == Outcome::Budget) throw BudgetError("duality: search budget exhausted");
        if (o == Outcome::Found) return true;
    }
    return false;
}

// Minimal elements of a set of canonical representatives under cmp.
std::vector<Graph> minimal_elements(const std::vector<Graph>& set, const Comparator& cmp,
                                    uint64_t budget) {
    std::vector<Graph> out;
    for (size_t i = 0; i < set.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < set.size() && !dominated; ++j) {
            if (i == j) continue;
            Outcome down = comparator_check(cmp, set[j], set[i], budget);
            if (down != Outcome::Found) continue;
            Outcome up = comparator_check(cmp, set[i], set[j], budget);
            if (up != Outcome::Found) dominated = true;  // set[j] strictly below
        }
        if (!dominated) out.push_back(set[i]);
    }
    return out;
}

UniverseSpec spec_like(const std::vector<Graph>& d_set, int max_n) {
    UniverseSpec spec;
    spec.directed = !d_set.empty() && d_set.front().directed();
    spec.loops = false;
    for (const Graph& d : d_set)
        if (d.has_any_loop()) spec.loops = true;
    spec.max_n = max_n;
    return spec;
}

}  // namespace

std::vector<Graph> duality_for_embeddings(const std::vector<Graph>& d_set, bool mono,
                                          uint64_t node_budget) {
    if (d_set.empty()) throw InvalidParameterError("duality: empty d-set");
    int n = 0;
    for (const Graph& d : d_set) n = std::max(n, d.n());
    Comparator cmp =
        Comparator::hom(mono ? HomConstraint::Mono : HomConstraint::Embedding);
    Universe u = enumerate_universe(spec_like(d_set, n + 1));
    std::vector<Graph> avoiding;
    for (const Graph& g : u.graphs)
        if (!any_leq(cmp, g, d_set, node_budget)) avoiding.push_back(g);
    return minimal_elements(avoiding, cmp, node_budget);
}

std::vector<Graph> duality_for_full_homs(const std::vector<Graph>& d_set,
                                         uint64_t node_budget) {
    if (d_set.empty()) throw InvalidParameterError("duality: empty d-set");
    int n = 0;
    for (const Graph& d : d_set) {
        if (!is_point_determining(d))
            throw PreconditionError("full-hom duality: d-set members must be point-determining");
        n = std::max(n, d.n());
    }
    int bound = n + 1 + (n + 1) * n / 2;  // n+1 choose 2 extra repair vertices
    Comparator cmp = Comparator::hom(HomConstraint::Full);
    Universe u = enumerate_universe(spec_like(d_set, bound));
    std::vector<Graph> avoiding;
    for (const Graph& g : u.graphs) {
        if (!is_point_determining(g)) continue;  // F-cores only
        if (!any_leq(cmp, g, d_set, node_budget)) avoiding.push_back(g);
    }
    return minimal_elements(avoiding, cmp, node_budget);
}

DualityReport verify_duality(const DualityPair& pair, const Universe& u,
                             uint64_t node_budget) {
    DualityReport report;
    int n = (int)u.graphs.size();
    std::vector<char> bad(n, 0);
    int budget_hit = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(| : budget_hit)
#endif
    for (int i = 0; i < n; ++i) {
        bool above = false, below = false;
        for (const Graph& f : pair.f_side) {
            Outcome o = comparator_check(pair.comparator, f, u.graphs[i], node_budget);
            if (o == Outcome::Budget) budget_hit |= 1;
            if (o == Outcome::Found) {
                above = true;
                break;
            }
        }
        for (const Graph& d : pair.d_side) {
            Outcome o = comparator_check(pair.comparator, u.graphs[i], d, node_budget);
            if (o == Outcome::Budget) budget_hit |= 1;
            if (o == Outcome::Found) {
                below = true;
                break;
            }
        }
        if (above == below) bad[i] = 1;
    }
    if (budget_hit) throw BudgetError("verify_duality: search budget exhausted");
    report.checked = n;
    for (int i = 0; i < n; ++i)
        if (bad[i]) report.violations.push_back(i);
    return report;
}

Graph reduce_hom_to_fulrel(const Graph& g, const Graph& h) { return disjoint_union(g, h); }

Graph reduce_fulrel_to_surhom(const Graph& g, const Graph& h) {
    if (g.directed() != h.directed())
        throw InvalidParameterError("reduce: directedness mismatch");
    std::vector<int> mult(g.n(), std::max(1, h.n()));
    return vertex_multiplication(g, mult);
}

Graph pr_core_bruteforce(const Graph& g, const Universe& candidates, uint64_t node_budget) {
    for (const Graph& h : candidates.graphs) {
        if (h.n() > g.n()) break;  // candidates sorted by size
        if (find_relation(g, h, false, node_budget).outcome != Outcome::Found) continue;
        if (find_relation(h, g, false, node_budget).outcome != Outcome::Found) continue;
        return h;
    }
    return g;  // minimal representative is g itself
}

PrCoreReport pr_core_checks(int max_n, uint64_t node_budget) {
    PrCoreReport report;
    if (max_n > 4) throw BudgetError("pr_core_checks: universe capped at 4 vertices");
    UniverseSpec spec{false, true, max_n};
    Universe u = enumerate_universe(spec);

    std::vector<char> agree(u.graphs.size(), 1);
    long long count = (long long)u.graphs.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < count; ++i) {
        Graph pr = pr_core_bruteforce(u.graphs[i], u, node_budget);
        Graph co = cocore(u.graphs[i]);
        agree[i] = is_isomorphic(pr, co).isomorphic;
    }
    for (size_t i = 0; i < u.graphs.size(); ++i) {
        if (!agree[i]) {
            report.cocore_agreement = false;
            report.lines.push_back("pr-core mismatch at universe index " + std::to_string(i));
        }
    }
    report.lines.push_back(report.cocore_agreement ? "pr-core == cocore on all graphs <= " +
                                                         std::to_string(max_n) + " vertices"
                                                   : "pr-core mismatches found");

    report.simple_grid.assign(3, std::vector<bool>(3, false));
    report.loopy_grid.assign(3, std::vector<bool>(3, false));
    for (auto mode : {ComplementMode::Simple, ComplementMode::WithLoops})
        for (int n = 4; n <= 6; ++n)
            for (int m = 4; m <= 6; ++m) {
                Graph cn = complement(generate(Family::Cycle, n), mode);
                Graph cm = complement(generate(Family::Cycle, m), mode);
                Outcome o = find_relation(cn, cm, false, node_budget).outcome;
                if (o == Outcome::Budget)
                    throw BudgetError("pr_core_checks: relation search budget exhausted");
                bool exists = o == Outcome::Found;
                if (mode == ComplementMode::Simple)
                    report.simple_grid[n - 4][m - 4] = exists;
                else
                    report.loopy_grid[n - 4][m - 4] = exists;
                report.lines.push_back(std::string("relation co-C") + std::to_string(n) +
                                       " -> co-C" + std::to_string(m) +
                                       (mode == ComplementMode::Simple ? " (simple): "
                                                                       : " (loops): ") +
                                       (exists ? "yes" : "no"));
            }
    std::sort(report.lines.begin(), report.lines.end());
    return report;
}

}  // namespace grel
