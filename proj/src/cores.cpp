#include "grel/cores.hpp"

#include <algorithm>
#include <bit>

namespace grel {

bool is_point_determining(const Graph& g) {
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y) {
            if (g.directed()) {
                if (g.in(x) == g.in(y) && g.out(x) == g.out(y)) return false;
            } else {
                if (g.neighbors(x) == g.neighbors(y)) return false;
            }
        }
    return true;
}

PdQuotient pd_quotient(const Graph& g) {
    // Group vertices by neighbourhood; classes ordered by smallest member.
    std::vector<int> class_of(g.n(), -1);
    PdQuotient q;
    for (int v = 0; v < g.n(); ++v) {
        if (class_of[v] >= 0) continue;
        int id = (int)q.classes.blocks.size();
        q.classes.blocks.push_back({});
        for (int w = v; w < g.n(); ++w) {
            if (class_of[w] >= 0) continue;
            bool same = g.directed() ? (g.in(v) == g.in(w) && g.out(v) == g.out(w))
                                     : (g.neighbors(v) == g.neighbors(w));
            if (same) {
                class_of[w] = id;
                q.classes.blocks[id].push_back(w);
            }
        }
    }
    q.quotient = quotient(g, q.classes);
    q.membership = Relation(g.n(), (int)q.classes.blocks.size());
    for (int v = 0; v < g.n(); ++v) q.membership.add(v, class_of[v]);
    return q;
}

bool strongly_equivalent(const Graph& g, const Graph& h) {
    return is_isomorphic(pd_quotient(g).quotient, pd_quotient(h).quotient).isomorphic;
}

namespace {

// Shared deletion loop of the R-core and cocore algorithms. Recomputes
// neighbourhoods in the current induced subgraph after every deletion and
// rescans in ascending vertex order until a fixpoint. Returns the surviving
// original vertex indices. require_dominator toggles the R-core's extra
// clause (some other vertex must dominate the deleted neighbourhood).
std::vector<int> deletion_fixpoint(const Graph& g, const std::vector<int>& start,
                                   bool require_dominator) {
    std::vector<int> alive = start;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < alive.size(); ++k) {
            int i = alive[k];
            Bitset mask(g.n());
            for (int v : alive) mask.set(v);
            Bitset ni = g.neighbors(i) & mask;
            Bitset covered(g.n());
            bool dominated = false;
            for (int j : alive) {
                if (j == i) continue;
                Bitset nj = g.neighbors(j) & mask;
                if (nj.is_subset_of(ni)) covered |= nj;
                if (ni.is_subset_of(nj)) dominated = true;
            }
            if (covered == ni && (dominated || !require_dominator) && alive.size() > 1) {
                alive.erase(alive.begin() + k);
                changed = true;
                break;
            }
        }
    }
    return alive;
}

struct Stripped {
    std::vector<int> kept;  // non-isolated vertices
    bool had_isolated;
};

Stripped strip_isolated(const Graph& g) {
    Stripped s{{}, false};
    for (int v = 0; v < g.n(); ++v) {
        if (g.is_isolated(v))
            s.had_isolated = true;
        else
            s.kept.push_back(v);
    }
    return s;
}

Graph reduce_by_deletion(const Graph& g, bool require_dominator) {
    if (g.directed()) throw UnsupportedInputError("core reduction: undirected graphs only");
    Stripped s = strip_isolated(g);
    std::vector<int> alive = deletion_fixpoint(g, s.kept, require_dominator);
    Graph core = induced_subgraph(g, alive);
    if (!s.had_isolated) return core;
    Graph with_isolated(core.n() + 1, false);
    for (auto [u, v] : core.edges()) with_isolated.add_edge(u, v);
    return with_isolated;
}

}  // namespace

Graph r_core(const Graph& g) { return reduce_by_deletion(g, true); }

bool weakly_equivalent(const Graph& g, const Graph& h) {
    return is_isomorphic(r_core(g), r_core(h)).isomorphic;
}

Graph cocore(const Graph& g) { return reduce_by_deletion(g, false); }

bool has_property_N(const Graph& g) {
    if (g.directed()) throw UnsupportedInputError("property N: undirected graphs only");
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y)
            if (x != y && g.neighbors(x).is_subset_of(g.neighbors(y))) return false;
    return true;
}

bool has_property_Nstar(const Graph& g) {
    if (g.directed()) throw UnsupportedInputError("property N*: undirected graphs only");
    for (int x = 0; x < g.n(); ++x) {
        Bitset nx = g.neighbors(x);
        Bitset covered(g.n());
        bool candidates = false;
        for (int y = 0; y < g.n(); ++y) {
            if (y == x) continue;
            Bitset ny = g.neighbors(y);
            if (ny.is_subset_of(nx)) {
                covered |= ny;
                candidates = true;
            }
        }
        if (candidates && covered == nx) return false;
    }
    return true;
}

std::vector<int> minimal_basis(const Graph& g) {
    if (g.directed()) throw UnsupportedInputError("minimal_basis: undirected graphs only");
    if (!is_point_determining(g))
        throw PreconditionError("minimal_basis: graph is not point-determining");
    Stripped s = strip_isolated(g);
    std::vector<int> alive = deletion_fixpoint(g, s.kept, false);
    if (s.had_isolated)
        for (int v = 0; v < g.n(); ++v)
            if (g.is_isolated(v)) {
                alive.push_back(v);  // at most one in a point-determining graph
                break;
            }
    std::sort(alive.begin(), alive.end());
    return alive;
}

Graph graph_core(const Graph& g, uint64_t node_budget) {
    if (g.n() == 0) return g;
    std::vector<int> subset;
    bool budget_hit = false;
    std::optional<Graph> found;
    for (int size = 1; size <= g.n() && !found; ++size) {
        subset.assign(size, 0);
        for (int i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            Graph candidate = induced_subgraph(g, subset);
            std::vector<int> fixed(g.n(), -1);
            for (int i = 0; i < size; ++i) fixed[subset[i]] = i;
            HomSearch s = find_hom_with_fixed(g, candidate, fixed, node_budget);
            if (s.outcome == Outcome::Found) {
                found = candidate;
                break;
            }
            if (s.outcome == Outcome::Budget) budget_hit = true;
            // next subset of this size, lexicographically
            int i = size - 1;
            while (i >= 0 && subset[i] == g.n() - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
        if (!found && budget_hit)
            throw BudgetError("graph_core: retraction search budget exhausted");
    }
    return *found;
}

namespace {

// g * r == g scan over all relations on packed n*n bit masks, n <= 5.
bool self_relations_oracle(const Graph& g) {
    int n = g.n();
    uint32_t adj[5] = {0, 0, 0, 0, 0};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) adj[u] |= 1u << v;
    uint64_t total = uint64_t(1) << (n * n);
    uint32_t full = (1u << n) - 1;
    for (uint64_t mask = 0; mask < total; ++mask) {
        uint32_t row[5];
        uint32_t covered = 0;
        for (int u = 0; u < n; ++u) {
            row[u] = (mask >> (u * n)) & full;
            covered |= row[u];
        }
        if (covered != full) continue;  // image must be full for g * r
        uint32_t out[5] = {0, 0, 0, 0, 0};
        for (int u = 0; u < n; ++u) {
            if (!row[u]) continue;
            uint32_t target_union = 0;
            for (int v = 0; v < n; ++v)
                if (adj[u] & (1u << v)) target_union |= row[v];
            if (!target_union) continue;
            for (int a = 0; a < n; ++a)
                if (row[u] & (1u << a)) out[a] |= target_union;
        }
        bool equal = true;
        for (int u = 0; u < n && equal; ++u) equal = (out[u] == adj[u]);
        if (!equal) continue;
        // solution: must be a permutation (functional, injective, total)
        uint32_t seen = 0;
        bool automorphic = true;
        for (int u = 0; u < n && automorphic; ++u) {
            if (std::popcount(row[u]) != 1 || (seen & row[u])) automorphic = false;
            seen |= row[u];
        }
        if (!automorphic) return false;
    }
    return true;
}

}  // namespace

SelfRelationVerdict all_self_relations_automorphic(const Graph& g, int oracle_max_n) {
    bool criterion = has_property_N(g);
    SelfRelationVerdict v{criterion, false};
    if (g.n() <= oracle_max_n && g.n() <= 5) {
        bool oracle = self_relations_oracle(g);
        if (oracle != criterion)
            throw Error("all_self_relations_automorphic: oracle disagrees with property N");
        v.oracle_checked = true;
    }
    return v;
}

namespace {

struct RelationSearch {
    const Graph& g;
    const Graph& h;
    bool full_domain;
    uint64_t budget, nodes = 0;
    std::vector<int> order;            // targets, descending degree
    std::vector<Bitset> preimage;      // per target, empty bitset = unassigned
    std::vector<char> assigned;
    std::optional<Relation> witness;

    RelationSearch(const Graph& g_, const Graph& h_, bool fd, uint64_t b)
        : g(g_), h(h_), full_domain(fd), budget(b) {
        order.resize(h.n());
        for (int i = 0; i < h.n(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b2) { return h.degree(a) > h.degree(b2); });
        preimage.assign(h.n(), Bitset(g.n()));
        assigned.assign(h.n(), 0);
    }

    bool cross_edge(const Bitset& pa, const Bitset& pb) const {
        for (int u = pa.next(); u >= 0; u = pa.next(u + 1))
            if (g.out(u).intersects(pb)) return true;
        return false;
    }

    bool consistent(int b) const {
        for (int a = 0; a < h.n(); ++a) {
            if (!assigned[a]) continue;
            if (h.has_edge(a, b) && !cross_edge(preimage[a], preimage[b])) return false;
            if (!h.has_edge(a, b) && cross_edge(preimage[a], preimage[b])) return false;
            if (a == b) continue;
            if (h.has_edge(b, a) && !cross_edge(preimage[b], preimage[a])) return false;
            if (!h.has_edge(b, a) && cross_edge(preimage[b], preimage[a])) return false;
        }
        return true;
    }

    enum class Step { Done, Fail, Budget };

    Step search(int idx) {
        if (idx == h.n()) {
            if (full_domain) {
                Bitset covered(g.n());
                for (int b = 0; b < h.n(); ++b) covered |= preimage[b];
                if (covered.count() != g.n()) return Step::Fail;
            }
            Relation r(g.n(), h.n());
            for (int b = 0; b < h.n(); ++b)
                for (int u = preimage[b].next(); u >= 0; u = preimage[b].next(u + 1))
                    r.add(u, b);
            witness = r;
            return Step::Done;
        }
        int b = order[idx];
        uint64_t limit = uint64_t(1) << g.n();
        for (uint64_t mask = 1; mask < limit; ++mask) {
            if (++nodes > budget) return Step::Budget;
            Bitset p(g.n());
            for (int u = 0; u < g.n(); ++u)
                if (mask & (uint64_t(1) << u)) p.set(u);
            preimage[b] = p;
            assigned[b] = 1;
            if (consistent(b)) {
                Step s = search(idx + 1);
                if (s != Step::Fail) return s;
            }
            assigned[b] = 0;
            preimage[b].clear();
        }
        return Step::Fail;
    }
};

}  // namespace

RelSearch find_relation(const Graph& g, const Graph& h, bool full_domain,
                        uint64_t node_budget) {
    if (g.directed() != h.directed())
        throw InvalidParameterError("find_relation: directedness mismatch");
    RelSearch out;
    if (g.n() > 62) throw InvalidParameterError("find_relation: source too large");
    if (h.n() == 0) {
        out.outcome = (!full_domain || g.n() == 0) ? Outcome::Found : Outcome::None;
        if (out.outcome == Outcome::Found) out.witness = Relation(g.n(), 0);
        return out;
    }
    if (g.n() == 0) {
        out.outcome = Outcome::None;  // image cannot be full
        return out;
    }
    RelationSearch search(g, h, full_domain, node_budget);
    auto step = search.search(0);
    out.nodes = search.nodes;
    switch (step) {
        case RelationSearch::Step::Done:
            out.outcome = Outcome::Found;
            out.witness = search.witness;
            break;
        case RelationSearch::Step::Fail: out.outcome = Outcome::None; break;
        case RelationSearch::Step::Budget: out.outcome = Outcome::Budget; break;
    }
    return out;
}

RelExtremes rel_extremes(const Graph& g, const Graph& h) {
    if (g.directed() != h.directed())
        throw InvalidParameterError("rel_extremes: directedness mismatch");
    int bits = g.n() * h.n();
    if (bits > 22) throw BudgetError("rel_extremes: relation space too large");
    std::vector<uint32_t> solutions;
    for (uint32_t mask = 0; mask < (uint32_t(1) << bits); ++mask) {
        Relation r(g.n(), h.n());
        for (int i = 0; i < bits; ++i)
            if (mask & (uint32_t(1) << i)) r.add(i / h.n(), i % h.n());
        if (!has_full_image(r)) continue;
        if (apply_strong_unchecked(g, r) == h) solutions.push_back(mask);
    }
    RelExtremes ex;
    for (uint32_t m : solutions) {
        bool minimal = true, maximal = true;
        for (uint32_t other : solutions) {
            if (other == m) continue;
            if ((other & m) == other) minimal = false;  // other ⊆ m
            if ((other & m) == m) maximal = false;      // m ⊆ other
        }
        auto build = [&](uint32_t mm) {
            Relation r(g.n(), h.n());
            for (int i = 0; i < bits; ++i)
                if (mm & (uint32_t(1) << i)) r.add(i / h.n(), i % h.n());
            return r;
        };
        if (minimal) ex.minimal.push_back(build(m));
        if (maximal) ex.maximal.push_back(build(m));
    }
    return ex;
}

}  // namespace grel
