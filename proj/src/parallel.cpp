#include "grel/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grel {

void set_thread_count(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// --- canonical certificates -------------------------------------------------

namespace {

// Colour classes in a canonical order: refine by sorted neighbour-colour
// signatures, ordering classes by signature at every round. The class order
// is label-independent.
std::vector<std::vector<int>> canonical_classes(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n, 0);
    int color_count = 1;
    while (true) {
        std::vector<std::vector<long long>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<long long> outc, inc;
            for (int w = g.out(v).next(); w >= 0; w = g.out(v).next(w + 1))
                outc.push_back(color[w]);
            for (int w = g.in(v).next(); w >= 0; w = g.in(v).next(w + 1))
                inc.push_back(color[w]);
            std::sort(outc.begin(), outc.end());
            std::sort(inc.begin(), inc.end());
            sig[v] = {color[v], g.has_loop(v) ? 1LL : 0LL};
            sig[v].insert(sig[v].end(), outc.begin(), outc.end());
            sig[v].push_back(-1);
            sig[v].insert(sig[v].end(), inc.begin(), inc.end());
        }
        std::map<std::vector<long long>, int> order;
        for (int v = 0; v < n; ++v) order[sig[v]] = 0;
        int next = 0;
        for (auto& [k, idx] : order) idx = next++;
        std::vector<int> refreshed(n);
        for (int v = 0; v < n; ++v) refreshed[v] = order[sig[v]];
        if (next == color_count && refreshed == color) break;
        color = refreshed;
        color_count = next;
    }
    std::vector<std::vector<int>> classes(color_count);
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
    return classes;
}

// Backtracking over colour-respecting placements for the lexicographically
// minimal adjacency encoding. Position p contributes the bits (p,q) and
// (q,p) for q <= p, so prefixes are monotone under extension.
struct CanonRunner {
    const Graph& g;
    int n;
    const std::vector<int>& pos_class;
    const std::vector<int>& v_class;
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<uint8_t> best;
    bool have_best = false;

    CanonRunner(const Graph& g_, const std::vector<int>& pc, const std::vector<int>& vc)
        : g(g_), n(g_.n()), pos_class(pc), v_class(vc), perm(n, -1), used(n, 0) {}

    void go(int pos, std::vector<uint8_t>& enc, bool strictly_smaller) {
        if (pos == n) {
            if (!have_best || strictly_smaller) {
                best = enc;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || v_class[v] != pos_class[pos]) continue;
            size_t mark = enc.size();
            perm[pos] = v;
            for (int q = 0; q <= pos; ++q) {
                enc.push_back(g.has_edge(perm[pos], perm[q]) ? 1 : 0);
                enc.push_back(g.has_edge(perm[q], perm[pos]) ? 1 : 0);
            }
            bool smaller = strictly_smaller, prune = false;
            if (have_best && !smaller) {
                for (size_t i = mark; i < enc.size(); ++i) {
                    if (enc[i] < best[i]) {
                        smaller = true;
                        break;
                    }
                    if (enc[i] > best[i]) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) {
                used[v] = 1;
                go(pos + 1, enc, smaller);
                used[v] = 0;
            }
            enc.resize(mark);
        }
    }
};

}  // namespace

std::string canonical_key(const Graph& g) {
    int n = g.n();
    auto classes = canonical_classes(g);

    std::vector<int> class_of_position;
    for (size_t c = 0; c < classes.size(); ++c)
        for (size_t k = 0; k < classes[c].size(); ++k) class_of_position.push_back((int)c);
    std::vector<int> class_of_vertex(n);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) class_of_vertex[v] = (int)c;

    CanonRunner runner(g, class_of_position, class_of_vertex);
    std::vector<uint8_t> enc;
    runner.go(0, enc, false);

    std::string key;
    key.push_back((char)('0' + (g.directed() ? 1 : 0)));
    key.push_back((char)('A' + n));
    for (const auto& c : classes) key.push_back((char)('a' + (int)c.size()));
    key.push_back('|');
    uint8_t acc = 0;
    int have = 0;
    for (uint8_t bit : runner.best) {
        acc = (uint8_t)((acc << 1) | bit);
        if (++have == 8) {
            key.push_back((char)acc);
            acc = 0;
            have = 0;
        }
    }
    if (have) key.push_back((char)(acc << (8 - have)));
    return key;
}

// --- universe enumeration ---------------------------------------------------

namespace {

std::vector<std::pair<int, int>> edge_positions(int n, bool directed, bool loops) {
    std::vector<std::pair<int, int>> pos;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!directed && v < u) continue;
            if (u == v && !loops) continue;
            if (directed || u <= v) pos.push_back({u, v});
        }
    return pos;
}

Graph graph_from_mask(int n, bool directed, const std::vector<std::pair<int, int>>& pos,
                      uint64_t mask) {
    Graph g(n, directed);
    for (size_t i = 0; i < pos.size(); ++i)
        if (mask & (uint64_t(1) << i)) g.add_edge(pos[i].first, pos[i].second);
    return g;
}

void check_spec(const UniverseSpec& spec) {
    int cap = spec.directed ? 5 : 6;
    if (spec.max_n < 1 || spec.max_n > cap)
        throw BudgetError("enumerate: max vertex count " + std::to_string(spec.max_n) +
                          " outside 1.." + std::to_string(cap));
}

}  // namespace

std::vector<Graph> enumerate_canonical_serial(const UniverseSpec& spec) {
    check_spec(spec);
    std::vector<Graph> result;
    for (int n = 1; n <= spec.max_n; ++n) {
        auto pos = edge_positions(n, spec.directed, spec.loops);
        std::map<std::string, Graph> reps;
        for (uint64_t mask = 0; mask < (uint64_t(1) << pos.size()); ++mask) {
            Graph g = graph_from_mask(n, spec.directed, pos, mask);
            std::string key = canonical_key(g);
            reps.emplace(std::move(key), std::move(g));
        }
        for (auto& [key, g] : reps) result.push_back(g);
    }
    return result;
}

std::vector<Graph> enumerate_canonical_parallel(const UniverseSpec& spec) {
    check_spec(spec);
    std::vector<Graph> result;
    for (int n = 1; n <= spec.max_n; ++n) {
        auto pos = edge_positions(n, spec.directed, spec.loops);
        uint64_t total = uint64_t(1) << pos.size();
        std::map<std::string, Graph> reps;
#ifdef _OPENMP
#pragma omp parallel
        {
            std::map<std::string, Graph> local;
#pragma omp for schedule(dynamic, 1024)
            for (long long mask = 0; mask < (long long)total; ++mask) {
                Graph g = graph_from_mask(n, spec.directed, pos, (uint64_t)mask);
                local.emplace(canonical_key(g), std::move(g));
            }
#pragma omp critical
            for (auto& [key, g] : local) reps.emplace(key, std::move(g));
        }
#else
        for (uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, spec.directed, pos, mask);
            reps.emplace(canonical_key(g), std::move(g));
        }
#endif
        for (auto& [key, g] : reps) result.push_back(g);
    }
    return result;
}

// --- pairwise hom matrix ----------------------------------------------------

HomMatrix hom_matrix_serial(const std::vector<Graph>& images, HomConstraint c,
                            uint64_t node_budget) {
    HomMatrix m;
    m.n = (int)images.size();
    m.cells.assign((size_t)m.n * m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            m.cells[(size_t)i * m.n + j] =
                (char)find_hom(images[i], images[j], c, node_budget).outcome;
    return m;
}

HomMatrix hom_matrix_parallel(const std::vector<Graph>& images, HomConstraint c,
                              uint64_t node_budget) {
    HomMatrix m;
    m.n = (int)images.size();
    m.cells.assign((size_t)m.n * m.n, 0);
    long long cells = (long long)m.n * m.n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long cell = 0; cell < cells; ++cell) {
        int i = (int)(cell / m.n), j = (int)(cell % m.n);
        m.cells[cell] = (char)find_hom(images[i], images[j], c, node_budget).outcome;
    }
    return m;
}

// --- self-relation scan -----------------------------------------------------

namespace {

inline bool relation_mask_verdict(const uint32_t* adj, int n, uint64_t mask, uint32_t full,
                                  bool* is_solution) {
    uint32_t row[5];
    uint32_t covered = 0;
    for (int u = 0; u < n; ++u) {
        row[u] = (uint32_t)(mask >> (u * n)) & full;
        covered |= row[u];
    }
    *is_solution = false;
    if (covered != full) return true;
    uint32_t out[5] = {0, 0, 0, 0, 0};
    for (int u = 0; u < n; ++u) {
        if (!row[u]) continue;
        uint32_t targets = 0;
        for (int v = 0; v < n; ++v)
            if (adj[u] & (1u << v)) targets |= row[v];
        if (!targets) continue;
        for (int a = 0; a < n; ++a)
            if (row[u] & (1u << a)) out[a] |= targets;
    }
    for (int u = 0; u < n; ++u)
        if (out[u] != adj[u]) return true;
    *is_solution = true;
    uint32_t seen = 0;
    for (int u = 0; u < n; ++u) {
        if (std::popcount(row[u]) != 1 || (seen & row[u])) return false;
        seen |= row[u];
    }
    return true;
}

}  // namespace

SelfRelationScan scan_self_relations_serial(const Graph& g) {
    if (g.n() > 5) throw BudgetError("self-relation scan limited to 5 vertices");
    int n = g.n();
    uint32_t adj[5] = {0, 0, 0, 0, 0};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) adj[u] |= 1u << v;
    uint32_t full = (1u << n) - 1;
    SelfRelationScan scan;
    for (uint64_t mask = 0; mask < (uint64_t(1) << (n * n)); ++mask) {
        bool solution;
        bool automorphic = relation_mask_verdict(adj, n, mask, full, &solution);
        if (solution) ++scan.solutions;
        if (!automorphic) scan.all_automorphic = false;
    }
    return scan;
}

SelfRelationScan scan_self_relations_parallel(const Graph& g) {
    if (g.n() > 5) throw BudgetError("self-relation scan limited to 5 vertices");
    int n = g.n();
    uint32_t adj[5] = {0, 0, 0, 0, 0};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) adj[u] |= 1u << v;
    uint32_t full = (1u << n) - 1;
    unsigned long long solutions = 0;
    int bad = 0;
    long long total = 1LL << (n * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : solutions) reduction(| : bad)
#endif
    for (long long mask = 0; mask < total; ++mask) {
        bool solution;
        bool automorphic = relation_mask_verdict(adj, n, (uint64_t)mask, full, &solution);
        if (solution) ++solutions;
        if (!automorphic) bad |= 1;
    }
    SelfRelationScan scan;
    scan.solutions = solutions;
    scan.all_automorphic = !bad;
    return scan;
}

}  // namespace grel
