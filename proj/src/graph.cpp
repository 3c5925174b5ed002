#include "grel/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace grel {

Graph::Graph(int n, bool directed) : directed_(directed), n_(n) {
    if (n < 0) throw InvalidParameterError("negative vertex count");
    out_.assign(n, Bitset(n));
    in_.assign(n, Bitset(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidParameterError("vertex " + std::to_string(v) + " out of range 0.." +
                                    std::to_string(n_ - 1));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    out_[u].set(v);
    in_[v].set(u);
    if (!directed_) {
        out_[v].set(u);
        in_[u].set(v);
    }
}

bool Graph::has_any_loop() const {
    for (int v = 0; v < n_; ++v)
        if (has_loop(v)) return true;
    return false;
}

Bitset Graph::closed_neighbors(int v) const {
    Bitset b = neighbors(v);
    b.set(v);
    return b;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].next(); v >= 0; v = out_[u].next(v + 1))
            if (directed_ || u <= v) e.push_back({u, v});
    return e;
}

Graph Graph::underlying_undirected() const {
    if (!directed_) return *this;
    Graph g(n_, false);
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].next(); v >= 0; v = out_[u].next(v + 1)) g.add_edge(u, v);
    return g;
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "dipath") return Family::Dipath;
    if (name == "cycle") return Family::Cycle;
    if (name == "dicycle") return Family::Dicycle;
    if (name == "complete") return Family::Complete;
    if (name == "sunlet") return Family::Sunlet;
    if (name == "dragon") return Family::Dragon;
    if (name == "single_loop") return Family::SingleLoop;
    return std::nullopt;
}

Graph generate(Family family, int k) {
    auto require = [&](int min) {
        if (k < min)
            throw InvalidParameterError("family parameter " + std::to_string(k) +
                                        " below minimum " + std::to_string(min));
    };
    switch (family) {
        case Family::Path: {
            require(1);
            Graph g(k, false);
            for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::Dipath: {
            require(1);
            Graph g(k, true);
            for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::Cycle: {
            require(3);
            Graph g(k, false);
            for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
            return g;
        }
        case Family::Dicycle: {
            require(3);
            Graph g(k, true);
            for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
            return g;
        }
        case Family::Complete: {
            require(1);
            Graph g(k, false);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
            return g;
        }
        case Family::Sunlet: {
            require(3);
            Graph g(2 * k, false);
            for (int i = 0; i < k; ++i) {
                g.add_edge(i, (i + 1) % k);
                g.add_edge(i, k + i);
            }
            return g;
        }
        case Family::Dragon: {
            require(3);
            Graph g(k + 2, false);
            for (int i = 0; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    if (!(i == 0 && j == k)) g.add_edge(i, j);
            g.add_edge(0, k + 1);
            g.add_edge(k, k + 1);
            return g;
        }
        case Family::SingleLoop: {
            if (k != 1) throw InvalidParameterError("single_loop takes k = 1");
            Graph g(1, false);
            g.add_edge(0, 0);
            return g;
        }
    }
    throw InvalidParameterError("unknown family");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.directed() != h.directed())
        throw InvalidParameterError("disjoint_union: directedness mismatch");
    Graph r(g.n() + h.n(), g.directed());
    for (auto [u, v] : g.edges()) r.add_edge(u, v);
    for (auto [u, v] : h.edges()) r.add_edge(g.n() + u, g.n() + v);
    return r;
}

Graph complement(const Graph& g, ComplementMode mode) {
    Graph r(g.n(), g.directed());
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v && mode == ComplementMode::Simple) {
                if (g.has_edge(u, v)) r.add_edge(u, v);  // diagonal untouched
                continue;
            }
            if (!g.has_edge(u, v)) r.add_edge(u, v);
        }
    return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) g.check_vertex(v);
    std::vector<int> index(g.n(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = (int)i;
    Graph r((int)sorted.size(), g.directed());
    for (int u : sorted)
        for (int v = g.out(u).next(); v >= 0; v = g.out(u).next(v + 1))
            if (index[v] >= 0) r.add_edge(index[u], index[v]);
    return r;
}

Graph induced_subgraph(const Graph& g, const Bitset& s) {
    return induced_subgraph(g, s.to_vector());
}

Graph delete_closed_neighborhoods(const Graph& g, const std::vector<int>& s) {
    Bitset removed(g.n());
    for (int x : s) {
        g.check_vertex(x);
        removed |= g.closed_neighbors(x);
        removed.set(x);
    }
    return induced_subgraph(g, removed.complement());
}

void check_partition(const Partition& p, int n) {
    std::vector<char> seen(n, 0);
    for (const auto& block : p.blocks) {
        if (block.empty()) throw InvalidParameterError("partition has an empty block");
        for (int v : block) {
            if (v < 0 || v >= n) throw InvalidParameterError("partition vertex out of range");
            if (seen[v]) throw InvalidParameterError("partition blocks are not disjoint");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw InvalidParameterError("partition misses vertex " + std::to_string(v));
}

Partition singleton_partition(int n) {
    Partition p;
    for (int v = 0; v < n; ++v) p.blocks.push_back({v});
    return p;
}

Graph quotient(const Graph& g, const Partition& p) {
    check_partition(p, g.n());
    std::vector<int> block_of(g.n());
    for (size_t i = 0; i < p.blocks.size(); ++i)
        for (int v : p.blocks[i]) block_of[v] = (int)i;
    Graph r((int)p.blocks.size(), g.directed());
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.out(u).next(); v >= 0; v = g.out(u).next(v + 1))
            r.add_edge(block_of[u], block_of[v]);
    return r;
}

Graph duplicate_vertex(const Graph& g, int x) {
    g.check_vertex(x);
    Graph r(g.n() + 1, g.directed());
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.out(u).next(); v >= 0; v = g.out(u).next(v + 1)) r.add_edge(u, v);
    int copy = g.n();
    for (int v = g.out(x).next(); v >= 0; v = g.out(x).next(v + 1)) {
        if (v == x) {  // a loop duplicates into a looped, adjacent twin
            r.add_edge(copy, copy);
            r.add_edge(copy, x);
            r.add_edge(x, copy);
        } else {
            r.add_edge(copy, v);
        }
    }
    if (g.directed())
        for (int u = g.in(x).next(); u >= 0; u = g.in(x).next(u + 1))
            if (u != x) r.add_edge(u, copy);
    return r;
}

Graph vertex_multiplication(const Graph& g, const std::vector<int>& h) {
    if ((int)h.size() != g.n())
        throw InvalidParameterError("multiplicity vector length mismatch");
    for (int m : h)
        if (m < 1) throw InvalidParameterError("multiplicities must be positive");
    std::vector<int> base(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) base[v + 1] = base[v] + h[v];
    Graph r(base[g.n()], g.directed());
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int i = 0; i < h[u]; ++i)
                for (int j = 0; j < h[v]; ++j) r.add_edge(base[u] + i, base[v] + j);
        }
    return r;
}

LineGraph line_graph(const Graph& g) {
    if (g.directed()) throw UnsupportedInputError("line_graph: directed input");
    if (g.has_any_loop()) throw UnsupportedInputError("line_graph: input has loops");
    LineGraph lg;
    lg.legend = g.edges();  // already sorted lexicographically
    lg.graph = Graph((int)lg.legend.size(), false);
    for (size_t i = 0; i < lg.legend.size(); ++i)
        for (size_t j = i + 1; j < lg.legend.size(); ++j) {
            auto [a, b] = lg.legend[i];
            auto [c, d] = lg.legend[j];
            if (a == c || a == d || b == c || b == d) lg.graph.add_edge((int)i, (int)j);
        }
    return lg;
}

IndicatorProduct indicator_product(const Graph& g, const Graph& ind, int a, int b) {
    if (g.directed() || g.has_any_loop())
        throw UnsupportedInputError("indicator_product: base graph must be simple");
    ind.check_vertex(a);
    ind.check_vertex(b);
    if (a == b) throw InvalidParameterError("indicator_product: a == b");

    IndicatorProduct ip;
    ip.g_edges = g.edges();
    int m = (int)ip.g_edges.size();

    // Classes: one per original vertex (0..g.n()-1), then one per
    // (edge, interior indicator vertex).
    std::vector<int> interior;  // indicator vertices other than a, b
    std::vector<int> interior_index(ind.n(), -1);
    for (int w = 0; w < ind.n(); ++w)
        if (w != a && w != b) {
            interior_index[w] = (int)interior.size();
            interior.push_back(w);
        }
    int per_edge = (int)interior.size();
    int total = g.n() + m * per_edge;

    ip.graph = Graph(total, false);
    ip.legend.resize(total);
    for (int v = 0; v < g.n(); ++v) ip.legend[v] = {true, v, -1, -1};

    auto node_of = [&](int edge, int w) -> int {
        // Edge (x,y) oriented lower->higher: x plays a, y plays b.
        if (w == a) return ip.g_edges[edge].first;
        if (w == b) return ip.g_edges[edge].second;
        return g.n() + edge * per_edge + interior_index[w];
    };

    for (int e = 0; e < m; ++e) {
        for (int w : interior) {
            int node = node_of(e, w);
            ip.legend[node] = {false, -1, e, w};
        }
        for (auto [x, y] : ind.edges()) ip.graph.add_edge(node_of(e, x), node_of(e, y));
    }
    return ip;
}

Neighborhoods neighborhoods(const Graph& g, int x) {
    g.check_vertex(x);
    Neighborhoods nb;
    nb.open = g.neighbors(x).to_vector();
    nb.closed = g.closed_neighbors(x).to_vector();
    nb.in = g.in(x).to_vector();
    nb.out = g.out(x).to_vector();
    return nb;
}

std::vector<std::vector<int>> components(const Graph& g) {
    Graph u = g.underlying_undirected();
    std::vector<int> comp(u.n(), -1);
    std::vector<std::vector<int>> result;
    for (int s = 0; s < u.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)result.size();
        result.push_back({});
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            result[id].push_back(v);
            for (int w = u.out(v).next(); w >= 0; w = u.out(v).next(w + 1))
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(result[id].begin(), result[id].end());
    }
    return result;
}

static std::vector<int> bfs_dist(const Graph& u, int s) {
    std::vector<int> dist(u.n(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w = u.out(v).next(); w >= 0; w = u.out(v).next(w + 1))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    int d = bfs_dist(g.underlying_undirected(), u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

static std::optional<std::pair<int, int>> eccentricity_range(const Graph& g) {
    // (min, max) eccentricity over all vertices; nullopt when disconnected.
    Graph u = g.underlying_undirected();
    if (u.n() == 0) return std::nullopt;
    int lo = -1, hi = -1;
    for (int v = 0; v < u.n(); ++v) {
        auto dist = bfs_dist(u, v);
        int ecc = 0;
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            ecc = std::max(ecc, d);
        }
        if (lo < 0 || ecc < lo) lo = ecc;
        hi = std::max(hi, ecc);
    }
    return std::make_pair(lo, hi);
}

std::optional<int> radius(const Graph& g) {
    auto r = eccentricity_range(g);
    if (!r) return std::nullopt;
    return r->first;
}

std::optional<int> diameter(const Graph& g) {
    auto r = eccentricity_range(g);
    if (!r) return std::nullopt;
    return r->second;
}

// --- isomorphism ----------------------------------------------------------

namespace {

// Colour refinement. Colours are indices into a canonical ordering shared by
// both graphs: vertices refine by (colour, sorted multiset of neighbour
// colours per direction, loop flag).
std::vector<int> refine_colors(const Graph& g) {
    std::vector<long long> color(g.n());
    for (int v = 0; v < g.n(); ++v)
        color[v] = ((long long)g.out(v).count() * (g.n() + 1) + g.in(v).count()) * 2 +
                   g.has_loop(v);
    while (true) {
        std::vector<std::vector<long long>> sig(g.n());
        for (int v = 0; v < g.n(); ++v) {
            std::vector<long long> outc, inc;
            for (int w = g.out(v).next(); w >= 0; w = g.out(v).next(w + 1))
                outc.push_back(color[w]);
            for (int w = g.in(v).next(); w >= 0; w = g.in(v).next(w + 1))
                inc.push_back(color[w]);
            std::sort(outc.begin(), outc.end());
            std::sort(inc.begin(), inc.end());
            sig[v].push_back(color[v]);
            sig[v].push_back(g.has_loop(v));
            sig[v].insert(sig[v].end(), outc.begin(), outc.end());
            sig[v].push_back(-1);
            sig[v].insert(sig[v].end(), inc.begin(), inc.end());
        }
        std::map<std::vector<long long>, int> order;
        for (int v = 0; v < g.n(); ++v) order[sig[v]] = 0;
        int next = 0;
        for (auto& [k, idx] : order) idx = next++;
        std::vector<long long> refreshed(g.n());
        for (int v = 0; v < g.n(); ++v) refreshed[v] = order[sig[v]];
        if (refreshed == color) break;
        color = refreshed;
    }
    return std::vector<int>(color.begin(), color.end());
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> map;      // g -> h, -1 unassigned
    std::vector<char> used;    // h side
    uint64_t nodes = 0, budget;

    IsoSearch(const Graph& g_, const Graph& h_, uint64_t b) : g(g_), h(h_), budget(b) {
        map.assign(g.n(), -1);
        used.assign(h.n(), 0);
    }

    bool compatible(int v, int w) const {
        if (g.has_loop(v) != h.has_loop(w)) return false;
        for (int u = 0; u < g.n(); ++u) {
            if (map[u] < 0) continue;
            if (g.has_edge(v, u) != h.has_edge(w, map[u])) return false;
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) return false;
        }
        return true;
    }

    bool extend(int v, const std::vector<int>& gc, const std::vector<int>& hc) {
        if (v == g.n()) return true;
        for (int w = 0; w < h.n(); ++w) {
            if (used[w] || gc[v] != hc[w]) continue;
            if (++nodes > budget) throw BudgetError("isomorphism search budget exhausted");
            if (!compatible(v, w)) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(v + 1, gc, hc)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const Graph& g, const Graph& h, uint64_t node_budget) {
    if (g.n() != h.n() || g.directed() != h.directed()) return {false, std::nullopt};
    auto gc = refine_colors(g);
    auto hc = refine_colors(h);
    std::vector<int> gs = gc, hs = hc;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return {false, std::nullopt};
    IsoSearch search(g, h, node_budget);
    if (search.extend(0, gc, hc)) return {true, search.map};
    return {false, std::nullopt};
}

}  // namespace grel
