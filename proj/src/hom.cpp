#include "grel/hom.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace grel {

const char* hom_constraint_name(HomConstraint c) {
    switch (c) {
        case HomConstraint::Plain: return "plain";
        case HomConstraint::Mono: return "mono";
        case HomConstraint::Embedding: return "embedding";
        case HomConstraint::Full: return "full";
        case HomConstraint::VertexSurjective: return "vs";
        case HomConstraint::EdgeSurjective: return "es";
        case HomConstraint::Surjective: return "surjective";
        case HomConstraint::LocallyInjective: return "li";
        case HomConstraint::LocallySurjective: return "ls";
        case HomConstraint::LocallyBijective: return "lb";
    }
    return "?";
}

std::optional<HomConstraint> hom_constraint_from_name(const std::string& name) {
    for (int i = 0; i < kHomConstraintCount; ++i) {
        auto c = (HomConstraint)i;
        if (name == hom_constraint_name(c)) return c;
    }
    if (name == "locally-injective") return HomConstraint::LocallyInjective;
    if (name == "locally-surjective") return HomConstraint::LocallySurjective;
    if (name == "locally-bijective") return HomConstraint::LocallyBijective;
    return std::nullopt;
}

namespace {

struct Flags {
    bool injective = false, full = false, vs = false, es = false, li = false, ls = false;
};

Flags flags_of(HomConstraint c) {
    Flags f;
    switch (c) {
        case HomConstraint::Plain: break;
        case HomConstraint::Mono: f.injective = true; break;
        case HomConstraint::Embedding: f.injective = f.full = true; break;
        case HomConstraint::Full: f.full = true; break;
        case HomConstraint::VertexSurjective: f.vs = true; break;
        case HomConstraint::EdgeSurjective: f.es = true; break;
        case HomConstraint::Surjective: f.vs = f.es = true; break;
        case HomConstraint::LocallyInjective: f.li = true; break;
        case HomConstraint::LocallySurjective: f.ls = true; break;
        case HomConstraint::LocallyBijective: f.li = f.ls = true; break;
    }
    return f;
}

bool locally_constrained(HomConstraint c) {
    Flags f = flags_of(c);
    return f.li || f.ls;
}

}  // namespace

bool check_hom(const std::vector<int>& f, const Graph& g, const Graph& h, HomConstraint c) {
    if ((int)f.size() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (f[v] < 0 || f[v] >= h.n()) return false;
    Flags fl = flags_of(c);

    for (int u = 0; u < g.n(); ++u)
        for (int v = g.out(u).next(); v >= 0; v = g.out(u).next(v + 1))
            if (!h.has_edge(f[u], f[v])) return false;

    if (fl.injective)
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (f[u] == f[v]) return false;

    if (fl.full)
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                if (h.has_edge(f[u], f[v]) && !g.has_edge(u, v)) return false;

    if (fl.vs) {
        Bitset covered(h.n());
        for (int v = 0; v < g.n(); ++v) covered.set(f[v]);
        if (covered.count() != h.n()) return false;
    }

    if (fl.es) {
        Graph image(h.n(), h.directed());
        for (int u = 0; u < g.n(); ++u)
            for (int v = g.out(u).next(); v >= 0; v = g.out(u).next(v + 1))
                image.add_edge(f[u], f[v]);
        for (int a = 0; a < h.n(); ++a)
            for (int b = h.out(a).next(); b >= 0; b = h.out(a).next(b + 1))
                if (!image.has_edge(a, b)) return false;
    }

    if (fl.li || fl.ls)
        for (int v = 0; v < g.n(); ++v) {
            Bitset nb = g.neighbors(v);
            Bitset images(h.n());
            int count = 0;
            for (int w = nb.next(); w >= 0; w = nb.next(w + 1)) {
                images.set(f[w]);
                ++count;
            }
            if (fl.li && images.count() != count) return false;
            if (fl.ls && !h.neighbors(f[v]).is_subset_of(images)) return false;
        }

    return true;
}

namespace {

struct Engine {
    const Graph& g;
    const Graph& h;
    HomConstraint constraint;
    Flags fl;
    uint64_t budget, nodes = 0;
    int n, m;

    std::vector<Bitset> dom;
    std::vector<int> asg;
    int assigned_count = 0;

    std::vector<Bitset> g_nb, h_nb, h_non_out, h_non_in;
    std::vector<int> image_count;  // per target
    int covered_targets = 0;
    std::vector<int> open_nb;  // per g-vertex: unassigned members of its neighbourhood

    // Supplemental edge relations preserved by every homomorphism: an edge
    // lying on a closed walk of odd length k maps to an edge lying on one.
    // Sharpens refutations on rigid undirected structures.
    std::vector<std::vector<Bitset>> g_sup, h_sup;

    struct Saved {
        int v;
        Bitset bits;
    };
    std::vector<Saved> trail;
    std::vector<int> stamp;
    int depth = 0;

    std::optional<std::vector<int>> witness;

    // When set, leaves record (vertex, value) supports instead of stopping:
    // used by the block-filter preprocessing below.
    std::vector<Bitset>* support_sink = nullptr;

    Engine(const Graph& g_, const Graph& h_, HomConstraint c, uint64_t b)
        : g(g_), h(h_), constraint(c), fl(flags_of(c)), budget(b), n(g_.n()), m(h_.n()) {
        g_nb.reserve(n);
        for (int v = 0; v < n; ++v) g_nb.push_back(g.neighbors(v));
        h_nb.reserve(m);
        for (int a = 0; a < m; ++a) h_nb.push_back(h.neighbors(a));
        if (fl.full) {
            for (int a = 0; a < m; ++a) {
                h_non_out.push_back(h.out(a).complement());
                h_non_in.push_back(h.in(a).complement());
            }
        }
        asg.assign(n, -1);
        image_count.assign(m, 0);
        stamp.assign(n, -1);
        open_nb.resize(n);
        for (int v = 0; v < n; ++v) open_nb[v] = g_nb[v].count();
        if (!g.directed()) {
            g_sup = odd_walk_relations(g);
            h_sup = odd_walk_relations(h);
        }
    }

    // rows[k][u] = { v adjacent to u with a closed walk of length 3 (k=0)
    // or 5 (k=1) through the edge }.
    static std::vector<std::vector<Bitset>> odd_walk_relations(const Graph& gr) {
        int nn = gr.n();
        std::vector<Bitset> walk2(nn, Bitset(nn)), walk4(nn, Bitset(nn));
        for (int u = 0; u < nn; ++u)
            for (int w = gr.out(u).next(); w >= 0; w = gr.out(u).next(w + 1))
                walk2[u] |= gr.out(w);
        for (int u = 0; u < nn; ++u)
            for (int w = walk2[u].next(); w >= 0; w = walk2[u].next(w + 1))
                walk4[u] |= walk2[w];
        std::vector<std::vector<Bitset>> rel(2, std::vector<Bitset>(nn, Bitset(nn)));
        for (int u = 0; u < nn; ++u) {
            rel[0][u] = gr.out(u) & walk2[u];
            rel[1][u] = gr.out(u) & walk4[u];
        }
        return rel;
    }

    bool init_domains(const std::vector<int>& fixed) {
        dom.assign(n, Bitset(m));
        for (int v = 0; v < n; ++v) {
            if (!fixed.empty() && fixed[v] >= 0) {
                dom[v].set(fixed[v]);
            } else {
                dom[v].set_all();
            }
            Bitset keep(m);
            for (int a = dom[v].next(); a >= 0; a = dom[v].next(a + 1)) {
                if (g.has_loop(v) && !h.has_loop(a)) continue;
                if (fl.full && !g.has_loop(v) && h.has_loop(a)) continue;
                int dg = g_nb[v].count(), dh = h_nb[a].count();
                if (fl.li && dg > dh) continue;
                if (fl.ls && dg < dh) continue;
                keep.set(a);
            }
            dom[v] = keep;
            if (dom[v].none()) return false;
        }
        return true;
    }

    void save(int v) {
        if (stamp[v] != depth) {
            trail.push_back({v, dom[v]});
            stamp[v] = depth;
        }
    }

    // Arc consistency over the edge constraint, to a fixpoint.
    bool revise_all(std::deque<int>& queue, std::vector<char>& queued) {
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            queued[u] = 0;
            // u's domain shrank: filter every vertex sharing an edge with u.
            for (int w = 0; w < n; ++w) {
                if (asg[w] >= 0 || w == u) continue;
                bool fwd = g.has_edge(w, u), bwd = g.has_edge(u, w);
                if (!fwd && !bwd) continue;
                Bitset keep(m);
                for (int b = dom[w].next(); b >= 0; b = dom[w].next(b + 1)) {
                    if (fwd && !h.out(b).intersects(dom[u])) continue;
                    if (bwd && !h.in(b).intersects(dom[u])) continue;
                    bool sup_ok = true;
                    for (size_t k = 0; k < g_sup.size() && sup_ok; ++k)
                        if (g_sup[k][w].test(u) && !h_sup[k][b].intersects(dom[u]))
                            sup_ok = false;
                    if (!sup_ok) continue;
                    keep.set(b);
                }
                if (!(keep == dom[w])) {
                    save(w);
                    dom[w] = keep;
                    if (keep.none()) return false;
                    if (!queued[w]) {
                        queued[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        return true;
    }

    bool narrow(int u, const Bitset& allowed, std::deque<int>& queue, std::vector<char>& queued) {
        Bitset next = dom[u] & allowed;
        if (next == dom[u]) return true;
        save(u);
        dom[u] = next;
        if (next.none()) return false;
        if (!queued[u]) {
            queued[u] = 1;
            queue.push_back(u);
        }
        return true;
    }

    bool propagate_assignment(int v, int a) {
        std::deque<int> queue;
        std::vector<char> queued(n, 0);
        queue.push_back(v);
        queued[v] = 1;

        for (int u = 0; u < n; ++u) {
            if (asg[u] >= 0 || u == v) continue;
            if (g.has_edge(v, u) && !narrow(u, h.out(a), queue, queued)) return false;
            if (g.has_edge(u, v) && !narrow(u, h.in(a), queue, queued)) return false;
            for (size_t k = 0; k < g_sup.size(); ++k)
                if (g_sup[k][v].test(u) && !narrow(u, h_sup[k][a], queue, queued))
                    return false;
            if (fl.full) {
                if (!g.has_edge(v, u) && !narrow(u, h_non_out[a], queue, queued)) return false;
                if (!g.has_edge(u, v) && !narrow(u, h_non_in[a], queue, queued)) return false;
            }
            if (fl.injective) {
                Bitset not_a(m);
                not_a.set_all();
                not_a.reset(a);
                if (!narrow(u, not_a, queue, queued)) return false;
            }
        }

        if (fl.li) {
            // Two members of one neighbourhood may not share an image.
            Bitset not_a(m);
            not_a.set_all();
            not_a.reset(a);
            for (int x = g_nb[v].next(); x >= 0; x = g_nb[v].next(x + 1)) {
                for (int u = g_nb[x].next(); u >= 0; u = g_nb[x].next(u + 1)) {
                    if (u == v) continue;
                    if (asg[u] == a) return false;
                    if (asg[u] < 0 && !narrow(u, not_a, queue, queued)) return false;
                }
            }
        }

        if (fl.ls) {
            // Counts were already decremented in search(); act on completions.
            for (int x = g_nb[v].next(); x >= 0; x = g_nb[v].next(x + 1))
                if (open_nb[x] == 0 && !neighborhood_complete(x, queue, queued)) return false;
        }

        if (fl.vs && m - covered_targets > n - assigned_count) return false;

        return revise_all(queue, queued);
    }

    // All of N_g(x) is assigned: the image set must dominate the target
    // neighbourhood of f(x) (checked if x is assigned, enforced on dom[x]
    // otherwise).
    bool neighborhood_complete(int x, std::deque<int>& queue, std::vector<char>& queued) {
        Bitset images(m);
        for (int w = g_nb[x].next(); w >= 0; w = g_nb[x].next(w + 1)) images.set(asg[w]);
        if (asg[x] >= 0) return h_nb[asg[x]].is_subset_of(images);
        Bitset keep(m);
        for (int a = dom[x].next(); a >= 0; a = dom[x].next(a + 1))
            if (h_nb[a].is_subset_of(images)) keep.set(a);
        return narrow(x, keep, queue, queued);
    }

    void undo_ls_counts(int v) {
        for (int x = g_nb[v].next(); x >= 0; x = g_nb[v].next(x + 1)) ++open_nb[x];
    }

    // Min-remaining-candidates, restricted to the frontier (vertices with an
    // assigned neighbour) while one exists: keeps the search contiguous, so
    // contradictions inside rigid regions surface before the map smears.
    int pick_variable() const {
        int best = -1, best_count = -1;
        bool best_frontier = false;
        for (int v = 0; v < n; ++v) {
            if (asg[v] >= 0) continue;
            bool frontier = false;
            for (int w = g_nb[v].next(); w >= 0 && !frontier; w = g_nb[v].next(w + 1))
                frontier = asg[w] >= 0;
            int c = dom[v].count();
            if (best < 0 || (frontier && !best_frontier) ||
                (frontier == best_frontier && c < best_count)) {
                best = v;
                best_count = c;
                best_frontier = frontier;
            }
        }
        return best;
    }

    enum class Step { Done, Fail, Budget };

    Step search() {
        if (assigned_count == n) {
            std::vector<int> f(asg);
            if (!check_hom(f, g, h, constraint)) return Step::Fail;
            if (support_sink) {
                for (int v = 0; v < n; ++v) (*support_sink)[v].set(f[v]);
                return Step::Fail;  // keep enumerating
            }
            witness = f;
            return Step::Done;
        }
        int v = pick_variable();
        Bitset candidates = dom[v];
        for (int a = candidates.next(); a >= 0; a = candidates.next(a + 1)) {
            if (++nodes > budget) return Step::Budget;

            size_t trail_mark = trail.size();
            int saved_depth = depth++;
            asg[v] = a;
            ++assigned_count;
            if (image_count[a]++ == 0) ++covered_targets;
            if (fl.ls)
                for (int x = g_nb[v].next(); x >= 0; x = g_nb[v].next(x + 1)) --open_nb[x];
            save(v);
            Bitset single(m);
            single.set(a);
            dom[v] = single;

            bool ok = propagate_assignment(v, a);
            Step step = ok ? search() : Step::Fail;
            if (step == Step::Done || step == Step::Budget) return step;

            if (fl.ls) undo_ls_counts(v);
            if (--image_count[a] == 0) --covered_targets;
            --assigned_count;
            asg[v] = -1;
            while (trail.size() > trail_mark) {
                dom[trail.back().v] = trail.back().bits;
                stamp[trail.back().v] = -1;
                trail.pop_back();
            }
            depth = saved_depth;
        }
        return Step::Fail;
    }

    // Biconnected blocks of the pattern, by DFS lowpoints.
    static std::vector<std::vector<int>> biconnected_blocks(const Graph& gr) {
        int nn = gr.n();
        std::vector<int> num(nn, -1), low(nn, 0), parent(nn, -1);
        std::vector<std::pair<int, int>> edge_stack;
        std::vector<std::vector<int>> blocks;
        int counter = 0;
        auto dfs = [&](auto&& self, int u) -> void {
            num[u] = low[u] = counter++;
            Bitset nb = gr.neighbors(u);
            for (int v = nb.next(); v >= 0; v = nb.next(v + 1)) {
                if (v == u) continue;
                if (num[v] < 0) {
                    edge_stack.push_back({u, v});
                    parent[v] = u;
                    self(self, v);
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= num[u]) {
                        std::vector<int> verts;
                        while (true) {
                            auto [a, b] = edge_stack.back();
                            edge_stack.pop_back();
                            verts.push_back(a);
                            verts.push_back(b);
                            if (a == u && b == v) break;
                        }
                        std::sort(verts.begin(), verts.end());
                        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                        blocks.push_back(verts);
                    }
                } else if (num[v] < num[u] && v != parent[u]) {
                    edge_stack.push_back({u, v});
                    low[u] = std::min(low[u], num[v]);
                }
            }
        };
        for (int u = 0; u < nn; ++u)
            if (num[u] < 0) dfs(dfs, u);
        return blocks;
    }

    // Every homomorphism restricted to an induced biconnected block of the
    // pattern is a plain homomorphism of that block, so a (vertex, value)
    // pair unsupported by any block-level homomorphism can be deleted up
    // front. Rigid blocks (here: line graphs of dragons, whose chromatic
    // number pins them onto each other) collapse the root domains this way.
    void block_filter() {
        auto blocks = biconnected_blocks(g);
        for (const auto& block : blocks) {
            if (block.size() < 3 || block.size() > 16 || (int)block.size() >= n) continue;
            Graph sub = induced_subgraph(g, block);
            Engine mini(sub, h, HomConstraint::Plain, std::min<uint64_t>(200'000, budget));
            std::vector<Bitset> sink(sub.n(), Bitset(m));
            mini.support_sink = &sink;
            HomSearch res = mini.run({});
            nodes += mini.nodes;
            if (res.outcome == Outcome::Budget) continue;  // keep domains, stay sound
            for (size_t i = 0; i < block.size(); ++i) dom[block[i]] &= sink[i];
        }
    }

    HomSearch run(const std::vector<int>& fixed) {
        HomSearch out;
        if (!init_domains(fixed)) {
            out.outcome = Outcome::None;
            out.nodes = nodes;
            return out;
        }
        if (!support_sink && !g.directed() && n >= 12 && budget >= 100'000) {
            block_filter();
            for (int v = 0; v < n; ++v)
                if (dom[v].none()) {
                    out.outcome = Outcome::None;
                    out.nodes = nodes;
                    return out;
                }
        }
        std::deque<int> queue;
        std::vector<char> queued(n, 1);
        for (int v = 0; v < n; ++v) queue.push_back(v);
        if (fl.ls) {
            // Neighbourhoods that start out complete (isolated vertices).
            for (int x = 0; x < n; ++x)
                if (open_nb[x] == 0 && !neighborhood_complete(x, queue, queued)) {
                    out.outcome = Outcome::None;
                    return out;
                }
        }
        if (!revise_all(queue, queued)) {
            out.outcome = Outcome::None;
            return out;
        }
        Step step = search();
        out.nodes = nodes;
        switch (step) {
            case Step::Done:
                out.outcome = Outcome::Found;
                out.witness = witness;
                break;
            case Step::Fail: out.outcome = Outcome::None; break;
            case Step::Budget: out.outcome = Outcome::Budget; break;
        }
        return out;
    }
};

}  // namespace

HomSearch find_hom(const Graph& g, const Graph& h, HomConstraint c, uint64_t node_budget) {
    if (g.directed() != h.directed())
        throw InvalidParameterError("find_hom: directedness mismatch");
    if (locally_constrained(c) && g.directed())
        throw UnsupportedInputError("locally constrained variants need undirected graphs");
    Flags fl = flags_of(c);
    HomSearch quick;
    quick.outcome = Outcome::None;
    if (g.n() == 0) {
        if (fl.vs && h.n() > 0) return quick;
        if (fl.es && h.edge_count() > 0) return quick;
        quick.outcome = Outcome::Found;
        quick.witness = std::vector<int>{};
        return quick;
    }
    if (h.n() == 0) return quick;
    if (fl.injective && g.n() > h.n()) return quick;
    if (fl.vs && g.n() < h.n()) return quick;
    if (fl.es && g.edge_count() < h.edge_count()) return quick;

    // Plain and the locally constrained conditions bind within a connected
    // component, so components of the pattern map independently.
    bool component_local = !fl.injective && !fl.full && !fl.vs && !fl.es;
    if (component_local) {
        auto comps = components(g);
        if (comps.size() > 1) {
            HomSearch total;
            total.outcome = Outcome::Found;
            std::vector<int> merged(g.n(), -1);
            uint64_t left = node_budget;
            for (const auto& comp : comps) {
                HomSearch part = find_hom(induced_subgraph(g, comp), h, c, left);
                total.nodes += part.nodes;
                left -= std::min(left, part.nodes);
                if (part.outcome != Outcome::Found) {
                    total.outcome = part.outcome;
                    total.witness.reset();
                    return total;
                }
                for (size_t i = 0; i < comp.size(); ++i) merged[comp[i]] = (*part.witness)[i];
            }
            total.witness = merged;
            return total;
        }
    }

    Engine engine(g, h, c, node_budget);
    return engine.run({});
}

HomSearch find_hom_with_fixed(const Graph& g, const Graph& h, const std::vector<int>& fixed,
                              uint64_t node_budget) {
    if (g.directed() != h.directed())
        throw InvalidParameterError("find_hom: directedness mismatch");
    if (g.n() == 0) {
        HomSearch s;
        s.outcome = Outcome::Found;
        s.witness = std::vector<int>{};
        return s;
    }
    if (h.n() == 0) {
        HomSearch s;
        s.outcome = Outcome::None;
        return s;
    }
    Engine engine(g, h, HomConstraint::Plain, node_budget);
    return engine.run(fixed);
}

int chromatic_number(const Graph& g, uint64_t node_budget) {
    if (g.directed() || g.has_any_loop())
        throw PreconditionError("chromatic_number: loop-free undirected graphs only");
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n(); ++k) {
        HomSearch s = find_hom(g, generate(Family::Complete, k), HomConstraint::Plain,
                               node_budget);
        if (s.outcome == Outcome::Budget)
            throw BudgetError("chromatic_number: search budget exhausted");
        if (s.outcome == Outcome::Found) return k;
    }
    return g.n();
}

int chromatic_index(const Graph& g, uint64_t node_budget) {
    LineGraph lg = line_graph(g);
    return chromatic_number(lg.graph, node_budget);
}

Drm drm(const Graph& g) {
    if (g.directed()) throw UnsupportedInputError("drm: undirected graphs only");
    if (g.n() == 0) throw PreconditionError("drm: empty graph");
    if (components(g).size() != 1) throw PreconditionError("drm: disconnected input");

    std::vector<Bitset> nb;
    for (int v = 0; v < g.n(); ++v) nb.push_back(g.neighbors(v));

    std::vector<std::vector<int>> blocks{std::vector<int>(g.n())};
    for (int v = 0; v < g.n(); ++v) blocks[0][v] = v;

    while (true) {
        std::vector<std::vector<int>> refined;
        for (const auto& block : blocks) {
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : block) {
                std::vector<int> sig;
                for (const auto& other : blocks) {
                    int c = 0;
                    for (int w : other)
                        if (nb[v].test(w)) ++c;
                    sig.push_back(c);
                }
                groups[sig].push_back(v);
            }
            for (auto& [sig, members] : groups) refined.push_back(members);
        }
        if (refined.size() == blocks.size()) {
            blocks = refined;
            break;
        }
        blocks = refined;
    }

    Drm d;
    d.blocks = blocks;
    d.matrix.assign(blocks.size(), std::vector<int>(blocks.size(), 0));
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = 0; j < blocks.size(); ++j) {
            int v = blocks[i][0], c = 0;
            for (int w : blocks[j])
                if (nb[v].test(w)) ++c;
            d.matrix[i][j] = c;
        }
    return d;
}

bool is_core(const Graph& g, uint64_t node_budget) {
    bool budget_hit = false;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> keep;
        for (int u = 0; u < g.n(); ++u)
            if (u != v) keep.push_back(u);
        HomSearch s = find_hom(g, induced_subgraph(g, keep), HomConstraint::Plain, node_budget);
        if (s.outcome == Outcome::Found) return false;
        if (s.outcome == Outcome::Budget) budget_hit = true;
    }
    if (budget_hit) throw BudgetError("is_core: search budget exhausted");
    return true;
}

}  // namespace grel
