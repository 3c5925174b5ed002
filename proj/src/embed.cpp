#include "grel/embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "grel/parallel.hpp"

namespace grel {

DownsetEmbedding downset_embedding(const Poset& p) {
    DownsetEmbedding e;
    e.sets.resize(p.size());
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(y, x)) e.sets[x].insert(p.label(y));
    return e;
}

SplitFB split_fb(const Poset& p) {
    SplitFB s;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (i == j || !p.leq(i, j)) continue;
            if (p.label(i) < p.label(j))
                s.forward.push_back({p.label(i), p.label(j)});
            else
                s.backward.push_back({p.label(i), p.label(j)});
        }
    std::sort(s.forward.begin(), s.forward.end());
    std::sort(s.backward.begin(), s.backward.end());
    return s;
}

namespace {

// f(y): the up-set of y in the backward order, as labels.
std::set<int> backward_upset(const Poset& p, int y) {
    std::set<int> out;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(y, z) && p.label(z) <= p.label(y)) out.insert(p.label(z));
    return out;
}

}  // namespace

LayeredEmbedding layered_embedding(const Poset& p) {
    LayeredEmbedding e;
    e.families.resize(p.size());
    for (int x = 0; x < p.size(); ++x) {
        std::set<std::set<int>> family;
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(y, x) && p.label(y) <= p.label(x)) family.insert(backward_upset(p, y));
        e.families[x].assign(family.begin(), family.end());
    }
    return e;
}

bool dominated_by(const std::vector<std::set<int>>& a, const std::vector<std::set<int>>& b) {
    for (const auto& s : a) {
        bool found = false;
        for (const auto& t : b)
            if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; (long long)d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::vector<Graph> embed_into_dicycles(const Poset& p, long long max_vertices) {
    for (int l : p.labels())
        if (!is_odd_prime(l))
            throw PreconditionError("dicycle embedding needs distinct odd prime labels, got " +
                                    std::to_string(l));
    LayeredEmbedding layered = layered_embedding(p);
    std::vector<Graph> images;
    for (int x = 0; x < p.size(); ++x) {
        long long total = 0;
        for (const auto& s : layered.families[x]) {
            long long prod = 1;
            for (int q : s) prod *= q;
            total += prod;
            if (total > max_vertices)
                throw BudgetError("dicycle embedding exceeds vertex limit at element " +
                                  std::to_string(p.label(x)));
        }
        Graph image(0, true);
        for (const auto& s : layered.families[x]) {
            long long prod = 1;
            for (int q : s) prod *= q;
            image = disjoint_union(image, generate(Family::Dicycle, (int)prod));
        }
        images.push_back(image);
    }
    return images;
}

namespace {

struct GadgetShape {
    long long left_len, right_len, bridge_left_pos;
};

GadgetShape gadget_shape(const Poset& p, int element, const SunletOptions& opt) {
    long long prod = 1;
    int n = p.label(element);
    for (int i = 0; i < p.size(); ++i)
        if (p.label(i) <= n && p.leq(element, i)) prod *= p.label(i);
    GadgetShape s;
    s.left_len = 2 * prod;
    if (s.left_len > opt.max_left_cycle)
        throw BudgetError("sunlet gadget: left cycle length " + std::to_string(s.left_len) +
                          " exceeds the size guard (label product " + std::to_string(prod) +
                          ")");
    int exp = std::min(n, opt.right_exponent_cap);
    s.right_len = 1LL << exp;
    s.bridge_left_pos = prod;
    return s;
}

// Two sunlets joined by a pendant-to-pendant bridge edge. Left internal
// vertices come first (0..L-1), then left pendants, then the right block.
Graph build_gadget(const GadgetShape& s) {
    int left = (int)s.left_len, right = (int)s.right_len;
    Graph g(2 * left + 2 * right, false);
    for (int i = 0; i < left; ++i) {
        g.add_edge(i, (i + 1) % left);
        g.add_edge(i, left + i);
    }
    int base = 2 * left;
    for (int i = 0; i < right; ++i) {
        g.add_edge(base + i, base + (i + 1) % right);
        g.add_edge(base + i, base + right + i);
    }
    g.add_edge(left + (int)s.bridge_left_pos, base + right);
    return g;
}

}  // namespace

Graph sunlet_gadget(const Poset& p, int element, SunletOptions opt) {
    return build_gadget(gadget_shape(p, element, opt));
}

std::vector<Graph> embed_into_sunlet_gadgets(const Poset& p, SunletOptions opt) {
    // Elements in ascending label order so copies are available recursively.
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.label(a) < p.label(b); });
    std::vector<Graph> image(p.size());
    for (int element : order) {
        GadgetShape shape = gadget_shape(p, element, opt);
        Graph e = build_gadget(shape);
        int left = (int)shape.left_len, right = (int)shape.right_len;
        int right_internal_base = 2 * left;
        for (int k : order) {
            if (p.label(k) >= p.label(element)) continue;
            if (!p.leq(k, element)) continue;
            int offset = e.n();
            e = disjoint_union(e, image[k]);
            // Copy of E(k) hooks into the right sunlet at an internal vertex.
            int attach = (int)(((1LL << std::min(p.label(k), opt.right_exponent_cap)) - 1) %
                               right);
            e.add_edge(offset, right_internal_base + attach);  // offset = l_{k,0}
        }
        image[element] = e;
    }
    return image;
}

Graph sunlet_indicator_graph(int n, int d) {
    if (n < 3 || d < 3) throw InvalidParameterError("sunlet_indicator_graph: n, d >= 3");
    Graph sun = generate(Family::Sunlet, n);
    // Indicator: path a-c-b with c tied to the degree-2 vertex of the dragon.
    Graph dragon = generate(Family::Dragon, d);
    Graph ind(3 + dragon.n(), false);
    ind.add_edge(0, 1);  // a-c
    ind.add_edge(1, 2);  // c-b
    ind.add_edge(1, 3 + d + 1);
    for (auto [u, v] : dragon.edges()) ind.add_edge(3 + u, 3 + v);
    return indicator_product(sun, ind, 0, 2).graph;
}

LineGraph line_graph_interval_member(int n, int d) {
    return line_graph(sunlet_indicator_graph(n, d));
}

Graph embed_into_line_graphs(const std::vector<int>& a_set, int d) {
    if (d < 3) throw InvalidParameterError("embed_into_line_graphs: d >= 3");
    Graph out(0, false);
    for (int a : a_set) {
        if (a < 3) throw InvalidParameterError("embed_into_line_graphs: members >= 3");
        out = disjoint_union(out, line_graph_interval_member(a, d).graph);
    }
    return out;
}

namespace {

// a<->b swap automorphism of the indicator built in sunlet_indicator_graph.
int indicator_swap(int w, int d) {
    if (w == 0) return 2;
    if (w == 2) return 0;
    if (w == 3) return 3 + d;      // dragon vertex 0 <-> dragon vertex d
    if (w == 3 + d) return 3;
    return w;
}

}  // namespace

std::vector<int> cyclic_line_hom(int n, int nprime, int d) {
    if (n % nprime != 0)
        throw PreconditionError("cyclic_line_hom: " + std::to_string(nprime) +
                                " does not divide " + std::to_string(n));
    Graph sun_g = generate(Family::Sunlet, n);
    Graph sun_h = generate(Family::Sunlet, nprime);
    Graph dragon = generate(Family::Dragon, d);
    Graph ind(3 + dragon.n(), false);
    ind.add_edge(0, 1);
    ind.add_edge(1, 2);
    ind.add_edge(1, 3 + d + 1);
    for (auto [u, v] : dragon.edges()) ind.add_edge(3 + u, 3 + v);

    IndicatorProduct gp = indicator_product(sun_g, ind, 0, 2);
    IndicatorProduct hp = indicator_product(sun_h, ind, 0, 2);

    // Sunlet wrap: internal i -> i mod n', pendant n+i -> n' + (i mod n').
    auto wrap = [&](int v) { return v < n ? v % nprime : nprime + (v - n) % nprime; };

    // Edge of S_n -> (edge index in S_{n'}, orientation flipped?)
    std::map<std::pair<int, int>, int> h_edge_index;
    for (size_t i = 0; i < hp.g_edges.size(); ++i) h_edge_index[hp.g_edges[i]] = (int)i;
    auto map_edge = [&](int e) {
        auto [x, y] = gp.g_edges[e];
        int fx = wrap(x), fy = wrap(y);
        bool flipped = fx > fy;
        auto it = h_edge_index.find({std::min(fx, fy), std::max(fx, fy)});
        return std::make_pair(it->second, flipped);
    };

    // Vertex map G_{n,d} -> G_{n',d}.
    std::vector<int> phi(gp.graph.n());
    std::map<std::pair<int, int>, int> h_node;  // (edge, indicator vertex) -> vertex
    for (int v = 0; v < hp.graph.n(); ++v)
        if (!hp.legend[v].original) h_node[{hp.legend[v].edge, hp.legend[v].ind_vertex}] = v;
    for (int v = 0; v < gp.graph.n(); ++v) {
        const auto& leg = gp.legend[v];
        if (leg.original) {
            phi[v] = wrap(leg.vertex);
        } else {
            auto [he, flipped] = map_edge(leg.edge);
            int w = flipped ? indicator_swap(leg.ind_vertex, d) : leg.ind_vertex;
            if (w == 0)
                phi[v] = hp.g_edges[he].first;
            else if (w == 2)
                phi[v] = hp.g_edges[he].second;
            else
                phi[v] = h_node.at({he, w});
        }
    }

    // Lift to line-graph nodes.
    LineGraph lg = line_graph(gp.graph);
    LineGraph lh = line_graph(hp.graph);
    std::map<std::pair<int, int>, int> lh_index;
    for (size_t i = 0; i < lh.legend.size(); ++i) lh_index[lh.legend[i]] = (int)i;
    std::vector<int> f(lg.graph.n());
    for (size_t i = 0; i < lg.legend.size(); ++i) {
        auto [u, v] = lg.legend[i];
        int a = phi[u], b = phi[v];
        f[i] = lh_index.at({std::min(a, b), std::max(a, b)});
    }
    return f;
}

bool divisibility_set_leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a) {
        bool found = false;
        for (int y : b)
            if (y != 0 && x % y == 0) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

EmbeddingReport verify_embedding(const std::vector<Graph>& images, const Poset& p,
                                 HomConstraint comparator, uint64_t node_budget) {
    if ((int)images.size() != p.size())
        throw InvalidParameterError("verify_embedding: image count != poset size");
    HomMatrix matrix = hom_matrix_parallel(images, comparator, node_budget);
    EmbeddingReport report;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            ++report.cells;
            Outcome got = matrix.at(i, j);
            EmbeddingReport::Cell cell{i, j, p.leq(i, j), got};
            if (got == Outcome::Budget)
                report.budget_cells.push_back(cell);
            else if ((got == Outcome::Found) != p.leq(i, j))
                report.mismatches.push_back(cell);
        }
    return report;
}

}  // namespace grel
