#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grel/bits.hpp"
#include "grel/errors.hpp"

namespace grel {

// Finite graph on dense vertex indices 0..n-1, directed or undirected, loops
// allowed. Undirected graphs store both orientations of every edge; a loop is
// the single pair (v,v). Values are immutable after construction by
// convention: every operation below returns a fresh graph.
class Graph {
 public:
    Graph() = default;
    Graph(int n, bool directed);

    int n() const { return n_; }
    bool directed() const { return directed_; }

    bool has_edge(int u, int v) const { return out_[u].test(v); }
    bool has_loop(int v) const { return out_[v].test(v); }
    bool has_any_loop() const;

    // Successor / predecessor rows. Equal for undirected graphs.
    const Bitset& out(int v) const { return out_[v]; }
    const Bitset& in(int v) const { return in_[v]; }

    // Open neighbourhood: in- and out-neighbours merged. Contains v exactly
    // when there is a loop at v.
    Bitset neighbors(int v) const { return out_[v] | in_[v]; }
    Bitset closed_neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }
    bool is_isolated(int v) const { return out_[v].none() && in_[v].none(); }

    void add_edge(int u, int v);
    void check_vertex(int v) const;

    // Directed: all pairs. Undirected: each edge once, as (min,max).
    std::vector<std::pair<int, int>> edges() const;
    long long edge_count() const { return (long long)edges().size(); }

    bool loop_free() const { return !has_any_loop(); }
    bool simple() const { return !directed_ && loop_free(); }

    Graph underlying_undirected() const;

    bool operator==(const Graph&) const = default;

 private:
    bool directed_ = false;
    int n_ = 0;
    std::vector<Bitset> out_, in_;
};

enum class Family { Path, Dipath, Cycle, Dicycle, Complete, Sunlet, Dragon, SingleLoop };

// Canonical numbering per family: path 0-1-...-(k-1); cycle 0-1-...-(k-1)-0;
// sunlet internal cycle 0..k-1 with pendant k+i attached to i; dragon K_{k+1}
// on 0..k with edge (0,k) replaced by the path 0-(k+1)-k; single_loop is the
// one-vertex loop graph (k must be 1).
Graph generate(Family family, int k);
std::optional<Family> family_from_name(const std::string& name);

Graph disjoint_union(const Graph& g, const Graph& h);

enum class ComplementMode {
    WithLoops,  // flip every pair including the diagonal
    Simple,     // diagonal untouched
};
Graph complement(const Graph& g, ComplementMode mode = ComplementMode::WithLoops);

// Vertices renumbered 0..|s|-1 by ascending original index.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph induced_subgraph(const Graph& g, const Bitset& s);

// G minus the closed neighbourhoods of every vertex in s.
Graph delete_closed_neighborhoods(const Graph& g, const std::vector<int>& s);

// Disjoint non-empty vertex sets covering 0..n-1.
struct Partition {
    std::vector<std::vector<int>> blocks;
};
void check_partition(const Partition& p, int n);
Partition singleton_partition(int n);

Graph quotient(const Graph& g, const Partition& p);

Graph duplicate_vertex(const Graph& g, int x);
Graph vertex_multiplication(const Graph& g, const std::vector<int>& h);

// Line graph of an undirected loop-free graph. legend[i] is the edge of g the
// node i stands for, in (min,max) form, lexicographically sorted.
struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> legend;
};
LineGraph line_graph(const Graph& g);

// Replaces every edge of g by a copy of ind glued at the distinguished
// vertices a and b (lower edge endpoint playing a). legend[i] names the class
// of node i: either an original vertex of g, or (edge index, indicator
// vertex) for an interior copy vertex.
struct IndicatorProduct {
    Graph graph;
    struct Node {
        bool original;  // true: class of an original vertex of g
        int vertex;     // original vertex, when original
        int edge;       // index into edge list of g, otherwise
        int ind_vertex; // indicator vertex, otherwise
    };
    std::vector<Node> legend;
    std::vector<std::pair<int, int>> g_edges;  // edge list used for indices
};
IndicatorProduct indicator_product(const Graph& g, const Graph& ind, int a, int b);

struct Neighborhoods {
    std::vector<int> open, closed, in, out;
};
Neighborhoods neighborhoods(const Graph& g, int x);

std::vector<std::vector<int>> components(const Graph& g);
// BFS distance on the underlying undirected graph; nullopt = unreachable.
std::optional<int> distance(const Graph& g, int u, int v);
std::optional<int> radius(const Graph& g);
std::optional<int> diameter(const Graph& g);

// Exact isomorphism test by colour refinement plus backtracking. A witness
// maps vertices of g onto vertices of h preserving edges, non-edges and loop
// status. node_budget bounds the backtracking tree; exhaustion throws
// BudgetError (distinct from a definitive "no").
struct IsoResult {
    bool isomorphic;
    std::optional<std::vector<int>> witness;
};
IsoResult is_isomorphic(const Graph& g, const Graph& h,
                        uint64_t node_budget = 10'000'000);

}  // namespace grel
