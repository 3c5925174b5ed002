#pragma once

#include <iosfwd>
#include <string>

#include "grel/graph.hpp"
#include "grel/poset.hpp"
#include "grel/relation.hpp"

namespace grel {

// Text formats. Graph: header `graph N` or `digraph N`, then one edge `u v`
// per line (undirected edges once, loops as `v v`). Relation: header
// `relation SRC DST`, then pairs `u b`. Poset: header `poset K`, a line of K
// distinct labels, then cover pairs `a b` meaning a <_P b. `#` starts a
// comment anywhere; blank lines are skipped. Parse failures throw ParseError
// with a line number.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Relation read_relation(std::istream& in);
void write_relation(std::ostream& out, const Relation& r);

Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

Graph read_graph_file(const std::string& path);
Relation read_relation_file(const std::string& path);
Poset read_poset_file(const std::string& path);

std::string to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

}  // namespace grel
