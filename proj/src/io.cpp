#include "grel/io.hpp"

#include <fstream>
#include <sstream>

namespace grel {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next non-empty line with comments stripped; false at EOF.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream probe(raw);
            std::string word;
            if (probe >> word) {
                out = raw;
                return true;
            }
        }
        return false;
    }
};

std::vector<long long> parse_ints(const std::string& line, int line_no) {
    std::istringstream in(line);
    std::vector<long long> vals;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected an integer, got '" + tok + "'");
        }
    }
    return vals;
}

}  // namespace

Graph read_graph(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no, "missing graph header");
    std::istringstream head(line);
    std::string kind;
    long long n = -1;
    head >> kind >> n;
    bool directed;
    if (kind == "graph")
        directed = false;
    else if (kind == "digraph")
        directed = true;
    else
        throw ParseError(reader.line_no, "expected 'graph N' or 'digraph N'");
    if (n < 0 || n > 1'000'000 || head.fail())
        throw ParseError(reader.line_no, "bad vertex count in header");
    std::string rest;
    if (head >> rest) throw ParseError(reader.line_no, "trailing tokens in header");

    Graph g((int)n, directed);
    while (reader.next(line)) {
        auto vals = parse_ints(line, reader.line_no);
        if (vals.size() != 2) throw ParseError(reader.line_no, "expected 'u v'");
        if (vals[0] < 0 || vals[0] >= n || vals[1] < 0 || vals[1] >= n)
            throw ParseError(reader.line_no, "edge endpoint out of range");
        g.add_edge((int)vals[0], (int)vals[1]);
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << (g.directed() ? "digraph " : "graph ") << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Relation read_relation(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no, "missing relation header");
    std::istringstream head(line);
    std::string kind;
    long long src = -1, dst = -1;
    head >> kind >> src >> dst;
    if (kind != "relation" || head.fail() || src < 0 || dst < 0)
        throw ParseError(reader.line_no, "expected 'relation SRC DST'");
    Relation r((int)src, (int)dst);
    while (reader.next(line)) {
        auto vals = parse_ints(line, reader.line_no);
        if (vals.size() != 2) throw ParseError(reader.line_no, "expected 'u b'");
        if (vals[0] < 0 || vals[0] >= src || vals[1] < 0 || vals[1] >= dst)
            throw ParseError(reader.line_no, "relation pair out of range");
        r.add((int)vals[0], (int)vals[1]);
    }
    return r;
}

void write_relation(std::ostream& out, const Relation& r) {
    out << "relation " << r.src_n() << " " << r.dst_n() << "\n";
    for (auto [x, y] : r.pairs()) out << x << " " << y << "\n";
}

Poset read_poset(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no, "missing poset header");
    std::istringstream head(line);
    std::string kind;
    long long k = -1;
    head >> kind >> k;
    if (kind != "poset" || head.fail() || k < 0)
        throw ParseError(reader.line_no, "expected 'poset K'");
    if (!reader.next(line)) throw ParseError(reader.line_no, "missing label line");
    auto label_vals = parse_ints(line, reader.line_no);
    if ((long long)label_vals.size() != k)
        throw ParseError(reader.line_no, "expected exactly " + std::to_string(k) + " labels");
    std::vector<int> labels(label_vals.begin(), label_vals.end());
    std::vector<std::pair<int, int>> pairs;
    while (reader.next(line)) {
        auto vals = parse_ints(line, reader.line_no);
        if (vals.size() != 2) throw ParseError(reader.line_no, "expected cover pair 'a b'");
        pairs.push_back({(int)vals[0], (int)vals[1]});
    }
    try {
        return Poset::from_pairs(labels, pairs);
    } catch (const InvalidParameterError& e) {
        throw ParseError(reader.line_no, e.what());
    }
}

void write_poset(std::ostream& out, const Poset& p) {
    out << "poset " << p.size() << "\n";
    for (int i = 0; i < p.size(); ++i) out << p.label(i) << (i + 1 < p.size() ? ' ' : '\n');
    if (p.size() == 0) out << "\n";
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (i != j && p.leq(i, j)) out << p.label(i) << " " << p.label(j) << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_graph(in);
}

Relation read_relation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_relation(in);
}

Poset read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_poset(in);
}

std::string to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

}  // namespace grel
