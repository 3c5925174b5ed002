#include "grel/relation.hpp"

#include <algorithm>
#include <deque>

namespace grel {

Relation::Relation(int src_n, int dst_n) : src_n_(src_n), dst_n_(dst_n) {
    if (src_n < 0 || dst_n < 0) throw InvalidParameterError("negative relation range");
    img_.assign(src_n, Bitset(dst_n));
}

Relation Relation::identity(int n) {
    Relation r(n, n);
    for (int i = 0; i < n; ++i) r.add(i, i);
    return r;
}

Relation Relation::from_pairs(int src_n, int dst_n,
                              const std::vector<std::pair<int, int>>& pairs) {
    Relation r(src_n, dst_n);
    for (auto [x, y] : pairs) r.add(x, y);
    return r;
}

Relation Relation::from_mapping(const std::vector<int>& f, int dst_n) {
    Relation r((int)f.size(), dst_n);
    for (size_t x = 0; x < f.size(); ++x) r.add((int)x, f[x]);
    return r;
}

void Relation::add(int x, int y) {
    if (x < 0 || x >= src_n_ || y < 0 || y >= dst_n_)
        throw InvalidParameterError("relation pair out of range");
    img_[x].set(y);
}

Bitset Relation::preimage_of(int y) const {
    Bitset b(src_n_);
    for (int x = 0; x < src_n_; ++x)
        if (img_[x].test(y)) b.set(x);
    return b;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> p;
    for (int x = 0; x < src_n_; ++x)
        for (int y = img_[x].next(); y >= 0; y = img_[x].next(y + 1)) p.push_back({x, y});
    return p;
}

int Relation::size() const {
    int s = 0;
    for (int x = 0; x < src_n_; ++x) s += img_[x].count();
    return s;
}

Relation compose(const Relation& r, const Relation& s) {
    if (r.dst_n() != s.src_n())
        throw InvalidParameterError("compose: range mismatch " + std::to_string(r.dst_n()) +
                                    " vs " + std::to_string(s.src_n()));
    Relation out(r.src_n(), s.dst_n());
    for (int x = 0; x < r.src_n(); ++x) {
        Bitset acc(s.dst_n());
        const Bitset& mid = r.image_of(x);
        for (int y = mid.next(); y >= 0; y = mid.next(y + 1)) acc |= s.image_of(y);
        for (int z = acc.next(); z >= 0; z = acc.next(z + 1)) out.add(x, z);
    }
    return out;
}

Relation transpose(const Relation& r) {
    Relation t(r.dst_n(), r.src_n());
    for (auto [x, y] : r.pairs()) t.add(y, x);
    return t;
}

bool has_full_domain(const Relation& r) {
    for (int x = 0; x < r.src_n(); ++x)
        if (r.image_of(x).none()) return false;
    return true;
}

bool has_full_image(const Relation& r) {
    Bitset covered(r.dst_n());
    for (int x = 0; x < r.src_n(); ++x) covered |= r.image_of(x);
    return covered.count() == r.dst_n();
}

RelationFacts predicates(const Relation& r) {
    RelationFacts f;
    Bitset dom(r.src_n()), img(r.dst_n());
    f.functional = f.injective = true;
    for (int x = 0; x < r.src_n(); ++x) {
        int c = r.image_of(x).count();
        if (c > 0) dom.set(x);
        if (c > 1) f.functional = false;
        img |= r.image_of(x);
    }
    for (int y = 0; y < r.dst_n(); ++y)
        if (r.preimage_of(y).count() > 1) f.injective = false;
    f.domain = dom.to_vector();
    f.image = img.to_vector();
    f.full_domain = (int)f.domain.size() == r.src_n();
    f.full_image = (int)f.image.size() == r.dst_n();
    return f;
}

static void check_strong_pre(const Graph& g, const Relation& r) {
    if (r.src_n() != g.n())
        throw InvalidParameterError("apply: relation source range != vertex count");
    Bitset covered(r.dst_n());
    for (int x = 0; x < g.n(); ++x) covered |= r.image_of(x);
    for (int b = 0; b < r.dst_n(); ++b)
        if (!covered.test(b))
            throw PreconditionError("relation image is not full: target vertex " +
                                    std::to_string(b) + " has no preimage");
}

Graph apply_strong_unchecked(const Graph& g, const Relation& r) {
    if (r.src_n() != g.n())
        throw InvalidParameterError("apply: relation source range != vertex count");
    Graph out(r.dst_n(), g.directed());
    for (int u = 0; u < g.n(); ++u) {
        if (r.image_of(u).none()) continue;
        Bitset row(r.dst_n());
        for (int v = g.out(u).next(); v >= 0; v = g.out(u).next(v + 1)) row |= r.image_of(v);
        if (row.none()) continue;
        for (int a = r.image_of(u).next(); a >= 0; a = r.image_of(u).next(a + 1))
            for (int b = row.next(); b >= 0; b = row.next(b + 1)) out.add_edge(a, b);
    }
    return out;
}

Graph apply_strong(const Graph& g, const Relation& r) {
    check_strong_pre(g, r);
    return apply_strong_unchecked(g, r);
}

Graph apply_weak(const Graph& g, const Relation& r) {
    if (!g.simple()) throw PreconditionError("weak composition needs a simple graph");
    check_strong_pre(g, r);
    Graph full = apply_strong_unchecked(g, r);
    Graph out(full.n(), false);
    for (auto [a, b] : full.edges())
        if (a != b) out.add_edge(a, b);
    return out;
}

WeightMatrix apply_weighted(const WeightMatrix& w, const Relation& r) {
    if ((int)w.size() != r.src_n())
        throw InvalidParameterError("apply_weighted: matrix size != relation source range");
    for (const auto& row : w)
        if ((int)row.size() != r.src_n())
            throw InvalidParameterError("apply_weighted: matrix is not square");
    WeightMatrix out(r.dst_n(), std::vector<long long>(r.dst_n(), 0));
    for (int x = 0; x < r.src_n(); ++x)
        for (int y = 0; y < r.src_n(); ++y) {
            if (w[x][y] == 0) continue;
            for (int a = r.image_of(x).next(); a >= 0; a = r.image_of(x).next(a + 1))
                for (int b = r.image_of(y).next(); b >= 0; b = r.image_of(y).next(b + 1))
                    out[a][b] += w[x][y];
        }
    return out;
}

Decomposition decompose(const Relation& r) {
    Decomposition d;
    auto pair_list = r.pairs();  // lexicographic: this indexes the middle range
    int m = (int)pair_list.size();
    d.identity_part = Relation(r.src_n(), r.src_n());
    d.duplicator = Relation(r.src_n(), m);
    d.contractor = Relation(m, r.dst_n());
    for (int i = 0; i < m; ++i) {
        auto [x, y] = pair_list[i];
        d.identity_part.add(x, x);
        d.duplicator.add(x, i);
        d.contractor.add(i, y);
    }
    return d;
}

HallResult hall_check(const Relation& r) {
    // Kuhn's augmenting paths over the sources in dom r.
    int n = r.src_n(), m = r.dst_n();
    std::vector<int> match_src(n, -1), match_dst(m, -1);
    std::vector<char> visited(m, 0);

    auto try_augment = [&](auto&& self, int x) -> bool {
        const Bitset& img = r.image_of(x);
        for (int y = img.next(); y >= 0; y = img.next(y + 1)) {
            if (visited[y]) continue;
            visited[y] = 1;
            if (match_dst[y] < 0 || self(self, match_dst[y])) {
                match_dst[y] = x;
                match_src[x] = y;
                return true;
            }
        }
        return false;
    };

    HallResult res;
    res.satisfied = true;
    for (int x = 0; x < n; ++x) {
        if (r.image_of(x).none()) continue;
        std::fill(visited.begin(), visited.end(), 0);
        if (!try_augment(try_augment, x)) res.satisfied = false;
    }

    if (res.satisfied) {
        for (int x = 0; x < n; ++x)
            if (match_src[x] >= 0) res.matching.push_back({x, match_src[x]});
        return res;
    }

    // Deficient set: all unmatched sources plus everything reachable by
    // alternating paths. |S| exceeds |R(S)| by the number of unmatched roots.
    Bitset s_set(n), t_set(m);
    std::deque<int> queue;
    for (int x = 0; x < n; ++x)
        if (match_src[x] < 0 && r.image_of(x).any()) {
            s_set.set(x);
            queue.push_back(x);
        }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        const Bitset& img = r.image_of(x);
        for (int y = img.next(); y >= 0; y = img.next(y + 1)) {
            if (t_set.test(y)) continue;
            t_set.set(y);
            int back = match_dst[y];
            if (back >= 0 && !s_set.test(back)) {
                s_set.set(back);
                queue.push_back(back);
            }
        }
    }
    res.deficient = s_set.to_vector();
    return res;
}

std::optional<std::vector<int>> extract_monomorphism(const Graph& g, const Relation& r,
                                                     const Graph& h) {
    if (r.dst_n() != h.n() || !(apply_strong(g, r) == h))
        throw PreconditionError("extract_monomorphism: apply_strong(g, r) != h");
    HallResult hall = hall_check(r);
    if (!hall.satisfied) return std::nullopt;
    if ((int)hall.matching.size() != g.n()) return std::nullopt;  // domain not full
    std::vector<int> f(g.n(), -1);
    for (auto [x, y] : hall.matching) f[x] = y;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(f[u], f[v])) return std::nullopt;  // cannot happen when f ⊆ r
    return f;
}

bool is_reversible(const Graph& g, const Relation& r) {
    if (g.directed()) throw UnsupportedInputError("is_reversible: undirected graphs only");
    Graph h = apply_strong(g, r);  // checks full image

    // Criterion (neighbourhood form): every non-isolated vertex lies in
    // dom r, and sources sharing a target share their open neighbourhood.
    bool criterion = true;
    for (int x = 0; x < g.n() && criterion; ++x)
        if (r.image_of(x).none() && !g.is_isolated(x)) criterion = false;
    for (int x = 0; x < g.n() && criterion; ++x)
        for (int y = x + 1; y < g.n() && criterion; ++y)
            if (r.image_of(x).intersects(r.image_of(y)) && !(g.neighbors(x) == g.neighbors(y)))
                criterion = false;

    bool direct = apply_strong_unchecked(h, transpose(r)) == g;
    if (criterion != direct)
        throw Error("is_reversible: criterion and direct equation disagree");
    return direct;
}

}  // namespace grel
