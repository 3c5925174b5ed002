#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grel/graph.hpp"

namespace grel {

// Binary relation between two dense vertex ranges, stored as per-source
// image bitsets.
class Relation {
 public:
    Relation() = default;
    Relation(int src_n, int dst_n);
    static Relation identity(int n);
    static Relation from_pairs(int src_n, int dst_n,
                               const std::vector<std::pair<int, int>>& pairs);
    static Relation from_mapping(const std::vector<int>& f, int dst_n);

    int src_n() const { return src_n_; }
    int dst_n() const { return dst_n_; }
    bool contains(int x, int y) const { return img_[x].test(y); }
    void add(int x, int y);
    const Bitset& image_of(int x) const { return img_[x]; }
    Bitset preimage_of(int y) const;

    std::vector<std::pair<int, int>> pairs() const;  // lexicographic
    int size() const;

    bool operator==(const Relation&) const = default;

 private:
    int src_n_ = 0, dst_n_ = 0;
    std::vector<Bitset> img_;
};

Relation compose(const Relation& r, const Relation& s);
Relation transpose(const Relation& r);

struct RelationFacts {
    std::vector<int> domain, image;
    bool full_domain, full_image, functional, injective;
};
RelationFacts predicates(const Relation& r);

bool has_full_domain(const Relation& r);
bool has_full_image(const Relation& r);

// Strong composition: graph on the target range with an edge (a,b) whenever
// some source edge (u,v) has (u,a),(v,b) in r. Requires full image; the
// unchecked variant computes the triple product on any relation (uncovered
// target vertices come out isolated).
Graph apply_strong(const Graph& g, const Relation& r);
Graph apply_strong_unchecked(const Graph& g, const Relation& r);

// Weak composition: strong composition with the diagonal removed. g simple.
Graph apply_weak(const Graph& g, const Relation& r);

using WeightMatrix = std::vector<std::vector<long long>>;
WeightMatrix apply_weighted(const WeightMatrix& w, const Relation& r);

// Standard decomposition r = identity_part ∘ duplicator ∘ contractor with
// the intermediate range indexed by the pairs of r in lexicographic order,
// so its size is exactly |r|. duplicator is injective with full domain on
// dom r; contractor is functional.
struct Decomposition {
    Relation identity_part;  // src_n x src_n, identity on dom r
    Relation duplicator;     // src_n x |r|
    Relation contractor;     // |r| x dst_n
};
Decomposition decompose(const Relation& r);

// Hall condition on the bipartite pair graph of r restricted to dom r:
// satisfied iff a matching saturates the domain. On violation, deficient is
// a set S of sources with |S| > |R(S)|.
struct HallResult {
    bool satisfied;
    std::vector<std::pair<int, int>> matching;  // saturating, when satisfied
    std::vector<int> deficient;                 // witness set, when violated
};
HallResult hall_check(const Relation& r);

// Precondition: apply_strong(g, r) equals h. Returns an injective total
// mapping contained in r that is a graph monomorphism g -> h, when the Hall
// condition holds and r has full domain; nullopt otherwise.
std::optional<std::vector<int>> extract_monomorphism(const Graph& g, const Relation& r,
                                                     const Graph& h);

// (g * r) * r^+ == g, decided both by the direct equation and by the
// neighbourhood criterion; the two verdicts are asserted to agree.
bool is_reversible(const Graph& g, const Relation& r);

}  // namespace grel
