#pragma once

#include <vector>

#include "grel/errors.hpp"

namespace grel {

// Finite partial order on distinct positive integer labels. The numeric
// order of the labels doubles as the auxiliary linear ("time of creation")
// order used by the layered embeddings. leq is indexed by element position,
// not label.
class Poset {
 public:
    Poset() = default;
    // leq[i][j] == true means labels[i] <=_P labels[j]. Must be reflexive,
    // antisymmetric and transitive.
    Poset(std::vector<int> labels, std::vector<std::vector<bool>> leq);

    // From strict cover-style pairs (a, b) meaning a <_P b; the reflexive
    // transitive closure is taken, antisymmetry checked.
    static Poset from_pairs(std::vector<int> labels,
                            const std::vector<std::pair<int, int>>& less_pairs);

    int size() const { return (int)labels_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int i) const { return labels_[i]; }
    int index_of(int label) const;
    bool leq(int i, int j) const { return leq_[i][j]; }
    bool leq_labels(int a, int b) const { return leq_[index_of(a)][index_of(b)]; }

 private:
    void validate() const;
    std::vector<int> labels_;
    std::vector<std::vector<bool>> leq_;
};

}  // namespace grel
