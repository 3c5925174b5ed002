#include "grel/poset.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace grel {

Poset::Poset(std::vector<int> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
    validate();
}

Poset Poset::from_pairs(std::vector<int> labels,
                        const std::vector<std::pair<int, int>>& less_pairs) {
    int k = (int)labels.size();
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) leq[i][i] = true;
    auto index = [&](int label) {
        for (int i = 0; i < k; ++i)
            if (labels[i] == label) return i;
        throw InvalidParameterError("poset pair uses unknown label " + std::to_string(label));
    };
    for (auto [a, b] : less_pairs) leq[index(a)][index(b)] = true;
    for (int m = 0; m < k; ++m)  // Floyd-Warshall style closure
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (leq[i][m] && leq[m][j]) leq[i][j] = true;
    return Poset(std::move(labels), std::move(leq));
}

int Poset::index_of(int label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw InvalidParameterError("unknown poset label " + std::to_string(label));
}

void Poset::validate() const {
    int k = size();
    std::set<int> distinct(labels_.begin(), labels_.end());
    if ((int)distinct.size() != k) throw InvalidParameterError("poset labels not distinct");
    for (int l : labels_)
        if (l <= 0) throw InvalidParameterError("poset labels must be positive");
    if ((int)leq_.size() != k) throw InvalidParameterError("poset relation size mismatch");
    for (const auto& row : leq_)
        if ((int)row.size() != k) throw InvalidParameterError("poset relation size mismatch");
    for (int i = 0; i < k; ++i)
        if (!leq_[i][i]) throw InvalidParameterError("poset relation not reflexive");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i])
                throw InvalidParameterError("poset relation not antisymmetric");
            for (int m = 0; m < k; ++m)
                if (leq_[i][j] && leq_[j][m] && !leq_[i][m])
                    throw InvalidParameterError("poset relation not transitive");
        }
}

}  // namespace grel
