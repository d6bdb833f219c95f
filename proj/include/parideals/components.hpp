#pragma once

#include "parideals/ideals.hpp"
#include "parideals/rootsys.hpp"

#include <vector>

namespace parideals {

struct ComponentDecomposition {
    // 0-based simple indices of each connected component, ordered by minimum.
    std::vector<std::vector<int>> components;
    std::vector<int> sizes;
    // 1-based m_j = min{i : alpha_i in I_j}.
    std::vector<int> minima;

    int count() const { return static_cast<int>(components.size()); }
};

// Connected components of I in the Dynkin diagram.
ComponentDecomposition decompose(const RootSystem& rs, const ParabolicSelector& I);

// Components as used by the counting formulas: identical to decompose() except in type D
// with alpha_{l-1}, alpha_l in I and alpha_{l-2} not in I, where the two fork nodes form one block.
ComponentDecomposition counting_components(const RootSystem& rs, const ParabolicSelector& I);

// l_j = m_j - (r_1 + ... + r_{j-1}), minus one for the last block of type D when it is {alpha_l}.
std::vector<int> l_values(const RootSystem& rs, const ParabolicSelector& I);

// t = number of alpha_{l-1}, alpha_l in I (type D).
int fork_count(const RootSystem& rs, const ParabolicSelector& I);

}  // namespace parideals
