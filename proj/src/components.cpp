#include "parideals/components.hpp"

#include <algorithm>

namespace parideals {

namespace {

ComponentDecomposition finish(std::vector<std::vector<int>> comps) {
    for (auto& c : comps) std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    ComponentDecomposition d;
    d.components = std::move(comps);
    for (const auto& c : d.components) {
        d.sizes.push_back(static_cast<int>(c.size()));
        d.minima.push_back(c.front() + 1);
    }
    return d;
}

}  // namespace

ComponentDecomposition decompose(const RootSystem& rs, const ParabolicSelector& I) {
    std::vector<int> nodes;
    for (int i : I.indices())
        if (i < rs.rank()) nodes.push_back(i);
    std::vector<bool> seen(rs.rank(), false);
    std::vector<std::vector<int>> comps;
    for (int start : nodes) {
        if (seen[start]) continue;
        std::vector<int> comp{start}, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : nodes)
                if (!seen[y] && rs.adjacent(x, y)) {
                    seen[y] = true;
                    comp.push_back(y);
                    stack.push_back(y);
                }
        }
        comps.push_back(std::move(comp));
    }
    return finish(std::move(comps));
}

ComponentDecomposition counting_components(const RootSystem& rs, const ParabolicSelector& I) {
    ComponentDecomposition d = decompose(rs, I);
    const int l = rs.rank();
    if (rs.family() != Family::D || !I.contains(l - 2) || !I.contains(l - 1)) return d;
    std::vector<std::vector<int>> comps;
    std::vector<int> fork;
    for (const auto& c : d.components) {
        bool has = std::find(c.begin(), c.end(), l - 2) != c.end() || std::find(c.begin(), c.end(), l - 1) != c.end();
        if (has) fork.insert(fork.end(), c.begin(), c.end());
        else comps.push_back(c);
    }
    std::sort(fork.begin(), fork.end());
    fork.erase(std::unique(fork.begin(), fork.end()), fork.end());
    comps.push_back(fork);
    return finish(std::move(comps));
}

std::vector<int> l_values(const RootSystem& rs, const ParabolicSelector& I) {
    ComponentDecomposition d = counting_components(rs, I);
    std::vector<int> out;
    int acc = 0;
    for (int j = 0; j < d.count(); ++j) {
        int v = d.minima[j] - acc;
        bool last = j + 1 == d.count();
        if (rs.family() == Family::D && last && d.components[j] == std::vector<int>{rs.rank() - 1}) --v;
        out.push_back(v);
        acc += d.sizes[j];
    }
    return out;
}

int fork_count(const RootSystem& rs, const ParabolicSelector& I) {
    const int l = rs.rank();
    return (I.contains(l - 2) ? 1 : 0) + (I.contains(l - 1) ? 1 : 0);
}

}  // namespace parideals
