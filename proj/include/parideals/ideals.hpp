#pragma once

#include "parideals/exact.hpp"
#include "parideals/rootsys.hpp"

#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

namespace parideals {

// Enough for E8 (120 positive roots).
constexpr int kMaxPositiveRoots = 128;
using RootSet = std::bitset<kMaxPositiveRoots>;

// The subset I of simple roots, 0-based bit positions.
class ParabolicSelector {
public:
    ParabolicSelector() = default;
    explicit ParabolicSelector(std::uint64_t mask) : mask_(mask) {}

    // 1-based indices as written by users; IndexOutOfRange outside 1..rank.
    static ParabolicSelector from_indices(int rank, const std::vector<int>& one_based);
    static ParabolicSelector full(int rank);

    bool contains(int i) const { return (mask_ >> i) & 1u; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    std::uint64_t mask() const { return mask_; }
    std::vector<int> indices() const;
    std::vector<int> one_based() const;
    // "{1,3}" style.
    std::string to_string() const;

    bool operator==(const ParabolicSelector&) const = default;

private:
    std::uint64_t mask_ = 0;
};

struct Ideal {
    RootSet members;

    int size() const { return static_cast<int>(members.count()); }
    bool contains(int idx) const { return members.test(static_cast<std::size_t>(idx)); }
    std::vector<int> indices() const;
    bool operator==(const Ideal&) const = default;
};

// Cardinality first, then the sorted member index lists lexicographically.
bool ideal_less(const Ideal& a, const Ideal& b);

struct SimClasses {
    // Positive-root indices per class; classes ordered by their lowest member.
    std::vector<std::vector<int>> classes;
    // Class index for each positive root, -1 for roots of Delta_I.
    std::vector<int> class_of;
};

struct IdealCounts {
    std::uint64_t all = 0;
    std::uint64_t abelian = 0;
};

std::vector<Root> delta_I(const RootSystem& rs, const ParabolicSelector& I);
RootSet levi_positive(const RootSystem& rs, const ParabolicSelector& I);

Ideal close(const RootSystem& rs, const ParabolicSelector& I, const std::vector<Root>& seed);
std::vector<Ideal> enumerate_ideals(const RootSystem& rs, const ParabolicSelector& I);
// Same totals as enumerate_ideals without materializing the list.
IdealCounts count_ideals(const RootSystem& rs, const ParabolicSelector& I);

bool is_abelian(const RootSystem& rs, const Ideal& ideal);
std::vector<Root> minimal_roots(const RootSystem& rs, const ParabolicSelector& I, const Ideal& ideal);
SimClasses sim_classes(const RootSystem& rs, const ParabolicSelector& I);

// Re-checks both defining conditions of F_I directly.
bool is_valid_ideal(const RootSystem& rs, const ParabolicSelector& I, const Ideal& ideal);

std::vector<Root> ideal_roots(const RootSystem& rs, const Ideal& ideal);
Ideal ideal_from_roots(const RootSystem& rs, const std::vector<Root>& roots);

}  // namespace parideals
