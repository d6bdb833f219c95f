#pragma once

#include "parideals/components.hpp"
#include "parideals/diagrams.hpp"
#include "parideals/exact.hpp"
#include "parideals/ideals.hpp"
#include "parideals/rootsys.hpp"

#include <string>
#include <vector>

namespace parideals {

enum class CountMethod { ClosedForm, BruteForce, Both };

const char* method_name(CountMethod m);
CountMethod parse_method(const std::string& s);

struct CountReport {
    RootSystemType type;
    ParabolicSelector I;
    BigInt count_all = 0;
    BigInt count_abelian = 0;
    CountMethod method = CountMethod::BruteForce;
    bool agreement = true;

    bool operator==(const CountReport&) const = default;
};

BigInt count_ideals_formula(const RootSystem& rs, const ParabolicSelector& I);
BigInt count_abelian_formula(const RootSystem& rs, const ParabolicSelector& I);

// The tau bound for a diagram of shape_of(rs, I); bullet diagrams are judged through their
// nw counterpart.
bool abelian_diagram_condition(const RootSystem& rs, const ParabolicSelector& I, const Subdiagram& s);
BigInt count_abelian_via_diagrams(const RootSystem& rs, const ParabolicSelector& I);

// Brute force where the bitset capacity allows it, closed forms where they exist.
CountReport count_report(const RootSystem& rs, const ParabolicSelector& I);

// All subsets of Pi, lexicographic in their sorted index lists (the empty set first).
std::vector<ParabolicSelector> all_subsets(int rank);
// threads = 0 uses the hardware concurrency.
std::vector<CountReport> full_census(const RootSystem& rs, unsigned threads = 0);

}  // namespace parideals
