#pragma once

#include "parideals/ideals.hpp"
#include "parideals/rootsys.hpp"

#include <compare>
#include <string>
#include <vector>

namespace parideals {

using IntMatrix = std::vector<std::vector<int>>;

// beta + k delta
struct AffineRoot {
    Root finite;
    int level = 0;

    bool is_positive() const { return level > 0 || (level == 0 && finite.is_positive()); }
    bool operator==(const AffineRoot&) const = default;
    auto operator<=>(const AffineRoot& o) const {
        if (auto c = level <=> o.level; c != 0) return c;
        return finite <=> o.finite;
    }
    std::string to_string() const;
};

// Sorted, duplicate free.
using InversionSet = std::vector<AffineRoot>;

void normalize(InversionSet& s);

// x -> v(x + tau). linear[i][j] is the coefficient of a_i in v(a_j); trans holds tau in
// the coroot basis.
struct AffineWeylElement {
    IntMatrix linear;
    IntMatrix linear_inv;
    std::vector<int> trans;

    bool operator==(const AffineWeylElement& o) const { return linear == o.linear && trans == o.trans; }
    bool operator<(const AffineWeylElement& o) const {
        if (linear != o.linear) return linear < o.linear;
        return trans < o.trans;
    }
};

AffineWeylElement identity_element(const RootSystem& rs);
// Linear part v, translation tau (coroot coordinates).
AffineWeylElement make_element(const RootSystem& rs, const IntMatrix& v, const std::vector<int>& tau);
AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& w1, const AffineWeylElement& w2);
AffineWeylElement inverse(const RootSystem& rs, const AffineWeylElement& w);
AffineWeylElement simple_reflection(const RootSystem& rs, int i);

AffineRoot simple_affine_root(const RootSystem& rs, int i);
// Index in 0..l if r is a simple affine root, else -1.
int simple_affine_index(const RootSystem& rs, const AffineRoot& r);

Root apply_linear(const IntMatrix& m, const Root& beta);
AffineRoot apply(const RootSystem& rs, const AffineWeylElement& w, const AffineRoot& r);
AffineRoot apply_inverse(const RootSystem& rs, const AffineWeylElement& w, const AffineRoot& r);
RationalVector apply_to_point(const RootSystem& rs, const AffineWeylElement& w, const RationalVector& x);
// tau in simple-root coordinates.
RationalVector translation_vector(const RootSystem& rs, const std::vector<int>& tau);
// (beta, tau) for tau in the coroot basis.
int root_coweight_pairing(const RootSystem& rs, const Root& beta, const std::vector<int>& tau);

// Greedy descent, smallest simple index first; w = s_{i1} ... s_{ik}.
std::vector<int> reduced_word(const RootSystem& rs, const AffineWeylElement& w);
int length(const RootSystem& rs, const AffineWeylElement& w);
AffineWeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

InversionSet inversions(const RootSystem& rs, const AffineWeylElement& w);
InversionSet L_phi(const RootSystem& rs, const ParabolicSelector& I, const Ideal& ideal);
AffineWeylElement element_from_inversions(const RootSystem& rs, const InversionSet& L);
AffineWeylElement w_phi(const RootSystem& rs, const Ideal& ideal);
// Phi_w = {alpha : -alpha + delta in N(w)}
std::vector<Root> phi_w(const RootSystem& rs, const AffineWeylElement& w);

bool is_borel_compatible(const RootSystem& rs, const AffineWeylElement& w);
bool is_I_compatible(const RootSystem& rs, const AffineWeylElement& w, const ParabolicSelector& I);
ParabolicSelector I_w(const RootSystem& rs, const AffineWeylElement& w);

std::vector<Root> d_tau(const RootSystem& rs, const std::vector<int>& tau);
bool in_D(const RootSystem& rs, const std::vector<int>& tau);
bool in_D_tilde(const RootSystem& rs, const std::vector<int>& tau, const IntMatrix& v);
// All of D, sorted.
std::vector<std::vector<int>> enumerate_D(const RootSystem& rs);

// Finite Weyl group as matrices; CapacityExceeded above max_order.
std::vector<IntMatrix> weyl_group(const RootSystem& rs, std::size_t max_order = 100000);
std::vector<AffineWeylElement> elements_up_to_length(const RootSystem& rs, int max_length);

}  // namespace parideals
