#pragma once

#include "parideals/exact.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace parideals {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType {
    Family family = Family::A;
    int rank = 1;

    bool operator==(const RootSystemType&) const = default;
};

char family_letter(Family f);
Family parse_family(const std::string& s);
std::string type_name(const RootSystemType& t);
bool is_classical(Family f);

// Coordinates over the simple roots alpha_1..alpha_l (stored 0-based).
struct Root {
    std::vector<int> coeffs;

    Root() = default;
    explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}

    static Root simple(int rank, int i);

    int size() const { return static_cast<int>(coeffs.size()); }
    int operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
    int height() const;
    bool is_positive() const;
    bool is_zero() const;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;

    RationalVector to_vector() const;
    // "a1+2a2" style; "0" for the zero vector.
    std::string to_string() const;
};

struct RootHash {
    std::size_t operator()(const Root& r) const noexcept;
};

class RootSystem {
public:
    static RootSystem build(const RootSystemType& t);

    const RootSystemType& type() const { return type_; }
    Family family() const { return type_.family; }
    int rank() const { return type_.rank; }

    // cartan[i][j] = 2(a_i,a_j)/(a_i,a_i)
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const RationalMatrix& gram() const { return gram_; }
    const Rational& length_sq(int i) const { return len2_[static_cast<std::size_t>(i)]; }
    // (a_i,a_i) divided by the smallest simple squared length: 1, 2 or 3.
    int length_ratio(int i) const { return ratio_[static_cast<std::size_t>(i)]; }
    bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    const Root& positive_root(int idx) const { return positive_[static_cast<std::size_t>(idx)]; }
    // Index among positive roots, or -1.
    int index_of(const Root& r) const;
    bool is_root(const Root& r) const;

    const Root& highest_root() const { return positive_.back(); }
    // n_i for i = 1..l at positions 0..l-1.
    const std::vector<int>& marks() const { return marks_; }
    // n_0 = 1 for index 0, n_i for i >= 1.
    int affine_mark(int i) const { return i == 0 ? 1 : marks_[static_cast<std::size_t>(i - 1)]; }
    // theta-check in the coroot basis.
    const std::vector<int>& highest_coroot() const { return theta_coroot_; }

    // omega_i with (omega_i, a_j) = delta_ij, in simple-root coordinates.
    const std::vector<RationalVector>& fundamental_coweights() const { return coweights_; }
    // Alcove vertices: index 0 is the origin, index i >= 1 is omega_i / n_i.
    const std::vector<RationalVector>& alcove_vertices() const { return vertices_; }

    // <beta, a_i-check> for a root beta given by coefficients.
    int cartan_pairing(const Root& beta, int i) const;
    // s_i applied to an integer coefficient vector.
    Root simple_reflect(int i, const Root& beta) const;
    // beta expressed in the coroot basis (beta-check coordinates); requires beta in Delta.
    std::vector<int> coroot_coords(const Root& beta) const;

private:
    RootSystemType type_;
    std::vector<std::vector<int>> cartan_;
    RationalMatrix gram_;
    std::vector<Rational> len2_;
    std::vector<int> ratio_;
    std::vector<Root> positive_;
    std::unordered_map<Root, int, RootHash> index_;
    std::vector<int> marks_;
    std::vector<int> theta_coroot_;
    std::vector<RationalVector> coweights_;
    std::vector<RationalVector> vertices_;
};

std::optional<Root> sum_root(const RootSystem& rs, const Root& a, const Root& b);
Rational pairing(const RootSystem& rs, const RationalVector& x, const RationalVector& y);
Rational pairing(const RootSystem& rs, const Root& a, const Root& b);
RationalVector coroot(const RootSystem& rs, const Root& a);
RationalVector reflect(const RootSystem& rs, const Root& a, const RationalVector& x);

}  // namespace parideals
