#pragma once

#include "parideals/affweyl.hpp"
#include "parideals/ideals.hpp"
#include "parideals/rootsys.hpp"

#include <vector>

namespace parideals {

struct AlcoveImage {
    // Image of the vertex omega-bar_i at position i (i = 0..l).
    std::vector<RationalVector> vertices;
};

// F_J = conv(omega-bar_j : j not in J) for scale 1; scale 2 gives F'_J = 2A-bar cap H_J (J inside Pi).
struct FaceSpec {
    std::vector<int> J;  // affine indices 0..l, 0 meaning alpha_0
    int scale = 1;
};

// Node 0 is alpha_0 = -theta; nodes 1..l are the simple roots.
RationalMatrix affine_gram(const RootSystem& rs);
// Finite part of the affine simple root with index i (0 gives -theta).
RationalVector affine_normal(const RootSystem& rs, int i);
// n_J = product of the affine marks over J.
long long n_J(const RootSystem& rs, const std::vector<int>& J);

AlcoveImage alcove_image(const RootSystem& rs, const AffineWeylElement& w);
bool in_2A(const RootSystem& rs, const AffineWeylElement& w);
// simple_index is 0-based (alpha_{simple_index+1}).
bool face_on_hyperplane(const RootSystem& rs, const AffineWeylElement& w, int simple_index);

std::vector<RationalVector> face_vertices(const RootSystem& rs, const FaceSpec& face);
Rational face_volume_sq(const RootSystem& rs, const FaceSpec& face);
// Squared volume of the simplex spanned by the given points; DegenerateFace if flat.
Rational simplex_volume_sq(const RootSystem& rs, const std::vector<RationalVector>& points);
Rational distance_sq(const RootSystem& rs, const RationalVector& point, const std::vector<int>& J);

struct AbelianAlcove {
    Ideal ideal;
    AffineWeylElement w;
    // w^{-1}(I) as affine indices, sorted.
    std::vector<int> preimage;
    // Vertices of w(A-bar) cap H_I, i.e. the image of F_{preimage}.
    std::vector<RationalVector> face;
};

struct AbelianAlcoveCensus {
    std::vector<AbelianAlcove> entries;
    bool faces_distinct = true;
    bool faces_inside = true;
};

AbelianAlcoveCensus abelian_alcove_census(const RootSystem& rs, const ParabolicSelector& I);
// (1/n_I) * sum of n_{w^{-1}(I)} over the census.
Rational weighted_abelian_sum(const RootSystem& rs, const ParabolicSelector& I, const AbelianAlcoveCensus& census);

}  // namespace parideals
