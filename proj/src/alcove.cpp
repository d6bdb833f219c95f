#include "parideals/alcove.hpp"
#include "parideals/error.hpp"

#include <algorithm>
#include <set>

namespace parideals {

namespace {

void check_J(const RootSystem& rs, const std::vector<int>& J) {
    std::set<int> seen;
    for (int j : J) {
        if (j < 0 || j > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "affine index " + std::to_string(j));
        if (!seen.insert(j).second) throw Error(ErrorCode::InvalidArgs, "repeated index in J");
    }
}

Rational pair_simple(const RootSystem& rs, int i, const RationalVector& p) {
    return pairing(rs, Root::simple(rs.rank(), i).to_vector(), p);
}

Rational pair_theta(const RootSystem& rs, const RationalVector& p) {
    return pairing(rs, rs.highest_root().to_vector(), p);
}

bool in_hyperplane(const RootSystem& rs, int simple_index, const RationalVector& p) {
    return pair_simple(rs, simple_index, p) == 0;
}

}  // namespace

RationalMatrix affine_gram(const RootSystem& rs) {
    const int l = rs.rank();
    RationalMatrix g = zero_matrix(l + 1, l + 1);
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j) g[i][j] = pairing(rs, affine_normal(rs, i), affine_normal(rs, j));
    return g;
}

RationalVector affine_normal(const RootSystem& rs, int i) {
    if (i < 0 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "affine index " + std::to_string(i));
    if (i == 0) return (-rs.highest_root()).to_vector();
    return Root::simple(rs.rank(), i - 1).to_vector();
}

long long n_J(const RootSystem& rs, const std::vector<int>& J) {
    long long p = 1;
    for (int j : J) p *= rs.affine_mark(j);
    return p;
}

AlcoveImage alcove_image(const RootSystem& rs, const AffineWeylElement& w) {
    AlcoveImage img;
    for (const RationalVector& v : rs.alcove_vertices()) img.vertices.push_back(apply_to_point(rs, w, v));
    return img;
}

bool in_2A(const RootSystem& rs, const AffineWeylElement& w) {
    for (const RationalVector& p : alcove_image(rs, w).vertices) {
        for (int i = 0; i < rs.rank(); ++i)
            if (pair_simple(rs, i, p) < 0) return false;
        if (pair_theta(rs, p) > 2) return false;
    }
    return true;
}

bool face_on_hyperplane(const RootSystem& rs, const AffineWeylElement& w, int simple_index) {
    if (simple_index < 0 || simple_index >= rs.rank())
        throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(simple_index + 1));
    AlcoveImage img = alcove_image(rs, w);
    int off = -1;
    for (int b = 0; b <= rs.rank(); ++b) {
        if (in_hyperplane(rs, simple_index, img.vertices[b])) continue;
        if (off >= 0) return false;
        off = b;
    }
    return off >= 0;
}

std::vector<RationalVector> face_vertices(const RootSystem& rs, const FaceSpec& face) {
    check_J(rs, face.J);
    if (face.scale != 1 && face.scale != 2) throw Error(ErrorCode::InvalidArgs, "scale must be 1 or 2");
    if (face.scale == 2 && std::find(face.J.begin(), face.J.end(), 0) != face.J.end())
        throw Error(ErrorCode::InvalidArgs, "scaled faces need J inside Pi");
    if (static_cast<int>(face.J.size()) > rs.rank()) throw Error(ErrorCode::InvalidArgs, "|J| exceeds the rank");
    std::vector<RationalVector> out;
    for (int j = 0; j <= rs.rank(); ++j)
        if (std::find(face.J.begin(), face.J.end(), j) == face.J.end())
            out.push_back(Rational(face.scale) * rs.alcove_vertices()[j]);
    return out;
}

Rational simplex_volume_sq(const RootSystem& rs, const std::vector<RationalVector>& points) {
    if (points.empty()) throw Error(ErrorCode::DegenerateFace, "no vertices");
    const std::size_t m = points.size() - 1;
    if (m == 0) return Rational(1);
    std::vector<RationalVector> edges;
    for (std::size_t k = 1; k <= m; ++k) edges.push_back(points[k] - points[0]);
    RationalMatrix g = zero_matrix(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) g[a][b] = g[b][a] = pairing(rs, edges[a], edges[b]);
    Rational det = determinant(g);
    if (det == 0) throw Error(ErrorCode::DegenerateFace, "vertices are affinely dependent");
    BigInt f = factorial(static_cast<unsigned>(m));
    return det / Rational(f * f);
}

Rational face_volume_sq(const RootSystem& rs, const FaceSpec& face) {
    return simplex_volume_sq(rs, face_vertices(rs, face));
}

Rational distance_sq(const RootSystem& rs, const RationalVector& point, const std::vector<int>& J) {
    check_J(rs, J);
    std::vector<RationalVector> normals;
    std::vector<Rational> rhs;
    for (int j : J) {
        if (j == 0) {
            normals.push_back(rs.highest_root().to_vector());
            rhs.emplace_back(1);
        } else {
            normals.push_back(Root::simple(rs.rank(), j - 1).to_vector());
            rhs.emplace_back(0);
        }
    }
    const std::size_t m = normals.size();
    if (m == 0) return Rational(0);
    RationalMatrix g = zero_matrix(m, m);
    RationalVector b(m), lambda;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < m; ++c) g[a][c] = pairing(rs, normals[a], normals[c]);
        b[a] = pairing(rs, normals[a], point) - rhs[a];
    }
    if (!solve(g, b, lambda)) throw Error(ErrorCode::EmptySubspace, "H_J is empty");
    Rational d = 0;
    for (std::size_t a = 0; a < m; ++a) d += lambda[a] * b[a];
    return d;
}

AbelianAlcoveCensus abelian_alcove_census(const RootSystem& rs, const ParabolicSelector& I) {
    AbelianAlcoveCensus census;
    const int l = rs.rank();
    std::set<std::vector<RationalVector>> faces;
    for (const Ideal& ideal : enumerate_ideals(rs, I)) {
        if (!is_abelian(rs, ideal)) continue;
        AbelianAlcove a;
        a.ideal = ideal;
        a.w = w_phi(rs, ideal);
        for (int i : I.indices()) {
            int idx = simple_affine_index(rs, apply_inverse(rs, a.w, simple_affine_root(rs, i + 1)));
            if (idx < 0) throw Error(ErrorCode::NotBorelCompatible, "w_Phi is not I-compatible");
            a.preimage.push_back(idx);
        }
        std::sort(a.preimage.begin(), a.preimage.end());
        AlcoveImage img = alcove_image(rs, a.w);
        for (int j = 0; j <= l; ++j)
            if (!std::binary_search(a.preimage.begin(), a.preimage.end(), j)) a.face.push_back(img.vertices[j]);

        for (const RationalVector& p : a.face) {
            bool ok = pair_theta(rs, p) <= 2;
            for (int i = 0; i < l; ++i) {
                Rational v = pair_simple(rs, i, p);
                if (v < 0 || (I.contains(i) && v != 0)) ok = false;
            }
            if (!ok) census.faces_inside = false;
        }
        if (static_cast<int>(a.face.size()) != l - I.size() + 1) census.faces_inside = false;
        std::vector<RationalVector> key = a.face;
        std::sort(key.begin(), key.end());
        if (!faces.insert(key).second) census.faces_distinct = false;
        census.entries.push_back(std::move(a));
    }
    return census;
}

Rational weighted_abelian_sum(const RootSystem& rs, const ParabolicSelector& I, const AbelianAlcoveCensus& census) {
    std::vector<int> affine_I;
    for (int i : I.indices()) affine_I.push_back(i + 1);
    Rational s = 0;
    for (const AbelianAlcove& a : census.entries) s += n_J(rs, a.preimage);
    return s / n_J(rs, affine_I);
}

}  // namespace parideals
