#pragma once

#include "parideals/exact.hpp"
#include "parideals/ideals.hpp"
#include "parideals/rootsys.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parideals {

// Row r occupies columns offset+1 .. offset+length.
struct Row {
    int offset = 0;
    int length = 0;
    bool operator==(const Row&) const = default;
};

// 1-based row and column.
struct Box {
    int row = 0;
    int col = 0;
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

struct DiagramShape {
    std::vector<Row> rows;
    // Boxes (l_i, l_i - 1) in the coordinates of rows.
    std::vector<Box> added_boxes;
    // Columns (a, a+1) of the effective shape exchanged by the bullet rule.
    std::optional<std::pair<int, int>> reversal_columns;

    // Rows with added boxes merged, shifted so the leftmost column is 1.
    std::vector<Row> effective_rows() const;
    std::vector<Box> cells() const;
    int box_count() const;

    bool operator==(const DiagramShape&) const = default;
};

// Compact text form: "rows=0:3,0:2;added=2:1;rev=1:2" (empty sections allowed).
std::string to_text(const DiagramShape& shape);
DiagramShape shape_from_text(const std::string& text);

// Boxes selected per effective row, flushed to the row start.
struct NWDiagram {
    std::vector<int> counts;
    bool operator==(const NWDiagram&) const = default;
    auto operator<=>(const NWDiagram&) const = default;
};

// Arbitrary box set; used for bullet diagrams, which need not be row prefixes.
struct Subdiagram {
    std::vector<Box> cells;  // sorted
    bool operator==(const Subdiagram&) const = default;
    auto operator<=>(const Subdiagram&) const = default;
};

Subdiagram to_subdiagram(const DiagramShape& shape, const NWDiagram& d);
bool is_nw(const DiagramShape& shape, const Subdiagram& s);
// Exchanges columns a and a+1.
Subdiagram swap_columns(const Subdiagram& s, int a);
// tau_h = max{k : (h,k) in S}, 0 for an empty row.
int tau(const Subdiagram& s, int row);

std::vector<NWDiagram> nw_diagrams(const DiagramShape& shape);
// nw-diagrams, plus bullet diagrams that are not nw when the shape has reversal columns.
std::vector<Subdiagram> s_diagrams(const DiagramShape& shape);
BigInt nw_count(const DiagramShape& shape);

enum class ShapeFamily { Staircase, T, TPrime, TWithBoxes, R, RWithBoxes };

struct ShapeParams {
    ShapeFamily family = ShapeFamily::Staircase;
    int p = 0;
    int q = 0;
    std::vector<int> l_list;
    bool reversal = false;
    // Left column of the exchanged pair; 0 when reversal is false.
    int reversal_column = 0;

    bool operator==(const ShapeParams&) const = default;
};

DiagramShape staircase_shape(int p);
DiagramShape t_shape(int p, int q, const std::vector<int>& l_list = {});
DiagramShape t_prime_shape(int p, int q);
DiagramShape r_shape(int p, const std::vector<int>& l_list = {});
DiagramShape make_shape(const ShapeParams& params);

BigInt t_prime_formula(long p, long q);
BigInt t_boxes_formula(long p, long q, const std::vector<int>& l_list);
BigInt r_boxes_formula(long p, const std::vector<int>& l_list);

ShapeParams shape_of(const RootSystem& rs, const ParabolicSelector& I);

NWDiagram typeA_explicit_bijection(const RootSystem& rs, const ParabolicSelector& I, const Ideal& ideal);

namespace detail {
// T'_{p,q} extended by T'_{p,q} = 0 for q < 0 and T'_{q-1,q} = C_q.
BigInt t_prime_extended(long p, long q);
}

}  // namespace parideals
