#include "parideals/diagrams.hpp"
#include "parideals/components.hpp"
#include "parideals/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace parideals {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw Error(ErrorCode::MalformedShape, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::MalformedShape, "bad integer '" + s + "'");
    }
}

std::pair<int, int> parse_pair(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw Error(ErrorCode::MalformedShape, "expected a:b, got '" + s + "'");
    return {parse_int(parts[0]), parse_int(parts[1])};
}

void check_l_list(const std::vector<int>& l_list, int max_value) {
    for (std::size_t i = 0; i < l_list.size(); ++i) {
        if (l_list[i] < 1 || l_list[i] > max_value)
            throw Error(ErrorCode::InvalidArgs, "added box index " + std::to_string(l_list[i]) + " out of range");
        if (i > 0 && l_list[i] <= l_list[i - 1])
            throw Error(ErrorCode::InvalidArgs, "added box indices must increase");
    }
}

// Rows processed bottom-up; state is the rightmost selected column below.
template <class Emit>
void enumerate_rows(const std::vector<Row>& rows, int r, int reach, std::vector<int>& counts, Emit& emit) {
    if (r < 0) {
        emit(counts);
        return;
    }
    const Row& row = rows[r];
    const int start = row.offset + 1;
    int need = std::clamp(reach - start + 1, 0, row.length);
    for (int c = need; c <= row.length; ++c) {
        counts[r] = c;
        int next = c > 0 ? std::max(reach, row.offset + c) : reach;
        enumerate_rows(rows, r - 1, next, counts, emit);
    }
}

}  // namespace

namespace detail {

BigInt t_prime_extended(long p, long q) {
    if (q < 0) return 0;
    if (p == q - 1) return catalan(q);
    return t_prime_formula(p, q);
}

}  // namespace detail

std::vector<Row> DiagramShape::effective_rows() const {
    std::vector<Row> eff = rows;
    for (const Row& r : eff)
        if (r.length < 0 || r.offset < 0) throw Error(ErrorCode::MalformedShape, "negative row offset or length");
    std::vector<Box> boxes = added_boxes;
    std::sort(boxes.begin(), boxes.end());
    for (const Box& b : boxes) {
        if (b.row >= 1 && b.row <= static_cast<int>(eff.size())) {
            Row& r = eff[b.row - 1];
            if (b.col != r.offset || r.length == 0)
                throw Error(ErrorCode::MalformedShape, "added box not adjacent to its row");
            --r.offset;
            ++r.length;
        } else if (b.row == static_cast<int>(eff.size()) + 1) {
            eff.push_back(Row{b.col - 1, 1});
        } else {
            throw Error(ErrorCode::MalformedShape, "added box in row " + std::to_string(b.row));
        }
    }
    int lo = 0;
    bool any = false;
    for (const Row& r : eff) {
        if (r.length == 0) continue;
        lo = any ? std::min(lo, r.offset) : r.offset;
        any = true;
    }
    for (Row& r : eff) {
        r.offset -= lo;
        if (r.offset < 0) r.offset = 0;
    }
    return eff;
}

std::vector<Box> DiagramShape::cells() const {
    std::vector<Box> out;
    std::vector<Row> eff = effective_rows();
    for (std::size_t r = 0; r < eff.size(); ++r)
        for (int k = 1; k <= eff[r].length; ++k) out.push_back(Box{static_cast<int>(r) + 1, eff[r].offset + k});
    std::sort(out.begin(), out.end());
    return out;
}

int DiagramShape::box_count() const {
    return static_cast<int>(cells().size());
}

std::string to_text(const DiagramShape& shape) {
    std::ostringstream os;
    os << "rows=";
    for (std::size_t i = 0; i < shape.rows.size(); ++i)
        os << (i ? "," : "") << shape.rows[i].offset << ':' << shape.rows[i].length;
    os << ";added=";
    for (std::size_t i = 0; i < shape.added_boxes.size(); ++i)
        os << (i ? "," : "") << shape.added_boxes[i].row << ':' << shape.added_boxes[i].col;
    os << ";rev=";
    if (shape.reversal_columns) os << shape.reversal_columns->first << ':' << shape.reversal_columns->second;
    return os.str();
}

DiagramShape shape_from_text(const std::string& text) {
    auto sections = split(text, ';');
    if (sections.size() != 3) throw Error(ErrorCode::MalformedShape, "expected rows=...;added=...;rev=...");
    const char* keys[] = {"rows=", "added=", "rev="};
    std::vector<std::string> bodies;
    for (int i = 0; i < 3; ++i) {
        const std::string key = keys[i];
        if (sections[i].compare(0, key.size(), key) != 0)
            throw Error(ErrorCode::MalformedShape, "missing section " + key);
        bodies.push_back(sections[i].substr(key.size()));
    }
    DiagramShape shape;
    if (!bodies[0].empty())
        for (const auto& item : split(bodies[0], ',')) {
            auto [o, len] = parse_pair(item);
            shape.rows.push_back(Row{o, len});
        }
    if (!bodies[1].empty())
        for (const auto& item : split(bodies[1], ',')) {
            auto [r, c] = parse_pair(item);
            shape.added_boxes.push_back(Box{r, c});
        }
    if (!bodies[2].empty()) {
        auto [a, b] = parse_pair(bodies[2]);
        if (b != a + 1 || a < 1) throw Error(ErrorCode::MalformedShape, "reversal columns must be adjacent");
        shape.reversal_columns = std::make_pair(a, b);
    }
    shape.effective_rows();
    return shape;
}

Subdiagram to_subdiagram(const DiagramShape& shape, const NWDiagram& d) {
    std::vector<Row> eff = shape.effective_rows();
    if (d.counts.size() != eff.size()) throw Error(ErrorCode::MalformedShape, "row count mismatch");
    Subdiagram s;
    for (std::size_t r = 0; r < eff.size(); ++r) {
        if (d.counts[r] < 0 || d.counts[r] > eff[r].length)
            throw Error(ErrorCode::MalformedShape, "row selection exceeds the row");
        for (int k = 1; k <= d.counts[r]; ++k) s.cells.push_back(Box{static_cast<int>(r) + 1, eff[r].offset + k});
    }
    std::sort(s.cells.begin(), s.cells.end());
    return s;
}

bool is_nw(const DiagramShape& shape, const Subdiagram& s) {
    std::vector<Box> all = shape.cells();
    std::set<Box> sel(s.cells.begin(), s.cells.end());
    for (const Box& b : s.cells)
        if (!std::binary_search(all.begin(), all.end(), b)) return false;
    for (const Box& b : s.cells)
        for (const Box& c : all)
            if (c.row <= b.row && c.col <= b.col && !sel.count(c)) return false;
    return true;
}

Subdiagram swap_columns(const Subdiagram& s, int a) {
    Subdiagram out;
    for (Box b : s.cells) {
        if (b.col == a) b.col = a + 1;
        else if (b.col == a + 1) b.col = a;
        out.cells.push_back(b);
    }
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

int tau(const Subdiagram& s, int row) {
    int t = 0;
    for (const Box& b : s.cells)
        if (b.row == row) t = std::max(t, b.col);
    return t;
}

std::vector<NWDiagram> nw_diagrams(const DiagramShape& shape) {
    std::vector<Row> eff = shape.effective_rows();
    std::vector<NWDiagram> out;
    std::vector<int> counts(eff.size(), 0);
    auto emit = [&](const std::vector<int>& c) { out.push_back(NWDiagram{c}); };
    enumerate_rows(eff, static_cast<int>(eff.size()) - 1, 0, counts, emit);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subdiagram> s_diagrams(const DiagramShape& shape) {
    std::vector<Subdiagram> out;
    for (const NWDiagram& d : nw_diagrams(shape)) out.push_back(to_subdiagram(shape, d));
    if (shape.reversal_columns) {
        std::vector<Box> all = shape.cells();
        std::set<Subdiagram> base(out.begin(), out.end());
        std::vector<Subdiagram> extra;
        for (const Subdiagram& s : out) {
            Subdiagram t = swap_columns(s, shape.reversal_columns->first);
            bool inside = std::all_of(t.cells.begin(), t.cells.end(),
                                      [&](const Box& b) { return std::binary_search(all.begin(), all.end(), b); });
            if (inside && !base.count(t)) extra.push_back(std::move(t));
        }
        out.insert(out.end(), extra.begin(), extra.end());
    }
    return out;
}

BigInt nw_count(const DiagramShape& shape) {
    if (shape.reversal_columns) return BigInt(s_diagrams(shape).size());
    std::vector<Row> eff = shape.effective_rows();
    std::map<int, BigInt> states{{0, BigInt(1)}};
    for (int r = static_cast<int>(eff.size()) - 1; r >= 0; --r) {
        const Row& row = eff[r];
        std::map<int, BigInt> next;
        for (const auto& [reach, ways] : states) {
            int need = std::clamp(reach - row.offset, 0, row.length);
            for (int c = need; c <= row.length; ++c) {
                int m = c > 0 ? std::max(reach, row.offset + c) : reach;
                next[m] += ways;
            }
        }
        states = std::move(next);
    }
    BigInt total = 0;
    for (const auto& kv : states) total += kv.second;
    return total;
}

DiagramShape staircase_shape(int p) {
    if (p < 0) throw Error(ErrorCode::InvalidArgs, "negative size");
    DiagramShape s;
    for (int i = 1; i <= p; ++i) s.rows.push_back(Row{0, p - i + 1});
    return s;
}

DiagramShape t_shape(int p, int q, const std::vector<int>& l_list) {
    if (q < 0 || q > p) throw Error(ErrorCode::InvalidArgs, "T_{p,q} needs 0 <= q <= p");
    check_l_list(l_list, q + 1);
    DiagramShape s;
    for (int i = 1; i <= q; ++i) s.rows.push_back(Row{i - 1, p + q - 2 * i + 1});
    for (int li : l_list) s.added_boxes.push_back(Box{li, li - 1});
    return s;
}

DiagramShape t_prime_shape(int p, int q) {
    if (q < 0 || q > p) throw Error(ErrorCode::InvalidArgs, "T'_{p,q} needs 0 <= q <= p");
    DiagramShape s;
    for (int i = 1; i <= q; ++i) s.rows.push_back(Row{0, p - i + 1});
    return s;
}

DiagramShape r_shape(int p, const std::vector<int>& l_list) {
    if (p < 0) throw Error(ErrorCode::InvalidArgs, "negative size");
    check_l_list(l_list, p + 1);
    DiagramShape s;
    for (int i = 1; i <= p; ++i) s.rows.push_back(Row{i - 1, p - i + 1});
    for (int li : l_list) s.added_boxes.push_back(Box{li, li - 1});
    return s;
}

DiagramShape make_shape(const ShapeParams& params) {
    DiagramShape s;
    switch (params.family) {
    case ShapeFamily::Staircase: s = staircase_shape(params.p); break;
    case ShapeFamily::T: s = t_shape(params.p, params.q); break;
    case ShapeFamily::TPrime: s = t_prime_shape(params.p, params.q); break;
    case ShapeFamily::TWithBoxes: s = t_shape(params.p, params.q, params.l_list); break;
    case ShapeFamily::R: s = r_shape(params.p); break;
    case ShapeFamily::RWithBoxes: s = r_shape(params.p, params.l_list); break;
    }
    if (params.reversal) s.reversal_columns = std::make_pair(params.reversal_column, params.reversal_column + 1);
    return s;
}

BigInt t_prime_formula(long p, long q) {
    if (q < 0 || q > p) throw Error(ErrorCode::InvalidArgs, "T'_{p,q} needs 0 <= q <= p");
    BigInt num = factorial(static_cast<unsigned>(p + q + 1)) * (p - q + 2);
    BigInt den = factorial(static_cast<unsigned>(q)) * factorial(static_cast<unsigned>(p + 2));
    if (num % den != 0) throw Error(ErrorCode::InvalidArgs, "non-integral T' value");
    return num / den;
}

BigInt t_boxes_formula(long p, long q, const std::vector<int>& l_list) {
    if (q < 0 || q > p) throw Error(ErrorCode::InvalidArgs, "T_{p,q} needs 0 <= q <= p");
    check_l_list(l_list, static_cast<int>(q) + 1);
    BigInt total = binomial(p + q, p);
    for (int lj : l_list) total += detail::t_prime_extended(p + q - lj, lj - 1);
    return total;
}

BigInt r_boxes_formula(long p, const std::vector<int>& l_list) {
    if (p < 0) throw Error(ErrorCode::InvalidArgs, "negative size");
    check_l_list(l_list, static_cast<int>(p) + 1);
    BigInt total = pow2(p);
    for (int lj : l_list) total += binomial(p, lj - 1);
    return total;
}

ShapeParams shape_of(const RootSystem& rs, const ParabolicSelector& I) {
    if (!is_classical(rs.family())) throw Error(ErrorCode::NotClassical, type_name(rs.type()));
    const int l = rs.rank();
    const int k = l - I.size();
    const bool last_in = I.contains(l - 1);
    ShapeParams sp;
    switch (rs.family()) {
    case Family::A:
        sp.family = ShapeFamily::Staircase;
        sp.p = sp.q = k;
        break;
    case Family::C:
        sp.family = ShapeFamily::T;
        sp.p = last_in ? k + 1 : k;
        sp.q = k;
        break;
    case Family::B: {
        std::vector<int> lv = l_values(rs, I);
        if (last_in && !lv.empty()) lv.pop_back();
        sp.family = ShapeFamily::TWithBoxes;
        sp.p = sp.q = k;
        sp.l_list = lv;
        break;
    }
    case Family::D: {
        std::vector<int> lv = l_values(rs, I);
        const int t = fork_count(rs, I);
        sp.family = ShapeFamily::TWithBoxes;
        if (t == 2) {
            if (!lv.empty()) lv.pop_back();
            sp.p = sp.q = k;
        } else {
            sp.p = k;
            sp.q = k - 1;
        }
        sp.l_list = lv;
        if (t == 0) {
            sp.reversal = true;
            sp.reversal_column = I.contains(0) ? k : k - 1;
        }
        break;
    }
    default:
        break;
    }
    return sp;
}

NWDiagram typeA_explicit_bijection(const RootSystem& rs, const ParabolicSelector& I, const Ideal& ideal) {
    if (rs.family() != Family::A) throw Error(ErrorCode::NotTypeA, type_name(rs.type()));
    const int l = rs.rank();
    // Row i holds t_{i,j} = a_i + ... + a_{l-j+1}; rows i, i+1 merge when a_i in I and
    // columns with end indices e, e+1 merge when a_{e+1} in I.
    std::vector<int> row_block(l + 1, 0), end_block(l + 2, 0);
    for (int i = 2; i <= l; ++i) row_block[i] = row_block[i - 1] + (I.contains(i - 2) ? 0 : 1);
    end_block[l] = 0;
    for (int e = l - 1; e >= 1; --e) end_block[e] = end_block[e + 1] + (I.contains(e) ? 0 : 1);

    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int idx = 0; idx < rs.num_positive(); ++idx) {
        const Root& r = rs.positive_root(idx);
        int s = 0, e = 0;
        bool levi = true;
        for (int i = 0; i < l; ++i)
            if (r[i]) {
                if (!s) s = i + 1;
                e = i + 1;
                if (!I.contains(i)) levi = false;
            }
        if (levi) continue;
        cells[{row_block[s], end_block[e]}].push_back(idx);
    }
    std::set<int> rows_used, cols_used;
    for (const auto& kv : cells) {
        rows_used.insert(kv.first.first);
        cols_used.insert(kv.first.second);
    }
    std::map<int, int> row_pos, col_pos;
    for (int r : rows_used) row_pos.emplace(r, static_cast<int>(row_pos.size()));
    for (int c : cols_used) col_pos.emplace(c, static_cast<int>(col_pos.size()));

    const int k = l - I.size();
    std::vector<std::vector<int>> state(k, std::vector<int>(k, -1));
    for (const auto& [key, members] : cells) {
        int r = row_pos[key.first], c = col_pos[key.second];
        if (r >= k || c >= k - r) throw Error(ErrorCode::InvalidArgs, "regrouped diagram is not a staircase");
        int in = 0;
        for (int idx : members) in += ideal.contains(idx) ? 1 : 0;
        if (in != 0 && in != static_cast<int>(members.size()))
            throw Error(ErrorCode::InvalidArgs, "ideal splits a regrouped box");
        state[r][c] = in ? 1 : 0;
    }
    NWDiagram d;
    d.counts.assign(k, 0);
    for (int r = 0; r < k; ++r) {
        int c = 0;
        while (c < k - r && state[r][c] == 1) ++c;
        for (int c2 = c; c2 < k - r; ++c2)
            if (state[r][c2] != 0) throw Error(ErrorCode::InvalidArgs, "selection is not flushed");
        d.counts[r] = c;
    }
    return d;
}

}  // namespace parideals
