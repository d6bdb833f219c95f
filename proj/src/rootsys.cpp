#include "parideals/rootsys.hpp"
#include "parideals/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <tuple>

namespace parideals {

namespace {

constexpr int kMaxRank = 64;

struct Edge {
    int i;
    int j;
    int mult;
};

void validate(const RootSystemType& t) {
    const int l = t.rank;
    bool ok = false;
    switch (t.family) {
    case Family::A: ok = l >= 1; break;
    case Family::B: ok = l >= 2; break;
    case Family::C: ok = l >= 2; break;
    case Family::D: ok = l >= 3; break;
    case Family::E: ok = l >= 6 && l <= 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
    }
    if (!ok || l > kMaxRank)
        throw Error(ErrorCode::InvalidRank, "rank " + std::to_string(l) + " not valid for type " +
                                                std::string(1, family_letter(t.family)));
}

void diagram(const RootSystemType& t, std::vector<Rational>& len2, std::vector<Edge>& edges) {
    const int l = t.rank;
    len2.assign(static_cast<std::size_t>(l), Rational(2));
    edges.clear();
    auto chain = [&](int from, int to) {
        for (int i = from; i + 1 <= to; ++i) edges.push_back({i, i + 1, 1});
    };
    switch (t.family) {
    case Family::A:
        chain(0, l - 1);
        break;
    case Family::B:
        chain(0, l - 2);
        len2[l - 1] = 1;
        edges.push_back({l - 2, l - 1, 2});
        break;
    case Family::C:
        chain(0, l - 2);
        for (int i = 0; i < l - 1; ++i) len2[i] = 1;
        edges.push_back({l - 2, l - 1, 2});
        break;
    case Family::D:
        chain(0, l - 2);
        edges.push_back({l - 3, l - 1, 1});
        break;
    case Family::E:
        edges.push_back({0, 2, 1});
        edges.push_back({2, 3, 1});
        edges.push_back({1, 3, 1});
        chain(3, l - 1);
        break;
    case Family::F:
        len2[2] = 1;
        len2[3] = 1;
        edges.push_back({0, 1, 1});
        edges.push_back({1, 2, 2});
        edges.push_back({2, 3, 1});
        break;
    case Family::G:
        len2[0] = Rational(2, 3);
        edges.push_back({0, 1, 3});
        break;
    }
}

int to_int(const Rational& q) {
    if (denominator(q) != 1) throw Error(ErrorCode::InvalidArgs, "expected integer, got " + to_string(q));
    return numerator(q).convert_to<int>();
}

}  // namespace

char family_letter(Family f) {
    return "ABCDEFG"[static_cast<int>(f)];
}

Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
    }
    throw Error(ErrorCode::InvalidArgs, "unknown root system type '" + s + "'");
}

std::string type_name(const RootSystemType& t) {
    return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

bool is_classical(Family f) {
    return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

Root Root::simple(int rank, int i) {
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    c[static_cast<std::size_t>(i)] = 1;
    return Root(std::move(c));
}

int Root::height() const {
    int h = 0;
    for (int v : coeffs) h += v;
    return h;
}

bool Root::is_positive() const {
    bool nonzero = false;
    for (int v : coeffs) {
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    return nonzero;
}

bool Root::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int v) { return v == 0; });
}

Root Root::operator-() const {
    Root r(*this);
    for (int& v : r.coeffs) v = -v;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

RationalVector Root::to_vector() const {
    RationalVector v;
    v.reserve(coeffs.size());
    for (int c : coeffs) v.emplace_back(c);
    return v;
}

std::string Root::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        int c = coeffs[i];
        if (c == 0) continue;
        if (c < 0) os << '-';
        else if (!first) os << '+';
        if (c != 1 && c != -1) os << (c < 0 ? -c : c);
        os << 'a' << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : r.coeffs) {
        h ^= static_cast<std::size_t>(v + 0x9e3779b9);
        h *= 1099511628211ull;
    }
    return h;
}

RootSystem RootSystem::build(const RootSystemType& t) {
    validate(t);
    RootSystem rs;
    rs.type_ = t;
    const int l = t.rank;

    std::vector<Edge> edges;
    diagram(t, rs.len2_, edges);
    rs.gram_ = zero_matrix(l, l);
    for (int i = 0; i < l; ++i) rs.gram_[i][i] = rs.len2_[i];
    for (const Edge& e : edges) {
        Rational v = -Rational(e.mult) * std::min(rs.len2_[e.i], rs.len2_[e.j]) / 2;
        rs.gram_[e.i][e.j] = v;
        rs.gram_[e.j][e.i] = v;
    }
    rs.cartan_.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) rs.cartan_[i][j] = to_int(2 * rs.gram_[i][j] / rs.gram_[i][i]);
    Rational shortest = *std::min_element(rs.len2_.begin(), rs.len2_.end());
    for (int i = 0; i < l; ++i) rs.ratio_.push_back(to_int(rs.len2_[i] / shortest));

    // W-orbit of the simple roots.
    std::unordered_map<Root, int, RootHash> seen;
    std::deque<Root> queue;
    for (int i = 0; i < l; ++i) {
        Root s = Root::simple(l, i);
        seen.emplace(s, 0);
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Root b = queue.front();
        queue.pop_front();
        for (int i = 0; i < l; ++i) {
            Root c = rs.simple_reflect(i, b);
            if (seen.emplace(c, 0).second) queue.push_back(c);
        }
    }
    for (const auto& kv : seen)
        if (kv.first.is_positive()) rs.positive_.push_back(kv.first);
    std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.coeffs < b.coeffs;
    });
    for (int i = 0; i < rs.num_positive(); ++i) rs.index_.emplace(rs.positive_[i], i);

    rs.marks_ = rs.highest_root().coeffs;
    rs.theta_coroot_ = rs.coroot_coords(rs.highest_root());

    RationalMatrix ginv = inverse(rs.gram_);
    rs.vertices_.push_back(RationalVector(l, Rational(0)));
    for (int i = 0; i < l; ++i) {
        RationalVector w(l);
        for (int k = 0; k < l; ++k) w[k] = ginv[k][i];
        rs.coweights_.push_back(w);
        rs.vertices_.push_back(Rational(1, rs.marks_[i]) * w);
    }
    return rs;
}

int RootSystem::index_of(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const {
    if (r.size() != rank()) return false;
    if (r.is_positive()) return index_.count(r) > 0;
    return index_.count(-r) > 0;
}

int RootSystem::cartan_pairing(const Root& beta, int i) const {
    int c = 0;
    for (int j = 0; j < rank(); ++j) c += beta[j] * cartan_[i][j];
    return c;
}

Root RootSystem::simple_reflect(int i, const Root& beta) const {
    Root r(beta);
    r.coeffs[static_cast<std::size_t>(i)] -= cartan_pairing(beta, i);
    return r;
}

std::vector<int> RootSystem::coroot_coords(const Root& beta) const {
    if (!is_root(beta)) throw Error(ErrorCode::NotARoot, beta.to_string());
    Rational n2 = pairing(*this, beta, beta);
    std::vector<int> c(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) c[i] = to_int(Rational(beta[i]) * len2_[i] / n2);
    return c;
}

std::optional<Root> sum_root(const RootSystem& rs, const Root& a, const Root& b) {
    if (!rs.is_root(a)) throw Error(ErrorCode::NotARoot, a.to_string());
    if (!rs.is_root(b)) throw Error(ErrorCode::NotARoot, b.to_string());
    Root s = a + b;
    if (rs.is_root(s)) return s;
    return std::nullopt;
}

Rational pairing(const RootSystem& rs, const RationalVector& x, const RationalVector& y) {
    const auto& g = rs.gram();
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0 && g[i][j] != 0) row += g[i][j] * y[j];
        s += x[i] * row;
    }
    return s;
}

Rational pairing(const RootSystem& rs, const Root& a, const Root& b) {
    return pairing(rs, a.to_vector(), b.to_vector());
}

RationalVector coroot(const RootSystem& rs, const Root& a) {
    if (!rs.is_root(a)) throw Error(ErrorCode::NotARoot, a.to_string());
    return (Rational(2) / pairing(rs, a, a)) * a.to_vector();
}

RationalVector reflect(const RootSystem& rs, const Root& a, const RationalVector& x) {
    if (!rs.is_root(a)) throw Error(ErrorCode::NotARoot, a.to_string());
    RationalVector av = a.to_vector();
    Rational c = 2 * pairing(rs, av, x) / pairing(rs, av, av);
    return x - c * av;
}

}  // namespace parideals
