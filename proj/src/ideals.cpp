#include "parideals/ideals.hpp"
#include "parideals/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace parideals {

namespace {

void check_capacity(const RootSystem& rs) {
    if (rs.num_positive() > kMaxPositiveRoots)
        throw Error(ErrorCode::CapacityExceeded,
                    type_name(rs.type()) + " has more than " + std::to_string(kMaxPositiveRoots) +
                        " positive roots");
}

bool supported_on(const Root& r, const ParabolicSelector& I) {
    for (int i = 0; i < r.size(); ++i)
        if (r[i] != 0 && !I.contains(i)) return false;
    return true;
}

// Per-(rs, I) tables shared by closure, enumeration and the abelian test.
struct Space {
    int n = 0;
    RootSet levi;
    std::vector<std::vector<int>> succ;
    std::vector<RootSet> sums;
    std::vector<RootSet> up;
    std::vector<int> reps;

    Space(const RootSystem& rs, const ParabolicSelector& I) {
        check_capacity(rs);
        n = rs.num_positive();
        levi = levi_positive(rs, I);
        succ.assign(n, {});
        sums.assign(n, RootSet());
        for (int a = 0; a < n; ++a) {
            const Root& ra = rs.positive_root(a);
            for (int b = 0; b < n; ++b) {
                const Root& rb = rs.positive_root(b);
                int s = rs.index_of(ra + rb);
                if (s >= 0) {
                    sums[a].set(b);
                    succ[a].push_back(s);
                }
                if (levi.test(b)) {
                    int d = rs.index_of(ra - rb);
                    if (d >= 0) succ[a].push_back(d);
                }
            }
        }
        up.assign(n, RootSet());
        for (int a = 0; a < n; ++a)
            if (!levi.test(a)) up[a] = closure(RootSet().set(a));
        SimClasses sc = sim_classes(rs, I);
        for (const auto& c : sc.classes) reps.push_back(c.front());
    }

    RootSet closure(RootSet s) const {
        std::vector<int> stack;
        for (int a = 0; a < n; ++a)
            if (s.test(a)) stack.push_back(a);
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : succ[a])
                if (!s.test(b)) {
                    s.set(b);
                    stack.push_back(b);
                }
        }
        return s;
    }

    bool abelian(const RootSet& s) const {
        for (int a = 0; a < n; ++a)
            if (s.test(a) && (sums[a] & s).any()) return false;
        return true;
    }

    template <class Visit>
    void antichains(std::size_t start, const RootSet& cur, const RootSet& chosen, Visit& visit) const {
        for (std::size_t k = start; k < reps.size(); ++k) {
            int c = reps[k];
            if (cur.test(c) || (up[c] & chosen).any()) continue;
            RootSet next = cur | up[c];
            visit(next);
            RootSet ch = chosen;
            ch.set(c);
            antichains(k + 1, next, ch, visit);
        }
    }
};

}  // namespace

ParabolicSelector ParabolicSelector::from_indices(int rank, const std::vector<int>& one_based) {
    std::uint64_t m = 0;
    for (int i : one_based) {
        if (i < 1 || i > rank || i > 64)
            throw Error(ErrorCode::IndexOutOfRange,
                        "simple root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
        m |= std::uint64_t(1) << (i - 1);
    }
    return ParabolicSelector(m);
}

ParabolicSelector ParabolicSelector::full(int rank) {
    return ParabolicSelector(rank >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << rank) - 1);
}

int ParabolicSelector::size() const {
    return std::popcount(mask_);
}

std::vector<int> ParabolicSelector::indices() const {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
        if (contains(i)) v.push_back(i);
    return v;
}

std::vector<int> ParabolicSelector::one_based() const {
    std::vector<int> v = indices();
    for (int& i : v) ++i;
    return v;
}

std::string ParabolicSelector::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : one_based()) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<int> Ideal::indices() const {
    std::vector<int> v;
    for (int i = 0; i < kMaxPositiveRoots; ++i)
        if (members.test(i)) v.push_back(i);
    return v;
}

bool ideal_less(const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
}

std::vector<Root> delta_I(const RootSystem& rs, const ParabolicSelector& I) {
    std::vector<Root> out;
    for (const Root& r : rs.positive_roots())
        if (supported_on(r, I)) out.push_back(r);
    std::vector<Root> neg;
    for (const Root& r : out) neg.push_back(-r);
    out.insert(out.end(), neg.begin(), neg.end());
    return out;
}

RootSet levi_positive(const RootSystem& rs, const ParabolicSelector& I) {
    check_capacity(rs);
    RootSet s;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (supported_on(rs.positive_root(i), I)) s.set(i);
    return s;
}

Ideal close(const RootSystem& rs, const ParabolicSelector& I, const std::vector<Root>& seed) {
    Space sp(rs, I);
    RootSet s;
    for (const Root& r : seed) {
        int idx = rs.index_of(r);
        if (idx < 0) throw Error(ErrorCode::NotARoot, r.to_string() + " is not a positive root");
        if (sp.levi.test(idx)) throw Error(ErrorCode::SeedIntersectsLevi, r.to_string());
        s.set(idx);
    }
    return Ideal{sp.closure(s)};
}

std::vector<Ideal> enumerate_ideals(const RootSystem& rs, const ParabolicSelector& I) {
    Space sp(rs, I);
    std::vector<Ideal> out{Ideal{}};
    auto visit = [&](const RootSet& s) { out.push_back(Ideal{s}); };
    sp.antichains(0, RootSet(), RootSet(), visit);
    std::sort(out.begin(), out.end(), ideal_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IdealCounts count_ideals(const RootSystem& rs, const ParabolicSelector& I) {
    Space sp(rs, I);
    IdealCounts c{1, 1};
    auto visit = [&](const RootSet& s) {
        ++c.all;
        if (sp.abelian(s)) ++c.abelian;
    };
    sp.antichains(0, RootSet(), RootSet(), visit);
    return c;
}

bool is_abelian(const RootSystem& rs, const Ideal& ideal) {
    const int n = rs.num_positive();
    for (int a = 0; a < n; ++a) {
        if (!ideal.contains(a)) continue;
        for (int b = a; b < n; ++b)
            if (ideal.contains(b) && rs.index_of(rs.positive_root(a) + rs.positive_root(b)) >= 0) return false;
    }
    return true;
}

std::vector<Root> minimal_roots(const RootSystem& rs, const ParabolicSelector&, const Ideal& ideal) {
    std::vector<Root> out;
    for (int b = 0; b < rs.num_positive(); ++b) {
        if (!ideal.contains(b)) continue;
        const Root& beta = rs.positive_root(b);
        bool minimal = true;
        for (const Root& alpha : rs.positive_roots()) {
            int d = rs.index_of(beta - alpha);
            if (d >= 0 && ideal.contains(d)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(beta);
    }
    return out;
}

SimClasses sim_classes(const RootSystem& rs, const ParabolicSelector& I) {
    const int n = rs.num_positive();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> levi(n);
    for (int a = 0; a < n; ++a) levi[a] = supported_on(rs.positive_root(a), I);
    for (int a = 0; a < n; ++a) {
        if (levi[a]) continue;
        for (int eta : I.indices()) {
            if (eta >= rs.rank()) continue;
            int b = rs.index_of(rs.positive_root(a) + Root::simple(rs.rank(), eta));
            if (b >= 0 && !levi[b]) {
                int x = find(a), y = find(b);
                if (x != y) parent[std::max(x, y)] = std::min(x, y);
            }
        }
    }
    SimClasses sc;
    sc.class_of.assign(n, -1);
    std::vector<int> slot(n, -1);
    for (int a = 0; a < n; ++a) {
        if (levi[a]) continue;
        int r = find(a);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(sc.classes.size());
            sc.classes.emplace_back();
        }
        sc.class_of[a] = slot[r];
        sc.classes[slot[r]].push_back(a);
    }
    return sc;
}

bool is_valid_ideal(const RootSystem& rs, const ParabolicSelector& I, const Ideal& ideal) {
    const int n = rs.num_positive();
    for (int a = n; a < kMaxPositiveRoots; ++a)
        if (ideal.contains(a)) return false;
    std::vector<Root> steps = rs.positive_roots();
    for (const Root& r : delta_I(rs, I))
        if (!r.is_positive()) steps.push_back(r);
    for (int a = 0; a < n; ++a) {
        if (!ideal.contains(a)) continue;
        const Root& alpha = rs.positive_root(a);
        if (supported_on(alpha, I)) return false;
        for (const Root& beta : steps) {
            int s = rs.index_of(alpha + beta);
            if (s >= 0 && !ideal.contains(s)) return false;
        }
    }
    return true;
}

std::vector<Root> ideal_roots(const RootSystem& rs, const Ideal& ideal) {
    std::vector<Root> out;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (ideal.contains(i)) out.push_back(rs.positive_root(i));
    return out;
}

Ideal ideal_from_roots(const RootSystem& rs, const std::vector<Root>& roots) {
    check_capacity(rs);
    Ideal id;
    for (const Root& r : roots) {
        int idx = rs.index_of(r);
        if (idx < 0) throw Error(ErrorCode::NotARoot, r.to_string() + " is not a positive root");
        id.members.set(idx);
    }
    return id;
}

}  // namespace parideals
