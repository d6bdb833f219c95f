#include "parideals/affweyl.hpp"
#include "parideals/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace parideals {

namespace {

IntMatrix identity_int(int n) {
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Matrix of the linear map m on the coroot basis.
std::vector<int> apply_on_coroots(const RootSystem& rs, const IntMatrix& m, const std::vector<int>& t) {
    const int l = rs.rank();
    std::vector<int> out(l, 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (m[i][j] == 0 || t[j] == 0) continue;
            int num = m[i][j] * rs.length_ratio(i);
            out[i] += num / rs.length_ratio(j) * t[j];
        }
    return out;
}

IntMatrix reflection_matrix(const RootSystem& rs, const Root& beta) {
    const int l = rs.rank();
    std::vector<int> bc = rs.coroot_coords(beta);
    IntMatrix m = identity_int(l);
    for (int j = 0; j < l; ++j) {
        // <a_j, beta-check>
        int c = 0;
        for (int i = 0; i < l; ++i) c += bc[i] * rs.cartan()[i][j];
        for (int i = 0; i < l; ++i) m[i][j] -= c * beta[i];
    }
    return m;
}

}  // namespace

std::string AffineRoot::to_string() const {
    return "(" + finite.to_string() + "," + std::to_string(level) + ")";
}

void normalize(InversionSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

AffineWeylElement identity_element(const RootSystem& rs) {
    AffineWeylElement w;
    w.linear = identity_int(rs.rank());
    w.linear_inv = w.linear;
    w.trans.assign(rs.rank(), 0);
    return w;
}

AffineWeylElement make_element(const RootSystem& rs, const IntMatrix& v, const std::vector<int>& tau) {
    const int l = rs.rank();
    RationalMatrix q = zero_matrix(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) q[i][j] = v[i][j];
    RationalMatrix qi = inverse(q);
    AffineWeylElement w;
    w.linear = v;
    w.linear_inv.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (denominator(qi[i][j]) != 1) throw Error(ErrorCode::InvalidArgs, "not a Weyl group element");
            w.linear_inv[i][j] = numerator(qi[i][j]).convert_to<int>();
        }
    w.trans = tau;
    return w;
}

AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& w1, const AffineWeylElement& w2) {
    AffineWeylElement w;
    w.linear = mul(w1.linear, w2.linear);
    w.linear_inv = mul(w2.linear_inv, w1.linear_inv);
    w.trans = apply_on_coroots(rs, w2.linear_inv, w1.trans);
    for (int i = 0; i < rs.rank(); ++i) w.trans[i] += w2.trans[i];
    return w;
}

AffineWeylElement inverse(const RootSystem& rs, const AffineWeylElement& w) {
    AffineWeylElement u;
    u.linear = w.linear_inv;
    u.linear_inv = w.linear;
    u.trans = apply_on_coroots(rs, w.linear, w.trans);
    for (int& t : u.trans) t = -t;
    return u;
}

AffineWeylElement simple_reflection(const RootSystem& rs, int i) {
    const int l = rs.rank();
    if (i < 0 || i > l)
        throw Error(ErrorCode::IndexOutOfRange, "affine simple index " + std::to_string(i) + " outside 0.." +
                                                    std::to_string(l));
    AffineWeylElement w;
    if (i == 0) {
        w.linear = reflection_matrix(rs, rs.highest_root());
        w.trans = rs.highest_coroot();
        for (int& t : w.trans) t = -t;
    } else {
        w.linear = reflection_matrix(rs, Root::simple(l, i - 1));
        w.trans.assign(l, 0);
    }
    w.linear_inv = w.linear;
    return w;
}

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
    const int l = rs.rank();
    if (i < 0 || i > l) throw Error(ErrorCode::IndexOutOfRange, "affine simple index " + std::to_string(i));
    if (i == 0) return AffineRoot{-rs.highest_root(), 1};
    return AffineRoot{Root::simple(l, i - 1), 0};
}

int simple_affine_index(const RootSystem& rs, const AffineRoot& r) {
    if (r.level == 1 && r.finite == -rs.highest_root()) return 0;
    if (r.level != 0) return -1;
    int found = -1;
    for (int i = 0; i < r.finite.size(); ++i) {
        if (r.finite[i] == 0) continue;
        if (r.finite[i] != 1 || found >= 0) return -1;
        found = i;
    }
    return found < 0 ? -1 : found + 1;
}

Root apply_linear(const IntMatrix& m, const Root& beta) {
    const std::size_t n = m.size();
    std::vector<int> out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        int b = beta.coeffs[j];
        if (b == 0) continue;
        for (std::size_t i = 0; i < n; ++i) out[i] += m[i][j] * b;
    }
    return Root(std::move(out));
}

int root_coweight_pairing(const RootSystem& rs, const Root& beta, const std::vector<int>& tau) {
    int s = 0;
    for (int j = 0; j < rs.rank(); ++j) {
        if (tau[j] == 0) continue;
        s += tau[j] * rs.cartan_pairing(beta, j);
    }
    return s;
}

AffineRoot apply(const RootSystem& rs, const AffineWeylElement& w, const AffineRoot& r) {
    return AffineRoot{apply_linear(w.linear, r.finite), r.level - root_coweight_pairing(rs, r.finite, w.trans)};
}

AffineRoot apply_inverse(const RootSystem& rs, const AffineWeylElement& w, const AffineRoot& r) {
    Root b = apply_linear(w.linear_inv, r.finite);
    int k = r.level + root_coweight_pairing(rs, b, w.trans);
    return AffineRoot{std::move(b), k};
}

RationalVector translation_vector(const RootSystem& rs, const std::vector<int>& tau) {
    RationalVector t(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) t[i] = Rational(2 * tau[i]) / rs.length_sq(i);
    return t;
}

RationalVector apply_to_point(const RootSystem& rs, const AffineWeylElement& w, const RationalVector& x) {
    RationalVector y = x + translation_vector(rs, w.trans);
    const int l = rs.rank();
    RationalVector out(l, Rational(0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (w.linear[i][j] != 0) out[i] += w.linear[i][j] * y[j];
    return out;
}

std::vector<int> reduced_word(const RootSystem& rs, const AffineWeylElement& w) {
    std::vector<int> word;
    AffineWeylElement cur = w;
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));
    for (;;) {
        int pick = -1;
        for (int i = 0; i <= rs.rank() && pick < 0; ++i)
            if (!apply_inverse(rs, cur, simple_affine_root(rs, i)).is_positive()) pick = i;
        if (pick < 0) break;
        word.push_back(pick);
        cur = compose(rs, gens[pick], cur);
    }
    return word;
}

int length(const RootSystem& rs, const AffineWeylElement& w) {
    return static_cast<int>(reduced_word(rs, w).size());
}

AffineWeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    AffineWeylElement w = identity_element(rs);
    for (int i : word) w = compose(rs, w, simple_reflection(rs, i));
    return w;
}

InversionSet inversions(const RootSystem& rs, const AffineWeylElement& w) {
    std::vector<int> word = reduced_word(rs, w);
    InversionSet out;
    AffineWeylElement prefix = identity_element(rs);
    for (int i : word) {
        out.push_back(apply(rs, prefix, simple_affine_root(rs, i)));
        prefix = compose(rs, prefix, simple_reflection(rs, i));
    }
    normalize(out);
    return out;
}

InversionSet L_phi(const RootSystem& rs, const ParabolicSelector&, const Ideal& ideal) {
    std::vector<Root> phi = ideal_roots(rs, ideal);
    std::set<Root> power(phi.begin(), phi.end());
    InversionSet out;
    for (int k = 1; !power.empty(); ++k) {
        for (const Root& b : power) out.push_back(AffineRoot{-b, k});
        std::set<Root> next;
        for (const Root& a : power)
            for (const Root& b : phi) {
                Root s = a + b;
                if (rs.is_root(s)) next.insert(s);
            }
        power = std::move(next);
    }
    normalize(out);
    return out;
}

AffineWeylElement element_from_inversions(const RootSystem& rs, const InversionSet& L) {
    InversionSet cur = L;
    normalize(cur);
    for (const AffineRoot& r : cur)
        if (!r.is_positive() || !rs.is_root(r.finite))
            throw Error(ErrorCode::NotAnInversionSet, r.to_string() + " is not a positive affine root");
    std::vector<int> word;
    const std::size_t steps = cur.size();
    while (!cur.empty()) {
        if (word.size() >= steps) throw Error(ErrorCode::NotAnInversionSet, "recursion exceeded |L| steps");
        int pick = -1;
        std::size_t pos = 0;
        for (std::size_t k = 0; k < cur.size() && pick < 0; ++k) {
            int idx = simple_affine_index(rs, cur[k]);
            if (idx >= 0) {
                pick = idx;
                pos = k;
            }
        }
        if (pick < 0) throw Error(ErrorCode::NotAnInversionSet, "no simple affine root in a nonempty set");
        AffineWeylElement s = simple_reflection(rs, pick);
        InversionSet next;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (k == pos) continue;
            AffineRoot img = apply(rs, s, cur[k]);
            if (!img.is_positive()) throw Error(ErrorCode::NotAnInversionSet, "reflection leaves the positive roots");
            next.push_back(std::move(img));
        }
        normalize(next);
        cur = std::move(next);
        word.push_back(pick);
    }
    AffineWeylElement w = from_word(rs, word);
    InversionSet check = L;
    normalize(check);
    if (inversions(rs, w) != check) throw Error(ErrorCode::NotAnInversionSet, "set is not N(w) for any w");
    return w;
}

AffineWeylElement w_phi(const RootSystem& rs, const Ideal& ideal) {
    return element_from_inversions(rs, L_phi(rs, ParabolicSelector(), ideal));
}

std::vector<Root> phi_w(const RootSystem& rs, const AffineWeylElement& w) {
    std::vector<Root> out;
    for (const AffineRoot& r : inversions(rs, w))
        if (r.level == 1) out.push_back(-r.finite);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_borel_compatible(const RootSystem& rs, const AffineWeylElement& w) {
    const int l = rs.rank();
    for (int i = 1; i <= l; ++i)
        if (!apply_inverse(rs, w, simple_affine_root(rs, i)).is_positive()) return false;
    for (int i = 0; i <= l; ++i) {
        AffineRoot img = apply(rs, w, simple_affine_root(rs, i));
        if (img.is_positive()) continue;
        if (img.level != -1 || !img.finite.is_positive()) return false;
    }
    return true;
}

ParabolicSelector I_w(const RootSystem& rs, const AffineWeylElement& w) {
    if (!is_borel_compatible(rs, w)) throw Error(ErrorCode::NotBorelCompatible, "I_w needs a Borel-compatible w");
    std::uint64_t m = 0;
    for (int i = 1; i <= rs.rank(); ++i)
        if (simple_affine_index(rs, apply_inverse(rs, w, simple_affine_root(rs, i))) >= 0)
            m |= std::uint64_t(1) << (i - 1);
    return ParabolicSelector(m);
}

bool is_I_compatible(const RootSystem& rs, const AffineWeylElement& w, const ParabolicSelector& I) {
    ParabolicSelector iw = I_w(rs, w);
    return (I.mask() & ~iw.mask()) == 0;
}

std::vector<Root> d_tau(const RootSystem& rs, const std::vector<int>& tau) {
    std::vector<Root> out;
    for (int i = 0; i < rs.rank(); ++i) {
        Root a = Root::simple(rs.rank(), i);
        if (root_coweight_pairing(rs, a, tau) == 0) out.push_back(a);
    }
    if (root_coweight_pairing(rs, rs.highest_root(), tau) == -1) out.push_back(-rs.highest_root());
    return out;
}

bool in_D(const RootSystem& rs, const std::vector<int>& tau) {
    for (int i = 0; i < rs.rank(); ++i)
        if (root_coweight_pairing(rs, Root::simple(rs.rank(), i), tau) > 1) return false;
    return root_coweight_pairing(rs, rs.highest_root(), tau) >= -2;
}

bool in_D_tilde(const RootSystem& rs, const std::vector<int>& tau, const IntMatrix& v) {
    if (!in_D(rs, tau)) return false;
    AffineWeylElement w = make_element(rs, v, tau);
    for (const RationalVector& p : rs.alcove_vertices()) {
        RationalVector q = apply_to_point(rs, w, p);
        for (int i = 0; i < rs.rank(); ++i)
            if (pairing(rs, Root::simple(rs.rank(), i).to_vector(), q) < 0) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_D(const RootSystem& rs) {
    const int l = rs.rank();
    const std::vector<int>& n = rs.marks();
    int h = 0;
    for (int v : n) h += v;
    std::vector<int> lo(l);
    for (int j = 0; j < l; ++j) {
        int bound = -2 - (h - n[j]);
        lo[j] = -((-bound) / n[j]);
    }
    RationalMatrix ct = zero_matrix(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) ct[j][i] = rs.cartan()[i][j];
    std::vector<std::vector<int>> out;
    std::vector<int> c(lo);
    for (;;) {
        int s = 0;
        for (int j = 0; j < l; ++j) s += n[j] * c[j];
        if (s >= -2) {
            RationalVector rhs(l), t;
            for (int j = 0; j < l; ++j) rhs[j] = c[j];
            solve(ct, rhs, t);
            bool integral = std::all_of(t.begin(), t.end(), [](const Rational& q) { return denominator(q) == 1; });
            if (integral) {
                std::vector<int> tau(l);
                for (int j = 0; j < l; ++j) tau[j] = numerator(t[j]).convert_to<int>();
                out.push_back(tau);
            }
        }
        int k = 0;
        while (k < l && c[k] == 1) c[k] = lo[k], ++k;
        if (k == l) break;
        ++c[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntMatrix> weyl_group(const RootSystem& rs, std::size_t max_order) {
    const int l = rs.rank();
    std::vector<IntMatrix> gens;
    for (int i = 0; i < l; ++i) gens.push_back(reflection_matrix(rs, Root::simple(l, i)));
    std::set<IntMatrix> seen{identity_int(l)};
    std::deque<IntMatrix> queue{identity_int(l)};
    while (!queue.empty()) {
        IntMatrix m = queue.front();
        queue.pop_front();
        for (const IntMatrix& g : gens) {
            IntMatrix p = mul(g, m);
            if (seen.insert(p).second) {
                if (seen.size() > max_order) throw Error(ErrorCode::CapacityExceeded, "Weyl group too large");
                queue.push_back(std::move(p));
            }
        }
    }
    return std::vector<IntMatrix>(seen.begin(), seen.end());
}

std::vector<AffineWeylElement> elements_up_to_length(const RootSystem& rs, int max_length) {
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));
    std::set<AffineWeylElement> seen{identity_element(rs)};
    std::vector<AffineWeylElement> layer{identity_element(rs)};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<AffineWeylElement> next;
        for (const auto& w : layer)
            for (const auto& g : gens) {
                AffineWeylElement u = compose(rs, w, g);
                if (seen.insert(u).second) next.push_back(std::move(u));
            }
        layer = std::move(next);
    }
    return std::vector<AffineWeylElement>(seen.begin(), seen.end());
}

}  // namespace parideals
