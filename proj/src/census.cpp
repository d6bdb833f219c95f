#include "parideals/census.hpp"
#include "parideals/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace parideals {

namespace {

BigInt half_exact(const BigInt& x) {
    if (x % 2 != 0) throw Error(ErrorCode::InvalidArgs, "expected an even product");
    return x / 2;
}

BigInt sum_binomials(const std::vector<int>& lv, std::size_t upto, long n, long factor) {
    BigInt s = 0;
    for (std::size_t j = 0; j < upto && j < lv.size(); ++j) s += factor * binomial(n, lv[j] - 1);
    return s;
}

}  // namespace

const char* method_name(CountMethod m) {
    switch (m) {
    case CountMethod::ClosedForm: return "closed_form";
    case CountMethod::BruteForce: return "brute_force";
    case CountMethod::Both: return "both";
    }
    return "";
}

CountMethod parse_method(const std::string& s) {
    if (s == "closed_form") return CountMethod::ClosedForm;
    if (s == "brute_force") return CountMethod::BruteForce;
    if (s == "both") return CountMethod::Both;
    throw Error(ErrorCode::InvalidArgs, "unknown method '" + s + "'");
}

BigInt count_ideals_formula(const RootSystem& rs, const ParabolicSelector& I) {
    if (!is_classical(rs.family())) throw Error(ErrorCode::NotClassical, type_name(rs.type()));
    const int l = rs.rank();
    const long k = l - I.size();
    const bool last_in = I.contains(l - 1);
    switch (rs.family()) {
    case Family::A:
        return catalan(k + 1);
    case Family::C:
        if (!last_in) return (k + 1) * catalan(k);
        return half_exact((k + 2) * catalan(k + 1));
    case Family::B: {
        std::vector<int> lv = l_values(rs, I);
        std::size_t n = last_in ? lv.size() - 1 : lv.size();
        BigInt total = (k + 1) * catalan(k);
        for (std::size_t j = 0; j < n; ++j) total += detail::t_prime_extended(2 * k - lv[j], lv[j] - 1);
        return total;
    }
    case Family::D: {
        std::vector<int> lv = l_values(rs, I);
        const int t = fork_count(rs, I);
        BigInt total;
        if (t == 1) {
            total = half_exact((k + 1) * catalan(k));
            for (int lj : lv) total += detail::t_prime_extended(2 * k - lj - 1, lj - 1);
        } else if (t == 2) {
            total = (k + 1) * catalan(k);
            for (std::size_t j = 0; j + 1 < lv.size(); ++j)
                total += detail::t_prime_extended(2 * k - lv[j], lv[j] - 1);
        } else {
            total = (3 * k - 2) * catalan(k - 1);
            for (int lj : lv)
                total += detail::t_prime_extended(2 * k - lj - 1, lj - 2) +
                         detail::t_prime_extended(2 * k - lj - 1, lj - 1);
        }
        return total;
    }
    default:
        break;
    }
    throw Error(ErrorCode::NotClassical, type_name(rs.type()));
}

BigInt count_abelian_formula(const RootSystem& rs, const ParabolicSelector& I) {
    if (!is_classical(rs.family())) throw Error(ErrorCode::NotClassical, type_name(rs.type()));
    const int l = rs.rank();
    const long k = l - I.size();
    if (k == 0) return 1;
    if (rs.family() == Family::A || rs.family() == Family::C) return pow2(k);
    std::vector<int> lv = l_values(rs, I);
    const std::size_t s = lv.size();
    const bool first_in = I.contains(0);
    if (rs.family() == Family::B) {
        std::size_t n = I.contains(l - 1) ? s - 1 : s;
        if (!first_in) return pow2(k) + sum_binomials(lv, n, k - 1, 2);
        return pow2(k - 1) + sum_binomials(lv, n, k - 1, 1);
    }
    const int t = fork_count(rs, I);
    const std::size_t s1 = s == 0 ? 0 : s - 1;
    if (first_in) {
        if (t == 0) {
            BigInt total = pow2(k) - pow2(k - 2);
            for (int lj : lv) total += 2 * binomial(k - 1, lj - 1) - binomial(k - 2, lj - 1);
            return total;
        }
        if (t == 1) return pow2(k - 1) + sum_binomials(lv, s, k - 1, 1);
        return pow2(k - 1) + sum_binomials(lv, s1, k - 1, 1);
    }
    if (t == 0) return pow2(k) + sum_binomials(lv, s, k - 1, 2);
    if (t == 1) return pow2(k - 1) + pow2(k - 2) + sum_binomials(lv, s, k - 1, 1) + sum_binomials(lv, s1, k - 2, 1);
    return pow2(k) + sum_binomials(lv, s1, k - 1, 2);
}

bool abelian_diagram_condition(const RootSystem& rs, const ParabolicSelector& I, const Subdiagram& s) {
    if (rs.family() != Family::B && rs.family() != Family::D)
        throw Error(ErrorCode::WrongType, "abelian diagram condition is stated for types B and D");
    ShapeParams sp = shape_of(rs, I);
    DiagramShape shape = make_shape(sp);
    Subdiagram sel = s;
    if (!is_nw(shape, sel)) {
        Subdiagram back = sp.reversal ? swap_columns(sel, sp.reversal_column) : sel;
        if (!sp.reversal || !is_nw(shape, back))
            throw Error(ErrorCode::InvalidArgs, "diagram is neither nw nor a bullet diagram of the shape");
        sel = back;
    }
    const int k = rs.rank() - I.size();
    if (I.contains(0)) return tau(sel, 1) <= k;
    const bool wide = rs.family() == Family::B || fork_count(rs, I) == 2;
    return tau(sel, 1) + tau(sel, 2) <= (wide ? 2 * k - 1 : 2 * k - 2);
}

BigInt count_abelian_via_diagrams(const RootSystem& rs, const ParabolicSelector& I) {
    DiagramShape shape = make_shape(shape_of(rs, I));
    BigInt n = 0;
    for (const Subdiagram& s : s_diagrams(shape))
        if (abelian_diagram_condition(rs, I, s)) ++n;
    return n;
}

CountReport count_report(const RootSystem& rs, const ParabolicSelector& I) {
    CountReport rep;
    rep.type = rs.type();
    rep.I = I;
    const bool brute = rs.num_positive() <= kMaxPositiveRoots;
    const bool closed = is_classical(rs.family());
    if (brute) {
        IdealCounts c = count_ideals(rs, I);
        rep.count_all = c.all;
        rep.count_abelian = c.abelian;
        rep.method = CountMethod::BruteForce;
    }
    if (closed) {
        BigInt fa = count_ideals_formula(rs, I);
        BigInt fb = count_abelian_formula(rs, I);
        if (brute) {
            rep.method = CountMethod::Both;
            rep.agreement = fa == rep.count_all && fb == rep.count_abelian;
        } else {
            rep.method = CountMethod::ClosedForm;
            rep.count_all = fa;
            rep.count_abelian = fb;
        }
    }
    if (!brute && !closed) throw Error(ErrorCode::CapacityExceeded, "no counting method available");
    return rep;
}

std::vector<ParabolicSelector> all_subsets(int rank) {
    if (rank < 0 || rank > 20) throw Error(ErrorCode::InvalidArgs, "subset sweep limited to rank 20");
    std::vector<ParabolicSelector> out;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << rank); ++m) out.emplace_back(m);
    std::sort(out.begin(), out.end(), [](const ParabolicSelector& a, const ParabolicSelector& b) {
        return a.indices() < b.indices();
    });
    return out;
}

std::vector<CountReport> full_census(const RootSystem& rs, unsigned threads) {
    std::vector<ParabolicSelector> subsets = all_subsets(rs.rank());
    std::vector<CountReport> out(subsets.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(subsets.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < subsets.size(); i = next++) {
            try {
                out[i] = count_report(rs, subsets[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace parideals
