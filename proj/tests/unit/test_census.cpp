#include <doctest.h>

#include "oracles.hpp"
#include "parideals/census.hpp"
#include "parideals/components.hpp"
#include "parideals/error.hpp"
#include "parideals/report.hpp"

using namespace parideals;
using oracle::rs_of;

namespace {

ParabolicSelector sel(int rank, std::vector<int> idx) { return ParabolicSelector::from_indices(rank, idx); }

}  // namespace

TEST_CASE("components") {
    RootSystem d5 = rs_of('D', 5);
    ComponentDecomposition c = decompose(d5, sel(5, {2, 4, 5}));
    CHECK(c.count() == 3);
    CHECK(c.minima == std::vector<int>{2, 4, 5});
    ComponentDecomposition m = counting_components(d5, sel(5, {2, 4, 5}));
    CHECK(m.count() == 2);
    CHECK(m.sizes == std::vector<int>{1, 2});
    CHECK(decompose(d5, sel(5, {3, 4, 5})).count() == 1);
    CHECK(fork_count(d5, sel(5, {4})) == 1);
    RootSystem b5 = rs_of('B', 5);
    CHECK(l_values(b5, sel(5, {2, 3, 5})) == std::vector<int>{2, 3});
}

TEST_CASE("formula examples") {
    CHECK(count_ideals_formula(rs_of('A', 5), sel(5, {2, 3})) == 14);
    CHECK(count_ideals_formula(rs_of('C', 3), sel(3, {3})) == 10);
    CHECK(count_abelian_formula(rs_of('B', 3), sel(3, {1})) == 3);
    CHECK(count_abelian_formula(rs_of('B', 5), sel(5, {2, 3, 5})) == 6);
    CHECK(count_abelian_formula(rs_of('C', 4), sel(4, {1, 2})) == 4);
    for (int l = 1; l <= 8; ++l) CHECK(count_ideals_formula(rs_of('A', l), ParabolicSelector()) == catalan(l + 1));
    CHECK_THROWS_AS(count_ideals_formula(rs_of('G', 2), ParabolicSelector()), Error);
    CHECK_THROWS_AS(count_abelian_formula(rs_of('E', 6), ParabolicSelector()), Error);
}

TEST_CASE("closed forms agree with brute force") {
    for (auto [f, l] : oracle::classical_upto(6)) {
        RootSystem rs = rs_of(f, l);
        for (const ParabolicSelector& I : all_subsets(l)) {
            CAPTURE(type_name(rs.type()));
            CAPTURE(I.to_string());
            IdealCounts n = count_ideals(rs, I);
            CHECK(count_ideals_formula(rs, I) == n.all);
            CHECK(count_abelian_formula(rs, I) == n.abelian);
            if (f == 'A' || f == 'C') CHECK(n.abelian == (std::uint64_t(1) << (l - I.size())));
            if (f == 'B' || f == 'D') CHECK(count_abelian_via_diagrams(rs, I) == n.abelian);
            CountReport r = count_report(rs, I);
            CHECK(r.method == CountMethod::Both);
            CHECK(r.agreement);
        }
    }
}

TEST_CASE("abelian diagram condition") {
    RootSystem d4 = rs_of('D', 4);
    CHECK(abelian_diagram_condition(d4, ParabolicSelector(), Subdiagram{}));
    CHECK(count_abelian_via_diagrams(d4, ParabolicSelector()) == 16);
    CHECK_THROWS_AS(abelian_diagram_condition(rs_of('C', 3), ParabolicSelector(), Subdiagram{}), Error);
}

TEST_CASE("weighted identity where the plain count fails") {
    bool plain_fails = false;
    for (auto [f, l] : oracle::classical_upto(5)) {
        if (f != 'B' && f != 'D') continue;
        RootSystem rs = rs_of(f, l);
        for (const ParabolicSelector& I : all_subsets(l)) {
            AbelianAlcoveCensus c = abelian_alcove_census(rs, I);
            CHECK(weighted_abelian_sum(rs, I, c) == Rational(pow2(l - I.size())));
            if (c.entries.size() != (std::size_t(1) << (l - I.size()))) plain_fails = true;
        }
    }
    CHECK(plain_fails);
}

TEST_CASE("full census") {
    auto g2 = full_census(rs_of('G', 2), 2);
    REQUIRE(g2.size() == 4);
    // subsets in order {}, {1}, {1,2}, {2}
    std::vector<std::pair<int, int>> want{{8, 4}, {3, 2}, {1, 1}, {4, 3}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(g2[i].count_all == want[i].first);
        CHECK(g2[i].count_abelian == want[i].second);
        CHECK(g2[i].method == CountMethod::BruteForce);
    }
    auto f4 = full_census(rs_of('F', 4));
    auto known = known_counts({Family::F, 4});
    REQUIRE(known);
    REQUIRE(f4.size() == 16);
    for (const auto& k : *known) {
        auto it = std::find_if(f4.begin(), f4.end(), [&](const CountReport& r) { return r.I == k.I; });
        REQUIRE(it != f4.end());
        CHECK(it->count_all == k.count_all);
        CHECK(it->count_abelian == k.count_abelian);
    }
    auto a3 = full_census(rs_of('A', 3), 1);
    CHECK(a3.size() == 8);
    for (const auto& r : a3) {
        CHECK(r.count_all == catalan(3 - r.I.size() + 1));
        CHECK(r.count_abelian == pow2(3 - r.I.size()));
    }
    CHECK(full_census(rs_of('A', 3), 1) == full_census(rs_of('A', 3), 4));
    auto subs = all_subsets(3);
    CHECK(subs.size() == 8);
    CHECK(subs[0].empty());
    CHECK(subs[1].one_based() == std::vector<int>{1});
    CHECK(subs[2].one_based() == std::vector<int>{1, 2});
}

TEST_CASE("report serialization") {
    CountReport r = count_report(rs_of('B', 3), sel(3, {1, 3}));
    std::string js = to_json(r);
    CHECK(js.find("\"type\"") < js.find("\"rank\""));
    CHECK(js.find("\"count_abelian\"") < js.find("\"method\""));
    CHECK(report_from_json(js) == r);
    auto all = full_census(rs_of('C', 3), 1);
    CHECK(reports_from_json(to_json(all)) == all);
    CHECK(csv_header() == "type,rank,I,count_all,count_abelian,method,agreement");
    CHECK(to_csv_row(r) == "B,3,1;3,3,2,both,true");
    CHECK_THROWS_AS(report_from_json("{not json"), Error);
    CHECK(method_name(CountMethod::ClosedForm) == std::string("closed_form"));
    CHECK(parse_method("brute_force") == CountMethod::BruteForce);
}
