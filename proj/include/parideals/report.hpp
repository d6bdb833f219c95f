#pragma once

#include "parideals/census.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parideals {

// Field order: type, rank, I, count_all, count_abelian, method, agreement.
std::string to_json(const CountReport& r);
std::string to_json(const std::vector<CountReport>& reports);
CountReport report_from_json(const std::string& text);
std::vector<CountReport> reports_from_json(const std::string& text);

std::string csv_header();
std::string to_csv_row(const CountReport& r);

struct KnownCount {
    ParabolicSelector I;
    long long count_all;
    long long count_abelian;
};

// Published values for F4 and G2 in the numbering used by RootSystem::build.
std::optional<std::vector<KnownCount>> known_counts(const RootSystemType& t);

}  // namespace parideals
