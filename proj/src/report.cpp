#include "parideals/report.hpp"
#include "parideals/error.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace parideals {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

BigInt big_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error(ErrorCode::InvalidArgs, "expected an integer count");
}

ordered_json report_json(const CountReport& r) {
    ordered_json j;
    j["type"] = std::string(1, family_letter(r.type.family));
    j["rank"] = r.type.rank;
    j["I"] = r.I.one_based();
    j["count_all"] = big_to_json(r.count_all);
    j["count_abelian"] = big_to_json(r.count_abelian);
    j["method"] = method_name(r.method);
    j["agreement"] = r.agreement;
    return j;
}

CountReport report_from(const ordered_json& j) {
    try {
        CountReport r;
        r.type.family = parse_family(j.at("type").get<std::string>());
        r.type.rank = j.at("rank").get<int>();
        r.I = ParabolicSelector::from_indices(r.type.rank, j.at("I").get<std::vector<int>>());
        r.count_all = big_from_json(j.at("count_all"));
        r.count_abelian = big_from_json(j.at("count_abelian"));
        r.method = parse_method(j.at("method").get<std::string>());
        r.agreement = j.at("agreement").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgs, std::string("malformed report: ") + e.what());
    }
}

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgs, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string to_json(const CountReport& r) {
    return report_json(r).dump();
}

std::string to_json(const std::vector<CountReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

CountReport report_from_json(const std::string& text) {
    return report_from(parse(text));
}

std::vector<CountReport> reports_from_json(const std::string& text) {
    ordered_json j = parse(text);
    if (!j.is_array()) throw Error(ErrorCode::InvalidArgs, "expected a JSON array");
    std::vector<CountReport> out;
    for (const auto& item : j) out.push_back(report_from(item));
    return out;
}

std::string csv_header() {
    return "type,rank,I,count_all,count_abelian,method,agreement";
}

std::string to_csv_row(const CountReport& r) {
    std::ostringstream os;
    os << family_letter(r.type.family) << ',' << r.type.rank << ',';
    bool first = true;
    for (int i : r.I.one_based()) {
        os << (first ? "" : ";") << i;
        first = false;
    }
    os << ',' << r.count_all.str() << ',' << r.count_abelian.str() << ',' << method_name(r.method) << ','
       << (r.agreement ? "true" : "false");
    return os.str();
}

std::optional<std::vector<KnownCount>> known_counts(const RootSystemType& t) {
    auto sel = [&](std::vector<int> idx) { return ParabolicSelector::from_indices(t.rank, idx); };
    if (t.family == Family::F && t.rank == 4) {
        return std::vector<KnownCount>{
            {sel({}), 105, 16},       {sel({1}), 35, 12},        {sel({2}), 49, 9},
            {sel({3}), 32, 10},       {sel({4}), 24, 6},         {sel({1, 2}), 14, 6},
            {sel({1, 3}), 14, 7},     {sel({1, 4}), 10, 5},      {sel({2, 3}), 10, 4},
            {sel({2, 4}), 12, 4},     {sel({3, 4}), 8, 4},       {sel({1, 2, 3}), 3, 2},
            {sel({1, 2, 4}), 5, 3},   {sel({1, 3, 4}), 4, 3},    {sel({2, 3, 4}), 3, 2},
            {sel({1, 2, 3, 4}), 1, 1},
        };
    }
    if (t.family == Family::G && t.rank == 2) {
        return std::vector<KnownCount>{
            {sel({}), 8, 4}, {sel({1}), 3, 2}, {sel({2}), 4, 3}, {sel({1, 2}), 1, 1}};
    }
    return std::nullopt;
}

}  // namespace parideals
