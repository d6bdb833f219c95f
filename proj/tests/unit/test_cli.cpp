#include <doctest.h>

#include "parideals/cli.hpp"
#include "parideals/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace parideals;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "parideals");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count examples") {
    Outcome f4 = invoke({"count", "--type", "F", "--rank", "4", "--parabolic", ""});
    CHECK(f4.code == 0);
    CHECK(f4.out.find("count_all=105 count_abelian=16") != std::string::npos);
    Outcome b3 = invoke({"count", "--type", "B", "--rank", "3", "--parabolic", "1", "--abelian-only"});
    CHECK(b3.code == 0);
    CHECK(b3.out == "count_abelian=3\n");
}

TEST_CASE("verify") {
    Outcome c4 = invoke({"verify", "--type", "C", "--rank", "4"});
    CHECK(c4.code == 0);
    CHECK(c4.out.find("formula==oracle for all 16 subsets") != std::string::npos);
    CHECK(invoke({"verify", "-t", "G", "-r", "2"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"count", "--type", "Q", "--rank", "3"}).code == 2);
    CHECK(invoke({"count", "--type", "B", "--rank", "1"}).code == 2);
    CHECK(invoke({"count", "--type", "B", "--rank", "3", "--parabolic", "4"}).code == 2);
    CHECK(invoke({"count", "--type", "B", "--rank", "3", "--parabolic", "x"}).code == 2);
    CHECK(invoke({"count", "--type", "B"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    Outcome bad = invoke({"count", "-t", "A", "-r", "2", "-f", "xml"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("output is deterministic and round-trips") {
    std::vector<std::string> args{"table", "-t", "B", "-r", "4", "-f", "json"};
    Outcome a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto reports = reports_from_json(a.out);
    CHECK(reports.size() == 16);
    CHECK(reports_from_json(to_json(reports)) == reports);

    Outcome one = invoke({"count", "-t", "D", "-r", "5", "-p", "2,4", "-f", "json"});
    CHECK(report_from_json(one.out).count_all > 0);

    Outcome csv = invoke({"table", "-t", "G", "-r", "2", "-f", "csv"});
    CHECK(csv.out.rfind(csv_header() + "\n", 0) == 0);
}

TEST_CASE("table renders the Dynkin rows") {
    Outcome g2 = invoke({"table", "-t", "G", "-r", "2"});
    CHECK(g2.code == 0);
    CHECK(g2.out.find("∘∘") != std::string::npos);
    CHECK(g2.out.find("••") != std::string::npos);
}

TEST_CASE("enumerate and antichains") {
    Outcome e = invoke({"enumerate", "-t", "A", "-r", "2"});
    CHECK(e.code == 0);
    CHECK(e.out.find("5 ideals") != std::string::npos);
    Outcome ab = invoke({"enumerate", "-t", "A", "-r", "3", "--abelian-only", "-f", "csv"});
    CHECK(ab.code == 0);
    int lines = 0;
    std::istringstream is(ab.out);
    for (std::string line; std::getline(is, line);) ++lines;
    CHECK(lines == 1 + 8);
    Outcome h = invoke({"antichains", "-t", "B", "-r", "3", "-f", "csv"});
    CHECK(h.code == 0);
    CHECK(h.out.rfind("antichain_size,ideals\n", 0) == 0);
}

TEST_CASE("output file") {
    auto path = std::filesystem::temp_directory_path() / "parideals_cli_test.json";
    Outcome o = invoke({"count", "-t", "A", "-r", "3", "-f", "json", "-o", path.string()});
    CHECK(o.code == 0);
    CHECK(o.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(report_from_json(ss.str()).count_all == 14);
    std::filesystem::remove(path);
    CHECK(invoke({"count", "-t", "A", "-r", "3", "-o", "/nonexistent/dir/x"}).code == 2);
}

TEST_CASE("installed binary") {
    std::string cmd = std::string(PARIDEALS_CLI_PATH) + " count --type B --rank 3 --parabolic 1 --abelian-only";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[256] = {};
    std::string text;
    while (fgets(buf, sizeof buf, p)) text += buf;
    int status = pclose(p);
    CHECK(status == 0);
    CHECK(text == "count_abelian=3\n");
    std::string bad = std::string(PARIDEALS_CLI_PATH) + " count --type Z --rank 3 2>/dev/null";
    int code = std::system(bad.c_str());
    CHECK(WEXITSTATUS(code) == 2);
}

TEST_CASE("index lists") {
    CHECK(parse_index_list("").empty());
    CHECK(parse_index_list("1,3") == std::vector<int>{1, 3});
    CHECK(parse_index_list(" 2 , 4 ") == std::vector<int>{2, 4});
}
