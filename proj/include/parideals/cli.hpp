#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parideals {

enum class Command { Enumerate, Count, Verify, Table, Antichains };
enum class OutputFormat { Pretty, Json, Csv };

struct CliConfig {
    Command command = Command::Count;
    std::string type;
    int rank = 0;
    std::vector<int> parabolic;  // 1-based
    bool abelian_only = false;
    OutputFormat format = OutputFormat::Pretty;
    std::string output;  // empty means the given stream
    unsigned threads = 0;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    bool skipped = false;
    std::string detail;
};

// Exit codes: 0 success, 1 verification mismatch, 2 usage error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

// "1,3" -> {1,3}; "" -> {}.
std::vector<int> parse_index_list(const std::string& text);

}  // namespace parideals
