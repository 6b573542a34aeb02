#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace hlk::cli {

enum class Subcommand { Invariant, Matrix, Groups, Snf, Selftest };

struct CliConfig {
    Subcommand subcommand = Subcommand::Invariant;
    std::optional<std::string> input_path;  // "-" or absent reads stdin
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    bool verbose = false;
};

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kInvalidDiagram = 3,
    kSelftestFailed = 4,
};

// Either a config or the exit code to return immediately (help printed,
// or a usage error already reported on err).
std::variant<CliConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hlk::cli
