#include "hlk/cli.hpp"

#include "hlk/diagram.hpp"
#include "hlk/error.hpp"
#include "hlk/invariant.hpp"
#include "hlk/selftest.hpp"
#include "hlk/smith.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace hlk::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const CliConfig& config, std::istream& in) {
    if (!config.input_path || *config.input_path == "-")
        return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(*config.input_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + *config.input_path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

enum class InputKind { Diagram, Matrix };

// First token of the first line that is neither blank nor a comment.
InputKind sniff(std::string_view text) {
    std::istringstream ss{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token) || token.front() == '#')
            continue;
        if (token == "component")
            return InputKind::Diagram;
        if (token == "matrix")
            return InputKind::Matrix;
        throw ParseError(lineno, "expected 'component' or 'matrix', got '" + token + "'");
    }
    throw ParseError(0, "empty input");
}

int run_selftest_command(const CliConfig& config, std::ostream& out, std::ostream& err) {
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    const auto summary = run_selftest(config.trials, config.seed, threads);
    for (const auto& r : summary.failed)
        for (const auto& f : r.failures)
            err << "trial seed " << r.seed << ": " << f << '\n';
    out << summary.passed << '/' << summary.trials << " passed\n";
    return summary.passed == summary.trials ? kOk : kSelftestFailed;
}

int run_checked(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    if (config.subcommand == Subcommand::Selftest)
        return run_selftest_command(config, out, err);

    const std::string text = read_input(config, in);
    const InputKind kind = sniff(text);
    IntMatrix m;
    if (kind == InputKind::Diagram) {
        const Diagram d = parse_diagram(text);
        m = linking_matrix(d);
        if (config.verbose)
            err << "diagram: " << d.component_names[0] << " genus " << d.genus(0) << ", " << d.component_names[1]
                << " genus " << d.genus(1) << ", " << d.crossings.size() << " crossings\n";
    } else {
        m = parse_matrix(text);
        if (config.verbose)
            err << "matrix: " << m.rows() << "x" << m.cols() << '\n';
    }

    switch (config.subcommand) {
    case Subcommand::Invariant:
        out << format_lk(handlebody_linking(m)) << '\n';
        break;
    case Subcommand::Matrix:
        if (kind != InputKind::Diagram)
            throw UsageError("'matrix' needs a diagram as input");
        write_matrix(out, m);
        break;
    case Subcommand::Groups:
        out << "A1 = " << format_group(quotient_group(m, Side::First)) << '\n';
        out << "A2 = " << format_group(quotient_group(m, Side::Second)) << '\n';
        out << "l = " << rank(m) << '\n';
        break;
    case Subcommand::Snf: {
        const SNFResult snf = smith_normal_form(m);
        out << "# D\n";
        write_matrix(out, snf.d);
        out << "# U\n";
        write_matrix(out, snf.u);
        out << "# V\n";
        write_matrix(out, snf.v);
        break;
    }
    case Subcommand::Selftest:
        break;
    }
    return kOk;
}

}  // namespace

std::variant<CliConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig config;
    CLI::App app{"Linking invariants of two-component handlebody-links", "hlk"};
    app.require_subcommand(1);

    struct Entry {
        const char* name;
        const char* help;
        Subcommand kind;
    };
    const Entry entries[] = {
        {"invariant", "print Lk of a diagram or matrix", Subcommand::Invariant},
        {"matrix", "print the linking matrix of a diagram", Subcommand::Matrix},
        {"groups", "print the quotient groups A1, A2 and the rank l", Subcommand::Groups},
        {"snf", "print D, U, V with U * M * V = D", Subcommand::Snf},
        {"selftest", "run the randomised property checks", Subcommand::Selftest},
    };
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        sub->callback([&config, kind = e.kind] { config.subcommand = kind; });
        sub->add_flag("--verbose,-v", config.verbose, "extra diagnostics on stderr");
        if (e.kind == Subcommand::Selftest) {
            sub->add_option("--trials", config.trials, "number of trials")->check(CLI::PositiveNumber);
            sub->add_option("--seed", config.seed, "64-bit seed");
        } else {
            sub->add_option("path", config.input_path, "input file, or - for stdin");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "hlk: " << e.what() << '\n';
        return kUsage;
    }
    return config;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(config, in, out, err);
    } catch (const UsageError& e) {
        err << "hlk: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "hlk: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const DiagramError& e) {
        err << "hlk: invalid diagram: " << e.what() << '\n';
        return kInvalidDiagram;
    }
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    auto parsed = parse_args(argc, argv, out, err);
    if (const int* code = std::get_if<int>(&parsed))
        return *code;
    return run(std::get<CliConfig>(parsed), in, out, err);
}

}  // namespace hlk::cli
