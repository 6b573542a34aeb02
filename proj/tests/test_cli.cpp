#include <doctest.h>

#include "hlk/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "hlk");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = hlk::cli::main(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) {
    return std::string(HLK_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("invariant") {
    auto r = invoke({"invariant", data("fig1.hlk")});
    CHECK(r.code == 0);
    CHECK(r.out == "Lk = {1, 2, 4}\n");
    CHECK(r.err.empty());

    r = invoke({"invariant", data("separated.hlk")});
    CHECK(r.code == 0);
    CHECK(r.out == "Lk = {0}\n");

    r = invoke({"invariant", data("hopf.hlk")});
    CHECK(r.out == "Lk = {1}\n");

    r = invoke({"invariant", data("paper.mat")});
    CHECK(r.out == "Lk = {1, 2, 4}\n");
}

TEST_CASE("stdin input") {
    const std::string hopf = "component a\nloop x\ncomponent b\nloop y\ncrossing x y -\ncrossing y x -\n";
    CHECK(invoke({"invariant", "-"}, hopf).out == "Lk = {1}\n");
    CHECK(invoke({"invariant"}, "# m\nmatrix 1 1\n-7\n").out == "Lk = {7}\n");
}

TEST_CASE("matrix output round-trips through the matrix path") {
    const auto m = invoke({"matrix", data("fig1.hlk")});
    CHECK(m.code == 0);
    CHECK(m.out == "matrix 3 4\n-1 -1 0 2\n1 -3 -2 0\n0 0 2 -2\n");
    CHECK(invoke({"invariant", "-"}, m.out).out == invoke({"invariant", data("fig1.hlk")}).out);
    CHECK(invoke({"groups", "-"}, m.out).out == invoke({"groups", data("fig1.hlk")}).out);

    // matrix input is rejected
    CHECK(invoke({"matrix", data("paper.mat")}).code == 1);
}

TEST_CASE("groups") {
    const auto r = invoke({"groups", data("fig1.hlk")});
    CHECK(r.code == 0);
    CHECK(r.out == "A1 = Z/2 (+) Z/4\nA2 = Z^1 (+) Z/2 (+) Z/4\nl = 3\n");
    CHECK(invoke({"groups", data("separated.hlk")}).out == "A1 = Z^2\nA2 = Z^3\nl = 0\n");
    CHECK(invoke({"groups", data("hopf.hlk")}).out == "A1 = 0\nA2 = 0\nl = 1\n");
}

TEST_CASE("snf prints D, U, V as matrix blocks") {
    const auto r = invoke({"snf", data("paper.mat")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# D\nmatrix 3 4\n1 0 0 0\n0 2 0 0\n0 0 4 0\n# U\nmatrix 3 3\n", 0) == 0);
    CHECK(r.out.find("# V\nmatrix 4 4\n") != std::string::npos);
    CHECK(invoke({"snf", data("paper.mat")}).out == r.out);
}

TEST_CASE("selftest") {
    auto r = invoke({"selftest", "--trials", "50", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "50/50 passed\n");
    CHECK(invoke({"selftest", "--trials", "50", "--seed", "7"}).out == r.out);
    CHECK(invoke({"selftest", "--seed", "18446744073709551615", "--trials", "5"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"selftest", "--trials", "0"}).code == 1);
    CHECK(invoke({"selftest", "--trials", "abc"}).code == 1);
    CHECK(invoke({"invariant", "--trials", "3", data("fig1.hlk")}).code == 1);
    CHECK(invoke({"invariant", data("does-not-exist.hlk")}).code == 1);

    auto r = invoke({"invariant", "-"}, "component h1\nloop a\nloop a\n");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(invoke({"invariant", "-"}, "hello\n").code == 2);
    CHECK(invoke({"invariant", "-"}, "").code == 2);
    CHECK(invoke({"invariant", "-"}, "matrix 2 2\n1 2\n").code == 2);

    r = invoke({"invariant", data("odd.hlk")});
    CHECK(r.code == 3);
    CHECK(r.out.empty());

    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verbose goes to stderr only") {
    const auto quiet = invoke({"invariant", data("fig1.hlk")});
    const auto loud = invoke({"invariant", "--verbose", data("fig1.hlk")});
    CHECK(loud.out == quiet.out);
    CHECK(loud.err.find("genus 3") != std::string::npos);
}
