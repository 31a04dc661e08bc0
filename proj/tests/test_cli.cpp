#include <doctest.h>

#include "fusionlab/builtins.hpp"
#include "fusionlab/cli.hpp"
#include "fusionlab/ring_file.hpp"

#include <filesystem>
#include <sstream>

using namespace fusionlab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string> &args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("fusionlab_test_" + name)).string();
}

std::size_t count_lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("check passes on every builtin, from memory and from file") {
  for (const auto &name : shipped_ring_names()) {
    CAPTURE(name);
    CHECK(run({"check", "--ring", "@" + name}).code == cli::kExitOk);
    const auto path = temp_path(name + ".fr");
    const auto f = builtin_ring(name);
    write_text_file(path, write_ring_file(f.ring, f.dim));
    CHECK(run({"check", "--ring", path}).code == cli::kExitOk);
    std::filesystem::remove(path);
  }
}

TEST_CASE("check fails on a corrupted associativity entry") {
  const auto f = builtin_ring("ver5");
  std::string text = write_ring_file(f.ring);
  // L2 L2 = L1 + L3 becomes L1 + 2 L3 on both orderings of nothing else.
  const std::string from = "N L2 L2 L3 1";
  REQUIRE(text.find(from) != std::string::npos);
  text.replace(text.find(from), from.size(), "N L2 L2 L3 2");
  const auto path = temp_path("corrupt.fr");
  write_text_file(path, text);
  const auto r = run({"check", "--ring", path});
  CHECK(r.code == cli::kExitCheckFailed);
  CHECK(r.out.find("associativity") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("input errors exit 2 with usage") {
  const auto r = run({"frobnicate"});
  CHECK(r.code == cli::kExitInputError);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"verlinde", "-p", "9"}).code == cli::kExitInputError);
  CHECK(run({"verlinde", "--bogus"}).code == cli::kExitInputError);
  CHECK(run({"check", "--ring", temp_path("does_not_exist.fr")}).code == cli::kExitInputError);
  CHECK(run({"check", "--ring", "@nope"}).code == cli::kExitInputError);
  CHECK(run({}).code == cli::kExitInputError);
}

TEST_CASE("verlinde table for p = 5") {
  const auto r = run({"verlinde", "-p", "5", "--table", "--format", "tsv"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("L2\tL2\tL1 + L3\tL2 + L4\tL3\n") != std::string::npos);
  CHECK(r.out.find("L4\tL4\tL3\tL2\tL1\n") != std::string::npos);
}

TEST_CASE("Yang-Lee Frobenius candidate") {
  const auto r = run({"frobenius", "-p", "5", "--ring", "@yanglee", "--element", "X"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("1 ⊠ L3") != std::string::npos);
  const auto tsv = run({"frobenius", "-p", "5", "--ring", "@yanglee", "--element", "X", "--format", "tsv"});
  CHECK(tsv.out == "#\tFr(X) in YangLee ⊠ Ver5\n1\t1 ⊠ L3\n1 candidate\n");
}

TEST_CASE("subrings of Ver_7") {
  const auto r = run({"subrings", "--ring", "@ver7", "--format", "tsv"});
  REQUIRE(r.code == cli::kExitOk);
  // Header, four rows, summary.
  CHECK(count_lines(r.out) == 6);
  CHECK(r.out.find("4 subrings\n") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"verlinde", "-p", "7", "--table"},
      {"green", "-p", "5", "--table"},
      {"fpdim", "--ring", "@ver11"},
      {"gdim", "--ring", "@ver7"},
      {"trace-form", "--ring", "@ver5"},
      {"trace-form", "--ring", "@ver5", "-p", "3"},
      {"pthpow", "--ring", "@ver7", "--element", "L2"},
      {"frobtype", "-p", "7"},
      {"subrings", "--ring", "@ver13"},
      {"grading", "--ring", "@ver7"},
      {"grim", "--ring", "@ver5"},
      {"iso", "--ring", "@ver7", "--with", "@group2"},
      {"homs", "--ring", "@yanglee", "-p", "5"},
  };
  for (const auto &c : commands) {
    CAPTURE(c[0]);
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("ring outputs round trip through the CLI") {
  const auto path = temp_path("green5.fr");
  REQUIRE(run({"green", "-p", "5", "-o", path}).code == cli::kExitOk);
  CHECK(run({"check", "--ring", path}).code == cli::kExitOk);
  const auto text = read_text_file(path);
  CHECK(write_ring_file(parse_ring_file(text).ring, parse_ring_file(text).dim) == text);
  std::filesystem::remove(path);
}
