#include <doctest.h>

#include "fusionlab/builtins.hpp"
#include "fusionlab/green.hpp"
#include "fusionlab/ring_file.hpp"
#include "fusionlab/verlinde.hpp"

#include <string>

using namespace fusionlab;

namespace {

const char *kVer3 = R"(# Ver_3
ring Ver3
prime 3
basis L1 L2
unit L1
N L1 L1 L1 1
N L1 L2 L2 1
N L2 L1 L2 1
N L2 L2 L1 1
commutative true
dim L1 1
dim L2 2
)";

std::string error_of(const std::string &text) {
  try {
    parse_ring_file(text);
  } catch (const InputError &e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("Ver_3 file parses to the generated ring") {
  const auto f = parse_ring_file(kVer3);
  CHECK(f.ring == verlinde_ring(3).ring);
  REQUIRE(f.dim.has_value());
  CHECK(f.dim->p == 3);
  CHECK(f.dim->residues == std::vector<std::uint32_t>{1, 2});
  CHECK(write_ring_file(f.ring, f.dim) == std::string(kVer3).substr(std::string(kVer3).find('\n') + 1));
}

TEST_CASE("round trip on every builtin") {
  for (const auto &name : shipped_ring_names()) {
    CAPTURE(name);
    const auto f = builtin_ring(name);
    const auto text = write_ring_file(f.ring, f.dim);
    const auto back = parse_ring_file(text);
    CHECK(back.ring == f.ring);
    CHECK(back.ring.fusion() == f.ring.fusion());
    CHECK(back.dim.has_value() == f.dim.has_value());
    if (f.dim && back.dim) {
      CHECK(back.dim->p == f.dim->p);
      CHECK(back.dim->residues == f.dim->residues);
    }
    CHECK(write_ring_file(back.ring, back.dim) == text);
  }
}

TEST_CASE("writer order and zero omission") {
  const auto g = green_ring(3).ring;
  const auto text = write_ring_file(g);
  CHECK(contains(text, "fusion false\n"));
  CHECK_FALSE(contains(text, " 0\n"));
  CHECK(text.find("basis") < text.find("unit"));
  CHECK(text.find("unit") < text.find("\nN "));
  // Non-trivial duals are listed; self-duals are implied.
  const auto z3 = write_ring_file(group_ring(3));
  CHECK(contains(z3, "dual g g^2\n"));
  CHECK_FALSE(contains(write_ring_file(verlinde_ring(5).ring), "dual"));
}

TEST_CASE("syntax and axiom errors") {
  const std::string base = kVer3;
  auto without = [&](const std::string &line) {
    std::string t = base;
    t.erase(t.find(line), line.size() + 1);
    return t;
  };
  CHECK(contains(error_of(without("unit L1")), "missing unit"));
  CHECK(contains(error_of("ring empty\n"), "missing basis"));
  CHECK(contains(error_of(without("basis L1 L2")), "line 4"));

  std::string negative = base;
  negative.replace(negative.find("N L2 L2 L1 1"), 12, "N L2 L2 L1 -1");
  CHECK(contains(error_of(negative), "negative structure constant"));

  std::string dup = base;
  dup.replace(dup.find("basis L1 L2"), 11, "basis L1 L1");
  CHECK(contains(error_of(dup), "duplicate label"));

  std::string unknown = base + "frobnicate L1\n";
  const auto unknown_err = error_of(unknown);
  CHECK(contains(unknown_err, "line 13"));

  std::string bad_label = base;
  bad_label.replace(bad_label.find("N L2 L2 L1 1"), 12, "N L2 L9 L1 1");
  CHECK(contains(error_of(bad_label), "line 9"));

  // Axiom failure names the axiom.
  std::string assoc = base;
  assoc.replace(assoc.find("N L2 L2 L1 1"), 12, "N L2 L2 L1 2");
  const auto assoc_err = error_of(assoc);
  CHECK_FALSE(assoc_err.empty());
  CHECK_NOTHROW(parse_ring_text(assoc));

  // dims without a prime
  CHECK_FALSE(error_of(without("prime 3")).empty());
}
