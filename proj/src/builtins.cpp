#include "fusionlab/builtins.hpp"

#include "fusionlab/green.hpp"
#include "fusionlab/verlinde.hpp"

#include <charconv>

namespace fusionlab {

namespace {

bool split_number(std::string_view name, std::string_view prefix, int &value) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  const auto digits = name.substr(prefix.size());
  if (digits.empty()) return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

std::vector<Int> subscripts_of(const BasedRing &ring) {
  std::vector<Int> out;
  for (const auto &label : ring.labels()) out.push_back(std::stoll(label.substr(1)));
  return out;
}

} // namespace

RingFile builtin_ring(std::string_view name) {
  int n = 0;
  if (split_number(name, "ver", n)) {
    auto ver = verlinde_ring(n);
    return {ver.ring, canonical_dim_hom(ver)};
  }
  if (split_number(name, "green", n)) {
    auto green = green_ring(n);
    return {green.ring, canonical_dim_hom(green)};
  }
  if (split_number(name, "svec", n)) {
    auto ring = svec_subring(n);
    return {ring, dim_hom(ring, subscripts_of(ring), n)};
  }
  if (split_number(name, "plus", n)) {
    auto ring = plus_subring(n);
    return {ring, dim_hom(ring, subscripts_of(ring), n)};
  }
  if (split_number(name, "group", n)) {
    if (n < 1) throw InputError("group ring order must be positive");
    return {group_ring(static_cast<std::size_t>(n)), std::nullopt};
  }
  if (name == "yanglee") {
    auto ring = yang_lee_ring();
    return {ring, dim_hom(ring, {1, 3}, 5)};
  }
  if (name == "trivial") return {trivial_ring(), std::nullopt};
  throw InputError("unknown builtin ring '" + std::string(name) + "'");
}

std::vector<std::string> shipped_ring_names() {
  return {"trivial", "yanglee", "group2", "group3", "group4", "group8", "ver2",  "ver3",  "ver5",
          "ver7",    "ver11",   "ver13",  "green2", "green3", "green5", "green7", "svec5", "svec7",
          "plus5",   "plus7",   "plus11"};
}

} // namespace fusionlab
