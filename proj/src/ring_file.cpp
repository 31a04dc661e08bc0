#include "fusionlab/ring_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace fusionlab {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string &message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Int parse_int(const std::string &tok, std::size_t line) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

bool parse_bool(const std::string &tok, std::size_t line) {
  if (tok == "true") return true;
  if (tok == "false") return false;
  fail(line, "expected true or false, got '" + tok + "'");
}

} // namespace

RingFile parse_ring_text(std::string_view text) {
  std::string name = "unnamed";
  std::optional<int> prime;
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::optional<std::size_t> unit;
  std::vector<std::optional<std::size_t>> dual;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Int> entries;
  std::map<std::size_t, Int> dims;
  bool commutative = false;
  bool fusion = true;
  std::set<std::string> seen_once;

  auto lookup = [&](const std::string &label, std::size_t line) {
    if (labels.empty()) fail(line, "label '" + label + "' used before the basis record");
    auto it = index.find(label);
    if (it == index.end()) fail(line, "unknown label '" + label + "'");
    return it->second;
  };
  auto once = [&](const std::string &record, std::size_t line) {
    if (!seen_once.insert(record).second) fail(line, "duplicate '" + record + "' record");
  };
  auto arity = [](const std::vector<std::string> &toks, std::size_t n, std::size_t line) {
    if (toks.size() != n + 1) fail(line, "'" + toks[0] + "' expects " + std::to_string(n) + " argument(s)");
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string &rec = toks[0];
    if (rec == "ring") {
      arity(toks, 1, line);
      once(rec, line);
      name = toks[1];
    } else if (rec == "prime") {
      arity(toks, 1, line);
      once(rec, line);
      prime = static_cast<int>(parse_int(toks[1], line));
      if (!is_prime(*prime)) fail(line, "prime " + toks[1] + " is not prime");
    } else if (rec == "basis") {
      once(rec, line);
      if (toks.size() < 2) fail(line, "empty basis");
      for (std::size_t t = 1; t < toks.size(); ++t) {
        if (!index.emplace(toks[t], labels.size()).second) fail(line, "duplicate label '" + toks[t] + "'");
        labels.push_back(toks[t]);
      }
      dual.assign(labels.size(), std::nullopt);
    } else if (rec == "unit") {
      arity(toks, 1, line);
      once(rec, line);
      unit = lookup(toks[1], line);
    } else if (rec == "dual") {
      arity(toks, 2, line);
      const auto a = lookup(toks[1], line);
      const auto b = lookup(toks[2], line);
      if ((dual[a] && *dual[a] != b) || (dual[b] && *dual[b] != a)) {
        fail(line, "conflicting dual for '" + toks[1] + "' or '" + toks[2] + "'");
      }
      dual[a] = b;
      dual[b] = a;
    } else if (rec == "dim") {
      arity(toks, 2, line);
      const auto a = lookup(toks[1], line);
      if (!dims.emplace(a, parse_int(toks[2], line)).second) fail(line, "duplicate dim for '" + toks[1] + "'");
    } else if (rec == "N") {
      arity(toks, 4, line);
      const auto key = std::tuple{lookup(toks[1], line), lookup(toks[2], line), lookup(toks[3], line)};
      const Int v = parse_int(toks[4], line);
      if (v < 0) fail(line, "negative structure constant");
      if (!entries.emplace(key, v).second) fail(line, "duplicate N entry");
    } else if (rec == "commutative") {
      arity(toks, 1, line);
      once(rec, line);
      commutative = parse_bool(toks[1], line);
    } else if (rec == "fusion") {
      arity(toks, 1, line);
      once(rec, line);
      fusion = parse_bool(toks[1], line);
    } else {
      fail(line, "unknown record '" + rec + "'");
    }
  }
  if (labels.empty()) throw InputError("missing basis");
  if (!unit) throw InputError("missing unit");

  const std::size_t n = labels.size();
  RingData d;
  d.name = name;
  d.labels = labels;
  d.unit = *unit;
  for (std::size_t i = 0; i < n; ++i) d.dual.push_back(dual[i].value_or(i));
  d.constants.assign(n * n * n, 0);
  for (const auto &[key, v] : entries) {
    const auto [i, j, k] = key;
    d.constants[(i * n + j) * n + k] = v;
  }
  d.commutative = commutative;
  d.fusion = fusion;
  BasedRing ring(std::move(d));

  std::optional<DimHom> dim;
  if (!dims.empty()) {
    if (!prime) throw InputError("dim records require a prime record");
    if (dims.size() != n) throw InputError("dim records must cover every basis element");
    DimHom h{*prime, {}};
    for (const auto &[i, r] : dims) h.residues.push_back(mod_reduce(r, static_cast<std::uint32_t>(*prime)));
    dim = std::move(h);
  }
  return RingFile{std::move(ring), std::move(dim)};
}

RingFile parse_ring_file(std::string_view text) {
  RingFile file = parse_ring_text(text);
  require_valid(file.ring);
  if (file.dim) {
    std::vector<Int> residues(file.dim->residues.begin(), file.dim->residues.end());
    file.dim = dim_hom(file.ring, residues, file.dim->p);
  }
  return file;
}

std::string write_ring_file(const BasedRing &ring, const std::optional<DimHom> &dim) {
  std::ostringstream os;
  const std::size_t n = ring.size();
  os << "ring " << ring.name() << '\n';
  if (dim) os << "prime " << dim->p << '\n';
  os << "basis";
  for (const auto &l : ring.labels()) os << ' ' << l;
  os << '\n';
  os << "unit " << ring.label(ring.unit()) << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.dual(i) > i) os << "dual " << ring.label(i) << ' ' << ring.label(ring.dual(i)) << '\n';
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const Int c = ring.N(i, j, k); c != 0) {
          os << "N " << ring.label(i) << ' ' << ring.label(j) << ' ' << ring.label(k) << ' ' << c << '\n';
        }
  os << "commutative " << (ring.commutative() ? "true" : "false") << '\n';
  if (!ring.fusion()) os << "fusion false\n";
  if (dim) {
    for (std::size_t i = 0; i < n; ++i) os << "dim " << ring.label(i) << ' ' << dim->residues.at(i) << '\n';
  }
  return os.str();
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

} // namespace fusionlab
