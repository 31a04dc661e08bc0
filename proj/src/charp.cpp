#include "fusionlab/charp.hpp"

#include "fusionlab/structure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace fusionlab {

std::uint32_t DimHom::operator()(const RingElement &x) const {
  if (x.size() != residues.size()) throw InputError("element size does not match DimHom");
  const std::uint64_t q = static_cast<std::uint64_t>(p);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = (acc + mod_reduce(x[i], static_cast<std::uint32_t>(p)) * std::uint64_t{residues[i]}) % q;
  }
  return static_cast<std::uint32_t>(acc);
}

DimHom dim_hom(const BasedRing &ring, const std::vector<Int> &residues, int p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (residues.size() != ring.size()) throw InputError("need one dimension per basis element");
  const auto q = static_cast<std::uint32_t>(p);
  DimHom d{p, {}};
  for (Int r : residues) d.residues.push_back(mod_reduce(r, q));
  if (d(ring.unit()) != 1) throw InputError("dimension of the unit must be 1");
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (d(i) != d(ring.dual(i))) {
      throw InputError("dimension of " + ring.label(i) + " differs from that of its dual");
    }
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    for (std::size_t j = 0; j < ring.size(); ++j) {
      const std::uint32_t lhs = d(multiply(ring, ring.basis(i), ring.basis(j)));
      const std::uint32_t rhs = static_cast<std::uint32_t>(std::uint64_t{d(i)} * d(j) % q);
      if (lhs != rhs) {
        throw InputError("dimension is not multiplicative on (" + ring.label(i) + ", " +
                         ring.label(j) + ")");
      }
    }
  }
  return d;
}

namespace {

std::vector<Int> subscripts(std::size_t n) {
  std::vector<Int> out;
  for (std::size_t s = 1; s <= n; ++s) out.push_back(static_cast<Int>(s));
  return out;
}

} // namespace

DimHom canonical_dim_hom(const GreenRing &green) {
  return dim_hom(green.ring, subscripts(green.ring.size()), green.p);
}

DimHom canonical_dim_hom(const VerlindeRing &ver) {
  return dim_hom(ver.ring, subscripts(ver.ring.size()), ver.p);
}

std::uint32_t global_dimension(const BasedRing &ring, const DimHom &d) {
  if (d.residues.size() != ring.size()) throw InputError("DimHom does not match ring");
  const std::uint64_t q = static_cast<std::uint64_t>(d.p);
  std::uint64_t acc = 0;
  for (auto r : d.residues) acc = (acc + std::uint64_t{r} * r) % q;
  return static_cast<std::uint32_t>(acc);
}

RingElement regular_dual_element(const BasedRing &ring) {
  RingElement r = ring.zero();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    r += multiply(ring, ring.basis(ring.dual(i)), ring.basis(i));
  }
  return r;
}

ModpMatrix trace_form_gram(const BasedRing &ring, int p) {
  const std::size_t n = ring.size();
  const auto q = static_cast<std::uint32_t>(p);
  // Tr(L_{b_k}) = sum_j N[k][j][j].
  std::vector<Int> basis_trace(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) basis_trace[k] = detail::checked_add(basis_trace[k], ring.N(k, j, j));
  ModpMatrix g(n, n, q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc = (acc + static_cast<std::int64_t>(mod_reduce(ring.N(i, j, k), q)) *
                         mod_reduce(basis_trace[k], q)) % p;
      }
      g.set(i, j, acc);
    }
  }
  return g;
}

bool is_semisimple_mod_p(const BasedRing &ring, int p) {
  return rank(trace_form_gram(ring, p)) == ring.size();
}

namespace {

RingElement reduce(RingElement x, int p) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_reduce(x[i], static_cast<std::uint32_t>(p));
  return x;
}

} // namespace

RingElement pth_power(const BasedRing &ring, const RingElement &x, int p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (x.size() != ring.size()) throw InputError("element size does not match ring");
  RingElement result = ring.one();
  RingElement base = reduce(x, p);
  unsigned e = static_cast<unsigned>(p);
  while (e > 0) {
    if (e & 1u) result = reduce(multiply(ring, result, base), p);
    e >>= 1u;
    if (e > 0) base = reduce(multiply(ring, base, base), p);
  }
  return result;
}

RingElement collapse_dimension(const FrobeniusRow &row, int p) {
  RingElement out(row.m.size());
  for (std::size_t j = 0; j < row.m.size(); ++j) {
    Int acc = 0;
    for (std::size_t s = 0; s < row.m[j].size(); ++s) {
      acc = (acc + row.m[j][s] % p * static_cast<Int>(s + 1)) % p;
    }
    out[j] = acc;
  }
  return out;
}

namespace {

struct CandidateSearch {
  std::size_t source_size;
  std::size_t ver_size;
  int p;
  std::vector<double> weights; // FPdim(b_j) * FPdim(L_s), flattened j*ver_size + (s-1)
  double target;
  double tol;
  Int max_terms;
  RingElement congruence;
  std::vector<Int> counts;
  std::vector<FrobeniusRow> found;

  void run(std::size_t var, double used, Int terms) {
    if (var == weights.size()) {
      if (std::abs(used - target) >= tol) return;
      FrobeniusRow row;
      row.m.assign(source_size, std::vector<Int>(ver_size, 0));
      for (std::size_t v = 0; v < counts.size(); ++v) row.m[v / ver_size][v % ver_size] = counts[v];
      if (collapse_dimension(row, p) == congruence) found.push_back(std::move(row));
      return;
    }
    for (Int c = 0;; ++c) {
      const double w = used + static_cast<double>(c) * weights[var];
      if (w > target + tol || terms + c > max_terms) break;
      counts[var] = c;
      run(var + 1, w, terms + c);
    }
    counts[var] = 0;
  }
};

} // namespace

std::vector<FrobeniusRow> frobenius_candidates(const BasedRing &ring, std::size_t i, int p,
                                               const FpDimVector &dims,
                                               const FrobeniusSearchOptions &options) {
  if (i >= ring.size()) throw InputError("basis index out of range");
  if (dims.size() != ring.size()) throw InputError("FPdim vector does not match ring");
  const auto ver = verlinde_ring(p);
  const auto ver_dims = fp_dims(ver.ring);

  CandidateSearch search;
  search.source_size = ring.size();
  search.ver_size = ver.ring.size();
  search.p = p;
  for (std::size_t j = 0; j < ring.size(); ++j)
    for (std::size_t s = 0; s < ver.ring.size(); ++s) search.weights.push_back(dims[j] * ver_dims[s]);
  search.target = dims[i];
  search.tol = options.fp_tol;
  search.max_terms = static_cast<Int>(std::ceil(dims[i] - options.fp_tol)) + options.slack;
  search.congruence = pth_power(ring, ring.basis(i), p);
  search.counts.assign(search.weights.size(), 0);
  search.run(0, 0.0, 0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

FrobeniusTable verlinde_frobenius_table(int p) {
  const auto ver = verlinde_ring(p);
  const std::size_t n = ver.ring.size();
  FrobeniusTable table{p, {}};
  for (int s = 1; s <= static_cast<int>(n); ++s) {
    FrobeniusRow row;
    row.m.assign(n, std::vector<Int>(n, 0));
    const auto [a, b] = frobenius_on_verlinde(s, p);
    row.m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 1;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_string(FrobeniusType type) {
  switch (type) {
  case FrobeniusType::Vec: return "Vec";
  case FrobeniusType::SVec: return "sVec";
  case FrobeniusType::VerPlus: return "Ver_p^+";
  case FrobeniusType::Ver: return "Ver_p";
  }
  return "?";
}

FrobeniusType frobenius_type(const FrobeniusTable &table, int p) {
  const auto ver = verlinde_ring(p);
  const std::size_t n = ver.ring.size();
  std::vector<std::size_t> used;
  for (const auto &row : table.rows) {
    for (const auto &line : row.m) {
      if (line.size() != n) throw InputError("Frobenius row has wrong Ver_p width");
      for (std::size_t s = 0; s < n; ++s) {
        if (line[s] < 0) throw InputError("negative Frobenius multiplicity");
        if (line[s] > 0) used.push_back(s);
      }
    }
  }
  const Subring closure = subring_closure(ver.ring, used);
  auto matches = [&](const std::vector<int> &subscripts) {
    std::vector<std::size_t> idx;
    for (int s : subscripts) idx.push_back(static_cast<std::size_t>(s - 1));
    return closure.indices == idx;
  };
  if (closure.indices == std::vector<std::size_t>{ver.ring.unit()}) return FrobeniusType::Vec;
  if (!ver.svec.empty() && matches(ver.svec)) return FrobeniusType::SVec;
  if (!ver.plus.empty() && matches(ver.plus)) return FrobeniusType::VerPlus;
  if (closure.size() == n) return FrobeniusType::Ver;
  throw InputError("Frobenius table closure is not one of the four subrings of Ver_p");
}

std::string format_frobenius_row(const BasedRing &ring, const FrobeniusRow &row) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t j = 0; j < row.m.size(); ++j) {
    for (std::size_t s = 0; s < row.m[j].size(); ++s) {
      const Int c = row.m[j][s];
      if (c == 0) continue;
      if (any) os << " + ";
      const std::string term = ring.label(j) + " ⊠ L" + std::to_string(s + 1);
      if (c == 1) {
        os << term;
      } else {
        os << c << "*(" << term << ")";
      }
      any = true;
    }
  }
  return any ? os.str() : "0";
}

} // namespace fusionlab
