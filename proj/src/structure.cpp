#include "fusionlab/structure.hpp"

#include "fusionlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace fusionlab {

bool Subring::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool is_subring(const BasedRing &ring, const Subring &s) {
  if (!std::is_sorted(s.indices.begin(), s.indices.end())) return false;
  if (std::adjacent_find(s.indices.begin(), s.indices.end()) != s.indices.end()) return false;
  if (!s.contains(ring.unit())) return false;
  for (auto i : s.indices) {
    if (i >= ring.size() || !s.contains(ring.dual(i))) return false;
    for (auto j : s.indices)
      for (std::size_t k = 0; k < ring.size(); ++k)
        if (ring.N(i, j, k) > 0 && !s.contains(k)) return false;
  }
  return true;
}

Subring subring_closure(const BasedRing &ring, const std::vector<std::size_t> &seed) {
  const std::size_t n = ring.size();
  std::vector<bool> in(n, false);
  std::vector<std::size_t> members;
  auto add = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = true;
      members.push_back(i);
    }
  };
  add(ring.unit());
  for (auto i : seed) {
    if (i >= n) throw InputError("seed index out of range");
    add(i);
  }
  // Each new member is multiplied against everything already present.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const std::size_t i = members[next];
    add(ring.dual(i));
    for (std::size_t pos = 0; pos <= next; ++pos) {
      const std::size_t j = members[pos];
      for (std::size_t k = 0; k < n; ++k) {
        if (ring.N(i, j, k) > 0 || ring.N(j, i, k) > 0) add(k);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subring{members};
}

std::vector<Subring> enumerate_subrings(const BasedRing &ring) {
  auto less = [](const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<std::vector<std::size_t>, decltype(less)> found(less);
  found.insert(subring_closure(ring, {}).indices);
  for (std::size_t i = 0; i < ring.size(); ++i) found.insert(subring_closure(ring, {i}).indices);

  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<std::size_t> seed;
        std::set_union(current[a].begin(), current[a].end(), current[b].begin(), current[b].end(),
                       std::back_inserter(seed));
        if (found.insert(subring_closure(ring, seed).indices).second) grew = true;
      }
    }
  }
  std::vector<Subring> out;
  for (const auto &s : found) out.push_back(Subring{s});
  return out;
}

bool is_grading(const BasedRing &ring, const FiniteGroup &group, const std::vector<std::size_t> &grade) {
  if (grade.size() != ring.size()) return false;
  if (grade[ring.unit()] != 0) return false;
  for (auto g : grade)
    if (g >= group.order()) return false;
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = 0; j < ring.size(); ++j)
      for (std::size_t k = 0; k < ring.size(); ++k)
        if (ring.N(i, j, k) > 0 && grade[k] != group.multiply(grade[i], grade[j])) return false;
  return true;
}

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

// Fusion rings: i ~ j iff b_i b_j^* meets the adjoint subring.
std::vector<std::size_t> adjoint_cosets(const BasedRing &ring, const Subring &adjoint,
                                        const std::vector<std::size_t> &order) {
  const std::size_t n = ring.size();
  std::vector<std::size_t> grade(n, kUnassigned);
  std::size_t classes = 0;
  for (auto i : order) {
    if (grade[i] != kUnassigned) continue;
    const std::size_t cls = classes++;
    for (std::size_t j = 0; j < n; ++j) {
      for (auto k : adjoint.indices) {
        if (ring.N(i, ring.dual(j), k) > 0) {
          if (grade[j] != kUnassigned && grade[j] != cls) {
            throw InputError("grading classes overlap; ring is not a based ring");
          }
          grade[j] = cls;
          break;
        }
      }
    }
  }
  return grade;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Non-fusion rings (Green rings): finest partition where every product lands
// in one class, the class product is well defined and cancellative.
std::vector<std::size_t> congruence_classes(const BasedRing &ring, const std::vector<std::size_t> &order) {
  const std::size_t n = ring.size();
  UnionFind uf(n);
  std::vector<std::vector<std::size_t>> constituent(n, std::vector<std::size_t>(n, kUnassigned));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (ring.N(i, j, k) == 0) continue;
        if (constituent[i][j] == kUnassigned) constituent[i][j] = k;
        uf.unite(constituent[i][j], k);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (constituent[i][j] == kUnassigned) throw InputError("zero product; ring is not a based ring");

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t j2 = 0; j2 < n; ++j2) {
            if (uf.find(j) != uf.find(j2)) continue;
            const bool same_left = uf.find(i) == uf.find(i2);
            const bool same_product = uf.find(constituent[i][j]) == uf.find(constituent[i2][j2]);
            if (same_left && !same_product) changed |= uf.unite(constituent[i][j], constituent[i2][j2]);
            if (same_product && !same_left) changed |= uf.unite(i, i2);
          }
  }
  std::vector<std::size_t> grade(n, kUnassigned);
  std::vector<std::size_t> root_class(n, kUnassigned);
  std::size_t classes = 0;
  for (auto i : order) {
    const std::size_t r = uf.find(i);
    if (root_class[r] == kUnassigned) root_class[r] = classes++;
    grade[i] = root_class[r];
  }
  return grade;
}

} // namespace

UniversalGrading universal_grading(const BasedRing &ring) {
  if (!ring.commutative()) throw InputError("universal grading is only supported for commutative rings");
  const std::size_t n = ring.size();

  std::vector<std::size_t> seed;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (ring.N(i, ring.dual(i), k) > 0) seed.push_back(k);
  UniversalGrading out;
  out.adjoint = subring_closure(ring, seed);

  // Classes are numbered in order of first appearance, unit first.
  std::vector<std::size_t> order{ring.unit()};
  for (std::size_t i = 0; i < n; ++i)
    if (i != ring.unit()) order.push_back(i);
  out.grade = ring.fusion() ? adjoint_cosets(ring, out.adjoint, order) : congruence_classes(ring, order);

  const std::size_t order_g = *std::max_element(out.grade.begin(), out.grade.end()) + 1;
  out.group.table.assign(order_g, std::vector<std::size_t>(order_g, kUnassigned));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ring.N(i, j, k) == 0) continue;
        auto &cell = out.group.table[out.grade[i]][out.grade[j]];
        if (cell != kUnassigned && cell != out.grade[k]) {
          throw InputError("class product is ill-defined; ring is not a based ring");
        }
        cell = out.grade[k];
      }
    }
  }
  for (const auto &row : out.group.table) {
    for (auto c : row)
      if (c == kUnassigned) throw InputError("class product is undefined; ring is not a based ring");
    // Each row of a group table is a permutation.
    std::vector<std::size_t> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("class product is not a group law");
    }
  }
  if (!is_grading(ring, out.group, out.grade)) {
    throw InputError("computed universal grading fails the grading invariant");
  }
  return out;
}

GradedDimensionReport graded_dimension_identity(const BasedRing &ring, const DimHom &d,
                                                const UniversalGrading &grading) {
  const std::uint64_t q = static_cast<std::uint64_t>(d.p);
  GradedDimensionReport report;
  report.group_order = grading.group.order();
  report.class_sums.assign(report.group_order, ring.zero());
  report.class_dimensions.assign(report.group_order, 0);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const std::size_t g = grading.grade.at(i);
    report.class_sums[g][i] = d(i);
    report.class_dimensions[g] =
        static_cast<std::uint32_t>((report.class_dimensions[g] + std::uint64_t{d(i)} * d(i)) % q);
  }
  report.total = global_dimension(ring, d);
  report.neutral = report.class_dimensions.at(0);
  report.holds = report.total == (report.group_order % q) * report.neutral % q;
  return report;
}

namespace {

constexpr double kFpTol = 1e-6;

struct Signature {
  bool self_dual;
  std::vector<Int> square; // sorted N[i][i][*]
  std::vector<Int> with_dual; // sorted N[i][i*][*]
  friend bool operator==(const Signature &, const Signature &) = default;
};

std::vector<Signature> signatures(const BasedRing &r) {
  std::vector<Signature> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Signature s{r.dual(i) == i, {}, {}};
    for (std::size_t k = 0; k < r.size(); ++k) {
      s.square.push_back(r.N(i, i, k));
      s.with_dual.push_back(r.N(i, r.dual(i), k));
    }
    std::sort(s.square.begin(), s.square.end());
    std::sort(s.with_dual.begin(), s.with_dual.end());
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const BasedRing &a, const BasedRing &b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  const auto da = fp_dims(a);
  const auto db = fp_dims(b);
  const auto sa = signatures(a);
  const auto sb = signatures(b);

  std::vector<std::vector<std::size_t>> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      if ((i == a.unit()) != (t == b.unit())) continue;
      if (!(sa[i] == sb[t])) continue;
      if (std::abs(da[i] - db[t]) >= kFpTol) continue;
      options[i].push_back(t);
    }
    if (options[i].empty()) return std::nullopt;
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> sigma(n, kNone);
  std::vector<bool> taken(n, false);

  // Checks every triple whose largest index is i, all others being assigned.
  auto consistent = [&](std::size_t i) {
    const std::size_t di = a.dual(i);
    if (di <= i && sigma[di] != b.dual(sigma[i])) return false;
    for (std::size_t x = 0; x <= i; ++x)
      for (std::size_t y = 0; y <= i; ++y)
        for (std::size_t z = 0; z <= i; ++z) {
          if (x != i && y != i && z != i) continue;
          if (a.N(x, y, z) != b.N(sigma[x], sigma[y], sigma[z])) return false;
        }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (auto t : options[i]) {
      if (taken[t]) continue;
      sigma[i] = t;
      taken[t] = true;
      if (consistent(i) && assign(i + 1)) return true;
      taken[t] = false;
      sigma[i] = kNone;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return sigma;
}

namespace {

RingElement dual_of(const BasedRing &ring, const RingElement &x) {
  RingElement out = ring.zero();
  for (std::size_t i = 0; i < ring.size(); ++i) out[ring.dual(i)] = x[i];
  return out;
}

bool hom_equation(const BasedRing &source, const BasedRing &target, const std::vector<RingElement> &images,
                  std::size_t i, std::size_t j) {
  RingElement rhs = target.zero();
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (const Int c = source.N(i, j, k); c != 0) rhs += c * images[k];
  }
  return multiply(target, images[i], images[j]) == rhs;
}

// Non-negative vectors v with |sum v_t w_t - goal| < tol, lexicographic order.
void enumerate_vectors(const std::vector<double> &weights, double goal, double tol, std::size_t t,
                       double used, RingElement &current, std::vector<RingElement> &out) {
  if (t == weights.size()) {
    if (std::abs(used - goal) < tol) out.push_back(current);
    return;
  }
  for (Int c = 0;; ++c) {
    const double w = used + static_cast<double>(c) * weights[t];
    if (w > goal + tol) break;
    current[t] = c;
    enumerate_vectors(weights, goal, tol, t + 1, w, current, out);
  }
  current[t] = 0;
}

} // namespace

bool is_based_hom(const BasedRing &source, const BasedRing &target, const BasedHom &h) {
  if (h.images.size() != source.size()) return false;
  for (const auto &img : h.images)
    if (img.size() != target.size() || !img.is_nonnegative()) return false;
  if (!(h.images[source.unit()] == target.one())) return false;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (!(h.images[source.dual(i)] == dual_of(target, h.images[i]))) return false;
    for (std::size_t j = 0; j < source.size(); ++j)
      if (!hom_equation(source, target, h.images, i, j)) return false;
  }
  return true;
}

std::vector<BasedHom> find_based_homs(const BasedRing &source, const BasedRing &target, double fp_tol) {
  const std::size_t n = source.size();
  const auto ds = fp_dims(source);
  const auto dt = fp_dims(target);

  std::vector<std::vector<RingElement>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == source.unit()) {
      candidates[i].push_back(target.one());
      continue;
    }
    RingElement scratch = target.zero();
    enumerate_vectors(dt.values, ds[i], fp_tol, 0, 0.0, scratch, candidates[i]);
  }

  // Pair (i, j) can be checked once i, j and every constituent of b_i b_j are assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ready(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t last = std::max(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (source.N(i, j, k) > 0) last = std::max(last, k);
      ready[last].emplace_back(i, j);
    }
  }

  std::vector<BasedHom> out;
  std::vector<RingElement> images(n, target.zero());
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      out.push_back(BasedHom{images});
      return;
    }
    const std::size_t di = source.dual(i);
    auto try_image = [&](const RingElement &img) {
      if (di == i && !(dual_of(target, img) == img)) return;
      images[i] = img;
      for (const auto &[x, y] : ready[i])
        if (!hom_equation(source, target, images, x, y)) return;
      assign(i + 1);
    };
    if (di < i) {
      const RingElement forced = dual_of(target, images[di]);
      if (std::find(candidates[i].begin(), candidates[i].end(), forced) != candidates[i].end()) {
        try_image(forced);
      }
    } else {
      for (const auto &img : candidates[i]) try_image(img);
    }
    images[i] = target.zero();
  };
  assign(0);
  return out;
}

} // namespace fusionlab
