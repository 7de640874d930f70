#include "glsg/invariants.hpp"

#include <algorithm>

namespace glsg {

InvariantSet compute_invariants(int n, const std::vector<int>& entries) {
  InvariantSet inv;
  inv.n = n;
  inv.ns.assign(n, 0);
  inv.nr.assign(static_cast<std::size_t>(n) * n, 0);
  inv.nc.assign(static_cast<std::size_t>(n) * n, 0);
  inv.q.assign(static_cast<std::size_t>(n) * n, 0);
  inv.deg.assign(static_cast<std::size_t>(n) * n, 0);

  // rowcount[i][k]: occurrences of product k in row i; colcount[j][k] likewise
  std::vector<int> rowcount(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> colcount(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = entries[i * n + j];
      ++inv.ns[k - 1];
      ++rowcount[i * n + (k - 1)];
      ++colcount[j * n + (k - 1)];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = entries[i * n + j];
      const int nr = rowcount[i * n + (k - 1)] - 1;  // exclude factor s_j itself
      const int nc = colcount[j * n + (k - 1)] - 1;  // exclude factor s_i itself
      const int q = inv.ns[k - 1] - 2 * nr - 2 * nc;
      inv.nr[i * n + j] = nr;
      inv.nc[i * n + j] = nc;
      inv.q[i * n + j] = q;
      inv.deg[i * n + j] = 2 * n - 3 + q;
    }
  }
  return inv;
}

InvariantSet compute_invariants(const CayleyTable& t) {
  return compute_invariants(t.order(), t.entries());
}

RegularityResult is_regular_glsg(int n, const std::vector<int>& entries) {
  const InvariantSet inv = compute_invariants(n, entries);
  RegularityResult res;
  res.degree_set = inv.deg;
  std::sort(res.degree_set.begin(), res.degree_set.end());
  res.degree_set.erase(std::unique(res.degree_set.begin(), res.degree_set.end()),
                       res.degree_set.end());
  res.regular = res.degree_set.size() == 1;
  return res;
}

RegularityResult is_regular_glsg(const CayleyTable& t) {
  return is_regular_glsg(t.order(), t.entries());
}

DeltaObstruction delta_obstruction(const CayleyTable& t) {
  const int n = t.order();
  std::vector<long long> ns(n, 0);
  for (int v : t.entries()) ++ns[v - 1];
  long long max_ns = 0;
  long long min_occurring = 0;
  for (long long count : ns) {
    max_ns = std::max(max_ns, count);
    if (count >= 1 && (min_occurring == 0 || count < min_occurring)) {
      min_occurring = count;
    }
  }
  DeltaObstruction res;
  res.delta_max = max_ns - min_occurring;
  res.blocked = res.delta_max > 4LL * (n - 1);
  return res;
}

BrandtClosedForms brandt_closed_forms(long long m, long long n) {
  BrandtClosedForms res;
  res.ns_nonzero = m * n;
  const long long order = 1 + m * n * n;
  res.ns_zero = order * order - m * m * n * n * n;
  res.delta = 1 + 2 * m * n * n - m * n + m * m * n * n * n * (n - 1);
  return res;
}

FamilyDegree family_closed_form_degree(const FamilySpec& spec) {
  FamilyDegree res;
  auto regular = [&](long long degree) {
    res.kind = FamilyDegree::Kind::regular;
    res.degree = degree;
    return res;
  };
  const long long a = spec.a;
  const long long b = spec.b;
  switch (spec.kind) {
    case FamilyKind::cyclic_group:
      return regular(3 * a - 3);
    case FamilyKind::null_semigroup:
    case FamilyKind::constant_image:
      return regular((a - 1) * (a - 1));
    case FamilyKind::left_zero:
      return family_closed_form_degree({FamilyKind::rectangular_band, spec.a, 1});
    case FamilyKind::right_zero:
      return family_closed_form_degree({FamilyKind::rectangular_band, 1, spec.a});
    case FamilyKind::rectangular_band: {
      const long long pq = a * b;
      return regular(2 * pq - 3 + pq - 2 * (a - 1) - 2 * (b - 1));
    }
    case FamilyKind::brandt:
      if (b > 1) {
        res.kind = FamilyDegree::Kind::not_regular;
        return res;
      }
      res.kind = FamilyDegree::Kind::no_closed_form;
      return res;
  }
  throw UnsupportedFamilyError("kind=" + std::to_string(static_cast<int>(spec.kind)));
}

}  // namespace glsg
