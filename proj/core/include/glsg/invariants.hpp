#pragma once

#include <vector>

#include "glsg/cayley_table.hpp"
#include "glsg/families.hpp"

namespace glsg {

/// Counting invariants of one table, indexed by table cell.
///
/// Cell (i,j) stands for the vertex (s_i, s_j, s_k) with k = product(i,j):
/// every vertex of the graph corresponds to exactly one cell, so the n x n
/// grid is the natural index space.
///   ns[k-1]   number of ordered pairs whose product is element k
///   nr(i,j)   alternative right factors: |{t != j : i*t = k}|
///   nc(i,j)   alternative left factors:  |{t != i : t*j = k}|
///   q(i,j)    ns[k-1] - 2*nr - 2*nc
///   deg(i,j)  2n - 3 + q(i,j), the degree of the vertex at cell (i,j)
struct InvariantSet {
  int n = 0;
  std::vector<int> ns;                    // size n
  std::vector<int> nr, nc, q, deg;        // size n*n, row-major

  int nr_at(int i, int j) const { return nr[(i - 1) * n + (j - 1)]; }
  int nc_at(int i, int j) const { return nc[(i - 1) * n + (j - 1)]; }
  int q_at(int i, int j) const { return q[(i - 1) * n + (j - 1)]; }
  int deg_at(int i, int j) const { return deg[(i - 1) * n + (j - 1)]; }
};

/// Single O(n^2) pass: one sweep over the table fills ns and the per-row /
/// per-column coincidence tables, then nr/nc/q/deg are read off per cell
/// (the alternative counts exclude the cell's own factor).
InvariantSet compute_invariants(const CayleyTable& t);

/// Flat-grid variant used on enumeration hot paths.
InvariantSet compute_invariants(int n, const std::vector<int>& entries);

struct RegularityResult {
  bool regular = false;
  std::vector<int> degree_set;  // sorted distinct formula degrees
};

/// Regular iff the formula degree (equivalently Q) is the same on every cell.
RegularityResult is_regular_glsg(const CayleyTable& t);
RegularityResult is_regular_glsg(int n, const std::vector<int>& entries);

struct DeltaObstruction {
  long long delta_max = 0;
  bool blocked = false;
};

/// delta_max is the spread of ns over elements that occur as products;
/// blocked means delta_max > 4(n-1), which rules out regularity (one-way).
DeltaObstruction delta_obstruction(const CayleyTable& t);

struct BrandtClosedForms {
  long long ns_nonzero = 0;  // m*n
  long long ns_zero = 0;     // (1+m*n^2)^2 - m^2*n^3
  long long delta = 0;       // ns_zero - ns_nonzero, expanded
};

/// Closed forms for the Brandt semigroup over a group of order m with index
/// set of size n. 64-bit: ns_zero grows like m^2 n^4.
BrandtClosedForms brandt_closed_forms(long long m, long long n);

struct FamilyDegree {
  enum class Kind { regular, not_regular, no_closed_form };
  Kind kind = Kind::no_closed_form;
  long long degree = 0;  // meaningful when kind == regular
};

/// Expected constant degree per family:
///   cyclic n -> 3n-3; const/null n -> (n-1)^2;
///   band pxq -> 2pq-3 + pq - 2(p-1) - 2(q-1) (left/right-zero via q=1/p=1);
///   brandt with index > 1 -> not regular; brandt with index 1 has no
///   claimed closed form (use compute_invariants).
FamilyDegree family_closed_form_degree(const FamilySpec& spec);

}  // namespace glsg
