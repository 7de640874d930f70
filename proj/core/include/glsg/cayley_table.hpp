#pragma once

#include <string>
#include <vector>

#include "glsg/errors.hpp"

namespace glsg {

/// Multiplication table of a finite semigroup on elements 1..n.
///
/// Entries are 1-based element indices stored row-major: entry (i,j) is the
/// product of element i with element j. Instances are immutable values and
/// safe to share across threads; every operation on them is a pure function.
class CayleyTable {
 public:
  /// Wraps an entry grid that is associative by construction (family
  /// constructors, relabelings of valid tables). Checks only shape and
  /// entry range; run untrusted input through validate_table() instead.
  CayleyTable(int order, std::vector<int> entries);

  int order() const noexcept { return n_; }

  /// Product of elements i and j, all 1-based.
  int product(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }

  /// Row-major entries, values 1..n.
  const std::vector<int>& entries() const noexcept { return entries_; }

  bool operator==(const CayleyTable&) const = default;

  /// Lexicographic by (order, row-major entries).
  bool operator<(const CayleyTable& other) const;

 private:
  int n_;
  std::vector<int> entries_;
};

/// Validates shape, entry range and associativity over all n^3 triples.
/// Reports the first failing associativity triple in row-major (i,j,k) order.
CayleyTable validate_table(const std::vector<std::vector<int>>& raw);

/// Associativity check on a flat grid; returns true and sets (i,j,k) to the
/// first failing triple in row-major order when the table is not associative.
bool find_associativity_witness(int n, const std::vector<int>& entries, int& i, int& j, int& k);

/// Opposite semigroup: entries'[i][j] = entries[j][i].
CayleyTable transpose(const CayleyTable& t);

/// Applies an element relabeling. perm is 1-based: perm[x-1] is the new name
/// of element x; the result satisfies result(perm[i], perm[j]) = perm[t(i,j)].
CayleyTable relabel(const CayleyTable& t, const std::vector<int>& perm);

/// Reusable canonicalization engine. Finds the lexicographically minimal
/// table over all n! relabelings of the input and of its transpose, so two
/// tables get the same output iff they are isomorphic or anti-isomorphic.
/// Cost n! * n^2 with early-exit pruning; intended for n <= 6.
class Canonicalizer {
 public:
  explicit Canonicalizer(int n);

  /// entries: flat row-major grid, values 1..n. Writes the canonical grid
  /// into out (resized to n*n).
  void run(const std::vector<int>& entries, std::vector<int>& out);

 private:
  bool try_candidate(const std::vector<int>& src, std::vector<int>& best);

  int n_;
  std::vector<int> new_to_old_;  // permutation being enumerated
  std::vector<int> old_to_new_;  // its inverse
  std::vector<int> trans_;
  std::vector<int> cand_;
};

/// Canonical form under isomorphism and anti-isomorphism (see Canonicalizer).
CayleyTable canonical_form(const CayleyTable& t);

/// True iff every row and every column is a permutation of 1..n.
bool is_cancellative(const CayleyTable& t);

}  // namespace glsg
