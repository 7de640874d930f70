#pragma once

#include <string>
#include <string_view>

#include "glsg/cayley_table.hpp"

namespace glsg {

enum class FamilyKind {
  null_semigroup,
  left_zero,
  right_zero,
  rectangular_band,
  cyclic_group,
  constant_image,
  brandt,
};

/// Parsed family spec string. The CLI grammar is:
///   null:N  leftzero:N  rightzero:N  band:PxQ  cyclic:N  const:N:C
///   brandt:cyclic:M:N
/// Parameter meaning by kind:
///   null/leftzero/rightzero/cyclic: a = order n
///   band:                           a = p (left-zero side), b = q (right-zero side)
///   const:                          a = order n, b = target element c
///   brandt:                         a = cyclic group order m, b = index set size n
struct FamilySpec {
  FamilyKind kind = FamilyKind::null_semigroup;
  int a = 0;
  int b = 0;

  bool operator==(const FamilySpec&) const = default;
};

FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// All products equal element n (the zero).
CayleyTable make_null(int n);

/// entries[i][j] = i.
CayleyTable make_left_zero(int n);

/// entries[i][j] = j.
CayleyTable make_right_zero(int n);

/// Direct product of a left-zero semigroup of order p and a right-zero
/// semigroup of order q. Element (a,b) has index (a-1)*q + b; the product
/// of (a,b) and (c,d) is (a,d).
CayleyTable make_rectangular_band(int p, int q);

/// Z_n written additively: entries[i][j] = ((i-1 + j-1) mod n) + 1.
CayleyTable make_cyclic_group(int n);

/// All products equal element c.
CayleyTable make_constant_image(int n, int c);

/// Brandt semigroup over the given group table with an index set of size
/// index_size. Element 1 is the zero; the nonzero element (i,g,j) with
/// i,j in 1..index_size and g in 1..m has index 1 + ((i-1)*m + (g-1))*index_size + j.
/// Products follow (i,g,j)(k,h,l) = (i, g*h, l) when j = k and 0 otherwise.
/// Throws GroupInvalid unless the supplied table is a Latin square,
/// associative, and has a two-sided identity.
CayleyTable make_brandt(const CayleyTable& group, int index_size);

CayleyTable make_family(const FamilySpec& spec);

}  // namespace glsg
