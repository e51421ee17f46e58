#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zsm/ints.hpp"

namespace zsm {

// Finitely generated abelian group Z^r x Z/d_1 x ... x Z/d_t.  Elements are
// integer vectors of length r + t, free coordinates first; torsion coordinate
// i is kept reduced to [0, d_i).
struct GroupSpec {
  int free_rank = 0;
  std::vector<Int> torsion;  // each entry >= 2

  int dim() const { return free_rank + static_cast<int>(torsion.size()); }
  bool is_finite() const { return free_rank == 0; }
  // Group order for finite groups, 0 when the group is infinite.
  Int order_or_zero() const;
  bool operator==(const GroupSpec&) const = default;
  std::string to_string() const;
};

struct GroupElement {
  GroupSpec spec;
  std::vector<Int> coords;

  bool is_identity() const;
  bool operator==(const GroupElement&) const = default;
  std::string to_string() const;
};

// Throws std::invalid_argument on invariant violations (torsion < 2, arity
// mismatch); torsion coordinates are reduced on construction.
GroupElement make_element(const GroupSpec& spec, std::vector<Int> coords);
GroupElement group_zero(const GroupSpec& spec);

// Errors with "group mismatch" when the operands disagree on the GroupSpec.
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);

// Sum of alpha_i * g_i; |g| must equal |alpha|.
GroupElement scalar_combination(const std::vector<GroupElement>& g,
                                const ExpVec& alpha);

// Least n >= 1 with n*a = 0, or nullopt when a has a nonzero free coordinate.
std::optional<Int> element_order(const GroupElement& a);

// All elements of a finite group, in lexicographic coordinate order.
std::vector<GroupElement> all_elements(const GroupSpec& spec);

// "Z^r x Z/d1 x Z/d2" (whitespace-insensitive, "Z^0" omissible, repeated "Z"
// terms accumulate rank).  Throws std::invalid_argument with a message.
GroupSpec parse_group(const std::string& text);
// "(a,b),(c,d)" over the given spec.
std::vector<GroupElement> parse_elements(const GroupSpec& spec,
                                         const std::string& text);

}  // namespace zsm
