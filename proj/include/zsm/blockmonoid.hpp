#pragma once

#include <cstddef>
#include <vector>

#include "zsm/group.hpp"
#include "zsm/ints.hpp"

namespace zsm {

// Sequence g = (g_1, ..., g_m) over a group, repetitions allowed, m >= 1.
struct Sequence {
  GroupSpec group;
  std::vector<GroupElement> elements;

  std::size_t length() const { return elements.size(); }
};

Sequence make_sequence(GroupSpec group, std::vector<GroupElement> elements);

// Distinct elements of the sequence, sorted by coordinates.
std::vector<GroupElement> support(const Sequence& seq);
Sequence support_sequence(const Sequence& seq);
bool has_repetition(const Sequence& seq);

// Atom-presented submonoid of N0^dim: the atoms are pairwise distinct,
// nonzero, none divides another, and they are listed in the canonical order
// (descending by total length, then descending lexicographically).
struct AtomMonoid {
  std::size_t dim = 0;
  std::vector<ExpVec> atoms;
  std::vector<Exp> atom_rows;  // row-major copy for the kernels

  std::size_t atom_count() const { return atoms.size(); }
  // Sum of lambda_i * atom_i in N0^dim; lambda indexed by atom.
  ExpVec evaluate(const ExpVec& lambda) const;
};

// Sorts, checks and packs an atom list (throws on duplicates/zero atoms).
AtomMonoid make_atom_monoid(std::size_t dim, std::vector<ExpVec> atoms);

bool atom_order_less(const ExpVec& a, const ExpVec& b);  // canonical order

// Block monoid B(g) of the membership condition sum alpha_i g_i = 0; atoms
// are computed once at construction and the object is immutable afterwards.
class BlockMonoid {
 public:
  static BlockMonoid compute(Sequence seq);

  const Sequence& sequence() const { return seq_; }
  const AtomMonoid& monoid() const { return monoid_; }
  const std::vector<ExpVec>& atoms() const { return monoid_.atoms; }
  std::size_t ambient_dim() const { return seq_.length(); }

 private:
  Sequence seq_;
  AtomMonoid monoid_;
};

// True iff sum alpha_i g_i is the identity; |alpha| must equal the length.
bool is_member(const Sequence& seq, const ExpVec& alpha);

// Minimal nonzero solutions of the membership condition, canonical order.
// Contejean-Devie completion over the sequence columns, with torsion
// congruences turned into exact equations by slack columns.
std::vector<ExpVec> enumerate_atoms(const Sequence& seq);

// All factorizations of s over the atoms (lambda with evaluate(lambda) = s),
// sorted descending lexicographically.  Throws if s is not a member.
std::vector<ExpVec> factorizations(const AtomMonoid& monoid, const ExpVec& s);

// Rank over Z of the lattice generated by the atoms.
int krull_rank(const AtomMonoid& monoid);

// Distinct monoid elements with total(s) <= degree_cap, sorted by (degree,
// lex); used by sweep oracles and confluence checks.
std::vector<ExpVec> elements_up_to_degree(const AtomMonoid& monoid,
                                          Int degree_cap);

}  // namespace zsm
