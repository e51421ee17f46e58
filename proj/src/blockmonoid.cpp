#include "zsm/blockmonoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "zsm/kernels.hpp"

namespace zsm {

Sequence make_sequence(GroupSpec group, std::vector<GroupElement> elements) {
  if (elements.empty())
    throw std::invalid_argument("sequence must have at least one element");
  for (const auto& e : elements)
    if (!(e.spec == group)) throw std::invalid_argument("group mismatch");
  return Sequence{std::move(group), std::move(elements)};
}

std::vector<GroupElement> support(const Sequence& seq) {
  std::vector<GroupElement> supp = seq.elements;
  std::sort(supp.begin(), supp.end(),
            [](const GroupElement& a, const GroupElement& b) {
              return a.coords < b.coords;
            });
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  return supp;
}

Sequence support_sequence(const Sequence& seq) {
  return Sequence{seq.group, support(seq)};
}

bool has_repetition(const Sequence& seq) {
  return support(seq).size() < seq.length();
}

ExpVec AtomMonoid::evaluate(const ExpVec& lambda) const {
  if (lambda.size() != atoms.size())
    throw std::invalid_argument("evaluate: length mismatch");
  std::vector<Int> acc(dim, 0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j)
      acc[j] += static_cast<Int>(lambda[i]) * atoms[i][j];
  }
  ExpVec out(dim);
  for (std::size_t j = 0; j < dim; ++j) out[j] = narrow_exp(acc[j], "evaluate");
  return out;
}

bool atom_order_less(const ExpVec& a, const ExpVec& b) {
  Int ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return lex_compare(a, b) > 0;
}

AtomMonoid make_atom_monoid(std::size_t dim, std::vector<ExpVec> atoms) {
  for (const auto& a : atoms) {
    if (a.size() != dim) throw std::invalid_argument("atom dimension mismatch");
    if (vec_is_zero(a)) throw std::invalid_argument("zero atom");
  }
  std::sort(atoms.begin(), atoms.end(), atom_order_less);
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
    if (atoms[i] == atoms[i + 1]) throw std::invalid_argument("duplicate atom");
  AtomMonoid m;
  m.dim = dim;
  m.atoms = std::move(atoms);
  m.atom_rows.reserve(m.atoms.size() * dim);
  for (const auto& a : m.atoms)
    m.atom_rows.insert(m.atom_rows.end(), a.begin(), a.end());
  return m;
}

bool is_member(const Sequence& seq, const ExpVec& alpha) {
  if (alpha.size() != seq.length())
    throw std::invalid_argument("is_member: length mismatch");
  return scalar_combination(seq.elements, alpha).is_identity();
}

namespace {

// Homogeneous integer system for B(g): one column per sequence entry (free
// coordinates stacked over reduced torsion coordinates) and one slack column
// of -d_j per torsion coordinate.  Minimal nonnegative solutions project
// bijectively onto the atoms since the slack values are determined by alpha
// and monotone in it.
struct CompletionSystem {
  std::size_t nvars = 0;
  std::size_t nrows = 0;
  std::size_t nseq = 0;
  std::vector<std::vector<Int>> cols;

  static CompletionSystem build(const Sequence& seq) {
    CompletionSystem sys;
    const GroupSpec& g = seq.group;
    const std::size_t r = g.free_rank, t = g.torsion.size();
    sys.nseq = seq.length();
    sys.nvars = sys.nseq + t;
    sys.nrows = r + t;
    sys.cols.assign(sys.nvars, std::vector<Int>(sys.nrows, 0));
    for (std::size_t i = 0; i < sys.nseq; ++i)
      for (std::size_t j = 0; j < r + t; ++j)
        sys.cols[i][j] = seq.elements[i].coords[j];
    for (std::size_t j = 0; j < t; ++j) sys.cols[sys.nseq + j][r + j] = -g.torsion[j];
    return sys;
  }
};

struct Node {
  ExpVec vec;
  std::vector<Int> value;
};

}  // namespace

std::vector<ExpVec> enumerate_atoms(const Sequence& seq) {
  const CompletionSystem sys = CompletionSystem::build(seq);
  const std::size_t n = sys.nvars;

  std::vector<ExpVec> minimal;          // minimal solutions, discovery order
  std::vector<Exp> minimal_rows;        // flat copy for domination checks

  auto dominated = [&](const ExpVec& v) {
    return kernels::first_leq_row(minimal_rows.data(), minimal.size(), v.data(),
                                  n) >= 0;
  };
  auto record = [&](const ExpVec& v) {
    minimal.push_back(v);
    minimal_rows.insert(minimal_rows.end(), v.begin(), v.end());
  };

  std::vector<Node> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Node nd;
    nd.vec.assign(n, 0);
    nd.vec[i] = 1;
    nd.value = sys.cols[i];
    frontier.push_back(std::move(nd));
  }

  while (!frontier.empty()) {
    std::vector<Node> next;
    std::unordered_set<ExpVec, VecHash> seen;
    for (Node& nd : frontier) {
      bool zero = std::all_of(nd.value.begin(), nd.value.end(),
                              [](Int x) { return x == 0; });
      if (zero) {
        if (!dominated(nd.vec)) record(nd.vec);
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        Int inner = 0;
        for (std::size_t j = 0; j < sys.nrows; ++j)
          inner = checked_add(
              inner, checked_mul(nd.value[j], sys.cols[i][j], "completion"),
              "completion");
        if (inner >= 0) continue;  // Contejean-Devie descent condition
        ExpVec child = nd.vec;
        child[i] = narrow_exp(static_cast<Int>(child[i]) + 1, "completion");
        if (dominated(child)) continue;
        if (!seen.insert(child).second) continue;
        Node c;
        c.vec = std::move(child);
        c.value.resize(sys.nrows);
        for (std::size_t j = 0; j < sys.nrows; ++j)
          c.value[j] = checked_add(nd.value[j], sys.cols[i][j], "completion");
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }

  std::vector<ExpVec> atoms;
  atoms.reserve(minimal.size());
  for (const auto& v : minimal)
    atoms.emplace_back(v.begin(), v.begin() + sys.nseq);
  std::sort(atoms.begin(), atoms.end(), atom_order_less);
  return atoms;
}

BlockMonoid BlockMonoid::compute(Sequence seq) {
  BlockMonoid bm;
  bm.monoid_ = make_atom_monoid(seq.length(), enumerate_atoms(seq));
  bm.seq_ = std::move(seq);
  return bm;
}

namespace {

void factorization_dfs(const AtomMonoid& m, std::size_t start, ExpVec& rem,
                       ExpVec& lambda, std::vector<ExpVec>& out) {
  if (vec_is_zero(rem)) {
    out.push_back(lambda);
    return;
  }
  const std::size_t n = m.atom_count(), d = m.dim;
  for (std::size_t i = start; i < n; ++i) {
    std::ptrdiff_t hit = kernels::first_leq_row(m.atom_rows.data() + i * d,
                                                n - i, rem.data(), d);
    if (hit < 0) return;
    i += static_cast<std::size_t>(hit);
    const ExpVec& a = m.atoms[i];
    for (std::size_t j = 0; j < d; ++j) rem[j] -= a[j];
    ++lambda[i];
    factorization_dfs(m, i, rem, lambda, out);
    --lambda[i];
    for (std::size_t j = 0; j < d; ++j) rem[j] += a[j];
  }
}

}  // namespace

std::vector<ExpVec> factorizations(const AtomMonoid& monoid, const ExpVec& s) {
  if (s.size() != monoid.dim)
    throw std::invalid_argument("factorizations: dimension mismatch");
  std::vector<ExpVec> out;
  ExpVec rem = s;
  ExpVec lambda(monoid.atom_count(), 0);
  factorization_dfs(monoid, 0, rem, lambda, out);
  if (out.empty() && !vec_is_zero(s))
    throw std::invalid_argument("factorizations: not a monoid element " +
                                vec_to_string(s));
  std::sort(out.begin(), out.end(),
            [](const ExpVec& a, const ExpVec& b) { return lex_compare(a, b) > 0; });
  return out;
}

int krull_rank(const AtomMonoid& monoid) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(monoid.atom_count());
  for (const auto& a : monoid.atoms) rows.emplace_back(a.begin(), a.end());
  return lattice_rank(rows);
}

std::vector<ExpVec> elements_up_to_degree(const AtomMonoid& monoid,
                                          Int degree_cap) {
  std::unordered_set<ExpVec, VecHash> seen;
  std::vector<ExpVec> frontier{ExpVec(monoid.dim, 0)};
  seen.insert(frontier[0]);
  std::vector<ExpVec> out;
  while (!frontier.empty()) {
    std::vector<ExpVec> next;
    for (const ExpVec& s : frontier) {
      out.push_back(s);
      for (const auto& a : monoid.atoms) {
        if (total(s) + total(a) > degree_cap) continue;
        ExpVec t = vec_add(s, a);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& b) {
    Int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return lex_compare(a, b) < 0;
  });
  return out;
}

}  // namespace zsm
