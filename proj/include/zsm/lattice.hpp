#pragma once

#include <vector>

#include "zsm/ints.hpp"

// Integer-lattice utilities backed by arbitrary-precision arithmetic (Smith
// normal form intermediates can blow up well past 64 bits).

namespace zsm {

struct SmithForm {
  std::size_t rows = 0, cols = 0;
  std::size_t rank = 0;
  std::vector<Int> diagonal;            // invariant factors d1 | d2 | ...
  std::vector<std::vector<Int>> left;   // U, rows x rows, unimodular
  std::vector<std::vector<Int>> right;  // V, cols x cols, unimodular; U*A*V = D
};

// Throws std::overflow_error if a transform entry does not fit in 64 bits.
SmithForm smith_normal_form(const std::vector<std::vector<Int>>& matrix);

// Rank over Z of the sublattice generated by the given vectors (all the same
// length); the empty family has rank 0.
int lattice_rank(const std::vector<std::vector<Int>>& vectors);

// Whether target lies in the integer span of the generators (each of length
// dim); decided via the Smith normal form of the generator matrix.
bool in_lattice_span(const std::vector<std::vector<Int>>& generators,
                     const std::vector<Int>& target);

// Basis of the integer kernel {x : A x = 0} where the matrix is given by rows.
std::vector<std::vector<Int>> integer_kernel_basis(
    const std::vector<std::vector<Int>>& rows, std::size_t cols);

}  // namespace zsm
