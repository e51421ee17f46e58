#include "zsm/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace zsm {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<Big>>;

BigMat identity(std::size_t n) {
  BigMat m(n, std::vector<Big>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Reduces A in place to Smith normal form, accumulating the row operations in
// U and the column operations in V so that U * A_in * V = A_out.
void smith_reduce(BigMat& a, BigMat& u, BigMat& v) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t k = 0;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Big& f) {
    for (std::size_t c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
    for (std::size_t c = 0; c < rows; ++c) u[dst][c] += f * u[src][c];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Big& f) {
    for (std::size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
    for (std::size_t r = 0; r < cols; ++r) v[r][dst] += f * v[r][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };

  while (k < rows && k < cols) {
    // Find a pivot.
    std::size_t pr = k, pc = k;
    bool found = false;
    for (std::size_t i = k; i < rows && !found; ++i)
      for (std::size_t j = k; j < cols && !found; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    swap_rows(k, pr);
    swap_cols(k, pc);

    // Clear row and column k; restart whenever a remainder shrinks the pivot.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        Big q = a[i][k] / a[k][k];
        add_row(i, k, -q);
        if (a[i][k] != 0) {
          swap_rows(i, k);
          dirty = true;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        Big q = a[k][j] / a[k][k];
        add_col(j, k, -q);
        if (a[k][j] != 0) {
          swap_cols(j, k);
          dirty = true;
        }
      }
    }

    // Enforce divisibility of the remaining block by the pivot.
    bool fixed = false;
    for (std::size_t i = k + 1; i < rows && !fixed; ++i)
      for (std::size_t j = k + 1; j < cols && !fixed; ++j)
        if (a[i][j] % a[k][k] != 0) {
          add_row(k, i, 1);
          fixed = true;
        }
    if (fixed) continue;  // redo elimination at k

    if (a[k][k] < 0) negate_row(k);
    ++k;
  }
}

Int to_int64(const Big& x, const char* where) {
  if (x < std::numeric_limits<Int>::min() || x > std::numeric_limits<Int>::max())
    overflow_abort(where);
  return static_cast<Int>(x);
}

BigMat to_big(const std::vector<std::vector<Int>>& m) {
  BigMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    r[i].assign(m[i].begin(), m[i].end());
  return r;
}

}  // namespace

SmithForm smith_normal_form(const std::vector<std::vector<Int>>& matrix) {
  SmithForm out;
  out.rows = matrix.size();
  out.cols = out.rows ? matrix[0].size() : 0;
  for (const auto& row : matrix)
    if (row.size() != out.cols)
      throw std::invalid_argument("smith_normal_form: ragged matrix");

  BigMat a = to_big(matrix);
  BigMat u = identity(out.rows);
  BigMat v = identity(out.cols);
  smith_reduce(a, u, v);

  std::size_t k = std::min(out.rows, out.cols);
  for (std::size_t i = 0; i < k; ++i) {
    Int d = to_int64(a[i][i], "smith_normal_form diagonal");
    out.diagonal.push_back(d);
    if (d != 0) out.rank = i + 1;
  }
  out.left.assign(out.rows, std::vector<Int>(out.rows, 0));
  for (std::size_t i = 0; i < out.rows; ++i)
    for (std::size_t j = 0; j < out.rows; ++j)
      out.left[i][j] = to_int64(u[i][j], "smith_normal_form U");
  out.right.assign(out.cols, std::vector<Int>(out.cols, 0));
  for (std::size_t i = 0; i < out.cols; ++i)
    for (std::size_t j = 0; j < out.cols; ++j)
      out.right[i][j] = to_int64(v[i][j], "smith_normal_form V");
  return out;
}

int lattice_rank(const std::vector<std::vector<Int>>& vectors) {
  if (vectors.empty()) return 0;
  return static_cast<int>(smith_normal_form(vectors).rank);
}

bool in_lattice_span(const std::vector<std::vector<Int>>& generators,
                     const std::vector<Int>& target) {
  const std::size_t dim = target.size();
  for (const auto& g : generators)
    if (g.size() != dim)
      throw std::invalid_argument("in_lattice_span: dimension mismatch");

  // Columns of A are the generators; solve A x = target over Z.
  std::vector<std::vector<Int>> a(dim, std::vector<Int>(generators.size(), 0));
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = generators[j][i];

  SmithForm snf = smith_normal_form(a);
  // c = U * target; solvable iff c_i divisible by d_i on the diagonal and zero
  // beyond the rank.
  for (std::size_t i = 0; i < dim; ++i) {
    Big c = 0;
    for (std::size_t j = 0; j < dim; ++j)
      c += Big(snf.left[i][j]) * target[j];
    if (i < snf.rank) {
      if (c % snf.diagonal[i] != 0) return false;
    } else if (c != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Int>> integer_kernel_basis(
    const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  if (rows.empty()) {
    // No constraints: the kernel is all of Z^cols.
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Int> e(cols, 0);
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  SmithForm snf = smith_normal_form(rows);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = snf.rank; j < cols; ++j) {
    std::vector<Int> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = snf.right[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace zsm
