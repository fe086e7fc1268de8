#include "rackhopf/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "rackhopf/errors.hpp"

namespace rackhopf {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<RatVector>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Rational RatMatrix::get(std::size_t r, std::size_t c) const {
  auto it = rows_.at(r).find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (c >= cols_) throw InvalidInput("matrix column out of range");
  if (is_zero(v))
    rows_.at(r).erase(c);
  else
    rows_.at(r)[c] = v;
}

void RatMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (c >= cols_) throw InvalidInput("matrix column out of range");
  auto& row = rows_.at(r);
  auto [it, inserted] = row.try_emplace(c, 0);
  it->second += v;
  if (is_zero(it->second)) row.erase(it);
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::vector<RatVector> RatMatrix::to_dense() const {
  std::vector<RatVector> out(rows(), RatVector(cols_));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) out[r][c] = v;
  return out;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::map<std::size_t, std::size_t> col_pos;
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = j;
  RatMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows_.at(rows[i])) {
      auto it = col_pos.find(c);
      if (it != col_pos.end()) m.rows_[i][it->second] = v;
    }
  return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix dimensions differ");
  RatMatrix m = a;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.row(r)) m.add(r, c, v);
  return m;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scale each row by the lcm of its denominators.
IntMatrix integer_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  IntMatrix out(rows.size(), std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    mpz_class l = 1;
    for (const auto& v : rows[r])
      if (!is_zero(v)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& v = rows[r][c];
      if (is_zero(v)) continue;
      out[r][c] = v.get_num() * (l / v.get_den());
    }
  }
  return out;
}

// In-place Bareiss forward elimination with column skipping. Returns pivot columns; rows
// 0..rank-1 hold an echelon form of the row space.
std::vector<std::size_t> bareiss(IntMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// RREF (rational) from Bareiss echelon rows.
std::vector<RatVector> reduce_echelon(const IntMatrix& a, const std::vector<std::size_t>& pivots, std::size_t cols) {
  std::vector<RatVector> rows(pivots.size(), RatVector(cols));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& lead = a[i][pivots[i]];
    for (std::size_t c = pivots[i]; c < cols; ++c) {
      if (a[i][c] == 0) continue;
      rows[i][c] = Rational(a[i][c], lead);
      rows[i][c].canonicalize();
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = rows[k][pivots[i]];
      if (is_zero(f)) continue;
      for (std::size_t c = pivots[i]; c < cols; ++c)
        if (!is_zero(rows[i][c])) rows[k][c] -= f * rows[i][c];
    }
  }
  return rows;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  IntMatrix a = integer_rows(m.to_dense(), m.cols());
  return bareiss(a, m.cols()).size();
}

std::vector<RatVector> rref_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw InvalidInput("row length mismatch");
  IntMatrix a = integer_rows(rows, cols);
  auto pivots = bareiss(a, cols);
  return reduce_echelon(a, pivots, cols);
}

bool same_row_space(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t cols) {
  return rref_rows(a, cols) == rref_rows(b, cols);
}

KernelData kernel_data(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  IntMatrix a = integer_rows(m.to_dense(), cols);
  auto pivots = bareiss(a, cols);
  auto rref = reduce_echelon(a, pivots, cols);
  KernelData out;
  out.rank = pivots.size();
  std::vector<char> is_pivot(cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rref[i][f];
    basis.push_back(std::move(v));
  }
  out.kernel = rref_rows(basis, cols);
  return out;
}

}  // namespace rackhopf
