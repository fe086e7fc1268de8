#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "rackhopf/rational.hpp"

namespace rackhopf {

using RatVector = std::vector<Rational>;

// Sparse exact matrix stored by rows; absent entries are zero.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_dense(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  const std::map<std::size_t, Rational>& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;

  std::vector<RatVector> to_dense() const;
  RatMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

struct KernelData {
  std::size_t rank = 0;
  // Basis of the right kernel in reduced row echelon form (pivots strictly increasing).
  std::vector<RatVector> kernel;
};

// Fraction-free (Bareiss) elimination over the integers after clearing row denominators.
std::size_t rank(const RatMatrix& m);
KernelData kernel_data(const RatMatrix& m);

// Nonzero rows of the reduced row echelon form of the span of `rows` (all of length `cols`).
std::vector<RatVector> rref_rows(const std::vector<RatVector>& rows, std::size_t cols);
bool same_row_space(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t cols);

}  // namespace rackhopf
