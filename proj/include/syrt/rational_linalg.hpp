#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "syrt/errors.hpp"

namespace syrt {

using Rational = boost::multiprecision::cpp_rational;

// Dense matrix over exact rationals. Sizes here stay small (commutant
// systems at certification scale), so no sparsity tricks.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  Rational trace() const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns the rank and, optionally, the
// pivot columns.
int rref(RationalMatrix& m, std::vector<int>* pivot_columns = nullptr);

int rank_of(RationalMatrix m);

// Canonical kernel basis from the reduced echelon form: one vector per free
// column, unit in that coordinate.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

// Exact coordinates within the span of a fixed independent set of vectors,
// via the (always invertible over Q) Gram matrix.
class SpanSolver {
 public:
  explicit SpanSolver(std::vector<std::vector<Rational>> basis);

  int dimension() const { return static_cast<int>(basis_.size()); }

  // Coordinates of v in the basis, or nullopt when v is outside the span.
  std::optional<std::vector<Rational>> express(const std::vector<Rational>& v) const;
  bool contains(const std::vector<Rational>& v) const { return express(v).has_value(); }

 private:
  std::vector<std::vector<Rational>> basis_;
  RationalMatrix gram_inverse_;
};

}  // namespace syrt
