#include "syrt/rational_linalg.hpp"

namespace syrt {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix dimension mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

int rref(RationalMatrix& m, std::vector<int>* pivot_columns) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int sel = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(rank, c));
    Rational inv = Rational(1) / m.at(rank, col);
    for (int c = col; c < m.cols(); ++c) m.at(rank, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    if (pivot_columns) pivot_columns->push_back(col);
    ++rank;
  }
  return rank;
}

int rank_of(RationalMatrix m) { return rref(m); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  std::vector<int> pivots;
  rref(r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      v[pivots[row]] = -r.at(static_cast<int>(row), free);
    out.push_back(std::move(v));
  }
  return out;
}

SpanSolver::SpanSolver(std::vector<std::vector<Rational>> basis)
    : basis_(std::move(basis)) {
  int c = dimension();
  if (c == 0) return;
  RationalMatrix gram(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = i; j < c; ++j) {
      Rational dot = 0;
      for (std::size_t k = 0; k < basis_[i].size(); ++k)
        dot += basis_[i][k] * basis_[j][k];
      gram.at(i, j) = dot;
      gram.at(j, i) = dot;
    }
  // invert via [G | I]; over Q the Gram matrix of independent vectors is
  // positive definite, hence invertible
  RationalMatrix aug(c, 2 * c);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) aug.at(i, j) = gram.at(i, j);
    aug.at(i, c + i) = 1;
  }
  if (rref(aug) != c)
    throw InternalError("span basis is linearly dependent");
  gram_inverse_ = RationalMatrix(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) gram_inverse_.at(i, j) = aug.at(i, c + j);
}

std::optional<std::vector<Rational>> SpanSolver::express(
    const std::vector<Rational>& v) const {
  int c = dimension();
  if (c == 0) {
    for (const Rational& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  if (v.size() != basis_[0].size()) throw DomainError("vector length mismatch");
  std::vector<Rational> rhs(c);
  for (int i = 0; i < c; ++i)
    for (std::size_t k = 0; k < v.size(); ++k) rhs[i] += basis_[i][k] * v[k];
  std::vector<Rational> x(c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) x[i] += gram_inverse_.at(i, j) * rhs[j];
  // candidate coordinates are exact iff v really lies in the span
  for (std::size_t k = 0; k < v.size(); ++k) {
    Rational recon = 0;
    for (int i = 0; i < c; ++i) recon += x[i] * basis_[i][k];
    if (recon != v[k]) return std::nullopt;
  }
  return x;
}

}  // namespace syrt
