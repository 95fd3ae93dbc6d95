#include "syrt/rational_linalg.hpp"

#include <gtest/gtest.h>

namespace syrt {
namespace {

RationalMatrix make(int rows, int cols, std::vector<int> entries) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = entries[r * cols + c];
  return m;
}

TEST(RationalLinalg, RrefAndRank) {
  RationalMatrix m = make(2, 2, {2, 4, 1, 3});
  std::vector<int> pivots;
  EXPECT_EQ(rref(m, &pivots), 2);
  EXPECT_EQ(pivots, (std::vector<int>{0, 1}));
  EXPECT_EQ(m, RationalMatrix::identity(2));

  EXPECT_EQ(rank_of(make(2, 2, {1, 2, 2, 4})), 1);
  EXPECT_EQ(rank_of(make(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0})), 0);
  EXPECT_EQ(rank_of(make(2, 3, {1, 2, 3, 4, 5, 6})), 2);

  // rational pivots stay exact
  RationalMatrix f(2, 2);
  f.at(0, 0) = Rational(1, 3);
  f.at(0, 1) = Rational(1, 6);
  f.at(1, 0) = Rational(2, 3);
  f.at(1, 1) = Rational(1, 3);
  EXPECT_EQ(rank_of(f), 1);
}

TEST(RationalLinalg, KernelBasisCanonicalForm) {
  std::vector<std::vector<Rational>> k = kernel_basis(make(1, 3, {1, 2, 3}));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (std::vector<Rational>{-2, 1, 0}));
  EXPECT_EQ(k[1], (std::vector<Rational>{-3, 0, 1}));

  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
}

TEST(RationalLinalg, KernelVectorsAnnihilate) {
  RationalMatrix m = make(3, 4, {1, 2, 0, -1, 2, 4, 1, 0, 3, 6, 1, -1});
  std::vector<std::vector<Rational>> k = kernel_basis(m);
  EXPECT_EQ(static_cast<int>(k.size()), 4 - rank_of(m));
  for (const auto& v : k)
    for (int r = 0; r < m.rows(); ++r) {
      Rational dot = 0;
      for (int c = 0; c < m.cols(); ++c) dot += m.at(r, c) * v[c];
      EXPECT_EQ(dot, 0);
    }
}

TEST(RationalLinalg, MultiplyAndTrace) {
  RationalMatrix a = make(2, 2, {1, 2, 3, 4});
  RationalMatrix b = make(2, 2, {0, 1, 1, 0});
  EXPECT_EQ(a * b, make(2, 2, {2, 1, 4, 3}));
  EXPECT_EQ((a * b).trace(), 5);
  EXPECT_EQ(RationalMatrix::identity(4).trace(), 4);
}

TEST(RationalLinalg, SpanSolver) {
  SpanSolver solver({{1, 0, 1}, {0, 1, 1}});
  auto x = solver.express({2, 3, 5});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (std::vector<Rational>{2, 3}));
  EXPECT_FALSE(solver.express({1, 1, 1}).has_value());
  EXPECT_TRUE(solver.contains({0, 0, 0}));

  SpanSolver empty(std::vector<std::vector<Rational>>{});
  EXPECT_TRUE(empty.contains({0, 0}));
  EXPECT_FALSE(empty.contains({1, 0}));
}

}  // namespace
}  // namespace syrt
