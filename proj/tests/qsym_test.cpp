#include "syrt/qsym.hpp"

#include <gtest/gtest.h>

#include "syrt/hecke.hpp"

namespace syrt {
namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

QSymElement f_element(std::vector<std::vector<int>> comps) {
  QSymElement e(QSymBasis::F);
  for (auto& c : comps) e.add(Composition(std::move(c)), 1);
  return e;
}

TEST(QSym, ElementInvariants) {
  QSymElement e(QSymBasis::F);
  e.add(comp({1, 2}), 2);
  e.add(comp({1, 2}), -2);
  EXPECT_TRUE(e.is_zero());  // zero coefficients are dropped
  e.add(comp({2, 1}), 1);
  EXPECT_EQ(e.degree(), 3);
  EXPECT_THROW(e.add(comp({2, 2}), 1), DomainError);  // degree mixing

  QSymElement m(QSymBasis::M);
  m.add(comp({3}), 1);
  EXPECT_THROW(e += m, DomainError);  // basis mixing
}

TEST(QSym, ExpandRInF) {
  EXPECT_EQ(expand_R_in_F(comp({3, 2, 2})),
            f_element({{1, 1, 2, 2, 1}, {1, 2, 3, 1}, {1, 1, 3, 2},
                       {1, 3, 3}, {1, 2, 2, 2}}));
  EXPECT_EQ(expand_R_in_F(comp({4})), f_element({{1, 1, 1, 1}}));
  EXPECT_EQ(expand_R_in_F(comp({2, 2})), f_element({{1, 2, 1}, {2, 2}}));
}

TEST(QSym, FToM) {
  QSymElement f(QSymBasis::F);
  f.add(comp({1, 2, 2}), 1);
  QSymElement m = f_to_m(f);
  EXPECT_EQ(m.basis(), QSymBasis::M);
  ASSERT_EQ(m.terms().size(), 4u);
  EXPECT_EQ(m.coefficient(comp({1, 2, 2})), 1);
  EXPECT_EQ(m.coefficient(comp({1, 1, 1, 2})), 1);
  EXPECT_EQ(m.coefficient(comp({1, 2, 1, 1})), 1);
  EXPECT_EQ(m.coefficient(comp({1, 1, 1, 1, 1})), 1);

  QSymElement fn(QSymBasis::F);
  fn.add(comp({5}), 1);
  EXPECT_EQ(f_to_m(fn).terms().size(), 16u);  // everything refines (n)

  QSymElement finest(QSymBasis::F);
  finest.add(comp({1, 1}), 1);
  QSymElement mf = f_to_m(finest);
  ASSERT_EQ(mf.terms().size(), 1u);
  EXPECT_EQ(mf.coefficient(comp({1, 1})), 1);
}

TEST(QSym, EvaluateTruncated) {
  QSymElement m(QSymBasis::M);
  m.add(comp({1, 2, 2}), 1);
  TruncatedPolynomial p = evaluate_truncated(m, 3);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms().begin()->first, (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(p.terms().begin()->second, 1);
  EXPECT_EQ(p.to_string(), "x1*x2^2*x3^2");

  EXPECT_TRUE(evaluate_truncated(m, 2).is_zero());  // fewer vars than parts

  QSymElement f(QSymBasis::F);
  f.add(comp({1, 1}), 1);
  TruncatedPolynomial q = evaluate_truncated(f, 2);
  ASSERT_EQ(q.terms().size(), 1u);
  EXPECT_EQ(q.terms().begin()->first, (std::vector<int>{1, 1}));
}

TEST(QSym, TruncationSeparatesMonomialBasis) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Composition> all = compositions_of(n);
    std::vector<TruncatedPolynomial> polys;
    for (const Composition& alpha : all) {
      QSymElement m(QSymBasis::M);
      m.add(alpha, 1);
      polys.push_back(evaluate_truncated(m, n));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        EXPECT_FALSE(polys[i] == polys[j])
            << all[i].to_string() << " vs " << all[j].to_string();
  }
}

TEST(QSym, ExpansionMatchesCompositionSeries) {
  for (int n = 1; n <= 6; ++n)
    for (const Composition& alpha : compositions_of(n)) {
      QSymElement expansion = expand_R_in_F(alpha);
      SeriesResult s = composition_series(HeckeAction::build(alpha));
      QSymElement from_series(QSymBasis::F);
      for (const auto& [key, count] : s.multiset) from_series.add(key, count);
      EXPECT_EQ(expansion, from_series) << alpha.to_string();
    }
}

TEST(QSym, ClassRestrictedExpansionsSumToTotal) {
  for (int n = 1; n <= 6; ++n)
    for (const Composition& alpha : compositions_of(n)) {
      EnumeratedClasses ec = equivalence_classes(alpha);
      QSymElement total(QSymBasis::F);
      for (const auto& members : ec.partition.classes)
        total += expand_class_in_F(ec.basis, members);
      EXPECT_EQ(total, expand_R_in_F(alpha)) << alpha.to_string();
    }
}

// The truncation oracle agrees with exact equality on F-expansions.
TEST(QSym, TruncationOracleSeesEqualElements) {
  Composition alpha = comp({3, 2, 2});
  QSymElement lhs = expand_R_in_F(alpha);
  EnumeratedClasses ec = equivalence_classes(alpha);
  QSymElement rhs(QSymBasis::F);
  for (const auto& members : ec.partition.classes)
    rhs += expand_class_in_F(ec.basis, members);
  EXPECT_EQ(evaluate_truncated(lhs, 7), evaluate_truncated(rhs, 7));
  QSymElement different = expand_R_in_F(comp({2, 2, 3}));
  EXPECT_FALSE(evaluate_truncated(lhs, 7) == evaluate_truncated(different, 7));
}

}  // namespace
}  // namespace syrt
