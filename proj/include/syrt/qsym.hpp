#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "syrt/tableau.hpp"

namespace syrt {

using Int = boost::multiprecision::cpp_int;

enum class QSymBasis { M, F };

// A degree-homogeneous element of QSym with exact integer coefficients over
// the monomial (M) or fundamental (F) basis. Zero coefficients are never
// stored; keys sit in canonical (length, lex) order.
class QSymElement {
 public:
  explicit QSymElement(QSymBasis basis) : basis_(basis) {}

  QSymBasis basis() const { return basis_; }
  const std::map<Composition, Int, CanonicalCompositionLess>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // 0 when zero

  // Adds coeff * basis_alpha; rejects a key whose size breaks homogeneity.
  void add(const Composition& alpha, const Int& coeff);

  Int coefficient(const Composition& alpha) const;
  QSymElement& operator+=(const QSymElement& other);  // same basis required

  bool operator==(const QSymElement&) const = default;

 private:
  QSymBasis basis_;
  std::map<Composition, Int, CanonicalCompositionLess> terms_;
};

// R_alpha expanded over the fundamental basis: one F_{comp_n(Des(T))} per
// SYRT of shape alpha.
QSymElement expand_R_in_F(const Composition& alpha,
                          int limit = kDefaultEnumLimit);

// As above but restricted to the tableaux of one equivalence class.
QSymElement expand_class_in_F(const std::vector<Syrt>& basis,
                              const std::vector<int>& members);

// F_alpha = sum of M_beta over refinements beta of alpha, extended linearly.
QSymElement f_to_m(const QSymElement& element);

// A polynomial in x_1..x_m with exact integer coefficients, keyed by
// exponent vectors. Used as the truncation-equality oracle.
class TruncatedPolynomial {
 public:
  void add(const std::vector<int>& exponents, const Int& coeff);
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  bool operator==(const TruncatedPolynomial&) const = default;

 private:
  std::map<std::vector<int>, Int> terms_;
};

// Evaluates at x_1..x_m (all later variables zero): M_alpha becomes the sum
// over strictly increasing index tuples; F converts through f_to_m first.
// Two degree-n elements are equal iff their truncations at m = n agree.
TruncatedPolynomial evaluate_truncated(const QSymElement& element,
                                       int var_count);

}  // namespace syrt
