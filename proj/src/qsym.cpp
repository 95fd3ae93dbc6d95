#include "syrt/qsym.hpp"

#include <sstream>

namespace syrt {

int QSymElement::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

void QSymElement::add(const Composition& alpha, const Int& coeff) {
  if (coeff == 0) return;
  if (!terms_.empty() && alpha.size() != degree())
    throw DomainError("QSym element must stay degree-homogeneous");
  Int& c = terms_[alpha];
  c += coeff;
  if (c == 0) terms_.erase(alpha);
}

Int QSymElement::coefficient(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Int(0) : it->second;
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
  if (basis_ != other.basis_)
    throw DomainError("cannot add elements over different bases");
  for (const auto& [alpha, coeff] : other.terms_) add(alpha, coeff);
  return *this;
}

QSymElement expand_R_in_F(const Composition& alpha, int limit) {
  QSymElement out(QSymBasis::F);
  int n = alpha.size();
  for (const Syrt& t : enumerate_syrt(alpha, limit))
    out.add(composition_of_subset(descent_set(t), n), 1);
  return out;
}

QSymElement expand_class_in_F(const std::vector<Syrt>& basis,
                              const std::vector<int>& members) {
  QSymElement out(QSymBasis::F);
  for (int idx : members) {
    const Syrt& t = basis[idx];
    out.add(composition_of_subset(descent_set(t), t.size()), 1);
  }
  return out;
}

QSymElement f_to_m(const QSymElement& element) {
  if (element.basis() == QSymBasis::M) return element;
  QSymElement out(QSymBasis::M);
  for (const auto& [alpha, coeff] : element.terms()) {
    int n = alpha.size();
    std::set<int> base = subset_of_composition(alpha);
    std::vector<int> free;
    for (int x = 1; x < n; ++x)
      if (!base.count(x)) free.push_back(x);
    // beta refines alpha iff S(beta) contains S(alpha)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      std::set<int> s = base;
      for (std::size_t b = 0; b < free.size(); ++b)
        if (mask >> b & 1) s.insert(free[b]);
      out.add(composition_of_subset(s, n), coeff);
    }
  }
  return out;
}

void TruncatedPolynomial::add(const std::vector<int>& exponents, const Int& coeff) {
  if (coeff == 0) return;
  Int& c = terms_[exponents];
  c += coeff;
  if (c == 0) terms_.erase(exponents);
}

std::string TruncatedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (coeff != 1) os << coeff << "*";
    bool any = false;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (any) os << "*";
      any = true;
      os << "x" << v + 1;
      if (exps[v] > 1) os << "^" << exps[v];
    }
    if (!any) os << "1";
  }
  return os.str();
}

TruncatedPolynomial evaluate_truncated(const QSymElement& element, int var_count) {
  if (var_count < 1) throw DomainError("need at least one variable");
  const QSymElement monomial = f_to_m(element);
  TruncatedPolynomial out;
  for (const auto& [alpha, coeff] : monomial.terms()) {
    int k = alpha.length();
    if (k > var_count) continue;  // no strictly increasing tuple exists
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    for (;;) {
      std::vector<int> exps(var_count, 0);
      for (int i = 0; i < k; ++i) exps[idx[i] - 1] = alpha.part(i + 1);
      out.add(exps, coeff);
      // next k-subset of 1..var_count in lex order
      int i = k - 1;
      while (i >= 0 && idx[i] == var_count - (k - 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace syrt
