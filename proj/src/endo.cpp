#include "syrt/endo.hpp"

#include <algorithm>
#include <numeric>

namespace syrt {

WitnessData witness_sequence(const Composition& alpha, const Syrt& t_hat) {
  if (!(t_hat.shape() == alpha))
    throw DomainError("witness tableau has the wrong shape");
  Syrt sup = t_sup(alpha);
  if (t_hat == sup)
    throw DomainError("witness tableau must differ from T_sup");
  if (!columns_increase(t_hat))
    throw DomainError("witness tableau is not in E_0");
  std::set<int> des_sup = descent_set(sup);
  for (int d : descent_set(t_hat))
    if (!des_sup.count(d))
      throw DomainError("witness tableau has a descent that T_sup lacks");

  int n = alpha.size();
  int epsilon = 0;
  for (int k = 1; k <= n; ++k)
    if (!(sup.position_of(k) == t_hat.position_of(k))) {
      epsilon = k;
      break;
    }
  Cell eps_cell = sup.position_of(epsilon);
  if (eps_cell.col < 2)
    throw InternalError("smallest displaced entry sits in the first column");
  int x = sup.entry({eps_cell.col - 1, eps_cell.row});

  WitnessData out{epsilon, x, {}, sup, t_hat};
  for (int j = x; j <= epsilon - 1; ++j) out.sequence.push_back(j);

  // the sequence must kill T_sup, with swaps all the way down to the final
  // adjacency
  Syrt cur = sup;
  for (int j = epsilon - 1; j >= x; --j) {
    PiResult r = apply_pi(j, cur);
    if (j == x) {
      if (r.kind != PiKind::Zero)
        throw InternalError("witness sequence failed to annihilate T_sup");
    } else {
      if (r.kind != PiKind::Swapped)
        throw InternalError("witness sequence stalled on T_sup");
      cur = *r.tableau;
    }
  }
  // and act by swaps at every step on t_hat
  cur = t_hat;
  for (int j = epsilon - 1; j >= x; --j) {
    PiResult r = apply_pi(j, cur);
    if (r.kind != PiKind::Swapped)
      throw InternalError("witness sequence not a swap chain on the witness");
    cur = *r.tableau;
  }
  out.image = cur;
  return out;
}

namespace {

// Matrix of pi_i restricted to the span, columns indexed by span position.
RationalMatrix pi_matrix(const HeckeAction& action, const std::vector<int>& span,
                         int i) {
  int d = static_cast<int>(span.size());
  std::vector<int> pos(action.dimension(), -1);
  for (int k = 0; k < d; ++k) pos[span[k]] = k;
  RationalMatrix m(d, d);
  for (int k = 0; k < d; ++k) {
    PiStep s = action.step(i, span[k]);
    if (s.kind == PiKind::Zero) continue;
    if (pos[s.target] < 0)
      throw InternalError("span is not closed under the action");
    m.at(pos[s.target], k) = 1;
  }
  return m;
}

std::vector<Rational> flatten(const RationalMatrix& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

}  // namespace

CommutantResult commutant(const HeckeAction& action, std::optional<int> class_id) {
  CommutantResult out;
  if (class_id) {
    ClassPartition partition = partition_by_signature(action.basis());
    if (*class_id < 0 || *class_id >= static_cast<int>(partition.classes.size()))
      throw DomainError("class id out of range");
    out.span = partition.classes[*class_id];
  } else {
    out.span.resize(action.dimension());
    std::iota(out.span.begin(), out.span.end(), 0);
  }
  int d = static_cast<int>(out.span.size());

  std::vector<RationalMatrix> gens;
  for (int i = 1; i <= action.generator_count(); ++i)
    gens.push_back(pi_matrix(action, out.span, i));

  // stack P X - X P = 0 over all generators; unknown X is row-major
  RationalMatrix system(static_cast<int>(gens.size()) * d * d, d * d);
  int row = 0;
  for (const RationalMatrix& p : gens) {
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c, ++row)
        for (int k = 0; k < d; ++k) {
          if (p.at(r, k) != 0) system.at(row, k * d + c) += p.at(r, k);
          if (p.at(k, c) != 0) system.at(row, r * d + k) -= p.at(k, c);
        }
  }
  for (const auto& v : kernel_basis(system)) {
    RationalMatrix m(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = v[r * d + c];
    out.basis.push_back(std::move(m));
  }
  return out;
}

int radical_dimension(const std::vector<RationalMatrix>& algebra) {
  int c = static_cast<int>(algebra.size());
  if (c == 0) return 0;
  std::vector<std::vector<Rational>> flat;
  for (const auto& m : algebra) flat.push_back(flatten(m));
  SpanSolver solver(flat);

  // structure constants: products expressed back in the spanning set
  std::vector<std::vector<std::vector<Rational>>> coords(c);
  for (int i = 0; i < c; ++i) {
    coords[i].resize(c);
    for (int j = 0; j < c; ++j) {
      auto x = solver.express(flatten(algebra[i] * algebra[j]));
      if (!x)
        throw InternalError("commutant is not closed under multiplication");
      coords[i][j] = std::move(*x);
    }
  }
  // left-multiplication matrices of the regular representation
  std::vector<RationalMatrix> lambda(c);
  for (int i = 0; i < c; ++i) {
    lambda[i] = RationalMatrix(c, c);
    for (int j = 0; j < c; ++j)
      for (int k = 0; k < c; ++k) lambda[i].at(k, j) = coords[i][j][k];
  }
  RationalMatrix gram(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) gram.at(i, j) = (lambda[i] * lambda[j]).trace();
  int rank = rank_of(gram);

  // the defining representation is faithful, so its trace form has the same
  // radical; disagreement means a bug, not mathematics
  RationalMatrix defining(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      defining.at(i, j) = (algebra[i] * algebra[j]).trace();
  if (rank_of(defining) != rank)
    throw InternalError("regular and defining trace forms disagree");

  return c - rank;
}

bool class_blocks_certified(const CommutantResult& full,
                            const ClassPartition& partition) {
  int d = static_cast<int>(full.span.size());
  for (const RationalMatrix& m : full.basis)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (m.at(r, c) != 0 &&
            partition.class_of[full.span[r]] != partition.class_of[full.span[c]])
          return false;
  std::vector<std::vector<Rational>> flat;
  for (const auto& m : full.basis) flat.push_back(flatten(m));
  SpanSolver solver(flat);
  for (const auto& members : partition.classes) {
    RationalMatrix projector(d, d);
    for (int k = 0; k < d; ++k)
      if (partition.class_of[full.span[k]] == partition.class_of[members.front()])
        projector.at(k, k) = 1;
    if (!solver.contains(flatten(projector))) return false;
  }
  return true;
}

namespace {

ClassEndoSummary summarize(std::optional<int> class_id,
                           const CommutantResult& result) {
  ClassEndoSummary s;
  s.class_id = class_id.value_or(-1);
  s.dim = static_cast<int>(result.span.size());
  s.commutant_dim = static_cast<int>(result.basis.size());
  s.radical_dim = radical_dimension(result.basis);
  s.local = (s.commutant_dim - s.radical_dim == 1);
  return s;
}

}  // namespace

EndoReport is_indecomposable_certified(const Composition& alpha, int limit) {
  if (alpha.size() > limit)
    throw ResourceLimitError("shape size " + std::to_string(alpha.size()) +
                             " exceeds the certification cap " +
                             std::to_string(limit));
  HeckeAction action = HeckeAction::build(alpha, limit);
  ClassPartition partition = partition_by_signature(action.basis());

  EndoReport report;
  report.alpha = alpha;
  report.simple = is_simple(alpha);
  report.classes = static_cast<int>(partition.classes.size());
  report.dimension = action.dimension();

  CommutantResult full = commutant(action);
  report.full = summarize(std::nullopt, full);
  report.e0 = summarize(0, commutant(action, 0));
  for (int j = 1; j < report.classes; ++j)
    report.other_classes.push_back(summarize(j, commutant(action, j)));

  report.indecomposable = report.full.local;
  if (!report.indecomposable && class_blocks_certified(full, partition))
    report.idempotent_blocks = partition.classes;

  bool single_class = report.classes == 1;
  if (report.indecomposable != single_class || report.indecomposable != report.simple)
    throw InternalError("locality certificate disagrees with the simplicity "
                        "classification for shape " + alpha.to_string());
  return report;
}

}  // namespace syrt
