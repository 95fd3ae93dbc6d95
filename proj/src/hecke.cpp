#include "syrt/hecke.hpp"

#include <algorithm>
#include <deque>

namespace syrt {

namespace {

Syrt swap_entries(const Syrt& tableau, int i) {
  Cell a = tableau.position_of(i);
  Cell b = tableau.position_of(i + 1);
  std::vector<std::vector<int>> rows = tableau.rows();
  rows[a.row - 1][a.col - 1] = i + 1;
  rows[b.row - 1][b.col - 1] = i;
  Tableau swapped(tableau.shape(), std::move(rows));
  if (auto v = validate_syrt(swapped))
    throw InternalError("swap of " + std::to_string(i) +
                        " produced a non-SYRT: " + describe(*v));
  return Syrt(std::move(swapped));
}

}  // namespace

PiResult apply_pi(int i, const Syrt& tableau) {
  int n = tableau.size();
  if (i < 1 || i >= n)
    throw DomainError("generator index " + std::to_string(i) +
                      " outside 1.." + std::to_string(n - 1));
  Cell pi = tableau.position_of(i);
  Cell pj = tableau.position_of(i + 1);
  if (pj.col <= pi.col) return {PiKind::Fixed, tableau};
  if (pj.row == pi.row && pj.col == pi.col + 1) return {PiKind::Zero, std::nullopt};
  return {PiKind::Swapped, swap_entries(tableau, i)};
}

HeckeAction HeckeAction::build(const Composition& alpha, int limit) {
  HeckeAction action;
  action.shape_ = alpha;
  action.basis_ = enumerate_syrt(alpha, limit);
  for (int k = 0; k < static_cast<int>(action.basis_.size()); ++k)
    action.index_[action.basis_[k].reading_word()] = k;
  int n = alpha.size();
  for (int i = 1; i < n; ++i) {
    std::vector<PiStep> steps;
    std::vector<int> targets;
    for (int k = 0; k < action.dimension(); ++k) {
      PiResult r = apply_pi(i, action.basis_[k]);
      int target = -1;
      if (r.kind == PiKind::Fixed) {
        target = k;
      } else if (r.kind == PiKind::Swapped) {
        target = action.index_of(*r.tableau);
        if (target < 0)
          throw InternalError("swap target escaped the enumerated basis");
      }
      steps.push_back({r.kind, target});
      targets.push_back(target);
    }
    action.steps_.push_back(std::move(steps));
    action.targets_.push_back(std::move(targets));
  }
  return action;
}

PiStep HeckeAction::step(int i, int index) const {
  if (i < 1 || i > generator_count()) throw DomainError("generator index out of range");
  if (index < 0 || index >= dimension()) throw DomainError("basis index out of range");
  return steps_[i - 1][index];
}

const std::vector<int>& HeckeAction::generator_map(int i) const {
  if (i < 1 || i > generator_count()) throw DomainError("generator index out of range");
  return targets_[i - 1];
}

int HeckeAction::index_of(const Syrt& tableau) const {
  auto it = index_.find(tableau.reading_word());
  return it == index_.end() ? -1 : it->second;
}

namespace {

// f after g, with -1 (zero) annihilating.
std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(g.size());
  for (std::size_t t = 0; t < g.size(); ++t) out[t] = g[t] < 0 ? -1 : f[g[t]];
  return out;
}

int first_difference(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] != b[t]) return static_cast<int>(t);
  return -1;
}

}  // namespace

std::optional<RelationFailure> verify_relations(const HeckeAction& action) {
  int g = action.generator_count();
  for (int i = 1; i <= g; ++i) {
    const auto& f = action.generator_map(i);
    int d = first_difference(compose(f, f), f);
    if (d >= 0) return RelationFailure{"idempotent", i, i, d};
  }
  for (int i = 1; i <= g; ++i)
    for (int j = i + 2; j <= g; ++j) {
      const auto& fi = action.generator_map(i);
      const auto& fj = action.generator_map(j);
      int d = first_difference(compose(fi, fj), compose(fj, fi));
      if (d >= 0) return RelationFailure{"commute", i, j, d};
    }
  for (int i = 1; i + 1 <= g; ++i) {
    const auto& fi = action.generator_map(i);
    const auto& fj = action.generator_map(i + 1);
    int d = first_difference(compose(fi, compose(fj, fi)),
                             compose(fj, compose(fi, fj)));
    if (d >= 0) return RelationFailure{"braid", i, i + 1, d};
  }
  return std::nullopt;
}

bool is_source(const Syrt& tableau) {
  int n = tableau.size();
  for (int i = 1; i < n; ++i) {
    Cell pi = tableau.position_of(i);
    Cell pj = tableau.position_of(i + 1);
    if (pj.col > pi.col) continue;  // descent
    if (pj.col == pi.col) continue;
    if (pj.col == pi.col - 1 && pj.row > pi.row) continue;
    return false;
  }
  return true;
}

std::vector<Syrt> closure(const Syrt& tableau) {
  std::map<std::vector<int>, Syrt> seen;
  std::deque<Syrt> queue{tableau};
  seen.emplace(tableau.reading_word(), tableau);
  int n = tableau.size();
  while (!queue.empty()) {
    Syrt cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      PiResult r = apply_pi(i, cur);
      if (r.kind != PiKind::Swapped) continue;
      auto word = r.tableau->reading_word();
      if (!seen.count(word)) {
        seen.emplace(word, *r.tableau);
        queue.push_back(*r.tableau);
      }
    }
  }
  std::vector<Syrt> out;
  for (auto& [word, t] : seen) out.push_back(std::move(t));
  return out;
}

std::optional<Syrt> first_predecessor(const Syrt& tableau) {
  int n = tableau.size();
  for (int i = 1; i < n; ++i) {
    Cell pi = tableau.position_of(i);
    Cell pj = tableau.position_of(i + 1);
    // a predecessor swaps back: needs i+1 strictly left of i, and either at
    // least two columns away or below in the adjacent column
    if (pj.col >= pi.col) continue;
    if (pj.col == pi.col - 1 && pj.row > pi.row) continue;
    Syrt pred = swap_entries(tableau, i);
    PiResult forward = apply_pi(i, pred);
    if (forward.kind != PiKind::Swapped || !(*forward.tableau == tableau))
      throw InternalError("predecessor construction disagrees with pi");
    return pred;
  }
  return std::nullopt;
}

int rank(const Syrt& tableau) {
  Syrt cur = tableau;
  int steps = 0;
  while (auto pred = first_predecessor(cur)) {
    cur = *pred;
    ++steps;
  }
  if (!is_source(cur))
    throw InternalError("predecessor walk ended off-source");
  return steps;
}

std::vector<int> ranks_for(const HeckeAction& action,
                           const ClassPartition& partition) {
  std::vector<int> ranks(action.dimension(), -1);
  for (const auto& members : partition.classes) {
    std::vector<int> sources;
    for (int idx : members)
      if (is_source(action.basis()[idx])) sources.push_back(idx);
    if (sources.size() != 1)
      throw InternalError("class has " + std::to_string(sources.size()) +
                          " source tableaux");
    std::deque<int> queue{sources[0]};
    ranks[sources[0]] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int i = 1; i <= action.generator_count(); ++i) {
        PiStep s = action.step(i, u);
        if (s.kind != PiKind::Swapped) continue;
        if (ranks[s.target] == -1) {
          ranks[s.target] = ranks[u] + 1;
          queue.push_back(s.target);
        }
      }
    }
    for (int idx : members)
      if (ranks[idx] < 0)
        throw InternalError("class member unreachable from its source");
    // every swap edge must raise rank by exactly one (reduced words)
    for (int idx : members)
      for (int i = 1; i <= action.generator_count(); ++i) {
        PiStep s = action.step(i, idx);
        if (s.kind == PiKind::Swapped && ranks[s.target] != ranks[idx] + 1)
          throw InternalError("swap move does not raise rank by one");
      }
  }
  return ranks;
}

SeriesResult composition_series(const HeckeAction& action) {
  ClassPartition partition = partition_by_signature(action.basis());
  std::vector<int> ranks = ranks_for(action, partition);

  std::vector<int> order(action.dimension());
  for (int k = 0; k < action.dimension(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (partition.class_of[a] != partition.class_of[b])
      return partition.class_of[a] > partition.class_of[b];
    if (ranks[a] != ranks[b]) return ranks[a] > ranks[b];
    return action.basis()[a].reading_word() > action.basis()[b].reading_word();
  });
  std::vector<int> position(action.dimension());
  for (int p = 0; p < action.dimension(); ++p) position[order[p]] = p;

  SeriesResult out;
  int n = action.shape().size();
  for (int p = 0; p < action.dimension(); ++p) {
    int idx = order[p];
    std::set<int> des = descent_set(action.basis()[idx]);
    // each quotient must act as the irreducible indexed by its descents:
    // fixed exactly off the descent set, zero (in the quotient) on it
    for (int i = 1; i <= action.generator_count(); ++i) {
      PiStep s = action.step(i, idx);
      bool descent = des.count(i) > 0;
      if (s.kind == PiKind::Fixed && descent)
        throw InternalError("fixed move on a descent");
      if (s.kind != PiKind::Fixed && !descent)
        throw InternalError("non-fixed move off the descent set");
      if (s.kind == PiKind::Swapped && position[s.target] >= p)
        throw InternalError("filtration prefix not closed under pi");
    }
    out.filtration.order.push_back(idx);
    out.filtration.quotient_descents.push_back(composition_of_subset(des, n));
    out.filtration.class_ids.push_back(partition.class_of[idx]);
    out.filtration.ranks.push_back(ranks[idx]);
    out.multiset[out.filtration.quotient_descents.back()] += 1;
  }
  return out;
}

}  // namespace syrt
