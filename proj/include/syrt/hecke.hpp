#pragma once

#include <map>
#include <optional>
#include <vector>

#include "syrt/tableau.hpp"

namespace syrt {

// The generator pi_i acts on an SYRT basis element by one of three moves:
//   fixed  -- i+1 is weakly left of i,
//   zero   -- i+1 is right-adjacent to i,
//   swap   -- otherwise; exchange i and i+1 (always another SYRT).
enum class PiKind { Zero, Fixed, Swapped };

struct PiResult {
  PiKind kind;
  std::optional<Syrt> tableau;  // present for Fixed and Swapped
};

PiResult apply_pi(int i, const Syrt& tableau);

// One tabulated generator step: target index in the basis, or -1 for zero.
struct PiStep {
  PiKind kind;
  int target;
};

// The 0-Hecke action on the full SYRT basis of one shape, with every
// generator tabulated. Closed by construction: every swap target is a basis
// element.
class HeckeAction {
 public:
  static HeckeAction build(const Composition& alpha,
                           int limit = kDefaultEnumLimit);

  const Composition& shape() const { return shape_; }
  const std::vector<Syrt>& basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int generator_count() const { return static_cast<int>(steps_.size()); }

  // i in 1..n-1, index in 0..dim-1.
  PiStep step(int i, int index) const;

  // Targets of pi_i over the whole basis (-1 for zero).
  const std::vector<int>& generator_map(int i) const;

  int index_of(const Syrt& tableau) const;  // -1 when absent

 private:
  Composition shape_;
  std::vector<Syrt> basis_;
  std::vector<std::vector<PiStep>> steps_;   // [i-1][index]
  std::vector<std::vector<int>> targets_;    // [i-1][index]
  std::map<std::vector<int>, int> index_;    // reading word -> index
};

struct RelationFailure {
  std::string relation;  // "idempotent", "commute", "braid"
  int i = 0;
  int j = 0;
  int basis_index = 0;
};

// Checks pi_i^2 = pi_i, far commutation, and the braid relation as exact
// equalities of basis maps (zero annihilates).
std::optional<RelationFailure> verify_relations(const HeckeAction& action);

// Source criterion: for every non-descent i < n, the entry i+1 lies in the
// same column as i, or in the column immediately left and a higher row.
// Equivalent to having no swap-move predecessor.
bool is_source(const Syrt& tableau);

// Everything reachable from the tableau by swap moves (including itself),
// sorted canonically.
std::vector<Syrt> closure(const Syrt& tableau);

// The swap-move predecessor with the smallest generator index, if any.
std::optional<Syrt> first_predecessor(const Syrt& tableau);

// Length of any generator word from the class source down to the tableau;
// every such word is reduced, so the count is well defined. Computed by
// walking predecessor steps, with the source criterion cross-checked at the
// bottom of the walk.
int rank(const Syrt& tableau);

// Rank of every basis element, by breadth-first search from each class
// source. Verifies that each class is cyclic (fully reachable from its one
// source) and that every swap edge raises rank by exactly one.
std::vector<int> ranks_for(const HeckeAction& action,
                           const ClassPartition& partition);

// A linear extension of the reachability order, largest element first, so
// every prefix spans a submodule. Positions are parallel across the fields.
struct Filtration {
  std::vector<int> order;                    // basis indices, top first
  std::vector<Composition> quotient_descents;  // comp_n(Des) per position
  std::vector<int> class_ids;                // per position
  std::vector<int> ranks;                    // per position
};

struct SeriesResult {
  Filtration filtration;
  std::map<Composition, long long, CanonicalCompositionLess> multiset;
};

// Builds the deterministic filtration (sorted by class id, rank, reading
// word), verifies every one-dimensional quotient acts as the irreducible
// indexed by its descent composition, and returns the multiset of descent
// compositions.
SeriesResult composition_series(const HeckeAction& action);

}  // namespace syrt
