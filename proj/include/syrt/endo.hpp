#pragma once

#include <optional>
#include <vector>

#include "syrt/hecke.hpp"
#include "syrt/rational_linalg.hpp"

namespace syrt {

inline constexpr int kDefaultCertifyLimit = 7;

// Witness of the annihilation argument: epsilon is the smallest entry placed
// differently in t_hat than in T_sup, x the entry left-adjacent to epsilon
// in T_sup, and pi_x pi_{x+1} ... pi_{epsilon-1} kills T_sup while acting by
// swaps on t_hat.
struct WitnessData {
  int epsilon = 0;
  int x = 0;
  std::vector<int> sequence;  // x, x+1, ..., epsilon-1 (applied right first)
  Syrt t_sup;
  Syrt image;  // the single SYRT the sequence sends t_hat to
};

// Requires t_hat in E_0, distinct from T_sup, with Des(t_hat) contained in
// Des(T_sup); throws DomainError naming the failed precondition otherwise.
WitnessData witness_sequence(const Composition& alpha, const Syrt& t_hat);

// Basis of all linear maps on the chosen span (one equivalence class, or
// the whole module) that commute with every generator, solved exactly as
// the kernel of the stacked commutator system.
struct CommutantResult {
  std::vector<int> span;              // basis indices, ascending
  std::vector<RationalMatrix> basis;  // |span| x |span| matrices
};

CommutantResult commutant(const HeckeAction& action,
                          std::optional<int> class_id = std::nullopt);

// Dimension of the Jacobson radical of a unital matrix algebra given by a
// spanning set, via the characteristic-zero trace form of the left regular
// representation. Cross-checked internally against the defining-trace form.
int radical_dimension(const std::vector<RationalMatrix>& algebra);

struct ClassEndoSummary {
  int class_id = -1;  // -1 for the full module
  int dim = 0;
  int commutant_dim = 0;
  int radical_dim = 0;
  bool local = false;  // commutant_dim - radical_dim == 1
};

// Certificate for one shape. The verdict comes from the locality of the
// full-module endomorphism algebra and is checked against the class count
// and the combinatorial simplicity test; any disagreement raises
// InternalError.
struct EndoReport {
  Composition alpha;
  bool simple = false;
  int classes = 0;
  int dimension = 0;
  ClassEndoSummary e0;
  ClassEndoSummary full;
  std::vector<ClassEndoSummary> other_classes;  // exploratory, non-normative
  std::vector<std::vector<int>> idempotent_blocks;  // when decomposable
  bool indecomposable = false;
};

EndoReport is_indecomposable_certified(const Composition& alpha,
                                       int limit = kDefaultCertifyLimit);

// True when every commutant matrix vanishes between distinct classes and
// each class projector lies in the commutant span. The class projectors are
// then central idempotents of the endomorphism algebra, so the classes are
// its idempotent blocks.
bool class_blocks_certified(const CommutantResult& full,
                            const ClassPartition& partition);

}  // namespace syrt
