#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syrt/composition.hpp"

namespace syrt {

inline constexpr int kDefaultEnumLimit = 10;
inline constexpr int kBruteForceLimit = 8;

// A bijective filling of D(alpha) with 1..n. Rows are stored bottom-to-top.
// Construction rejects anything that is not a bijection onto 1..n.
class Tableau {
 public:
  Tableau(Composition shape, std::vector<std::vector<int>> rows);

  const Composition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return n_; }

  int entry(Cell cell) const;        // throws DomainError outside the diagram
  Cell position_of(int value) const; // value in 1..n

  // Concatenation of the rows, bottom row first; the canonical sort key.
  std::vector<int> reading_word() const;

  // Printable form, top row first (the usual way these are drawn).
  std::string to_text() const;

  bool operator==(const Tableau& other) const;
  bool operator<(const Tableau& other) const;

 private:
  Composition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> pos_;  // pos_[value]
  int n_ = 0;
};

enum class Axiom { R1, R2, R3 };

struct Violation {
  Axiom axiom;
  Cell a;
  Cell b;
};

std::string to_string(Axiom axiom);
std::string describe(const Violation& violation);

// Checks the three standard Young row-strict conditions:
//   (R1) rows increase left to right,
//   (R2) the first column increases bottom to top,
//   (R3) for cells (c,r) and (c+1,r') with r' < r, T(c,r) < T(c+1,r')
//        forces T(c+1,r) < T(c+1,r'), an absent (c+1,r) counting as infinite.
// Returns the first violation in a fixed scan order (all R1 sites, then R2,
// then R3), or nullopt if the filling is an SYRT.
std::optional<Violation> validate_syrt(const Tableau& tableau);

// A validated standard Young row-strict composition tableau.
class Syrt {
 public:
  explicit Syrt(Tableau tableau);  // throws DomainError on any violation

  const Tableau& tableau() const { return tableau_; }
  const Composition& shape() const { return tableau_.shape(); }
  const std::vector<std::vector<int>>& rows() const { return tableau_.rows(); }
  int size() const { return tableau_.size(); }
  int entry(Cell cell) const { return tableau_.entry(cell); }
  Cell position_of(int value) const { return tableau_.position_of(value); }
  std::vector<int> reading_word() const { return tableau_.reading_word(); }
  std::string to_text() const { return tableau_.to_text(); }

  bool operator==(const Syrt& other) const { return tableau_ == other.tableau_; }
  bool operator<(const Syrt& other) const { return tableau_ < other.tableau_; }

 private:
  Tableau tableau_;
};

// All SYRT of shape alpha, by recursion over removable cells (largest entry
// last), sorted lexicographically by bottom-to-top row-reading word.
std::vector<Syrt> enumerate_syrt(const Composition& alpha,
                                 int limit = kDefaultEnumLimit);

// Independent oracle: filter all |alpha|! fillings through validate_syrt.
// Same output order as enumerate_syrt. Refuses |alpha| > 8.
std::vector<Syrt> brute_force_syrt(const Composition& alpha);

// Des(T): entries i with i+1 strictly right of i.
std::set<int> descent_set(const Syrt& tableau);

// Per-column relative order of the entries, read bottom to top; two SYRT of
// one shape lie in the same equivalence class iff their signatures agree.
struct ColumnSignature {
  std::vector<std::vector<int>> columns;  // ranks within each column

  bool operator==(const ColumnSignature&) const = default;
  auto operator<=>(const ColumnSignature&) const = default;
};

ColumnSignature column_signature(const Syrt& tableau);

// True iff every column increases bottom to top (membership in E_0).
bool columns_increase(const Syrt& tableau);

// Equivalence classes of a full SYRT basis under equal column signatures.
// Class 0 is E_0 (all columns increasing); the rest are ordered by their
// smallest member index. Throws InternalError if E_0 is missing, which
// cannot happen for a complete enumeration.
struct ClassPartition {
  std::vector<std::vector<int>> classes;  // indices into the basis
  std::vector<int> class_of;              // basis index -> class id
};

ClassPartition partition_by_signature(const std::vector<Syrt>& basis);

struct EnumeratedClasses {
  std::vector<Syrt> basis;
  ClassPartition partition;
};

EnumeratedClasses equivalence_classes(const Composition& alpha,
                                      int limit = kDefaultEnumLimit);

// The tableau filling rows bottom-to-top with consecutive blocks; always an
// SYRT and always in E_0.
Syrt row_superstandard(const Composition& alpha);

// d(T): the j-th entry is the sum of all entries in columns 1..j. Strictly
// raised (in some coordinate, lowered in none) by every swap move.
std::vector<long long> d_statistic(const Syrt& tableau);

// The source tableau of E_0, built by filling each thread right-to-left
// with the next run of consecutive integers.
Syrt t_sup(const Composition& alpha);

}  // namespace syrt
