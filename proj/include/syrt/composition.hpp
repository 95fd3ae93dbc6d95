#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "syrt/errors.hpp"

namespace syrt {

// Hard cap on |alpha| accepted anywhere; tableau counts grow too fast beyond
// this to be useful in an exact engine.
inline constexpr int kMaxCompositionSize = 20;

// A composition: a finite sequence of positive integers. Indexes both
// diagram shapes and the composition-indexed bases of QSym.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  // Parses "3,2,2" (comma-separated positive integers, no spaces).
  static Composition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;                     // |alpha|, the sum of the parts
  int max_part() const;
  int part(int row) const;              // 1-based

  std::string to_string() const;        // "3,2,2"

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;  // lexicographic

 private:
  std::vector<int> parts_;
};

// Length-then-lexicographic order; the canonical key order for serialized
// composition-indexed maps.
struct CanonicalCompositionLess {
  bool operator()(const Composition& a, const Composition& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.parts() < b.parts();
  }
};

// A cell (c,r) of a composition diagram, 1-based, French notation:
// row 1 is the bottom row, column 1 the left column.
struct Cell {
  int col = 0;
  int row = 0;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;  // column, then bottom-to-top
};

// Cell membership in the diagram D(alpha).
bool contains(const Composition& alpha, Cell cell);

// All cells of D(alpha), rows bottom-to-top, each row left-to-right.
std::vector<Cell> cells_of(const Composition& alpha);

// The subset bijection: S(alpha) = {a1, a1+a2, ..., a1+...+a_{k-1}}.
std::set<int> subset_of_composition(const Composition& alpha);

// Inverse bijection comp_n. Throws DomainError if S is not within 1..n-1.
Composition composition_of_subset(const std::set<int>& subset, int n);

// True iff alpha can be obtained by summing consecutive parts of beta.
bool refines(const Composition& beta, const Composition& alpha);

// Cells eligible to hold the largest entry: the rightmost cell of the top
// row, plus the rightmost cell of every row of length >= 2 with no higher
// row exactly one cell shorter. Sorted by row, bottom-to-top.
std::vector<Cell> removable_cells(const Composition& alpha);

// Shape with one cell removed from the given row; a row shrunk to length 0
// is deleted. The cell must be removable-row-compatible only in that the
// row exists.
Composition decrement_row(const Composition& alpha, int row);

// Simplicity: whenever alpha_j >= alpha_i >= 2 for i < j, some k with
// i <= k <= j has alpha_k = alpha_i - 1.
bool is_simple(const Composition& alpha);

// Boundary cells: the first column, plus cells with no cell strictly above
// them in their own column or the column immediately left. Ordered up the
// first column first, then by column left-to-right.
std::vector<Cell> boundary_cells(const Composition& alpha);

// Threads partition D(alpha): the j-th thread starts at the j-th boundary
// cell and repeatedly takes the highest unthreaded cell strictly below the
// current cell in the next column to the right.
struct ThreadDecomposition {
  std::vector<std::vector<Cell>> threads;
};

ThreadDecomposition threads(const Composition& alpha);

// All compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

}  // namespace syrt
