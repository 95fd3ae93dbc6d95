#include "syrt/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace syrt {

Tableau::Tableau(Composition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  n_ = shape_.size();
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw DomainError("tableau row count does not match shape");
  for (int r = 1; r <= shape_.length(); ++r)
    if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r))
      throw DomainError("tableau row " + std::to_string(r) +
                        " does not match shape");
  pos_.assign(n_ + 1, Cell{});
  std::vector<bool> seen(n_ + 1, false);
  for (int r = 1; r <= shape_.length(); ++r) {
    for (int c = 1; c <= shape_.part(r); ++c) {
      int v = rows_[r - 1][c - 1];
      if (v < 1 || v > n_ || seen[v])
        throw DomainError("tableau filling is not a bijection onto 1.." +
                          std::to_string(n_));
      seen[v] = true;
      pos_[v] = {c, r};
    }
  }
}

int Tableau::entry(Cell cell) const {
  if (!contains(shape_, cell)) throw DomainError("cell outside the diagram");
  return rows_[cell.row - 1][cell.col - 1];
}

Cell Tableau::position_of(int value) const {
  if (value < 1 || value > n_) throw DomainError("entry out of range");
  return pos_[value];
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  word.reserve(n_);
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tableau::to_text() const {
  int width = n_ >= 10 ? 2 : 1;
  std::ostringstream os;
  for (int r = shape_.length(); r >= 1; --r) {
    for (int c = 1; c <= shape_.part(r); ++c) {
      if (c > 1) os << ' ';
      std::string s = std::to_string(rows_[r - 1][c - 1]);
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

bool Tableau::operator==(const Tableau& other) const {
  return shape_ == other.shape_ && rows_ == other.rows_;
}

bool Tableau::operator<(const Tableau& other) const {
  if (shape_ != other.shape_) return shape_ < other.shape_;
  return reading_word() < other.reading_word();
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::R1: return "R1";
    case Axiom::R2: return "R2";
    case Axiom::R3: return "R3";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << "(" << to_string(v.axiom) << ") violated at cells (" << v.a.col << ","
     << v.a.row << ") and (" << v.b.col << "," << v.b.row << ")";
  return os.str();
}

namespace {

// Validation core on raw rows; also used by the brute-force oracle, which
// cannot afford to build a Tableau per permutation.
std::optional<Violation> validate_rows(const Composition& shape,
                                       const std::vector<std::vector<int>>& rows) {
  int ell = shape.length();
  auto at = [&](int c, int r) { return rows[r - 1][c - 1]; };
  for (int r = 1; r <= ell; ++r)
    for (int c = 1; c < shape.part(r); ++c)
      if (at(c, r) >= at(c + 1, r))
        return Violation{Axiom::R1, {c, r}, {c + 1, r}};
  for (int r = 1; r < ell; ++r)
    if (at(1, r) >= at(1, r + 1))
      return Violation{Axiom::R2, {1, r}, {1, r + 1}};
  for (int r = 1; r <= ell; ++r) {
    for (int c = 1; c <= shape.part(r); ++c) {
      for (int rp = 1; rp < r; ++rp) {
        if (shape.part(rp) < c + 1) continue;
        if (at(c, r) < at(c + 1, rp)) {
          // upper-right cell absent counts as infinity: violated outright
          if (shape.part(r) < c + 1 || at(c + 1, r) >= at(c + 1, rp))
            return Violation{Axiom::R3, {c, r}, {c + 1, rp}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate_syrt(const Tableau& tableau) {
  return validate_rows(tableau.shape(), tableau.rows());
}

Syrt::Syrt(Tableau tableau) : tableau_(std::move(tableau)) {
  if (auto v = validate_syrt(tableau_)) throw DomainError(describe(*v));
}

namespace {

using Rows = std::vector<std::vector<int>>;

// Recursion of the removal lemma: every SYRT of shape alpha arises exactly
// once by placing n in a removable cell on top of an SYRT of the
// decremented shape.
std::vector<Rows> enumerate_rows(const Composition& alpha) {
  if (alpha.length() == 0) return {Rows{}};
  int n = alpha.size();
  std::vector<Rows> out;
  for (Cell cell : removable_cells(alpha)) {
    Composition sub = decrement_row(alpha, cell.row);
    bool row_deleted = alpha.part(cell.row) == 1;
    for (Rows rows : enumerate_rows(sub)) {
      if (row_deleted)
        rows.insert(rows.begin() + (cell.row - 1), {n});
      else
        rows[cell.row - 1].push_back(n);
      out.push_back(std::move(rows));
    }
  }
  return out;
}

std::vector<Syrt> sorted_syrts(const Composition& alpha, std::vector<Rows> all) {
  std::vector<Syrt> out;
  out.reserve(all.size());
  for (auto& rows : all) out.push_back(Syrt(Tableau(alpha, std::move(rows))));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Syrt> enumerate_syrt(const Composition& alpha, int limit) {
  if (alpha.size() > limit)
    throw ResourceLimitError("shape size " + std::to_string(alpha.size()) +
                             " exceeds the enumeration cap " +
                             std::to_string(limit));
  return sorted_syrts(alpha, enumerate_rows(alpha));
}

std::vector<Syrt> brute_force_syrt(const Composition& alpha) {
  int n = alpha.size();
  if (n > kBruteForceLimit)
    throw ResourceLimitError("brute-force oracle is capped at size " +
                             std::to_string(kBruteForceLimit));
  std::vector<Cell> cells = cells_of(alpha);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  Rows rows;
  for (int r = 1; r <= alpha.length(); ++r)
    rows.emplace_back(alpha.part(r), 0);
  std::vector<Rows> found;
  do {
    for (int i = 0; i < n; ++i)
      rows[cells[i].row - 1][cells[i].col - 1] = perm[i];
    if (!validate_rows(alpha, rows)) found.push_back(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sorted_syrts(alpha, std::move(found));
}

std::set<int> descent_set(const Syrt& tableau) {
  std::set<int> des;
  for (int i = 1; i < tableau.size(); ++i)
    if (tableau.position_of(i + 1).col > tableau.position_of(i).col)
      des.insert(i);
  return des;
}

ColumnSignature column_signature(const Syrt& tableau) {
  const Composition& shape = tableau.shape();
  ColumnSignature sig;
  for (int c = 1; c <= shape.max_part(); ++c) {
    std::vector<int> col;
    for (int r = 1; r <= shape.length(); ++r)
      if (shape.part(r) >= c) col.push_back(tableau.entry({c, r}));
    std::vector<int> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranks;
    for (int v : col)
      ranks.push_back(static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin() + 1));
    sig.columns.push_back(std::move(ranks));
  }
  return sig;
}

bool columns_increase(const Syrt& tableau) {
  for (const auto& col : column_signature(tableau).columns)
    for (std::size_t i = 1; i < col.size(); ++i)
      if (col[i] < col[i - 1]) return false;
  return true;
}

ClassPartition partition_by_signature(const std::vector<Syrt>& basis) {
  std::vector<std::pair<ColumnSignature, std::vector<int>>> groups;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    ColumnSignature sig = column_signature(basis[i]);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == sig; });
    if (it == groups.end())
      groups.push_back({std::move(sig), {i}});
    else
      it->second.push_back(i);
  }
  auto increasing = [](const ColumnSignature& sig) {
    for (const auto& col : sig.columns)
      for (std::size_t i = 1; i < col.size(); ++i)
        if (col[i] < col[i - 1]) return false;
    return true;
  };
  std::stable_sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
    bool ea = increasing(a.first), eb = increasing(b.first);
    if (ea != eb) return ea;
    return a.second.front() < b.second.front();
  });
  if (!basis.empty() && !increasing(groups.front().first))
    throw InternalError("E_0 missing from a complete enumeration");
  ClassPartition out;
  out.class_of.assign(basis.size(), -1);
  for (int k = 0; k < static_cast<int>(groups.size()); ++k) {
    for (int i : groups[k].second) out.class_of[i] = k;
    out.classes.push_back(std::move(groups[k].second));
  }
  return out;
}

EnumeratedClasses equivalence_classes(const Composition& alpha, int limit) {
  EnumeratedClasses out{enumerate_syrt(alpha, limit), {}};
  out.partition = partition_by_signature(out.basis);
  return out;
}

Syrt row_superstandard(const Composition& alpha) {
  Rows rows;
  int next = 1;
  for (int r = 1; r <= alpha.length(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < alpha.part(r); ++c) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return Syrt(Tableau(alpha, std::move(rows)));
}

std::vector<long long> d_statistic(const Syrt& tableau) {
  const Composition& shape = tableau.shape();
  std::vector<long long> d(shape.max_part(), 0);
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.part(r); ++c)
      for (int j = c; j <= shape.max_part(); ++j)
        d[j - 1] += tableau.entry({c, r});
  return d;
}

Syrt t_sup(const Composition& alpha) {
  Rows rows;
  for (int r = 1; r <= alpha.length(); ++r)
    rows.emplace_back(alpha.part(r), 0);
  int next = 1;
  for (const auto& thread : threads(alpha).threads)
    for (auto it = thread.rbegin(); it != thread.rend(); ++it)
      rows[it->row - 1][it->col - 1] = next++;
  return Syrt(Tableau(alpha, std::move(rows)));
}

}  // namespace syrt
