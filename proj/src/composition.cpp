#include "syrt/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace syrt {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  int total = 0;
  for (int p : parts_) {
    if (p < 1) throw DomainError("composition parts must be positive");
    total += p;
  }
  if (total > kMaxCompositionSize)
    throw ResourceLimitError("composition size " + std::to_string(total) +
                             " exceeds the supported maximum " +
                             std::to_string(kMaxCompositionSize));
}

Composition Composition::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty composition");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad composition part '" + tok + "' in '" + text + "'");
    if (tok.size() > 6) throw ParseError("composition part too large in '" + text + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::max_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

int Composition::part(int row) const {
  if (row < 1 || row > length()) throw DomainError("row index out of range");
  return parts_[row - 1];
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

bool contains(const Composition& alpha, Cell cell) {
  return cell.row >= 1 && cell.row <= alpha.length() && cell.col >= 1 &&
         cell.col <= alpha.part(cell.row);
}

std::vector<Cell> cells_of(const Composition& alpha) {
  std::vector<Cell> out;
  for (int r = 1; r <= alpha.length(); ++r)
    for (int c = 1; c <= alpha.part(r); ++c) out.push_back({c, r});
  return out;
}

std::set<int> subset_of_composition(const Composition& alpha) {
  std::set<int> s;
  int acc = 0;
  for (int i = 1; i < alpha.length(); ++i) {
    acc += alpha.part(i);
    s.insert(acc);
  }
  return s;
}

Composition composition_of_subset(const std::set<int>& subset, int n) {
  if (n < 1) throw DomainError("composition_of_subset needs n >= 1");
  for (int x : subset)
    if (x < 1 || x >= n)
      throw DomainError("subset element " + std::to_string(x) +
                        " outside 1.." + std::to_string(n - 1));
  std::vector<int> parts;
  int prev = 0;
  for (int x : subset) {
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) return false;
  // Walk beta, summing runs; each run must close exactly on a part of alpha.
  int ai = 1, run = 0;
  for (int i = 1; i <= beta.length(); ++i) {
    run += beta.part(i);
    if (ai > alpha.length()) return false;
    if (run == alpha.part(ai)) {
      run = 0;
      ++ai;
    } else if (run > alpha.part(ai)) {
      return false;
    }
  }
  return run == 0 && ai == alpha.length() + 1;
}

std::vector<Cell> removable_cells(const Composition& alpha) {
  std::vector<Cell> out;
  int ell = alpha.length();
  for (int r = 1; r <= ell; ++r) {
    if (r == ell) {
      out.push_back({alpha.part(r), r});
      continue;
    }
    if (alpha.part(r) < 2) continue;
    bool blocked = false;
    for (int j = r + 1; j <= ell; ++j)
      if (alpha.part(j) == alpha.part(r) - 1) blocked = true;
    if (!blocked) out.push_back({alpha.part(r), r});
  }
  return out;
}

Composition decrement_row(const Composition& alpha, int row) {
  if (row < 1 || row > alpha.length()) throw DomainError("row index out of range");
  std::vector<int> parts = alpha.parts();
  if (--parts[row - 1] == 0) parts.erase(parts.begin() + (row - 1));
  return Composition(std::move(parts));
}

bool is_simple(const Composition& alpha) {
  int ell = alpha.length();
  for (int i = 1; i <= ell; ++i) {
    if (alpha.part(i) < 2) continue;
    for (int j = i + 1; j <= ell; ++j) {
      if (alpha.part(j) < alpha.part(i)) continue;
      bool witness = false;
      for (int k = i; k <= j; ++k)
        if (alpha.part(k) == alpha.part(i) - 1) witness = true;
      if (!witness) return false;
    }
  }
  return true;
}

namespace {

// Rows occupied by column c, bottom-to-top.
std::vector<int> column_rows(const Composition& alpha, int c) {
  std::vector<int> rows;
  for (int r = 1; r <= alpha.length(); ++r)
    if (alpha.part(r) >= c) rows.push_back(r);
  return rows;
}

}  // namespace

std::vector<Cell> boundary_cells(const Composition& alpha) {
  std::vector<Cell> out;
  for (int r = 1; r <= alpha.length(); ++r) out.push_back({1, r});
  for (int c = 2; c <= alpha.max_part(); ++c) {
    for (int r : column_rows(alpha, c)) {
      bool covered = false;
      for (int r2 : column_rows(alpha, c))
        if (r2 > r) covered = true;
      for (int r2 : column_rows(alpha, c - 1))
        if (r2 > r) covered = true;
      if (!covered) out.push_back({c, r});
    }
  }
  // First-column cells are already bottom-to-top; the rest sort by
  // (column, row). Two boundary cells can never share a column c > 1, so
  // the row tie-break is vacuous but keeps the comparator total.
  std::sort(out.begin() + alpha.length(), out.end());
  return out;
}

ThreadDecomposition threads(const Composition& alpha) {
  ThreadDecomposition out;
  std::vector<std::vector<bool>> threaded(alpha.length() + 1);
  for (int r = 1; r <= alpha.length(); ++r)
    threaded[r].assign(alpha.part(r) + 1, false);

  for (Cell b : boundary_cells(alpha)) {
    std::vector<Cell> thread{b};
    threaded[b.row][b.col] = true;
    Cell cur = b;
    for (;;) {
      // highest unthreaded cell strictly below cur in the next column right
      int best = 0;
      for (int r : column_rows(alpha, cur.col + 1))
        if (r < cur.row && !threaded[r][cur.col + 1]) best = std::max(best, r);
      if (best == 0) break;
      cur = {cur.col + 1, best};
      threaded[cur.row][cur.col] = true;
      thread.push_back(cur);
    }
    out.threads.push_back(std::move(thread));
  }
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw DomainError("compositions_of needs n >= 0");
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      self(self, rem - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace syrt
