#include "pgroup/todd_coxeter.hpp"

#include <algorithm>
#include <cstdlib>

#include "pgroup/errors.hpp"

namespace pgroup {

std::string table_status_name(TableStatus s) {
  switch (s) {
    case TableStatus::complete:
      return "complete";
    case TableStatus::exceeded:
      return "exceeded";
    case TableStatus::in_progress:
      return "in-progress";
  }
  throw InternalError("unknown table status");
}

namespace {

// Column index for a signed letter: generator g forward in 2*(g-1),
// its inverse in 2*(g-1)+1. Flipping the low bit inverts a column.
int letter_column(int32_t letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

std::vector<int32_t> word_columns(const Word& w) {
  std::vector<int32_t> cols;
  cols.reserve(w.size());
  for (int32_t l : w) cols.push_back(letter_column(l));
  return cols;
}

}  // namespace

int CosetTable::apply(int coset, int32_t letter) const {
  if (coset < 1 || coset > coset_count) {
    throw InputError("coset " + std::to_string(coset) + " out of range");
  }
  if (letter == 0 || std::abs(letter) > generator_count) {
    throw InputError("letter " + std::to_string(letter) + " out of range");
  }
  return columns[letter_column(letter)][coset - 1];
}

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (int32_t l : w) c = apply(c, l);
  return c;
}

void CosetTable::validate(const Presentation& p,
                          const std::vector<Word>& subgroup_words) const {
  if (status != TableStatus::complete) {
    throw InternalError("validate called on a non-complete coset table");
  }
  if (generator_count != p.generator_count) {
    throw InternalError("coset table generator count mismatch");
  }
  if (static_cast<int>(columns.size()) != 2 * generator_count ||
      coset_count < 1) {
    throw InternalError("coset table shape is wrong");
  }
  for (const auto& col : columns) {
    if (static_cast<int>(col.size()) != coset_count) {
      throw InternalError("coset table column length mismatch");
    }
    for (int32_t v : col) {
      if (v < 1 || v > coset_count) {
        throw InternalError("coset table entry out of range");
      }
    }
  }
  for (int g = 0; g < generator_count; ++g) {
    const auto& fwd = columns[2 * g];
    const auto& bwd = columns[2 * g + 1];
    for (int c = 0; c < coset_count; ++c) {
      if (bwd[fwd[c] - 1] != c + 1 || fwd[bwd[c] - 1] != c + 1) {
        throw InternalError("coset table columns are not mutually inverse");
      }
    }
  }
  for (const Word& r : p.relators) {
    for (int c = 1; c <= coset_count; ++c) {
      if (trace(c, r) != c) {
        throw InternalError("relator does not fix coset " + std::to_string(c));
      }
    }
  }
  for (const Word& w : subgroup_words) {
    if (trace(1, w) != 1) {
      throw InternalError("subgroup word does not fix the subgroup coset");
    }
  }
}

namespace {

// Memory guard independent of max_cosets: at 4 bytes per cell this bounds
// the table at 1 GiB even for very wide presentations.
constexpr int64_t kCellGuard = int64_t(1) << 28;

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_words,
             int max_cosets)
      : ngens_(p.generator_count), ncols_(2 * p.generator_count) {
    if (max_cosets < 1) throw InputError("max_cosets must be positive");
    if (ngens_ < 1) {
      throw InputError("coset enumeration needs at least one generator");
    }
    max_rows_ = max_cosets;
    int64_t guard_rows = kCellGuard / ncols_;
    if (guard_rows < max_rows_) max_rows_ = static_cast<int>(guard_rows);
    if (max_rows_ < 1) {
      throw ResourceError("presentation too wide for the coset table guard");
    }
    for (const Word& r : p.relators) {
      Word red = cyclically_reduce(r);
      if (red.empty()) continue;
      relators_.push_back(word_columns(red));
    }
    std::sort(relators_.begin(), relators_.end());
    relators_.erase(std::unique(relators_.begin(), relators_.end()),
                    relators_.end());
    for (const Word& w : subgroup_words) {
      Word red = reduce(w);
      for (int32_t l : red) {
        if (std::abs(l) > ngens_) {
          throw InputError("subgroup word letter out of range");
        }
      }
      if (red.empty()) continue;
      subgroup_words_.push_back(word_columns(red));
    }
  }

  CosetTable run() {
    new_coset();  // coset 0, the subgroup coset; survives every merge
    for (size_t i = 0; i < subgroup_words_.size(); ++i) {
      while (scan_and_fill(0, subgroup_words_[i], true) == Scan::need_space) {
        reclaim_or_throw();
      }
    }
    int cur = 0;
    while (cur < next_) {
      if (find(cur) != cur) {
        ++cur;
        continue;
      }
      if (!process_row(cur, &cur)) continue;  // reclaimed: cur was remapped
      ++cur;
    }
    finish();
    return standardize();
  }

 private:
  enum class Scan { ok, need_space };

  int ngens_;
  int ncols_;
  int max_rows_ = 0;
  std::vector<std::vector<int32_t>> relators_;
  std::vector<std::vector<int32_t>> subgroup_words_;
  std::vector<int32_t> table_;   // flat rows of ncols_ cells, -1 = undefined
  std::vector<int32_t> parent_;  // union-find over row indices
  std::vector<int32_t> dead_queue_;
  int next_ = 0;
  int alive_ = 0;

  int32_t& cell(int c, int col) { return table_[size_t(c) * ncols_ + col]; }
  int32_t cell(int c, int col) const {
    return table_[size_t(c) * ncols_ + col];
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns -1 when all row slots are taken.
  int new_coset() {
    if (next_ == max_rows_) return -1;
    size_t needed = size_t(next_ + 1) * ncols_;
    if (table_.size() < needed) {
      size_t rows = std::max<size_t>(64, size_t(next_) * 2);
      rows = std::min<size_t>(rows, size_t(max_rows_));
      table_.resize(rows * ncols_, -1);
    }
    std::fill_n(table_.begin() + size_t(next_) * ncols_, ncols_, -1);
    parent_.push_back(next_);
    ++alive_;
    return next_++;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // the smaller index survives
    parent_[b] = a;
    --alive_;
    dead_queue_.push_back(b);
  }

  // Records the edge rep(c) --col--> rep(d) in both directions, merging
  // when a slot already holds an inequivalent coset.
  void patch(int c, int col, int d) {
    c = find(c);
    d = find(d);
    int32_t& fwd = cell(c, col);
    if (fwd < 0) {
      fwd = d;
    } else if (find(fwd) != d) {
      merge(fwd, d);
    }
    c = find(c);
    d = find(d);
    int32_t& bwd = cell(d, col ^ 1);
    if (bwd < 0) {
      bwd = c;
    } else if (find(bwd) != c) {
      merge(bwd, c);
    }
  }

  // Processes pending coincidences: walks each dead row, removes stale
  // back-pointers into it and re-asserts its edges between live
  // representatives. Afterwards live rows reference live cosets only.
  void drain() {
    for (size_t qi = 0; qi < dead_queue_.size(); ++qi) {
      int g = dead_queue_[qi];
      for (int col = 0; col < ncols_; ++col) {
        int32_t d = cell(g, col);
        if (d < 0) continue;
        cell(g, col) = -1;
        if (cell(d, col ^ 1) == g) cell(d, col ^ 1) = -1;
        patch(find(g), col, find(d));
      }
    }
    dead_queue_.clear();
  }

  void coincidence(int a, int b) {
    merge(a, b);
    drain();
  }

  Scan scan_and_fill(int c, const std::vector<int32_t>& cols, bool fill) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(cols.size()) - 1;
    for (;;) {
      while (i <= j) {
        int32_t t = cell(f, cols[i]);
        if (t < 0) break;
        f = t;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return Scan::ok;
      }
      while (j >= i) {
        int32_t t = cell(b, cols[j] ^ 1);
        if (t < 0) break;
        b = t;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return Scan::ok;
      }
      if (i == j) {
        patch(f, cols[i], b);
        drain();
        return Scan::ok;
      }
      if (!fill) return Scan::ok;
      int d = new_coset();
      if (d < 0) return Scan::need_space;
      cell(f, cols[i]) = d;
      cell(d, cols[i] ^ 1) = f;
    }
  }

  // Scans all relators at `cur` and fills its row. Returns false when a
  // space squeeze forced a lookahead + compaction; *cur_io is then the
  // remapped index (possibly of a now merged-away coset) and the caller
  // must retry without advancing.
  bool process_row(int cur, int* cur_io) {
    for (const auto& rcols : relators_) {
      if (find(cur) != cur) return true;  // merged away, move on
      if (scan_and_fill(cur, rcols, true) == Scan::need_space) {
        *cur_io = reclaim_or_throw(cur);
        return false;
      }
    }
    if (find(cur) != cur) return true;
    for (int col = 0; col < ncols_; ++col) {
      if (cell(cur, col) >= 0) continue;
      int d = new_coset();
      if (d < 0) {
        *cur_io = reclaim_or_throw(cur);
        return false;
      }
      cell(cur, col) = d;
      cell(d, col ^ 1) = cur;
    }
    return true;
  }

  // Deduction-only pass over the whole table; frees rows when relator
  // scans force coincidences.
  void lookahead() {
    for (int c = 0; c < next_; ++c) {
      if (find(c) != c) continue;
      for (const auto& rcols : relators_) {
        if (find(c) != c) break;
        scan_and_fill(c, rcols, false);
      }
    }
  }

  // Renumbers live cosets in increasing index order (stable) and resets
  // the union-find. Returns the old-representative -> new-index map.
  std::vector<int32_t> compact() {
    std::vector<int32_t> map(next_, -1);
    int k = 0;
    for (int c = 0; c < next_; ++c) {
      if (find(c) == c) map[c] = k++;
    }
    for (int c = 0; c < next_; ++c) {
      if (map[c] < 0) continue;
      for (int col = 0; col < ncols_; ++col) {
        int32_t t = cell(c, col);
        table_[size_t(map[c]) * ncols_ + col] = t < 0 ? -1 : map[find(t)];
      }
    }
    next_ = k;
    alive_ = k;
    parent_.resize(k);
    for (int c = 0; c < k; ++c) parent_[c] = c;
    dead_queue_.clear();
    return map;
  }

  int reclaim_or_throw(int cur = 0) {
    lookahead();
    int rep = find(cur);
    std::vector<int32_t> map = compact();
    if (next_ == max_rows_) {
      throw ResourceError("coset enumeration exceeded " +
                          std::to_string(max_rows_) + " row slots");
    }
    return map[rep];
  }

  // One more deduction sweep; a clean HLT run is already complete here,
  // so this only hardens against missed merges before validation.
  void finish() {
    int before = -1;
    while (before != alive_) {
      before = alive_;
      lookahead();
    }
    compact();
    for (int c = 0; c < next_; ++c) {
      for (int col = 0; col < ncols_; ++col) {
        if (cell(c, col) < 0) {
          throw InternalError("coset table incomplete after enumeration");
        }
      }
    }
  }

  CosetTable standardize() {
    int n = next_;
    std::vector<int32_t> order(n, -1);
    std::vector<int32_t> bfs;
    bfs.reserve(n);
    bfs.push_back(0);
    order[0] = 0;
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
      int c = bfs[qi];
      for (int col = 0; col < ncols_; ++col) {
        int32_t t = cell(c, col);
        if (order[t] < 0) {
          order[t] = static_cast<int32_t>(bfs.size());
          bfs.push_back(t);
        }
      }
    }
    if (static_cast<int>(bfs.size()) != n) {
      throw InternalError("coset graph is not connected");
    }
    CosetTable ct;
    ct.generator_count = ngens_;
    ct.coset_count = n;
    ct.status = TableStatus::complete;
    ct.columns.assign(ncols_, std::vector<int32_t>(n));
    for (int newc = 0; newc < n; ++newc) {
      int old = bfs[newc];
      for (int col = 0; col < ncols_; ++col) {
        ct.columns[col][newc] = order[cell(old, col)] + 1;
      }
    }
    return ct;
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_words,
                        int max_cosets) {
  p.check();
  Enumerator e(p, subgroup_words, max_cosets);
  CosetTable ct = e.run();
  ct.validate(p, subgroup_words);
  return ct;
}

EnumeratedGroup table_to_group(const CosetTable& ct, const Presentation& p,
                               int order_cap) {
  p.check();
  if (ct.status != TableStatus::complete) {
    throw InputError("table_to_group needs a complete coset table");
  }
  if (ct.generator_count != p.generator_count) {
    throw InputError("coset table does not match the presentation");
  }
  int n = ct.coset_count;
  if (n > order_cap) {
    throw ResourceError("enumerated group of order " + std::to_string(n) +
                        " exceeds the materialization cap " +
                        std::to_string(order_cap));
  }

  // Under the regular action each coset is an element; coset 1 is the
  // identity. Build multiplication columns along a breadth-first spanning
  // tree: if element y was discovered as parent * letter, then column y is
  // column parent followed by that letter.
  GroupTable t;
  t.name = "enumerated";
  t.order = n;
  t.mult.assign(size_t(n) * n, -1);
  std::vector<int32_t> parent(n, -1), via(n, 0), bfs;
  bfs.push_back(0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (size_t qi = 0; qi < bfs.size(); ++qi) {
    int c = bfs[qi];
    for (int g = 1; g <= ct.generator_count; ++g) {
      for (int32_t letter : {int32_t(g), int32_t(-g)}) {
        int d = ct.apply(c + 1, letter) - 1;
        if (!seen[d]) {
          seen[d] = true;
          parent[d] = c;
          via[d] = letter;
          bfs.push_back(d);
        }
      }
    }
  }
  if (static_cast<int>(bfs.size()) != n) {
    throw InternalError("coset table is not transitive");
  }
  for (int x = 0; x < n; ++x) t.mult[size_t(x) * n] = x;
  for (size_t qi = 1; qi < bfs.size(); ++qi) {
    int y = bfs[qi];
    int p_ = parent[y];
    int32_t l = via[y];
    for (int x = 0; x < n; ++x) {
      int xp = t.mult[size_t(x) * n + p_];
      t.mult[size_t(x) * n + y] = ct.apply(xp + 1, l) - 1;
    }
  }

  EnumeratedGroup out;
  out.group = make_group(std::move(t), 0, order_cap);
  for (int g = 1; g <= ct.generator_count; ++g) {
    out.generator_images.push_back(ct.apply(1, g) - 1);
  }
  // Every relator must evaluate to the identity under the generator images.
  const GroupTable& gt = *out.group;
  for (const Word& r : p.relators) {
    int x = 0;
    for (int32_t l : r) {
      int img = out.generator_images[std::abs(l) - 1];
      x = gt.mul(x, l > 0 ? img : gt.inverse(img));
    }
    if (x != 0) {
      throw InternalError("relator does not evaluate to the identity in the "
                          "enumerated group");
    }
  }
  return out;
}

EnumeratedGroup enumerate_presentation(const Presentation& p, int max_cosets,
                                       int order_cap) {
  CosetTable ct = todd_coxeter(p, {}, max_cosets);
  return table_to_group(ct, p, order_cap);
}

}  // namespace pgroup
