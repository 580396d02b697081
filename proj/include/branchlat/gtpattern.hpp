#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "diagrams.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "lattice.hpp"

namespace branchlat {

// Triangular index set with levels n..m and min(level, k) slots per level.
// Slot (level, j) sits above (level-1, j) and (level-1, j-1) in the order
// generated by: value(level+1, j) >= value(level, j) >= value(level+1, j+1).
struct GTPoset {
  int m, n, k;

  GTPoset(int m_, int n_, int k_) : m(m_), n(n_), k(k_) {
    require(1 <= k && k <= m, "need 1 <= k <= m");
    require(0 <= n && n <= m, "need 0 <= n <= m");
  }

  int levels() const { return m - n + 1; }
  int row_len(int level) const {
    require(n <= level && level <= m, "level out of range");
    return std::min(level, k);
  }
  int coord_count() const {
    int total = 0;
    for (int i = n; i <= m; ++i) total += row_len(i);
    return total;
  }

  friend bool operator==(const GTPoset&, const GTPoset&) = default;
};

// Up-closed subset of a GTPoset. Up-closure forces each level's slots to be
// a prefix, so the subset is just one prefix size per level, bottom first.
class UpSet {
 public:
  UpSet(GTPoset poset, std::vector<int> sizes)
      : poset_(poset), sizes_(std::move(sizes)) {
    require(static_cast<int>(sizes_.size()) == poset_.levels(),
            "one prefix size per level expected");
    for (int t = 0; t < poset_.levels(); ++t) {
      int s = sizes_[t];
      require(0 <= s && s <= poset_.row_len(poset_.n + t),
              "prefix size exceeds its level");
      if (t > 0)
        require(sizes_[t - 1] <= s && s <= sizes_[t - 1] + 1,
                "up-closure needs each level size to grow by 0 or 1");
    }
  }

  const GTPoset& poset() const { return poset_; }
  int size_at(int level) const {
    require(poset_.n <= level && level <= poset_.m, "level out of range");
    return sizes_[level - poset_.n];
  }
  const std::vector<int>& sizes() const { return sizes_; }
  int total() const {
    int t = 0;
    for (int s : sizes_) t += s;
    return t;
  }

  friend bool operator==(const UpSet&, const UpSet&) = default;

 private:
  GTPoset poset_;
  std::vector<int> sizes_;
};

// Unions and intersections of up-sets are entrywise max/min of prefix sizes.
inline UpSet upset_union(const UpSet& a, const UpSet& b) {
  require(a.poset() == b.poset(), "up-sets live in different posets");
  std::vector<int> s(a.sizes().size());
  for (std::size_t t = 0; t < s.size(); ++t)
    s[t] = std::max(a.sizes()[t], b.sizes()[t]);
  return UpSet(a.poset(), std::move(s));
}

inline UpSet upset_intersection(const UpSet& a, const UpSet& b) {
  require(a.poset() == b.poset(), "up-sets live in different posets");
  std::vector<int> s(a.sizes().size());
  for (std::size_t t = 0; t < s.size(); ++t)
    s[t] = std::min(a.sizes()[t], b.sizes()[t]);
  return UpSet(a.poset(), std::move(s));
}

// Column -> up-set dictionary: the prefix size at level i counts the entries
// of I that are <= i. This reverses order: smaller columns map to larger
// up-sets.
inline UpSet birkhoff_to_subset(const ColumnSet& I, const LatticeFamily& family) {
  family.require_member(I);
  GTPoset poset(family.m(), family.n(), family.k());
  std::vector<int> sizes(poset.levels());
  for (int i = family.n(); i <= family.m(); ++i) {
    int s = 0;
    for (int e : I)
      if (e <= i) ++s;
    sizes[i - family.n()] = s;
  }
  return UpSet(poset, std::move(sizes));
}

// Inverse dictionary. The bottom size gives the frozen prefix 1..r; a level
// i > n contributes the entry i exactly when its size steps up.
inline ColumnSet subset_to_column(const UpSet& A) {
  const GTPoset& p = A.poset();
  require(A.size_at(p.m) >= 1, "an empty column has no up-set presentation");
  ColumnSet I;
  for (int e = 1; e <= A.size_at(p.n); ++e) I.push_back(e);
  for (int i = p.n + 1; i <= p.m; ++i)
    if (A.size_at(i) > A.size_at(i - 1)) I.push_back(i);
  LatticeFamily family(p.m, p.k, p.n);
  ensure(family.contains(I), "up-set did not decode to a family member");
  return I;
}

// Nonnegative integer filling of a GTPoset that respects its order: going up
// a level weakly increases each slot, and each slot dominates the slot one
// step down-right. Rows are stored top level first.
class GTPattern {
 public:
  GTPattern(GTPoset poset, std::vector<std::vector<int>> rows)
      : poset_(poset), rows_(std::move(rows)) {
    require(static_cast<int>(rows_.size()) == poset_.levels(),
            "one row per level expected");
    for (int t = 0; t < poset_.levels(); ++t) {
      const auto& row = rows_[t];
      require(static_cast<int>(row.size()) == poset_.row_len(poset_.m - t),
              "row length must match its level");
      for (std::size_t j = 0; j < row.size(); ++j) {
        require(row[j] >= 0, "pattern entries must be nonnegative");
        require(j == 0 || row[j - 1] >= row[j],
                "pattern rows must be weakly decreasing");
      }
    }
    for (int t = 0; t + 1 < poset_.levels(); ++t) {
      const auto& upper = rows_[t];
      const auto& lower = rows_[t + 1];
      for (std::size_t j = 0; j < lower.size(); ++j)
        require(upper[j] >= lower[j],
                "pattern must weakly increase going up a level");
      for (std::size_t j = 0; j + 1 < upper.size(); ++j)
        if (j < lower.size())
          require(lower[j] >= upper[j + 1],
                  "pattern slot must dominate the slot down-right of it");
    }
  }

  const GTPoset& poset() const { return poset_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  const std::vector<int>& row_at_level(int level) const {
    require(poset_.n <= level && level <= poset_.m, "level out of range");
    return rows_[poset_.m - level];
  }

  // 1-based slot access.
  int value(int level, int j) const {
    const auto& row = row_at_level(level);
    require(1 <= j && j <= static_cast<int>(row.size()), "slot out of range");
    return row[j - 1];
  }

  YoungDiagram top() const { return YoungDiagram(rows_.front()); }
  YoungDiagram bottom() const { return YoungDiagram(rows_.back()); }

  // Largest entry; by the order constraints it is the top-left slot.
  int peak() const { return rows_.front().empty() ? 0 : rows_.front()[0]; }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;

  friend GTPattern operator+(const GTPattern& a, const GTPattern& b) {
    require(a.poset_ == b.poset_, "patterns live in different posets");
    auto rows = a.rows_;
    for (std::size_t t = 0; t < rows.size(); ++t)
      for (std::size_t j = 0; j < rows[t].size(); ++j)
        rows[t][j] += b.rows_[t][j];
    return GTPattern(a.poset_, std::move(rows));
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      if (t) os << " | ";
      for (std::size_t j = 0; j < rows_[t].size(); ++j)
        os << (j ? "," : "") << rows_[t][j];
    }
    return os.str();
  }

 private:
  GTPoset poset_;
  std::vector<std::vector<int>> rows_;
};

inline GTPattern zero_pattern(const GTPoset& poset) {
  std::vector<std::vector<int>> rows(poset.levels());
  for (int t = 0; t < poset.levels(); ++t)
    rows[t].assign(poset.row_len(poset.m - t), 0);
  return GTPattern(poset, std::move(rows));
}

// 0/1 indicator pattern of an up-set.
inline GTPattern characteristic(const UpSet& A) {
  const GTPoset& p = A.poset();
  std::vector<std::vector<int>> rows(p.levels());
  for (int t = 0; t < p.levels(); ++t) {
    int level = p.m - t;
    rows[t].assign(p.row_len(level), 0);
    for (int j = 0; j < A.size_at(level); ++j) rows[t][j] = 1;
  }
  return GTPattern(p, std::move(rows));
}

// Top and bottom rows as a skew shape; additive under pattern addition.
inline SkewShape pattern_type(const GTPattern& p) {
  return SkewShape(p.top(), p.bottom());
}

// Slice a pattern into its level sets: the j-th column records where the
// pattern is >= j. The columns weakly increase in the tableau order, so the
// result is a chain (longest column first). The zero pattern gives the empty
// chain.
inline Chain decompose_levels(const GTPattern& p) {
  const GTPoset& poset = p.poset();
  Chain chain;
  for (int j = 1; j <= p.peak(); ++j) {
    std::vector<int> sizes(poset.levels());
    for (int level = poset.n; level <= poset.m; ++level) {
      const auto& row = p.row_at_level(level);
      int s = 0;
      while (s < static_cast<int>(row.size()) && row[s] >= j) ++s;
      sizes[level - poset.n] = s;
    }
    try {
      chain.push_back(subset_to_column(UpSet(poset, std::move(sizes))));
    } catch (const ValidationError& e) {
      throw InternalError(std::string("level set of a valid pattern failed to "
                                      "decode: ") + e.what());
    }
    if (chain.size() >= 2)
      ensure(leq(chain[chain.size() - 2], chain.back()),
             "level columns must weakly increase");
  }
  return chain;
}

// Sum of the indicator patterns of the columns' up-sets. Defined for any
// multiset of family members, chain or not.
inline GTPattern compose_columns(const Monomial& cols, const LatticeFamily& family) {
  GTPoset poset(family.m(), family.n(), family.k());
  GTPattern acc = zero_pattern(poset);
  for (const ColumnSet& col : cols)
    acc = acc + characteristic(birkhoff_to_subset(col, family));
  return acc;
}

// Same sum restricted to chains, where it inverts decompose_levels exactly.
inline GTPattern compose_chain(const Chain& t, const LatticeFamily& family) {
  require(is_chain(t), "compose_chain needs pairwise comparable columns");
  return compose_columns(t, family);
}

// Replace any multiset of columns by the chain with the same pattern. The
// column count and the multiset of column lengths are preserved; chains come
// back unchanged (up to canonical order) and the map is idempotent.
inline Chain hibi_normal_form(const Monomial& cols, const LatticeFamily& family) {
  Chain out = decompose_levels(compose_columns(cols, family));
  ensure(out.size() == cols.size(), "normal form must preserve column count");
  std::vector<std::size_t> a, b;
  for (const auto& c : cols) a.push_back(c.size());
  for (const auto& c : out) b.push_back(c.size());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  ensure(a == b, "normal form must preserve the multiset of column lengths");
  return out;
}

namespace detail {

// All rows of length len interlacing below `upper`, in lexicographically
// decreasing order: slot j may take any value between upper[j+1] (or 0 at
// the right edge) and upper[j].
inline std::vector<std::vector<int>> rows_below(const std::vector<int>& upper,
                                                int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == len) {
      out.push_back(cur);
      return;
    }
    int hi = upper[j];
    int lo = j + 1 < static_cast<int>(upper.size()) ? upper[j + 1] : 0;
    for (int v = hi; v >= lo; --v) {
      cur[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<int> padded(const YoungDiagram& d, int len) {
  std::vector<int> row(len, 0);
  for (int r = 1; r <= d.length(); ++r) row[r - 1] = d.part(r);
  return row;
}

inline void check_boundary(const GTPoset& poset, const YoungDiagram& top,
                           const YoungDiagram& bottom) {
  require(top.length() <= poset.row_len(poset.m),
          "top diagram has more rows than the top level holds");
  require(bottom.length() <= poset.row_len(poset.n),
          "bottom diagram has more rows than the bottom level holds");
  require(contains(top, bottom), "bottom diagram must fit inside the top one");
}

}  // namespace detail

// All patterns with the given top and bottom rows, ordered lexicographically
// (each level's row is generated in decreasing order, top level outermost).
inline std::vector<GTPattern> enumerate_patterns(const GTPoset& poset,
                                                 const YoungDiagram& top,
                                                 const YoungDiagram& bottom) {
  detail::check_boundary(poset, top, bottom);
  std::vector<int> first = detail::padded(top, poset.row_len(poset.m));
  std::vector<int> last = detail::padded(bottom, poset.row_len(poset.n));
  std::vector<GTPattern> out;
  std::vector<std::vector<int>> rows{first};
  auto rec = [&](auto&& self, int level) -> void {
    if (level == poset.n) {
      if (rows.back() == last) out.push_back(GTPattern(poset, rows));
      return;
    }
    for (auto& row : detail::rows_below(rows.back(), poset.row_len(level - 1))) {
      rows.push_back(std::move(row));
      self(self, level - 1);
      rows.pop_back();
    }
  };
  rec(rec, poset.m);
  return out;
}

// Count of enumerate_patterns via row-by-row dynamic programming.
inline Integer count_patterns(const GTPoset& poset, const YoungDiagram& top,
                              const YoungDiagram& bottom) {
  detail::check_boundary(poset, top, bottom);
  std::map<std::vector<int>, Integer> cur;
  cur[detail::padded(top, poset.row_len(poset.m))] = 1;
  for (int level = poset.m; level > poset.n; --level) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [row, count] : cur)
      for (auto& below : detail::rows_below(row, poset.row_len(level - 1)))
        next[std::move(below)] += count;
    cur = std::move(next);
  }
  auto it = cur.find(detail::padded(bottom, poset.row_len(poset.n)));
  return it == cur.end() ? Integer(0) : it->second;
}

}  // namespace branchlat
