#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace branchlat {

// A column: strictly increasing 1-based row indices, never empty.
using ColumnSet = std::vector<int>;

// Several columns in weakly increasing tableau order, longest first.
using Chain = std::vector<ColumnSet>;

// A multiset of columns with no order requirement, kept canonically sorted.
using Monomial = std::vector<ColumnSet>;

inline bool is_column(const ColumnSet& c) {
  if (c.empty()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) return false;
    if (i > 0 && c[i] <= c[i - 1]) return false;
  }
  return true;
}

inline std::string column_str(const ColumnSet& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

// Tableau order: I <= J iff I is at least as long as J and entrywise
// I[c] <= J[c] over J's positions. Longer columns sit lower.
inline bool leq(const ColumnSet& I, const ColumnSet& J) {
  if (I.size() < J.size()) return false;
  for (std::size_t c = 0; c < J.size(); ++c)
    if (I[c] > J[c]) return false;
  return true;
}

// Entrywise min over the shared positions, then the tail of the longer
// column. The result is as long as the longer argument.
inline ColumnSet meet(const ColumnSet& I, const ColumnSet& J) {
  require(is_column(I) && is_column(J), "meet needs strictly increasing columns");
  const ColumnSet& longer = I.size() >= J.size() ? I : J;
  std::size_t shared = std::min(I.size(), J.size());
  ColumnSet r(longer.size());
  for (std::size_t c = 0; c < shared; ++c) r[c] = std::min(I[c], J[c]);
  for (std::size_t c = shared; c < longer.size(); ++c) r[c] = longer[c];
  ensure(is_column(r), "meet splice must stay strictly increasing");
  return r;
}

// Entrywise max truncated to the shorter length.
inline ColumnSet join(const ColumnSet& I, const ColumnSet& J) {
  require(is_column(I) && is_column(J), "join needs strictly increasing columns");
  std::size_t shared = std::min(I.size(), J.size());
  ColumnSet r(shared);
  for (std::size_t c = 0; c < shared; ++c) r[c] = std::max(I[c], J[c]);
  ensure(is_column(r), "join must stay strictly increasing");
  return r;
}

// The distributive lattice of columns with entries in 1..m, length at most k,
// whose entries <= n form a full prefix 1..r. Parameter n marks the rows
// that behave as frozen: only complete prefixes of them may appear.
class LatticeFamily {
 public:
  LatticeFamily(int m, int k, int n) : m_(m), k_(k), n_(n) {
    require(1 <= k && k <= m, "need 1 <= k <= m");
    require(0 <= n && n < m, "need 0 <= n < m");
  }

  int m() const { return m_; }
  int k() const { return k_; }
  int n() const { return n_; }

  bool contains(const ColumnSet& I) const {
    if (!is_column(I)) return false;
    if (static_cast<int>(I.size()) > k_ || I.back() > m_) return false;
    int r = 0;
    for (int e : I)
      if (e <= n_) ++r;
    for (int c = 0; c < r; ++c)
      if (I[c] != c + 1) return false;
    return true;
  }

  void require_member(const ColumnSet& I) const {
    require(contains(I), "column " + column_str(I) + " is not in " + str());
  }

  // All members, lexicographically sorted.
  std::vector<ColumnSet> elements() const {
    std::vector<ColumnSet> out;
    int max_prefix = std::min(n_, k_);
    for (int r = 0; r <= max_prefix; ++r) {
      ColumnSet prefix(r);
      for (int c = 0; c < r; ++c) prefix[c] = c + 1;
      int max_tail = k_ - r;
      std::vector<int> tail;
      auto rec = [&](auto&& self, int next) -> void {
        if (r + static_cast<int>(tail.size()) >= 1) {
          ColumnSet col = prefix;
          col.insert(col.end(), tail.begin(), tail.end());
          out.push_back(std::move(col));
        }
        if (static_cast<int>(tail.size()) >= max_tail) return;
        for (int e = next; e <= m_; ++e) {
          tail.push_back(e);
          self(self, e + 1);
          tail.pop_back();
        }
      };
      rec(rec, n_ + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ColumnSet meet(const ColumnSet& I, const ColumnSet& J) const {
    require_member(I);
    require_member(J);
    ColumnSet r = branchlat::meet(I, J);
    ensure(contains(r), "meet left the family");
    return r;
  }

  ColumnSet join(const ColumnSet& I, const ColumnSet& J) const {
    require_member(I);
    require_member(J);
    ColumnSet r = branchlat::join(I, J);
    ensure(contains(r), "join left the family");
    return r;
  }

  bool leq(const ColumnSet& I, const ColumnSet& J) const {
    require_member(I);
    require_member(J);
    return branchlat::leq(I, J);
  }

  std::string str() const {
    std::ostringstream os;
    os << "L(m=" << m_ << ",k=" << k_ << ",n=" << n_ << ")";
    return os.str();
  }

  friend bool operator==(const LatticeFamily&, const LatticeFamily&) = default;

 private:
  int m_, k_, n_;
};

// Raise every entry above the frozen band by d, embedding the family with
// parameters (m, k, n) into the one with (m + d, k, n + d). Requires k <= n
// so that prefix and tail cannot mix under the shift.
inline ColumnSet shift_iso(const ColumnSet& I, const LatticeFamily& family,
                           int d) {
  require(d >= 0, "shift distance must be nonnegative");
  require(family.k() <= family.n(),
          "shift embedding needs column length capped by the frozen band (k <= n)");
  family.require_member(I);
  ColumnSet r = I;
  for (int& e : r)
    if (e > family.n()) e += d;
  LatticeFamily target(family.m() + d, family.k(), family.n() + d);
  ensure(target.contains(r), "shifted column must land in the target family");
  return r;
}

// Canonical presentation of a column multiset: longer columns first, ties
// lexicographically. For a chain this sorts it weakly increasing.
inline void canonical_sort(Monomial& cols) {
  std::sort(cols.begin(), cols.end(), [](const ColumnSet& a, const ColumnSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
}

inline Monomial canonical_sorted(Monomial cols) {
  canonical_sort(cols);
  return cols;
}

// True when every pair of columns is comparable, i.e. the canonical order is
// weakly increasing in the tableau order.
inline bool is_chain(const Monomial& cols) {
  Monomial s = canonical_sorted(cols);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!leq(s[i], s[i + 1])) return false;
  return true;
}

// First incomparable pair in canonical order, as indices into the canonical
// sort; returns {-1, -1} for a chain.
inline std::pair<int, int> first_incomparable(const Monomial& canonical_cols) {
  for (std::size_t i = 0; i < canonical_cols.size(); ++i)
    for (std::size_t j = i + 1; j < canonical_cols.size(); ++j) {
      const ColumnSet& a = canonical_cols[i];
      const ColumnSet& b = canonical_cols[j];
      if (!leq(a, b) && !leq(b, a))
        return {static_cast<int>(i), static_cast<int>(j)};
    }
  return {-1, -1};
}

inline std::string monomial_str(const Monomial& cols) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i)
    os << (i ? " " : "") << column_str(cols[i]);
  return os.str();
}

}  // namespace branchlat
