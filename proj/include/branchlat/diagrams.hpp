#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace branchlat {

// Partition with weakly decreasing nonnegative parts. Stored normalized
// (no trailing zeros), so equality is equality of the underlying shape.
class YoungDiagram {
 public:
  YoungDiagram() = default;

  explicit YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 0, "diagram parts must be nonnegative");
      require(i == 0 || parts_[i - 1] >= parts_[i],
              "diagram parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based row length; rows past the end are 0.
  int part(int r) const {
    require(r >= 1, "row index must be >= 1");
    return r <= length() ? parts_[r - 1] : 0;
  }

  int boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.parts_ <=> b.parts_;
  }

  friend YoungDiagram operator+(const YoungDiagram& a, const YoungDiagram& b) {
    std::vector<int> s(std::max(a.parts_.size(), b.parts_.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
      s[i] = a.part(static_cast<int>(i) + 1) + b.part(static_cast<int>(i) + 1);
    return YoungDiagram(std::move(s));
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

// Transpose: column lengths become row lengths.
inline YoungDiagram conjugate(const YoungDiagram& d) {
  std::vector<int> cols(d.empty() ? 0 : d.part(1), 0);
  for (int r = 1; r <= d.length(); ++r)
    for (int c = 0; c < d.part(r); ++c) ++cols[c];
  return YoungDiagram(std::move(cols));
}

// Containment of shapes: every row of inner fits in the same row of outer.
inline bool contains(const YoungDiagram& outer, const YoungDiagram& inner) {
  for (int r = 1; r <= inner.length(); ++r)
    if (inner.part(r) > outer.part(r)) return false;
  return true;
}

// One-row interlacing: f_1 >= e_1 >= f_2 >= e_2 >= ...
inline bool interlaces(const YoungDiagram& f, const YoungDiagram& e) {
  int rows = std::max(f.length(), e.length());
  for (int r = 1; r <= rows; ++r) {
    if (f.part(r) < e.part(r)) return false;
    if (e.part(r) < f.part(r + 1)) return false;
  }
  return true;
}

// Difference of nested shapes, the unit of skew combinatorics here.
struct SkewShape {
  YoungDiagram outer;
  YoungDiagram inner;

  SkewShape() = default;
  SkewShape(YoungDiagram out, YoungDiagram in)
      : outer(std::move(out)), inner(std::move(in)) {
    require(contains(outer, inner),
            "skew shape requires the inner diagram to fit inside the outer");
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

  std::string str() const { return outer.str() + "/" + inner.str(); }
};

// Pair (F, D) with length caps: l(F) <= a, l(D) <= b, and D inside F.
inline bool is_bounded_pair(const YoungDiagram& f, const YoungDiagram& d,
                            int a, int b) {
  return f.length() <= a && d.length() <= b && contains(f, d);
}

// All diagrams with at most max_len rows and entries at most max_entry,
// in lexicographic order of padded part vectors (empty diagram first).
inline std::vector<YoungDiagram> enumerate_diagrams(int max_len, int max_entry) {
  require(max_len >= 0 && max_entry >= 0, "diagram bounds must be nonnegative");
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int cap) -> void {
    out.push_back(YoungDiagram(cur));
    if (row >= max_len) return;
    for (int v = 1; v <= cap; ++v) {
      cur.push_back(v);
      self(self, row + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, max_entry);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace branchlat
