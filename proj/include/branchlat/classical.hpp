#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace branchlat {

// Letters of the isotropic alphabet u_1 < v_1 < u_2 < v_2 < ... with an
// optional largest letter "inf" used by odd orthogonal groups.
struct Letter {
  enum class Kind { U, V, Inf };

  Kind kind;
  int index;  // 1-based for U/V, 0 for Inf

  static Letter u(int c) {
    require(c >= 1, "letter index must be >= 1");
    return Letter{Kind::U, c};
  }
  static Letter v(int c) {
    require(c >= 1, "letter index must be >= 1");
    return Letter{Kind::V, c};
  }
  static Letter inf() { return Letter{Kind::Inf, 0}; }

  // Position in the letter order; doubles as the flattening u_c -> 2c-1,
  // v_c -> 2c. "inf" sorts after every finite letter.
  int order_key() const {
    switch (kind) {
      case Kind::U: return 2 * index - 1;
      case Kind::V: return 2 * index;
      default: return std::numeric_limits<int>::max();
    }
  }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.order_key() == b.order_key();
  }
  friend auto operator<=>(const Letter& a, const Letter& b) {
    return a.order_key() <=> b.order_key();
  }

  std::string str() const {
    switch (kind) {
      case Kind::U: return "u" + std::to_string(index);
      case Kind::V: return "v" + std::to_string(index);
      default: return "inf";
    }
  }

  static Letter parse(const std::string& s) {
    if (s == "inf") return inf();
    require(s.size() >= 2 && (s[0] == 'u' || s[0] == 'v'),
            "letter must look like u3, v2 or inf, got '" + s + "'");
    int idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      require(s[i] >= '0' && s[i] <= '9',
              "letter must look like u3, v2 or inf, got '" + s + "'");
      idx = idx * 10 + (s[i] - '0');
    }
    require(idx >= 1, "letter index must be >= 1");
    return s[0] == 'u' ? u(idx) : v(idx);
  }
};

// Strictly increasing letters, never empty when used as a column.
using LetterColumn = std::vector<Letter>;

inline bool is_letter_column(const LetterColumn& c) {
  if (c.empty()) return false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!(c[i - 1] < c[i])) return false;
  return true;
}

inline std::string letter_column_str(const LetterColumn& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].str();
  os << ']';
  return os.str();
}

// Tableau order on letter columns, mirroring the order on integer columns.
inline bool leq_letters(const LetterColumn& a, const LetterColumn& b) {
  if (a.size() < b.size()) return false;
  for (std::size_t c = 0; c < b.size(); ++c)
    if (b[c] < a[c]) return false;
  return true;
}

inline bool letter_in_alphabet(const Letter& w, int p) {
  if (w.kind == Letter::Kind::Inf) return p % 2 == 1;
  return w.index <= p / 2;
}

inline void require_alphabet(const LetterColumn& col, int p) {
  require(p >= 2, "alphabet needs p >= 2");
  require(is_letter_column(col),
          "letters must be strictly increasing and nonempty");
  for (const Letter& w : col)
    require(letter_in_alphabet(w, p),
            "letter " + w.str() + " is outside the alphabet of size " +
                std::to_string(p));
}

// Flatten letters to their positions 1..p in the letter order: u_c -> 2c-1,
// v_c -> 2c, inf -> p (p odd). An order isomorphism onto integer columns.
inline ColumnSet iota(const LetterColumn& col, int p) {
  require_alphabet(col, p);
  ColumnSet out;
  for (const Letter& w : col)
    out.push_back(w.kind == Letter::Kind::Inf ? p : w.order_key());
  ensure(is_column(out) && out.back() <= p, "flattening must stay in 1..p");
  return out;
}

inline LetterColumn iota_inverse(const ColumnSet& I, int p) {
  require(is_column(I) && I.back() <= p, "expected a column with entries <= p");
  LetterColumn out;
  for (int e : I) {
    if (p % 2 == 1 && e == p)
      out.push_back(Letter::inf());
    else
      out.push_back(e % 2 == 1 ? Letter::u((e + 1) / 2) : Letter::v(e / 2));
  }
  return out;
}

// Row relabeling that interleaves the u-block and the reversed v-block:
// u_c -> c and v_c -> p + 1 - c, with inf -> m + 1 in the odd case. The
// images are listed in the letters' own order, so the sequence is increasing
// for the crossing order on rows, not for the natural one. Ranking the
// values of psi recovers iota.
inline std::vector<int> psi(const LetterColumn& col, int p) {
  require_alphabet(col, p);
  int m = p / 2;
  std::vector<int> out;
  for (const Letter& w : col) {
    switch (w.kind) {
      case Letter::Kind::U: out.push_back(w.index); break;
      case Letter::Kind::V: out.push_back(p + 1 - w.index); break;
      default: out.push_back(m + 1); break;
    }
  }
  return out;
}

inline LetterColumn psi_inverse(const std::vector<int>& vals, int p) {
  require(p >= 2, "alphabet needs p >= 2");
  int m = p / 2;
  LetterColumn out;
  for (int x : vals) {
    require(1 <= x && x <= p, "row index out of range");
    if (x <= m)
      out.push_back(Letter::u(x));
    else if (p % 2 == 1 && x == m + 1)
      out.push_back(Letter::inf());
    else
      out.push_back(Letter::v(p + 1 - x));
  }
  std::sort(out.begin(), out.end());
  require(is_letter_column(out), "row indices must be distinct");
  return out;
}

// The lattice of admissible letter columns for a symplectic or orthogonal
// pair. A column keeps at most k letters; the letters at positions <= q form
// an initial run u_1..u_c (c <= q/2), everything above position q is free.
class LetterFamily {
 public:
  enum class Kind { Symplectic, Orthogonal };

  static LetterFamily symplectic(int m, int n) {
    require(1 <= n && n < m, "need 1 <= n < m");
    return LetterFamily(Kind::Symplectic, 2 * m, 2 * n, n);
  }

  static LetterFamily orthogonal(int p, int q) {
    require(3 <= q && q < p, "need 3 <= q < p");
    int k = q % 2 == 0 ? q / 2 - 1 : (q - 1) / 2;
    require(k >= 1, "q is too small to leave any unsigned rows");
    return LetterFamily(Kind::Orthogonal, p, q, k);
  }

  Kind kind() const { return kind_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int k() const { return k_; }

  // Integer-column family this one flattens onto.
  LatticeFamily target() const { return LatticeFamily(p_, k_, q_); }

  bool contains(const LetterColumn& col) const {
    if (!is_letter_column(col)) return false;
    if (col.empty() || static_cast<int>(col.size()) > k_) return false;
    int c = 0;
    for (const Letter& w : col) {
      if (!letter_in_alphabet(w, p_)) return false;
      if (w.order_key() <= q_) ++c;
    }
    if (c > q_ / 2) return false;
    for (int h = 0; h < c; ++h)
      if (!(col[h] == Letter::u(h + 1))) return false;
    return true;
  }

  void require_member(const LetterColumn& col) const {
    require(contains(col),
            "column " + letter_column_str(col) + " is not in " + str());
  }

  std::vector<LetterColumn> elements() const {
    std::vector<Letter> tail_alphabet;
    for (int c = 1; c <= p_ / 2; ++c) {
      if (Letter::u(c).order_key() > q_) tail_alphabet.push_back(Letter::u(c));
      if (Letter::v(c).order_key() > q_) tail_alphabet.push_back(Letter::v(c));
    }
    if (p_ % 2 == 1) tail_alphabet.push_back(Letter::inf());
    std::sort(tail_alphabet.begin(), tail_alphabet.end());

    std::vector<LetterColumn> out;
    for (int c = 0; c <= std::min(k_, q_ / 2); ++c) {
      LetterColumn prefix;
      for (int h = 1; h <= c; ++h) prefix.push_back(Letter::u(h));
      int max_tail = k_ - c;
      LetterColumn tail;
      auto rec = [&](auto&& self, std::size_t next) -> void {
        if (!prefix.empty() || !tail.empty()) {
          LetterColumn col = prefix;
          col.insert(col.end(), tail.begin(), tail.end());
          out.push_back(std::move(col));
        }
        if (static_cast<int>(tail.size()) >= max_tail) return;
        for (std::size_t i = next; i < tail_alphabet.size(); ++i) {
          tail.push_back(tail_alphabet[i]);
          self(self, i + 1);
          tail.pop_back();
        }
      };
      rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Flattening onto the integer family: the initial run u_1..u_c goes to
  // 1..c and every tail letter goes to its position in the letter order.
  // An order isomorphism onto target().
  ColumnSet iso(const LetterColumn& col) const {
    require_member(col);
    ColumnSet out;
    int h = 0;
    for (const Letter& w : col) {
      if (w.order_key() <= q_)
        out.push_back(++h);
      else
        out.push_back(w.kind == Letter::Kind::Inf ? p_ : w.order_key());
    }
    ensure(target().contains(out), "flattened column must land in the target");
    return out;
  }

  LetterColumn iso_inverse(const ColumnSet& I) const {
    target().require_member(I);
    LetterColumn out;
    for (int e : I) {
      if (e <= q_)
        out.push_back(Letter::u(e));
      else if (p_ % 2 == 1 && e == p_)
        out.push_back(Letter::inf());
      else
        out.push_back(e % 2 == 1 ? Letter::u((e + 1) / 2) : Letter::v(e / 2));
    }
    ensure(contains(out), "unflattened column must land back in the family");
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << (kind_ == Kind::Symplectic ? "symplectic" : "orthogonal")
       << " letter family (p=" << p_ << ",q=" << q_ << ",k=" << k_ << ")";
    return os.str();
  }

  friend bool operator==(const LetterFamily&, const LetterFamily&) = default;

 private:
  LetterFamily(Kind kind, int p, int q, int k)
      : kind_(kind), p_(p), q_(q), k_(k) {}

  Kind kind_;
  int p_, q_, k_;
};

namespace detail {

inline void require_letter_chain(const std::vector<LetterColumn>& t, int p) {
  for (const LetterColumn& col : t) require_alphabet(col, p);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      require(leq_letters(t[i], t[j]) || leq_letters(t[j], t[i]),
              "columns " + letter_column_str(t[i]) + " and " +
                  letter_column_str(t[j]) + " are incomparable, not a chain");
}

// Canonical order: longer columns first, ties by letter order.
inline std::vector<LetterColumn> canonical_letters(std::vector<LetterColumn> t) {
  std::sort(t.begin(), t.end(),
            [](const LetterColumn& a, const LetterColumn& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  return t;
}

}  // namespace detail

// A chain of columns over the alphabet of size 2m is symplectic-standard
// when every column dominates the reference column [u_1, ..., u_m], i.e.
// has at most m letters and its c-th letter is at least u_c.
inline bool is_sp_standard(const std::vector<LetterColumn>& t, int m) {
  require(m >= 1, "need m >= 1");
  detail::require_letter_chain(t, 2 * m);
  for (const LetterColumn& col : t) {
    if (static_cast<int>(col.size()) > m) return false;
    for (std::size_t c = 0; c < col.size(); ++c)
      if (col[c] < Letter::u(static_cast<int>(c) + 1)) return false;
  }
  return true;
}

// Orthogonal standardness for a chain over the alphabet with m isotropic
// pairs (an optional inf letter is allowed). With a(c) and b(c) counting the
// letters <= v_c in the first and second column:
//   (1) a(c) + b(c) <= 2c for every c <= m;
//   (2) when a(c) + b(c) = 2c and the a(c)-th letter of the first column is
//       u_c, every column whose b(c)-th letter is v_c must carry u_c right
//       above it.
inline bool is_o_standard(const std::vector<LetterColumn>& t, int m) {
  require(m >= 1, "need m >= 1");
  detail::require_letter_chain(t, 2 * m + 1);
  std::vector<LetterColumn> s = detail::canonical_letters(t);
  auto count_leq = [&](std::size_t b, const Letter& w) -> int {
    if (b >= s.size()) return 0;
    int cnt = 0;
    for (const Letter& x : s[b])
      if (!(w < x)) ++cnt;
    return cnt;
  };
  for (int c = 1; c <= m; ++c) {
    int a = count_leq(0, Letter::v(c));
    int b = count_leq(1, Letter::v(c));
    if (a + b > 2 * c) return false;
    if (a + b == 2 * c && a >= 1 && s[0][a - 1] == Letter::u(c)) {
      for (std::size_t col = 0; col < s.size(); ++col) {
        if (b < 1 || static_cast<int>(s[col].size()) < b) continue;
        if (s[col][b - 1] == Letter::v(c)) {
          if (b < 2 || !(s[col][b - 2] == Letter::u(c))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace branchlat
