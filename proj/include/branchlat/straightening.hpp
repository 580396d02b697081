#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "diagrams.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "gtpattern.hpp"
#include "lattice.hpp"
#include "prng.hpp"
#include "tableaux.hpp"

namespace branchlat {

// Exact rational matrix used as a sample point for minors.
struct EvalPoint {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  EvalPoint(int r, int c) : rows(r), cols(c), data(r * c) {}

  Rational& at(int r, int c) { return data[(r - 1) * cols + (c - 1)]; }
  const Rational& at(int r, int c) const {
    return data[(r - 1) * cols + (c - 1)];
  }
};

// Entries are small rationals: numerator in [-10, 10], denominator in [1, 7].
inline EvalPoint sample_eval_point(int rows, int cols, Rng& rng) {
  EvalPoint q(rows, cols);
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) {
      int num = rng.next_int(-10, 10);
      int den = rng.next_int(1, 7);
      q.at(r, c) = Rational(num, den);
    }
  return q;
}

// Determinant of the square submatrix on the rows listed in I and the first
// |I| columns, by exact Gaussian elimination.
inline Rational minor_eval(const ColumnSet& I, const EvalPoint& q) {
  require(is_column(I), "minor rows must be strictly increasing");
  int s = static_cast<int>(I.size());
  require(I.back() <= q.rows && s <= q.cols,
          "minor does not fit inside the sample point");
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s));
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) a[r][c] = q.at(I[r], c + 1);
  Rational det = 1;
  for (int col = 0; col < s; ++col) {
    int pivot = -1;
    for (int r = col; r < s; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < s; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < s; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

// Position-weighted value of a column: entry at depth r counts with weight
// base^(m - r). Bases larger than 2m make the weight order refine the
// lattice order additively: weight(I) + weight(J) = weight(meet) +
// weight(join).
inline Integer column_weight(const ColumnSet& I, const Integer& base, int m) {
  require(is_column(I), "weight needs a strictly increasing column");
  require(base > 2 * m, "weight base must exceed twice the row count");
  Integer w = 0;
  for (std::size_t r = 0; r < I.size(); ++r) {
    Integer p = 1;
    for (int e = 0; e < m - static_cast<int>(r) - 1; ++e) p *= base;
    w += I[r] * p;
  }
  return w;
}

inline Integer pair_weight(const ColumnSet& s, const ColumnSet& t,
                           const Integer& base, int m) {
  return column_weight(s, base, m) + column_weight(t, base, m);
}

struct StraighteningTerm {
  Rational coeff;
  ColumnSet s;
  ColumnSet t;
};

struct StraighteningExpansion {
  ColumnSet i;
  ColumnSet j;
  std::vector<StraighteningTerm> terms;
};

// Candidate right-hand sides for the product of two incomparable columns:
// all ways to split the combined entry multiset into an ordered pair
// (S, T) with |S| = max(|I|, |J|), |T| = min(|I|, |J|) and S <= T. Values
// appearing twice are forced into both columns. Sorted by (S, T).
inline std::vector<std::pair<ColumnSet, ColumnSet>> standard_splits(
    const ColumnSet& I, const ColumnSet& J) {
  require(is_column(I) && is_column(J), "splits need strictly increasing columns");
  std::map<int, int> mult;
  for (int e : I) ++mult[e];
  for (int e : J) ++mult[e];
  ColumnSet both, singles;
  for (const auto& [value, count] : mult) {
    require(count <= 2, "a value cannot appear twice in one column");
    (count == 2 ? both : singles).push_back(value);
  }
  int s_size = static_cast<int>(std::max(I.size(), J.size()));
  int extra = s_size - static_cast<int>(both.size());
  ensure(extra >= 0 && extra <= static_cast<int>(singles.size()),
         "split sizes are inconsistent with the content multiset");

  std::vector<std::pair<ColumnSet, ColumnSet>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (static_cast<int>(pick.size()) == extra) {
      ColumnSet s = both, t = both;
      std::vector<bool> used(singles.size(), false);
      for (int idx : pick) used[idx] = true;
      for (std::size_t i = 0; i < singles.size(); ++i)
        (used[i] ? s : t).push_back(singles[i]);
      std::sort(s.begin(), s.end());
      std::sort(t.begin(), t.end());
      if (leq(s, t)) out.emplace_back(std::move(s), std::move(t));
      return;
    }
    for (std::size_t i = next; i < singles.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Structural facts every straightening expansion must satisfy, returned as
// human-readable findings (empty list = all good): standardness and family
// membership of every term, preserved content and shape, the meet/join term
// with coefficient exactly 1, strictly heavier non-leading terms, terms
// bracketed between the meet and the join, and the two row-count bounds on
// small entries.
inline std::vector<std::string> check_expansion_invariants(
    const StraighteningExpansion& exp, const LatticeFamily& family,
    const Integer& base) {
  std::vector<std::string> bad;
  auto flag = [&](const std::string& msg) { bad.push_back(msg); };

  if (exp.terms.empty()) {
    flag("expansion has no terms");
    return bad;
  }
  ColumnSet lo = meet(exp.i, exp.j);
  ColumnSet hi = join(exp.i, exp.j);
  std::vector<int> content = exp.i;
  content.insert(content.end(), exp.j.begin(), exp.j.end());
  std::sort(content.begin(), content.end());

  SkewShape expected_shape = shape_of(Chain{lo, hi}, family);
  Integer lead_weight = pair_weight(lo, hi, base, family.m());
  int lead_count = 0;

  for (const StraighteningTerm& term : exp.terms) {
    std::ostringstream tag;
    tag << column_str(term.s) << "*" << column_str(term.t) << ": ";
    if (term.coeff == 0) flag(tag.str() + "zero coefficient kept");
    if (!family.contains(term.s) || !family.contains(term.t)) {
      flag(tag.str() + "term left the family");
      continue;
    }
    if (!leq(term.s, term.t)) {
      flag(tag.str() + "term is not standard");
      continue;
    }
    std::vector<int> c = term.s;
    c.insert(c.end(), term.t.begin(), term.t.end());
    std::sort(c.begin(), c.end());
    if (c != content) flag(tag.str() + "content multiset changed");
    if (!(shape_of(Chain{term.s, term.t}, family) == expected_shape))
      flag(tag.str() + "shape changed");
    if (!leq(term.s, lo)) flag(tag.str() + "first column above the meet");
    if (!leq(hi, term.t)) flag(tag.str() + "second column below the join");

    if (term.s == lo && term.t == hi) {
      ++lead_count;
      if (term.coeff != 1) flag(tag.str() + "leading coefficient is not 1");
    } else {
      if (pair_weight(term.s, term.t, base, family.m()) <= lead_weight)
        flag(tag.str() + "non-leading term is not strictly heavier");
    }

    int h_cap = std::min(family.n(), static_cast<int>(term.s.size()));
    for (int h = 1; h <= h_cap; ++h) {
      if (term.s[h - 1] < h ||
          (h <= static_cast<int>(term.t.size()) && term.t[h - 1] < h))
        flag(tag.str() + "row " + std::to_string(h) + " has an entry below " +
             std::to_string(h));
      int alpha = 0, beta = 0;
      for (int e : term.s)
        if (e <= h) ++alpha;
      for (int e : term.t)
        if (e <= h) ++beta;
      if (alpha + beta > 2 * h)
        flag(tag.str() + "more than " + std::to_string(2 * h) +
             " entries at most " + std::to_string(h));
    }
  }
  if (lead_count != 1)
    flag("expected exactly one meet/join term, found " +
         std::to_string(lead_count));
  return bad;
}

namespace detail {

// Exact linear solve by row reduction. Returns:
//   0 solved (x filled), 1 underdetermined, throws on inconsistency.
inline int solve_exact(std::vector<std::vector<Rational>> a,
                       std::vector<Rational> b, std::vector<Rational>& x) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    Rational inv = a[rank][col];
    for (int c = col; c < cols; ++c) a[rank][c] /= inv;
    b[rank] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
      b[r] -= f * b[rank];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    ensure(b[r] == 0,
           "sample values are outside the span of the candidate products");
  if (rank < cols) return 1;
  x.assign(cols, 0);
  for (int col = 0; col < cols; ++col) x[col] = b[pivot_of_col[col]];
  return 0;
}

inline std::uint64_t pair_stream(const LatticeFamily& family,
                                 const ColumnSet& I, const ColumnSet& J) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, family.m());
  h = fnv1a(h, family.k());
  h = fnv1a(h, family.n());
  h = fnv1a_range(h, I);
  h = fnv1a_range(h, J);
  return h;
}

}  // namespace detail

// Expand the product of two columns' minors into standard products by exact
// interpolation: enough random sample points pin the coefficients down
// uniquely, and 20 fresh points certify the identity afterwards. The terms
// come back sorted by weight at the default base 2m + 1, leading term first.
// Deterministic for a fixed seed; the solved coefficients are seed-independent.
inline StraighteningExpansion straighten_pair(const ColumnSet& I,
                                              const ColumnSet& J,
                                              const LatticeFamily& family,
                                              std::uint64_t seed = 0) {
  family.require_member(I);
  family.require_member(J);

  StraighteningExpansion exp;
  exp.i = I;
  exp.j = J;

  if (leq(I, J) || leq(J, I)) {
    ColumnSet s = leq(I, J) ? I : J;
    ColumnSet t = leq(I, J) ? J : I;
    exp.terms.push_back({Rational(1), std::move(s), std::move(t)});
    return exp;
  }

  auto candidates = standard_splits(I, J);
  ensure(!candidates.empty(), "no standard splits exist for the product");
  int c_count = static_cast<int>(candidates.size());
  Rng pair_rng = Rng(seed).split(detail::pair_stream(family, I, J));

  std::vector<Rational> x;
  bool solved = false;
  for (int attempt = 0; attempt < 8 && !solved; ++attempt) {
    Rng point_rng = pair_rng.split(2 * attempt);
    int p_count = c_count + 4;
    std::vector<std::vector<Rational>> a(p_count,
                                         std::vector<Rational>(c_count));
    std::vector<Rational> b(p_count);
    for (int p = 0; p < p_count; ++p) {
      EvalPoint q = sample_eval_point(family.m(), family.k(), point_rng);
      for (int c = 0; c < c_count; ++c)
        a[p][c] =
            minor_eval(candidates[c].first, q) * minor_eval(candidates[c].second, q);
      b[p] = minor_eval(I, q) * minor_eval(J, q);
    }
    solved = detail::solve_exact(std::move(a), std::move(b), x) == 0;
  }
  ensure(solved, "interpolation stayed underdetermined after 8 retries");

  for (int c = 0; c < c_count; ++c)
    if (x[c] != 0)
      exp.terms.push_back({x[c], candidates[c].first, candidates[c].second});

  // Certificate: the expansion must reproduce the product at fresh points.
  Rng cert_rng = pair_rng.split(0x5eedULL);
  for (int p = 0; p < 20; ++p) {
    EvalPoint q = sample_eval_point(family.m(), family.k(), cert_rng);
    Rational lhs = minor_eval(I, q) * minor_eval(J, q);
    Rational rhs = 0;
    for (const StraighteningTerm& term : exp.terms)
      rhs += term.coeff * minor_eval(term.s, q) * minor_eval(term.t, q);
    ensure(lhs == rhs, "certificate point disagrees with the expansion");
  }

  Integer base = 2 * family.m() + 1;
  std::sort(exp.terms.begin(), exp.terms.end(),
            [&](const StraighteningTerm& p, const StraighteningTerm& q) {
              Integer wp = pair_weight(p.s, p.t, base, family.m());
              Integer wq = pair_weight(q.s, q.t, base, family.m());
              if (wp != wq) return wp < wq;
              if (p.s != q.s) return p.s < q.s;
              return p.t < q.t;
            });

  std::vector<std::string> bad = check_expansion_invariants(exp, family, base);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "straightening invariants failed for " << column_str(I) << "*"
       << column_str(J) << ":";
    for (const std::string& msg : bad) os << " [" << msg << "]";
    throw InternalError(os.str());
  }
  return exp;
}

// Lightest term of an expansion in the weight order; must be the meet/join
// term with coefficient 1, and the minimum must be strict.
inline StraighteningTerm initial_term(const StraighteningExpansion& exp,
                                      const LatticeFamily& family,
                                      const Integer& base) {
  ensure(!exp.terms.empty(), "expansion has no terms");
  int best = 0;
  bool tie = false;
  Integer best_w = pair_weight(exp.terms[0].s, exp.terms[0].t, base, family.m());
  for (int r = 1; r < static_cast<int>(exp.terms.size()); ++r) {
    Integer w = pair_weight(exp.terms[r].s, exp.terms[r].t, base, family.m());
    if (w < best_w) {
      best = r;
      best_w = w;
      tie = false;
    } else if (w == best_w) {
      tie = true;
    }
  }
  ensure(!tie, "weight order failed to isolate a unique lightest term");
  const StraighteningTerm& term = exp.terms[best];
  ensure(term.s == meet(exp.i, exp.j) && term.t == join(exp.i, exp.j),
         "lightest term is not the meet/join pair");
  ensure(term.coeff == 1, "lightest term does not have coefficient 1");
  return term;
}

// Rewrite a product of column minors as a combination of chain products by
// repeatedly straightening the first incomparable pair (in canonical order)
// of the lexicographically smallest unfinished monomial. Terminates because
// each replacement strictly increases the spread of the up-set sizes.
inline std::vector<std::pair<Rational, Chain>> straighten_monomial(
    const Monomial& cols, const LatticeFamily& family, std::uint64_t seed = 0) {
  for (const ColumnSet& col : cols) family.require_member(col);
  std::map<Monomial, Rational> work, done;
  work[canonical_sorted(cols)] = 1;
  while (!work.empty()) {
    auto it = work.begin();
    while (it != work.end() && is_chain(it->first)) {
      done[it->first] += it->second;
      it = work.erase(it);
    }
    if (it == work.end()) continue;
    Monomial mono = it->first;
    Rational coeff = it->second;
    work.erase(it);
    auto [a, b] = first_incomparable(mono);
    StraighteningExpansion exp = straighten_pair(mono[a], mono[b], family, seed);
    Monomial rest = mono;
    rest.erase(rest.begin() + b);
    rest.erase(rest.begin() + a);
    for (const StraighteningTerm& term : exp.terms) {
      Monomial next = rest;
      next.push_back(term.s);
      next.push_back(term.t);
      canonical_sort(next);
      Rational& slot = work[std::move(next)];
      slot += coeff * term.coeff;
      // Zero entries are dropped lazily when popped.
    }
  }
  std::vector<std::pair<Rational, Chain>> out;
  for (auto& [mono, coeff] : done)
    if (coeff != 0) out.emplace_back(coeff, mono);
  return out;
}

// One verified pair of the toric-degeneration check, reported rather than
// thrown so a survey over many pairs can aggregate findings.
struct DegenerationReport {
  int m = 0, k = 0, n = 0;
  Integer base = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  long long pairs_checked = 0;
  std::vector<std::string> violations;
};

// Straighten incomparable pairs of the family (all of them, or `trials`
// sampled ones) and collect every violated expansion invariant at the given
// weight base. A clean run returns an empty violation list.
inline DegenerationReport verify_degeneration(const LatticeFamily& family,
                                              long long trials,
                                              std::uint64_t seed,
                                              const Integer& base) {
  require(base > 2 * family.m(), "weight base must exceed twice the row count");
  require(trials >= 0, "trial count must be nonnegative");
  DegenerationReport report;
  report.m = family.m();
  report.k = family.k();
  report.n = family.n();
  report.base = base;
  report.exhaustive = trials == 0;
  report.seed = seed;

  std::vector<ColumnSet> elems = family.elements();
  std::vector<std::pair<int, int>> incomparable;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!leq(elems[i], elems[j]) && !leq(elems[j], elems[i]))
        incomparable.emplace_back(static_cast<int>(i), static_cast<int>(j));

  Rng rng = Rng(seed).split(0xde9e4eULL);
  long long todo = trials == 0 ? static_cast<long long>(incomparable.size())
                               : trials;
  for (long long t = 0; t < todo; ++t) {
    std::pair<int, int> pick =
        trials == 0 ? incomparable[t]
                    : (incomparable.empty()
                           ? std::pair<int, int>{-1, -1}
                           : incomparable[rng.next_index(incomparable.size())]);
    if (pick.first < 0) break;
    const ColumnSet& I = elems[pick.first];
    const ColumnSet& J = elems[pick.second];
    std::string tag = column_str(I) + "*" + column_str(J) + ": ";
    try {
      StraighteningExpansion exp = straighten_pair(I, J, family, seed);
      for (const std::string& msg :
           check_expansion_invariants(exp, family, base))
        report.violations.push_back(tag + msg);
      initial_term(exp, family, base);
    } catch (const InternalError& e) {
      report.violations.push_back(tag + e.what());
    }
    ++report.pairs_checked;
  }
  return report;
}

// One-paragraph text form of a degeneration report: the headline count plus
// one line per violation.
inline std::string render_report(const DegenerationReport& report) {
  std::ostringstream os;
  os << "checked " << report.pairs_checked << " pairs, "
     << report.violations.size() << " violation"
     << (report.violations.size() == 1 ? "" : "s");
  for (const std::string& v : report.violations) os << "\n  " << v;
  return os.str();
}

}  // namespace branchlat
