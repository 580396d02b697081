#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "diagrams.hpp"
#include "errors.hpp"
#include "gtpattern.hpp"
#include "lattice.hpp"

namespace branchlat {

// Shape of a chain: outer = conjugate of the column lengths, inner row r
// counts the columns whose frozen prefix reaches r. Prefix lengths weakly
// decrease along a chain, so the inner rows are weakly decreasing.
inline SkewShape shape_of(const Chain& t, const LatticeFamily& family) {
  require(is_chain(t), "shape is defined for chains only");
  Chain s = canonical_sorted(t);
  std::vector<int> lens;
  for (const ColumnSet& col : s) {
    family.require_member(col);
    lens.push_back(static_cast<int>(col.size()));
  }
  YoungDiagram outer = conjugate(YoungDiagram(std::move(lens)));
  std::vector<int> inner(family.n(), 0);
  for (const ColumnSet& col : s)
    for (int e : col)
      if (e <= family.n()) ++inner[e - 1];
  return SkewShape(std::move(outer), YoungDiagram(std::move(inner)));
}

// All chains in the family whose shape is outer/inner, in the order their
// patterns enumerate.
inline std::vector<Chain> enumerate_tableaux(const LatticeFamily& family,
                                             const YoungDiagram& outer,
                                             const YoungDiagram& inner) {
  GTPoset poset(family.m(), family.n(), family.k());
  std::vector<Chain> out;
  for (const GTPattern& p : enumerate_patterns(poset, outer, inner)) {
    Chain t = decompose_levels(p);
    ensure(shape_of(t, family) == SkewShape(outer, inner),
           "decomposed chain has the wrong shape");
    out.push_back(std::move(t));
  }
  return out;
}

// ASCII picture of a chain as a skew tableau. Columns are laid out longest
// first; grid row h lists the h-th entries of the columns that reach depth h.
// Frozen entries (<= n) render as '.' and always occupy a left prefix of
// their row. Asserts semistandardness: rows weakly increase left to right,
// columns strictly increase downward.
inline std::string render_skew(const Chain& t, const LatticeFamily& family) {
  SkewShape shape = shape_of(t, family);
  Chain s = canonical_sorted(t);
  int depth = s.empty() ? 0 : static_cast<int>(s.front().size());

  std::size_t width = 1;
  for (const ColumnSet& col : s)
    for (int e : col) width = std::max(width, std::to_string(e).size());

  std::ostringstream os;
  for (int h = 1; h <= depth; ++h) {
    int inner_len = shape.inner.part(h);
    int reach = 0;
    while (reach < static_cast<int>(s.size()) &&
           static_cast<int>(s[reach].size()) >= h)
      ++reach;
    for (int b = 0; b < reach; ++b) {
      int e = s[b][h - 1];
      ensure((e <= family.n()) == (b < inner_len),
             "frozen cells must fill the inner part of the row");
      if (b + 1 < reach)
        ensure(e <= s[b + 1][h - 1],
               "rows of the rendered tableau must weakly increase");
      if (h < static_cast<int>(s[b].size()))
        ensure(s[b][h] > e,
               "columns of the rendered tableau must strictly increase");
    }
    if (h > 1) os << '\n';
    for (int b = 0; b < reach; ++b) {
      std::string cell =
          s[b][h - 1] <= family.n() ? "." : std::to_string(s[b][h - 1]);
      if (b) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
  }
  return os.str();
}

}  // namespace branchlat
