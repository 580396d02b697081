#pragma once

#include <map>
#include <vector>

#include "diagrams.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "gtpattern.hpp"

namespace branchlat {

// One-step restriction of general linear groups is multiplicity free: the
// smaller label must interlace the larger one.
inline int gl_onestep(const YoungDiagram& f, const YoungDiagram& d, int m) {
  require(m >= 1, "need m >= 1");
  require(f.length() <= m, "outer label has too many rows for its group");
  require(d.length() <= m - 1, "inner label has too many rows for its group");
  return interlaces(f, d) ? 1 : 0;
}

// Multiplicity of the level-n label d inside the level-m label f, computed
// as a pattern count. The slot width is capped at the number of rows of f;
// wider slots would be forced to zero anyway.
inline Integer gl_multiplicity(int m, int n, const YoungDiagram& f,
                               const YoungDiagram& d) {
  require(1 <= n && n <= m, "need 1 <= n <= m");
  require(f.length() <= m, "outer label has too many rows for its group");
  require(d.length() <= n, "inner label has too many rows for its group");
  if (!contains(f, d)) return 0;
  GTPoset poset(m, n, std::max(1, f.length()));
  return count_patterns(poset, f, d);
}

namespace detail {

// Diagrams contained in caps (length <= max_len, first part <= max_entry)
// that interlace below f.
inline std::vector<YoungDiagram> onestep_candidates(const YoungDiagram& f,
                                                    int max_len) {
  std::vector<YoungDiagram> out;
  for (const YoungDiagram& e : enumerate_diagrams(
           std::min(max_len, std::max(f.length(), 0)), f.empty() ? 0 : f.part(1)))
    if (interlaces(f, e)) out.push_back(e);
  return out;
}

}  // namespace detail

// Same multiplicity by iterating one-step restrictions level by level. The
// length cap min(level, width) on intermediate labels is essential: plain
// interlacing would admit labels with too many rows for their level.
inline Integer gl_multiplicity_by_steps(int m, int n, const YoungDiagram& f,
                                        const YoungDiagram& d) {
  require(1 <= n && n <= m, "need 1 <= n <= m");
  require(f.length() <= m, "outer label has too many rows for its group");
  require(d.length() <= n, "inner label has too many rows for its group");
  int width = std::max(1, f.length());
  std::map<YoungDiagram, Integer> cur{{f, 1}};
  for (int level = m; level > n; --level) {
    std::map<YoungDiagram, Integer> next;
    for (const auto& [e, count] : cur)
      for (const YoungDiagram& below :
           detail::onestep_candidates(e, std::min(level - 1, width)))
        next[below] += count;
    cur = std::move(next);
  }
  auto it = cur.find(d);
  return it == cur.end() ? Integer(0) : it->second;
}

// One-step restriction of symplectic groups: the number of diagrams doubly
// interlaced between the two labels. Each slot ranges over an interval whose
// ends mix the neighbours of both labels.
inline Integer sp_onestep(const YoungDiagram& f, const YoungDiagram& d, int m) {
  require(m >= 1, "need m >= 1");
  require(f.length() <= m, "outer label has too many rows for its group");
  require(d.length() <= m - 1, "inner label has too many rows for its group");
  Integer count = 1;
  for (int r = 1; r <= m; ++r) {
    int lo = std::max(f.part(r + 1), d.part(r));
    int hi = r == 1 ? f.part(1) : std::min(f.part(r), d.part(r - 1));
    if (hi < lo) return 0;
    count *= hi - lo + 1;
  }
  return count;
}

// Multiplicity of the rank-n symplectic label d inside the rank-m label f,
// in the stable range l(f) <= n, as a pattern count on a poset with 2m - 2n
// + 1 levels and slot width n.
inline Integer sp_multiplicity(int m, int n, const YoungDiagram& f,
                               const YoungDiagram& d) {
  require(1 <= n && n <= m, "need 1 <= n <= m");
  require(f.length() <= n,
          "stable range requires the outer label to have at most n rows");
  require(d.length() <= n, "inner label has too many rows for its group");
  if (!contains(f, d)) return 0;
  return count_patterns(GTPoset(2 * m, 2 * n, n), f, d);
}

// Same multiplicity by iterating sp_onestep down the rank chain, capping
// intermediate labels at their own rank.
inline Integer sp_multiplicity_by_steps(int m, int n, const YoungDiagram& f,
                                        const YoungDiagram& d) {
  require(1 <= n && n <= m, "need 1 <= n <= m");
  require(f.length() <= n,
          "stable range requires the outer label to have at most n rows");
  require(d.length() <= n, "inner label has too many rows for its group");
  std::map<YoungDiagram, Integer> cur{{f, 1}};
  for (int j = m; j > n; --j) {
    std::map<YoungDiagram, Integer> next;
    for (const auto& [e, count] : cur)
      for (const YoungDiagram& below :
           enumerate_diagrams(std::min(j - 1, e.length()), e.empty() ? 0 : e.part(1))) {
        Integer w = sp_onestep(e, below, j);
        if (w > 0) next[below] += count * w;
      }
    cur = std::move(next);
  }
  auto it = cur.find(d);
  return it == cur.end() ? Integer(0) : it->second;
}

enum class SoStep { OddToEven, EvenToOdd };

// One-step restriction of orthogonal groups between SO_{2j+1} and SO_{2j}
// (OddToEven) or SO_{2j} and SO_{2j-1} (EvenToOdd). On labels without signed
// rows both steps are multiplicity free with plain interlacing.
inline int so_onestep(const YoungDiagram& f, const YoungDiagram& d, SoStep step,
                      int j) {
  require(j >= 1, "need j >= 1");
  require(f.length() <= j, "outer label has too many rows for its group");
  int d_cap = step == SoStep::OddToEven ? j : j - 1;
  require(d.length() <= d_cap, "inner label has too many rows for its group");
  return interlaces(f, d) ? 1 : 0;
}

// Slot width for the orthogonal pair (p, q): one less than half of q when q
// is even (the last coordinate of an even orthogonal label can be signed and
// is excluded from the stable range), half of q - 1 when q is odd.
inline int so_width(int q) {
  int k = q % 2 == 0 ? q / 2 - 1 : (q - 1) / 2;
  require(k >= 1, "q is too small to leave any unsigned rows");
  return k;
}

// Multiplicity of the SO_q label d inside the SO_p label f, both labels in
// the stable range (at most so_width(q) rows), as a pattern count.
inline Integer so_multiplicity(int p, int q, const YoungDiagram& f,
                               const YoungDiagram& d) {
  require(3 <= q && q < p, "need 3 <= q < p");
  int k = so_width(q);
  require(f.length() <= k,
          "stable range requires the outer label to have at most so_width(q) rows");
  require(d.length() <= k, "inner label has too many rows for the stable range");
  if (!contains(f, d)) return 0;
  return count_patterns(GTPoset(p, q, k), f, d);
}

// Same multiplicity by walking the chain SO_p > SO_{p-1} > ... > SO_q one
// step at a time. Intermediate labels at an even level 2j with j rows would
// carry a sign ambiguity; in the stable range they never occur, which is
// checked on every level.
inline Integer so_multiplicity_by_steps(int p, int q, const YoungDiagram& f,
                                        const YoungDiagram& d) {
  require(3 <= q && q < p, "need 3 <= q < p");
  int k = so_width(q);
  require(f.length() <= k,
          "stable range requires the outer label to have at most so_width(q) rows");
  require(d.length() <= k, "inner label has too many rows for the stable range");
  std::map<YoungDiagram, Integer> cur{{f, 1}};
  for (int r = p; r > q; --r) {
    int below_cap = (r - 1) / 2;
    std::map<YoungDiagram, Integer> next;
    for (const auto& [e, count] : cur)
      for (const YoungDiagram& below :
           enumerate_diagrams(std::min(below_cap, e.length()),
                              e.empty() ? 0 : e.part(1))) {
        SoStep step = r % 2 == 1 ? SoStep::OddToEven : SoStep::EvenToOdd;
        if (so_onestep(e, below, step, r / 2) > 0) next[below] += count;
      }
    if ((r - 1) % 2 == 0)
      for (const auto& entry : next)
        ensure(entry.first.length() < (r - 1) / 2,
               "a label at an even level filled all its rows; such a label "
               "carries a sign and must not arise in the stable range");
    cur = std::move(next);
  }
  auto it = cur.find(d);
  return it == cur.end() ? Integer(0) : it->second;
}

}  // namespace branchlat
