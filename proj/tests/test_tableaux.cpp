#include <catch2/catch_amalgamated.hpp>

#include <branchlat/tableaux.hpp>

#include <set>
#include <vector>

using namespace branchlat;

namespace {

// Multisets of exactly n_cols family elements.
std::vector<Monomial> monomials_of_size(const LatticeFamily& fam, int n_cols) {
  const auto& elems = fam.elements();
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == n_cols) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < elems.size(); ++i) {
      cur.push_back(elems[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("shape of a chain") {
  LatticeFamily fam(6, 4, 3);
  Chain t{{1, 2, 3, 6}, {1, 2, 5, 6}, {1, 2, 6}, {1, 4}, {5}, {5}};
  SkewShape shape = shape_of(t, fam);
  CHECK(shape.outer == YoungDiagram({6, 4, 3, 2}));
  CHECK(shape.inner == YoungDiagram({4, 3, 1}));
  CHECK(shape.str() == "(6,4,3,2)/(4,3,1)");

  CHECK(shape_of({}, fam).outer.empty());
  CHECK_THROWS_AS(shape_of({{1, 4}, {2, 3}}, LatticeFamily(4, 2, 1)),
                  ValidationError);
  CHECK_THROWS_AS(shape_of({{2, 4}}, fam), ValidationError);
}

TEST_CASE("rendering") {
  LatticeFamily fam(6, 4, 3);
  Chain t{{1, 2, 3, 6}, {1, 2, 5, 6}, {1, 2, 6}, {1, 4}, {5}, {5}};
  CHECK(render_skew(t, fam) == ". . . . 5 5\n. . . 4\n. 5 6\n6 6");
  CHECK(render_skew({}, fam).empty());
  CHECK(render_skew({{1, 2, 5}}, fam) == ".\n.\n5");
  // Two-digit entries pad the whole grid.
  LatticeFamily wide(12, 2, 1);
  CHECK(render_skew({{1, 12}, {2}}, wide) == " .  2\n12");
}

TEST_CASE("tableau enumeration matches a direct search") {
  for (const LatticeFamily& fam :
       {LatticeFamily(4, 2, 1), LatticeFamily(5, 3, 2)}) {
    int max_cols = fam.m() == 4 ? 3 : 2;
    for (const YoungDiagram& outer : enumerate_diagrams(fam.k(), max_cols))
      for (const YoungDiagram& inner : enumerate_diagrams(fam.n(), max_cols)) {
        if (!contains(outer, inner)) continue;
        std::vector<Chain> got = enumerate_tableaux(fam, outer, inner);
        std::set<Chain> got_set;
        for (const Chain& t : got) {
          CHECK(is_chain(t));
          CHECK(shape_of(t, fam) == SkewShape(outer, inner));
          render_skew(t, fam);  // asserts semistandardness internally
          got_set.insert(canonical_sorted(t));
        }
        CHECK(got_set.size() == got.size());

        std::set<Chain> expect;
        for (const Monomial& mono : monomials_of_size(fam, outer.part(1))) {
          if (!is_chain(mono)) continue;
          Chain sorted = canonical_sorted(mono);
          if (shape_of(sorted, fam) == SkewShape(outer, inner))
            expect.insert(sorted);
        }
        CHECK(got_set == expect);
      }
  }
}
