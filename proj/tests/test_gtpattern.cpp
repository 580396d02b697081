#include <catch2/catch_amalgamated.hpp>

#include <branchlat/gtpattern.hpp>

#include <vector>

using namespace branchlat;

namespace {

// Multisets of up to max_cols family elements, as sorted index vectors.
std::vector<Monomial> monomials_up_to(const LatticeFamily& fam, int max_cols) {
  const auto& elems = fam.elements();
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_cols) return;
    for (std::size_t i = start; i < elems.size(); ++i) {
      cur.push_back(elems[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Straighten by repeatedly replacing the first incomparable pair with its
// meet and join. Slow but independent of the pattern machinery.
Chain naive_normal_form(Monomial cols) {
  cols = canonical_sorted(cols);
  for (int guard = 0; guard < 10000; ++guard) {
    auto [i, j] = first_incomparable(cols);
    if (i < 0) return cols;
    ColumnSet lo = meet(cols[i], cols[j]);
    ColumnSet hi = join(cols[i], cols[j]);
    cols[i] = lo;
    cols[j] = hi;
    cols = canonical_sorted(cols);
  }
  FAIL("naive normal form did not terminate");
  return cols;
}

std::vector<int> flattened(const GTPattern& p) {
  std::vector<int> out;
  for (const auto& row : p.rows()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("poset shape") {
  GTPoset p(6, 3, 4);
  CHECK(p.levels() == 4);
  CHECK(p.row_len(3) == 3);
  CHECK(p.row_len(4) == 4);
  CHECK(p.row_len(6) == 4);
  CHECK(p.coord_count() == 15);
  CHECK_THROWS_AS(p.row_len(2), ValidationError);
  CHECK_THROWS_AS(GTPoset(4, 2, 0), ValidationError);
  CHECK_THROWS_AS(GTPoset(4, 2, 5), ValidationError);
  CHECK_THROWS_AS(GTPoset(4, 5, 2), ValidationError);
  CHECK_THROWS_AS(GTPoset(4, -1, 2), ValidationError);
}

TEST_CASE("up-set validation") {
  GTPoset p(6, 3, 4);
  CHECK_NOTHROW(UpSet(p, {1, 2, 2, 3}));
  CHECK(UpSet(p, {1, 2, 2, 3}).size_at(4) == 2);
  CHECK(UpSet(p, {1, 2, 2, 3}).total() == 8);
  CHECK_THROWS_AS(UpSet(p, {1, 2, 2}), ValidationError);
  CHECK_THROWS_AS(UpSet(p, {4, 4, 4, 4}), ValidationError);
  CHECK_THROWS_AS(UpSet(p, {1, 3, 3, 3}), ValidationError);
  CHECK_THROWS_AS(UpSet(p, {2, 1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(UpSet(p, {-1, 0, 0, 0}), ValidationError);
}

TEST_CASE("column/up-set dictionary") {
  LatticeFamily fam(6, 4, 3);
  CHECK(birkhoff_to_subset({1, 4, 6}, fam).sizes() == std::vector<int>{1, 2, 2, 3});
  CHECK(subset_to_column(UpSet(GTPoset(6, 3, 4), {1, 2, 2, 3})) == ColumnSet{1, 4, 6});
  CHECK_THROWS_AS(subset_to_column(UpSet(GTPoset(6, 3, 4), {0, 0, 0, 0})),
                  ValidationError);

  for (const LatticeFamily& f :
       {LatticeFamily(6, 4, 3), LatticeFamily(5, 3, 2), LatticeFamily(4, 4, 0)}) {
    for (const ColumnSet& col : f.elements())
      CHECK(subset_to_column(birkhoff_to_subset(col, f)) == col);
  }
}

TEST_CASE("dictionary reverses order and swaps meet with join") {
  LatticeFamily fam(5, 3, 2);
  const auto& elems = fam.elements();
  for (const ColumnSet& a : elems)
    for (const ColumnSet& b : elems) {
      UpSet A = birkhoff_to_subset(a, fam);
      UpSet B = birkhoff_to_subset(b, fam);
      CHECK(birkhoff_to_subset(fam.meet(a, b), fam) == upset_union(A, B));
      CHECK(birkhoff_to_subset(fam.join(a, b), fam) == upset_intersection(A, B));
      bool contains_b = true;
      for (std::size_t t = 0; t < A.sizes().size(); ++t)
        if (A.sizes()[t] < B.sizes()[t]) contains_b = false;
      CHECK(fam.leq(a, b) == contains_b);
    }
}

TEST_CASE("pattern validation") {
  GTPoset p(6, 3, 4);
  std::vector<std::vector<int>> good{
      {3, 3, 3, 1}, {3, 3, 2, 0}, {3, 2, 1, 0}, {2, 2, 1}};
  CHECK_NOTHROW(GTPattern(p, good));
  GTPattern pat(p, good);
  CHECK(pat.value(6, 1) == 3);
  CHECK(pat.value(3, 3) == 1);
  CHECK(pat.peak() == 3);
  CHECK(pat.top() == YoungDiagram({3, 3, 3, 1}));
  CHECK(pat.bottom() == YoungDiagram({2, 2, 1}));
  CHECK(pat.str() == "3,3,3,1 | 3,3,2,0 | 3,2,1,0 | 2,2,1");

  CHECK_THROWS_AS(GTPattern(p, {{3, 3, 3, 1}, {3, 3, 2, 0}, {3, 2, 1, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(
      GTPattern(p, {{3, 3, 3, 1}, {3, 3, 2, 0}, {3, 2, 1, 0}, {2, 2, 1, 0}}),
      ValidationError);
  auto bad = good;
  bad[3] = {2, 2, -1};
  CHECK_THROWS_AS(GTPattern(p, bad), ValidationError);
  bad = good;
  bad[1] = {3, 2, 3, 0};
  CHECK_THROWS_AS(GTPattern(p, bad), ValidationError);
  bad = good;
  bad[1] = {3, 3, 3, 2};  // exceeds the slot above it at the right edge
  CHECK_THROWS_AS(GTPattern(p, bad), ValidationError);
  bad = good;
  bad[2] = {3, 1, 1, 0};  // slot (4,2) drops below (5,3)
  CHECK_THROWS_AS(GTPattern(p, bad), ValidationError);
}

TEST_CASE("indicator patterns and additivity of type") {
  GTPoset p(6, 3, 4);
  GTPattern ind = characteristic(UpSet(p, {1, 2, 2, 3}));
  CHECK(ind.rows() == std::vector<std::vector<int>>{
                          {1, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0}});
  CHECK(zero_pattern(p).peak() == 0);
  CHECK(zero_pattern(p) + ind == ind);

  GTPoset small(3, 1, 2);
  std::vector<GTPattern> pats;
  for (const YoungDiagram& top : enumerate_diagrams(2, 2))
    for (const YoungDiagram& bot : enumerate_diagrams(1, 2)) {
      if (!contains(top, bot)) continue;
      for (const GTPattern& q : enumerate_patterns(small, top, bot))
        pats.push_back(q);
    }
  for (const GTPattern& a : pats)
    for (const GTPattern& b : pats) {
      GTPattern sum = a + b;
      CHECK(pattern_type(sum).outer == a.top() + b.top());
      CHECK(pattern_type(sum).inner == a.bottom() + b.bottom());
    }
}

TEST_CASE("level-set decomposition") {
  GTPoset p(6, 3, 4);
  GTPattern pat(p, {{3, 3, 3, 1}, {3, 3, 2, 0}, {3, 2, 1, 0}, {2, 2, 1}});
  Chain chain = decompose_levels(pat);
  CHECK(chain == Chain{{1, 2, 3, 6}, {1, 2, 5}, {4, 5, 6}});
  CHECK(pattern_type(pat).str() == "(3,3,3,1)/(2,2,1)");
  CHECK(compose_chain(chain, LatticeFamily(6, 4, 3)) == pat);
  CHECK(decompose_levels(zero_pattern(p)).empty());
}

TEST_CASE("composition round trips") {
  LatticeFamily fam(4, 2, 1);
  GTPoset poset(4, 1, 2);
  for (const YoungDiagram& top : enumerate_diagrams(2, 3))
    for (const YoungDiagram& bot : enumerate_diagrams(1, 3)) {
      if (!contains(top, bot)) continue;
      for (const GTPattern& pat : enumerate_patterns(poset, top, bot)) {
        Chain chain = decompose_levels(pat);
        CHECK(is_chain(chain));
        CHECK(compose_chain(chain, fam) == pat);
      }
    }

  for (const LatticeFamily& f : {LatticeFamily(3, 2, 1), LatticeFamily(4, 2, 2)})
    for (const Monomial& mono : monomials_up_to(f, 3)) {
      if (!is_chain(mono)) continue;
      Chain sorted = canonical_sorted(mono);
      CHECK(decompose_levels(compose_chain(sorted, f)) == sorted);
    }
}

TEST_CASE("pattern enumeration order and count") {
  GTPoset poset(4, 1, 2);
  for (const YoungDiagram& top : enumerate_diagrams(2, 3))
    for (const YoungDiagram& bot : enumerate_diagrams(1, 3)) {
      if (!contains(top, bot)) continue;
      auto pats = enumerate_patterns(poset, top, bot);
      CHECK(count_patterns(poset, top, bot) == Integer(pats.size()));
      for (std::size_t i = 0; i + 1 < pats.size(); ++i)
        CHECK(flattened(pats[i]) > flattened(pats[i + 1]));
      for (const GTPattern& pat : pats) {
        CHECK(pat.top() == top);
        CHECK(pat.bottom() == bot);
      }
    }
  CHECK_THROWS_AS(enumerate_patterns(poset, YoungDiagram({2, 2, 2}), YoungDiagram()),
                  ValidationError);
  CHECK_THROWS_AS(count_patterns(poset, YoungDiagram({1}), YoungDiagram({2})),
                  ValidationError);
}

TEST_CASE("normal form agrees with pairwise straightening") {
  CHECK(hibi_normal_form({{1, 2, 5}, {1, 2, 3, 6}}, LatticeFamily(6, 4, 3)) ==
        Chain{{1, 2, 3, 6}, {1, 2, 5}});
  // [1,3,4] needs the shorter frozen band: its entries <= 3 are not a prefix.
  CHECK(hibi_normal_form({{1, 2, 5, 6}, {1, 3, 4}}, LatticeFamily(6, 4, 2)) ==
        Chain{{1, 2, 4, 6}, {1, 3, 5}});

  for (const LatticeFamily& f : {LatticeFamily(3, 2, 1), LatticeFamily(4, 2, 2)})
    for (const Monomial& mono : monomials_up_to(f, 3)) {
      Chain nf = hibi_normal_form(mono, f);
      CHECK(is_chain(nf));
      CHECK(compose_columns(mono, f) == compose_chain(nf, f));
      CHECK(canonical_sorted(nf) == naive_normal_form(mono));
      CHECK(hibi_normal_form(nf, f) == nf);
    }
}
