#include <catch2/catch_amalgamated.hpp>

#include <branchlat/classical.hpp>
#include <branchlat/gtpattern.hpp>

#include <set>
#include <vector>

using namespace branchlat;

namespace {

// Full alphabet for p letter positions, in increasing order.
std::vector<Letter> alphabet(int p) {
  std::vector<Letter> out;
  for (int c = 1; c <= p / 2; ++c) {
    out.push_back(Letter::u(c));
    out.push_back(Letter::v(c));
  }
  if (p % 2 == 1) out.push_back(Letter::inf());
  return out;
}

// All strictly increasing letter columns over the alphabet with at most
// max_size letters, via bitmask.
std::vector<LetterColumn> all_columns(int p, int max_size) {
  std::vector<Letter> abc = alphabet(p);
  std::vector<LetterColumn> out;
  for (unsigned mask = 1; mask < (1u << abc.size()); ++mask) {
    if (__builtin_popcount(mask) > max_size) continue;
    LetterColumn col;
    for (std::size_t i = 0; i < abc.size(); ++i)
      if (mask & (1u << i)) col.push_back(abc[i]);
    out.push_back(std::move(col));
  }
  return out;
}

int count_up_to(const LetterColumn& col, const Letter& bound) {
  int cnt = 0;
  for (const Letter& w : col)
    if (!(bound < w)) ++cnt;
  return cnt;
}

}  // namespace

TEST_CASE("letters") {
  CHECK(Letter::u(1) < Letter::v(1));
  CHECK(Letter::v(1) < Letter::u(2));
  CHECK(Letter::v(9) < Letter::inf());
  CHECK(Letter::u(3).order_key() == 5);
  CHECK(Letter::v(2).order_key() == 4);
  CHECK(Letter::parse("u3") == Letter::u(3));
  CHECK(Letter::parse("v12") == Letter::v(12));
  CHECK(Letter::parse("inf") == Letter::inf());
  CHECK(Letter::u(3).str() == "u3");
  CHECK(Letter::inf().str() == "inf");
  CHECK_THROWS_AS(Letter::parse("w3"), ValidationError);
  CHECK_THROWS_AS(Letter::parse("u0"), ValidationError);
  CHECK_THROWS_AS(Letter::parse("u"), ValidationError);
  CHECK_THROWS_AS(Letter::parse("3"), ValidationError);
  CHECK_THROWS_AS(Letter::u(0), ValidationError);

  CHECK(is_letter_column({Letter::u(1), Letter::v(1)}));
  CHECK_FALSE(is_letter_column({}));
  CHECK_FALSE(is_letter_column({Letter::v(1), Letter::u(1)}));
  CHECK(letter_column_str({Letter::u(1), Letter::inf()}) == "[u1,inf]");
}

TEST_CASE("flattening letters to positions") {
  CHECK(iota({Letter::u(1), Letter::u(2), Letter::v(4)}, 8) ==
        ColumnSet{1, 3, 8});
  CHECK(iota({Letter::inf()}, 7) == ColumnSet{7});
  CHECK_THROWS_AS(iota({Letter::v(4)}, 6), ValidationError);
  CHECK_THROWS_AS(iota({Letter::inf()}, 8), ValidationError);
  CHECK_THROWS_AS(iota({Letter::v(1), Letter::u(1)}, 6), ValidationError);

  for (int p : {6, 7, 8, 9, 10}) {
    for (const LetterColumn& col : all_columns(p, 3))
      CHECK(iota_inverse(iota(col, p), p) == col);
    // Every small integer column is hit.
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
      if (!cur.empty()) CHECK(iota(iota_inverse(cur, p), p) == cur);
      if (cur.size() == 3) return;
      for (int e = next; e <= p; ++e) {
        cur.push_back(e);
        self(self, e + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
  }
}

TEST_CASE("row relabeling") {
  CHECK(psi({Letter::u(1), Letter::v(1)}, 10) == std::vector<int>{1, 10});
  CHECK(psi({Letter::u(1), Letter::inf()}, 7) == std::vector<int>{1, 4});
  CHECK(psi_inverse({1, 10}, 10) == LetterColumn{Letter::u(1), Letter::v(1)});
  CHECK(psi_inverse({10, 1}, 10) == LetterColumn{Letter::u(1), Letter::v(1)});
  CHECK_THROWS_AS(psi_inverse({1, 1}, 10), ValidationError);
  CHECK_THROWS_AS(psi_inverse({11}, 10), ValidationError);

  // psi is the position in the crossing order 1, p, 2, p-1, ...; ranking its
  // values in that order recovers the flattening.
  auto crossing_rank = [](int x, int p) {
    return x <= (p + 1) / 2 ? 2 * x - 1 : 2 * (p + 1 - x);
  };
  for (int p : {6, 7, 8, 9}) {
    for (const LetterColumn& col : all_columns(p, 3)) {
      std::vector<int> vals = psi(col, p);
      ColumnSet flat = iota(col, p);
      REQUIRE(vals.size() == flat.size());
      for (std::size_t i = 0; i < vals.size(); ++i)
        CHECK(crossing_rank(vals[i], p) == flat[i]);
      CHECK(psi_inverse(vals, p) == col);
    }
  }
}

TEST_CASE("letter family membership") {
  LetterFamily sp32 = LetterFamily::symplectic(3, 2);
  CHECK(sp32.p() == 6);
  CHECK(sp32.q() == 4);
  CHECK(sp32.k() == 2);
  CHECK(sp32.contains({Letter::u(1), Letter::v(3)}));
  CHECK(sp32.contains({Letter::u(1), Letter::u(2)}));
  CHECK(sp32.contains({Letter::u(3)}));
  CHECK_FALSE(sp32.contains({Letter::v(1)}));
  CHECK_FALSE(sp32.contains({Letter::u(2)}));
  CHECK_FALSE(sp32.contains({}));
  CHECK_FALSE(sp32.contains({Letter::u(1), Letter::v(2)}));

  LetterFamily so75 = LetterFamily::orthogonal(7, 5);
  CHECK(so75.k() == 2);
  CHECK(so75.contains({Letter::v(3)}));
  CHECK(so75.contains({Letter::inf()}));
  CHECK(so75.contains({Letter::u(1), Letter::inf()}));
  CHECK(so75.contains({Letter::u(1), Letter::u(2)}));
  CHECK_FALSE(so75.contains({Letter::u(3)}));  // sits at position q itself
  CHECK_FALSE(so75.contains({Letter::u(2), Letter::v(3)}));

  LetterFamily so86 = LetterFamily::orthogonal(8, 6);
  CHECK(so86.k() == 2);
  CHECK(so86.contains({Letter::u(1), Letter::u(4)}));
  CHECK(so86.contains({Letter::v(4)}));
  CHECK_FALSE(so86.contains({Letter::u(1), Letter::v(1)}));
  CHECK_FALSE(so86.contains({Letter::inf()}));

  CHECK_THROWS_AS(LetterFamily::symplectic(3, 3), ValidationError);
  CHECK_THROWS_AS(LetterFamily::orthogonal(7, 2), ValidationError);
  CHECK_THROWS_AS(LetterFamily::orthogonal(5, 5), ValidationError);

  // Membership agrees with assembling an initial run u_1..u_c and free
  // letters strictly above position q.
  for (const LetterFamily& fam :
       {LetterFamily::symplectic(3, 2), LetterFamily::symplectic(4, 2),
        LetterFamily::symplectic(4, 3), LetterFamily::orthogonal(7, 5),
        LetterFamily::orthogonal(8, 6), LetterFamily::orthogonal(9, 5),
        LetterFamily::orthogonal(8, 3)}) {
    std::set<LetterColumn> expect;
    for (int c = 0; c <= std::min(fam.k(), fam.q() / 2); ++c) {
      LetterColumn prefix;
      for (int h = 1; h <= c; ++h) prefix.push_back(Letter::u(h));
      std::vector<Letter> tail_abc;
      for (const Letter& w : alphabet(fam.p()))
        if ((w.kind == Letter::Kind::Inf ? fam.p() : w.order_key()) > fam.q())
          tail_abc.push_back(w);
      int room = fam.k() - c;
      LetterColumn tail;
      auto rec = [&](auto&& self, std::size_t next) -> void {
        if (!prefix.empty() || !tail.empty()) {
          LetterColumn col = prefix;
          col.insert(col.end(), tail.begin(), tail.end());
          expect.insert(std::move(col));
        }
        if (static_cast<int>(tail.size()) >= room) return;
        for (std::size_t i = next; i < tail_abc.size(); ++i) {
          tail.push_back(tail_abc[i]);
          self(self, i + 1);
          tail.pop_back();
        }
      };
      rec(rec, 0);
    }
    for (const LetterColumn& col : all_columns(fam.p(), fam.k()))
      CHECK(fam.contains(col) == (expect.count(col) > 0));
    std::vector<LetterColumn> elems = fam.elements();
    CHECK(elems.size() == expect.size());
    CHECK(std::set<LetterColumn>(elems.begin(), elems.end()) == expect);
  }
}

TEST_CASE("flattening is an order isomorphism onto the integer family") {
  CHECK(LetterFamily::symplectic(4, 3).iso(
            {Letter::u(1), Letter::u(2), Letter::v(4)}) == ColumnSet{1, 2, 8});
  CHECK(LetterFamily::symplectic(3, 2).iso({Letter::u(1), Letter::v(3)}) ==
        ColumnSet{1, 6});
  CHECK(LetterFamily::orthogonal(7, 5).iso({Letter::u(1), Letter::inf()}) ==
        ColumnSet{1, 7});

  std::vector<LetterFamily> fams;
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n < m; ++n) fams.push_back(LetterFamily::symplectic(m, n));
  for (int q = 3; q <= 8; ++q)
    for (int p = q + 1; p <= 9; ++p) {
      if (q % 2 == 0 && q / 2 - 1 < 1) continue;
      fams.push_back(LetterFamily::orthogonal(p, q));
    }

  for (const LetterFamily& fam : fams) {
    LatticeFamily target = fam.target();
    std::vector<LetterColumn> elems = fam.elements();
    std::set<ColumnSet> image;
    for (const LetterColumn& col : elems) {
      ColumnSet I = fam.iso(col);
      CHECK(fam.iso_inverse(I) == col);
      image.insert(I);
    }
    CHECK(image.size() == elems.size());
    std::vector<ColumnSet> target_elems = target.elements();
    CHECK(image == std::set<ColumnSet>(target_elems.begin(), target_elems.end()));
    for (const LetterColumn& a : elems)
      for (const LetterColumn& b : elems) {
        CHECK(leq_letters(a, b) == target.leq(fam.iso(a), fam.iso(b)));
        // Meets and joins transport back without leaving the family.
        fam.iso_inverse(target.meet(fam.iso(a), fam.iso(b)));
        fam.iso_inverse(target.join(fam.iso(a), fam.iso(b)));
      }
  }
}

TEST_CASE("level sizes of a flattened column count letters below a bound") {
  for (const LetterFamily& fam :
       {LetterFamily::symplectic(3, 2), LetterFamily::symplectic(4, 2),
        LetterFamily::orthogonal(7, 5), LetterFamily::orthogonal(8, 6),
        LetterFamily::orthogonal(9, 7)}) {
    LatticeFamily target = fam.target();
    for (const LetterColumn& col : fam.elements()) {
      UpSet sizes = birkhoff_to_subset(fam.iso(col), target);
      for (int h = fam.q(); h <= fam.p(); ++h) {
        int want;
        if (h == fam.p() && fam.p() % 2 == 1)
          want = static_cast<int>(col.size());
        else if (h % 2 == 1)
          want = count_up_to(col, Letter::u((h + 1) / 2));
        else
          want = count_up_to(col, Letter::v(h / 2));
        CHECK(sizes.size_at(h) == want);
      }
    }
  }
}

TEST_CASE("symplectic standardness") {
  CHECK(is_sp_standard({{Letter::u(1), Letter::u(2)}}, 2));
  CHECK_FALSE(is_sp_standard({{Letter::u(1), Letter::v(1)}}, 2));
  CHECK_FALSE(is_sp_standard({{Letter::u(1), Letter::u(2), Letter::v(2)}}, 2));
  CHECK(is_sp_standard({}, 2));
  CHECK_THROWS_AS(
      is_sp_standard({{Letter::u(1), Letter::v(2)}, {Letter::u(2), Letter::v(1)}}, 2),
      ValidationError);
  CHECK_THROWS_AS(is_sp_standard({{Letter::u(3)}}, 2), ValidationError);

  // Family members and their pairwise chains are automatically standard.
  for (const LetterFamily& fam :
       {LetterFamily::symplectic(3, 2), LetterFamily::symplectic(4, 2)}) {
    std::vector<LetterColumn> elems = fam.elements();
    for (const LetterColumn& a : elems) {
      CHECK(is_sp_standard({a}, fam.p() / 2));
      for (const LetterColumn& b : elems) {
        if (!leq_letters(a, b) && !leq_letters(b, a)) continue;
        CHECK(is_sp_standard({a, b}, fam.p() / 2));
      }
    }
  }
}

TEST_CASE("orthogonal standardness") {
  LetterColumn u1v1{Letter::u(1), Letter::v(1)};
  LetterColumn u1u2{Letter::u(1), Letter::u(2)};
  CHECK_FALSE(is_o_standard({u1v1, u1v1}, 2));
  CHECK(is_o_standard({u1u2, u1u2}, 2));
  CHECK(is_o_standard({u1v1}, 1));
  CHECK(is_o_standard({}, 1));

  // A pair can fail only through the letter directly above a v: here the
  // second column reaches v_2 without carrying u_2.
  CHECK_FALSE(is_o_standard({u1u2, {Letter::u(1), Letter::v(2)}}, 3));
  CHECK(is_o_standard({u1u2, {Letter::u(2), Letter::v(2)}}, 3));
  // The order of the input does not matter.
  CHECK_FALSE(is_o_standard({{Letter::u(1), Letter::v(2)}, u1u2}, 3));

  CHECK_THROWS_AS(
      is_o_standard({{Letter::u(1), Letter::v(2)}, {Letter::u(2), Letter::v(1)}}, 3),
      ValidationError);
  CHECK_THROWS_AS(is_o_standard({{Letter::u(4)}}, 3), ValidationError);
  CHECK(is_o_standard({{Letter::inf()}}, 2));
}

TEST_CASE("orthogonal family members form standard chains") {
  for (const LetterFamily& fam :
       {LetterFamily::orthogonal(7, 5), LetterFamily::orthogonal(8, 6)}) {
    int m = fam.p() / 2;
    std::vector<LetterColumn> elems = fam.elements();
    for (const LetterColumn& a : elems) {
      CHECK(is_o_standard({a}, m));
      for (const LetterColumn& b : elems) {
        if (!leq_letters(a, b) && !leq_letters(b, a)) continue;
        CHECK(is_o_standard({a, b}, m));
      }
    }
  }
}
