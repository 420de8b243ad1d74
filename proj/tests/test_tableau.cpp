#include <doctest.h>

#include <random>

#include "crystalr/errors.hpp"
#include "crystalr/oracle.hpp"
#include "crystalr/tableau.hpp"
#include "helpers.hpp"

using namespace crystalr;
using namespace testing_helpers;

namespace {

TwoRowTableau tab(const std::string& r1, const std::string& r2) {
  return TwoRowTableau(parse_word(r1), parse_word(r2));
}

std::vector<Letter> alphabet(int n) {
  std::vector<Letter> out;
  for (int v = 0; v <= n; ++v) out.push_back(plain(v));
  for (int v = n; v >= 0; --v) out.push_back(bar(v));
  return out;
}

}  // namespace

TEST_CASE("to_tableau and from_word") {
  auto b = coords(Family::C1, 4, 9, {2, 0, 1, 1, 0, 1, 1, 1});
  CHECK(word(b) == "0 1 1 3 4 3b 2b 1b 0b");
  CHECK(word(coords(Family::C1, 3, 3, {0, 0, 0, 0, 1, 0})) == "0 2b 0b");
  CHECK(word(coords(Family::A2, 2, 3, {3, 0, 0, 0})) == "1 1 1");
  CHECK(from_word(parse_word("2 3"), Family::C1, 3, 2).coords() == std::vector<int>{0, 1, 1, 0, 0, 0});
  CHECK_THROWS_AS(from_word(parse_word("0 1 0b"), Family::A2, 2), ParseError);
  CHECK_THROWS_AS(from_word(parse_word("2 1"), Family::C1, 2), ParseError);
  CHECK_THROWS_AS(from_word(parse_word("0 1"), Family::C1, 2), ParseError);
  CHECK_THROWS_AS(from_word(parse_word("1 2"), Family::C1, 2, 3), ParseError);
  for (Family f : {Family::C1, Family::A2})
    for (const auto& x : enumerate_b(f, 2, 3)) CHECK(from_word(to_tableau(x), f, 2) == x);
}

TEST_CASE("sigma_embed") {
  CHECK(to_string(sigma_embed(parse_word("0 2b 0b"))) == "1 3b 1b");
  CHECK(sigma_embed({}).empty());
  for (Letter a : alphabet(4))
    for (Letter b : alphabet(4)) CHECK((a < b) == (sigma_embed({a})[0] < sigma_embed({b})[0]));
}

TEST_CASE("reading word") {
  CHECK(to_string(reading_word(tab("1 2 3", ""))) == "3 2 1");
  CHECK(to_string(reading_word(tab("1 2 3", "2 3"))) == "3 2 3 1 2");
  CHECK(reading_word(TwoRowTableau()).empty());
}

TEST_CASE("column steps") {
  auto s = column_step(Column::single(plain(4)), plain(2));
  CHECK(s.column == Column::single(plain(2)));
  CHECK(s.bumped == plain(4));
  CHECK(s.which == InsertCase::k1b);

  s = column_step(Column::pair(plain(1), bar(0)), bar(1));
  CHECK(s.column == Column::pair(plain(1), bar(1)));
  CHECK(s.bumped == bar(0));
  CHECK(s.which == InsertCase::k2b);

  s = column_step(Column::pair(plain(2), bar(2)), plain(3));
  CHECK(s.column == Column::pair(plain(1), plain(3)));
  CHECK(s.bumped == bar(1));
  CHECK(s.which == InsertCase::k4b);

  s = column_step(Column::empty(), plain(5));
  CHECK(s.column == Column::single(plain(5)));
  CHECK_FALSE(s.bumped);

  CHECK_THROWS_AS(column_step(Column::pair(plain(1), plain(2)), plain(3)), InsertionUndefined);
  CHECK_THROWS_AS(column_step(Column::pair(plain(0), bar(0)), plain(1)), InsertionUndefined);

  auto r = reverse_column_step(Column::single(plain(2)), plain(3));
  CHECK(r.column == Column::single(plain(3)));
  CHECK(r.ejected == plain(2));
  r = reverse_column_step(Column::pair(plain(2), bar(2)), bar(1));
  CHECK(r.which == ReverseCase::k2c);
  CHECK(r.column == Column::pair(plain(2), bar(1)));
  CHECK(r.ejected == bar(2));
  r = reverse_column_step(Column::pair(plain(1), plain(2)), bar(1));
  CHECK(r.which == ReverseCase::k4c);
  CHECK(r.column == Column::pair(plain(2), bar(2)));
  CHECK(r.ejected == plain(2));
}

TEST_CASE("reverse step inverts every forward bump") {
  for (int n = 2; n <= 3; ++n) {
    auto letters = alphabet(n);
    std::vector<Column> cols;
    for (Letter a : letters) {
      cols.push_back(Column::single(a));
      for (Letter c : letters)
        if (a < c) cols.push_back(Column::pair(a, c));
    }
    int bumps = 0;
    for (const Column& col : cols)
      for (Letter v : letters) {
        ColumnStep s;
        try {
          s = column_step(col, v);
        } catch (const InsertionUndefined&) {
          continue;
        }
        if (!s.bumped) continue;
        ++bumps;
        ReverseStep r = reverse_column_step(s.column, *s.bumped);
        CHECK(r.column == col);
        CHECK(r.ejected == v);
      }
    CHECK(bumps > 0);
  }
}

TEST_CASE("insert_letter worked example") {
  std::vector<Letter> bumped;
  auto t = insert_letter(tab("0 3 4 0b", "4 3b 1b"), plain(2), &bumped);
  CHECK(t == tab("0 2 4 1b 0b", "2 4 2b"));
  CHECK(to_string(bumped) == "4 2b 1b 0b");
  CHECK(insert_letter(TwoRowTableau(), plain(3)) == tab("3", ""));
  CHECK(insert_letter(tab("1 1 2 3", ""), bar(1)) == tab("1 1 2 3", "1b"));
}

TEST_CASE("insert_word examples") {
  CHECK(insert_word(parse_word("1 1b 1b"), TwoRowTableau()) == tab("1 1b 1b", ""));
  CHECK(insert_word(parse_word("4b 4b 4b 1b 1b"), tab("1 1 3 4 3b 2b 1b", "")) ==
        tab("0 0 3 4 3b 2b 1b", "4b 4b 4b 0b 0b"));
  CHECK(insert_word(parse_word("1 1b 1b"), tab("1 1 2 3", "")) == tab("0 1 2 3", "1 1b 0b"));
  CHECK(insert_word(parse_word("1"), tab("2 3", "")) == tab("1 2 3", ""));
}

TEST_CASE("reverse_bump") {
  auto [empty, a] = reverse_bump(tab("5", ""), 1, 1);
  CHECK(empty.empty());
  CHECK(a == plain(5));
  CHECK_THROWS_AS(reverse_bump(tab("1 2", "3 4"), 1, 2), PreconditionError);
  CHECK_THROWS_AS(reverse_bump(tab("1 2 3", "3"), 1, 2), PreconditionError);
}

TEST_CASE("insert then reverse_bump round trip on random tableaux") {
  std::mt19937 rng(7);
  auto letters = alphabet(3);
  int trials = 0;
  while (trials < 2000) {
    std::uniform_int_distribution<int> len(0, 5), pick(0, static_cast<int>(letters.size()) - 1);
    Word w(len(rng));
    for (auto& x : w) x = letters[pick(rng)];
    std::sort(w.begin(), w.end());
    TwoRowTableau t;
    try {
      t = insert_word(w, TwoRowTableau());
      Word w2(len(rng));
      for (auto& x : w2) x = letters[pick(rng)];
      std::sort(w2.begin(), w2.end());
      t = insert_word(w2, t);
    } catch (const InsertionUndefined&) {
      continue;
    }
    Letter v = letters[pick(rng)];
    TwoRowTableau u;
    try {
      u = insert_letter(t, v);
    } catch (const InsertionUndefined&) {
      continue;
    }
    ++trials;
    CHECK(is_semistandard(u.row1(), u.row2()));
    bool grew_row2 = u.row2().size() > t.row2().size();
    auto [back, ejected] = grew_row2 ? reverse_bump(u, 2, static_cast<int>(u.row2().size()))
                                     : reverse_bump(u, 1, u.width());
    CHECK(back == t);
    CHECK(ejected == v);
  }
}

TEST_CASE("render") {
  CHECK(render(tab("0 0 3 4 3b 2b 1b", "4b 4b 4b 0b 0b")) ==
        "0  0  3  4  3b 2b 1b\n4b 4b 4b 0b 0b");
}
