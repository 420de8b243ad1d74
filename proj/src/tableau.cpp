#include "crystalr/tableau.hpp"

#include <algorithm>
#include <cassert>

#include "crystalr/errors.hpp"

namespace crystalr {

Word to_tableau(const OneRowElement& b) {
  const int n = b.rank();
  Word w;
  w.reserve(b.capacity());
  const int z = b.x0();
  w.insert(w.end(), z, plain(0));
  for (int i = 1; i <= n; ++i) w.insert(w.end(), b.x(i), plain(i));
  for (int i = n; i >= 1; --i) w.insert(w.end(), b.xbar(i), bar(i));
  w.insert(w.end(), z, bar(0));
  return w;
}

OneRowElement from_word(const Word& w, Family family, int n) {
  return from_word(w, family, n, static_cast<int>(w.size()));
}

OneRowElement from_word(const Word& w, Family family, int n, int l) {
  if (static_cast<int>(w.size()) != l)
    throw ParseError("word length " + std::to_string(w.size()) + " differs from capacity " +
                     std::to_string(l));
  if (n < 2) throw PreconditionError("rank n must be at least 2");
  std::vector<int> x(n + 1, 0), xb(n + 1, 0);
  for (std::size_t j = 0; j < w.size(); ++j) {
    Letter a = w[j];
    if (a.value > n) throw ParseError("letter " + to_string(a) + " exceeds rank " + std::to_string(n));
    if (a.value == 0 && family == Family::A2)
      throw ParseError("letters 0 and 0b are not allowed for family a2");
    if (j > 0 && w[j] < w[j - 1]) throw ParseError("word is not weakly increasing: " + to_string(w));
    (a.barred ? xb : x)[a.value] += 1;
  }
  if (x[0] != xb[0]) throw ParseError("unequal numbers of 0 and 0b in " + to_string(w));
  return OneRowElement::from_xs(family, n, l, std::span<const int>(x).subspan(1),
                                std::span<const int>(xb).subspan(1));
}

std::string to_string(const Column& c) {
  if (c.height == 0) return "[]";
  if (c.height == 1) return "[" + to_string(c.top) + "]";
  return "[" + to_string(c.top) + "/" + to_string(c.bottom) + "]";
}

std::string to_string(InsertCase c) {
  static const char* names[] = {"1a", "2a", "1b", "2b", "3b", "4b", "5b"};
  return names[static_cast<int>(c)];
}

std::string to_string(ReverseCase c) {
  static const char* names[] = {"1c", "2c", "3c", "4c", "5c"};
  return names[static_cast<int>(c)];
}

ColumnStep column_step(const Column& col, Letter v) {
  if (col.height == 0) return {Column::single(v), std::nullopt, InsertCase::k1a};
  const Letter a = col.top;
  if (col.height == 1) {
    if (v > a) return {Column::pair(a, v), std::nullopt, InsertCase::k2a};
    return {Column::single(v), a, InsertCase::k1b};
  }
  const Letter c = col.bottom;
  const bool b2 = a < v && v <= c && !is_pair(a, c);
  const bool b3 = v <= a && !is_pair(v, c);
  const bool b4 = is_pair(a, c) && a.value != 0 && a <= v && v <= c;
  const bool b5 = !v.barred && v < a && c == bar(v.value);
  assert(int(b2) + int(b3) + int(b4) + int(b5) <= 1);
  if (b2) return {Column::pair(a, v), c, InsertCase::k2b};
  if (b3) return {Column::pair(v, c), a, InsertCase::k3b};
  if (b4) return {Column::pair(plain(a.value - 1), v), bar(a.value - 1), InsertCase::k4b};
  if (b5) return {Column::pair(plain(v.value + 1), bar(v.value + 1)), a, InsertCase::k5b};
  throw InsertionUndefined("insertion undefined: letter " + to_string(v) + " into column " +
                           to_string(col));
}

ReverseStep reverse_column_step(const Column& col, Letter u) {
  if (col.height == 1) {
    if (col.top <= u) return {Column::single(u), col.top, ReverseCase::k1c};
  } else if (col.height == 2) {
    const Letter a = col.top, b = col.bottom;
    const bool c2 = a < b && b <= u && !is_pair(a, u);
    const bool c3 = a <= u && u < b && !is_pair(a, b);
    const bool c4 = is_pair(a, u) && a < b && b < u;
    const bool c5 = is_pair(a, b) && a.value != 0 && a <= u && u <= b;
    assert(int(c2) + int(c3) + int(c4) + int(c5) <= 1);
    if (c2) return {Column::pair(a, u), b, ReverseCase::k2c};
    if (c3) return {Column::pair(u, b), a, ReverseCase::k3c};
    if (c4) return {Column::pair(plain(a.value + 1), bar(a.value + 1)), b, ReverseCase::k4c};
    if (c5) return {Column::pair(u, bar(a.value - 1)), plain(a.value - 1), ReverseCase::k5c};
  }
  throw InsertionUndefined("reverse bumping undefined: letter " + to_string(u) +
                           " into column " + to_string(col));
}

bool is_semistandard(const Word& r1, const Word& r2) {
  if (r2.size() > r1.size()) return false;
  for (std::size_t j = 1; j < r1.size(); ++j)
    if (r1[j] < r1[j - 1]) return false;
  for (std::size_t j = 1; j < r2.size(); ++j)
    if (r2[j] < r2[j - 1]) return false;
  for (std::size_t j = 0; j < r2.size(); ++j)
    if (!(r1[j] < r2[j])) return false;
  return true;
}

TwoRowTableau::TwoRowTableau(Word row1, Word row2) : r1_(std::move(row1)), r2_(std::move(row2)) {
  if (!is_semistandard(r1_, r2_)) throw PreconditionError("not a semistandard two-row tableau");
}

TwoRowTableau TwoRowTableau::unchecked(Word row1, Word row2) {
  TwoRowTableau t;
  t.r1_ = std::move(row1);
  t.r2_ = std::move(row2);
  return t;
}

Column TwoRowTableau::column(int j) const {
  if (j < 0 || j >= width()) return Column::empty();
  if (j < static_cast<int>(r2_.size())) return Column::pair(r1_[j], r2_[j]);
  return Column::single(r1_[j]);
}

Word reading_word(const TwoRowTableau& t) {
  Word w;
  for (int j = t.width() - 1; j >= 0; --j) {
    w.push_back(t.row1()[j]);
    if (j < static_cast<int>(t.row2().size())) w.push_back(t.row2()[j]);
  }
  return w;
}

std::string render(const TwoRowTableau& t) {
  std::string top, bottom;
  for (int j = 0; j < t.width(); ++j) {
    std::string a = to_string(t.row1()[j]);
    std::string c = j < static_cast<int>(t.row2().size()) ? to_string(t.row2()[j]) : "";
    std::size_t w = std::max(a.size(), c.size());
    if (j) {
      top += ' ';
      bottom += ' ';
    }
    top += a + std::string(w - a.size(), ' ');
    bottom += c + std::string(w - c.size(), ' ');
  }
  while (!bottom.empty() && bottom.back() == ' ') bottom.pop_back();
  while (!top.empty() && top.back() == ' ') top.pop_back();
  return top + "\n" + bottom;
}

TwoRowTableau insert_letter(const TwoRowTableau& t, Letter a, std::vector<Letter>* bumped) {
  Word r1 = t.row1(), r2 = t.row2();
  Letter cur = a;
  for (std::size_t j = 0;; ++j) {
    Column col = j < r1.size() ? (j < r2.size() ? Column::pair(r1[j], r2[j]) : Column::single(r1[j]))
                               : Column::empty();
    ColumnStep step = column_step(col, cur);
    if (col.height == 0) {
      r1.push_back(step.column.top);
    } else {
      r1[j] = step.column.top;
      if (step.column.height == 2) {
        if (j < r2.size()) {
          r2[j] = step.column.bottom;
        } else if (j == r2.size()) {
          r2.push_back(step.column.bottom);
        } else {
          throw InsertionUndefined("insertion of " + to_string(a) +
                                   " would leave a gap in the second row");
        }
      }
    }
    if (!step.bumped) break;
    if (bumped) bumped->push_back(*step.bumped);
    cur = *step.bumped;
  }
  if (!is_semistandard(r1, r2))
    throw InsertionUndefined("insertion of " + to_string(a) + " produced a non-semistandard tableau");
  return TwoRowTableau::unchecked(std::move(r1), std::move(r2));
}

TwoRowTableau insert_word(const Word& source, const TwoRowTableau& target,
                          std::vector<InsertRecord>* trace) {
  TwoRowTableau t = target;
  for (auto it = source.rbegin(); it != source.rend(); ++it) {
    std::vector<Letter> bumped;
    t = insert_letter(t, *it, trace ? &bumped : nullptr);
    if (trace) trace->push_back({*it, std::move(bumped), t});
  }
  return t;
}

std::pair<TwoRowTableau, Letter> reverse_bump(const TwoRowTableau& t, int row, int col) {
  Word r1 = t.row1(), r2 = t.row2();
  const int w1 = static_cast<int>(r1.size()), w2 = static_cast<int>(r2.size());
  Letter u;
  if (row == 2 && col == w2 && w2 > 0) {
    u = r2.back();
    r2.pop_back();
  } else if (row == 1 && col == w1 && w1 > w2) {
    u = r1.back();
    r1.pop_back();
  } else {
    throw PreconditionError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                            ") is not an outer corner");
  }
  for (int j = col - 2; j >= 0; --j) {
    Column c = j < static_cast<int>(r2.size()) ? Column::pair(r1[j], r2[j]) : Column::single(r1[j]);
    ReverseStep step = reverse_column_step(c, u);
    r1[j] = step.column.top;
    if (step.column.height == 2) r2[j] = step.column.bottom;
    u = step.ejected;
  }
  if (!is_semistandard(r1, r2))
    throw InsertionUndefined("reverse bumping produced a non-semistandard tableau");
  return {TwoRowTableau::unchecked(std::move(r1), std::move(r2)), u};
}

}  // namespace crystalr
