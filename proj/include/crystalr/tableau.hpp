#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystalr/crystal.hpp"
#include "crystalr/letter.hpp"

namespace crystalr {

// Tableau word of b: 0^x0 1^x1 ... n^xn nb^xbn ... 1b^xb1 0b^x0 (no 0/0b for A2).
Word to_tableau(const OneRowElement& b);
// Inverse of to_tableau; the capacity is the word length.
OneRowElement from_word(const Word& w, Family family, int n);
OneRowElement from_word(const Word& w, Family family, int n, int l);

// A column of height 0, 1 or 2.
struct Column {
  int height = 0;
  Letter top{};
  Letter bottom{};

  static Column empty() { return {}; }
  static Column single(Letter a) { return {1, a, {}}; }
  static Column pair(Letter a, Letter c) { return {2, a, c}; }
  friend bool operator==(const Column&, const Column&) = default;
};

std::string to_string(const Column& c);

enum class InsertCase { k1a, k2a, k1b, k2b, k3b, k4b, k5b };
enum class ReverseCase { k1c, k2c, k3c, k4c, k5c };

std::string to_string(InsertCase c);
std::string to_string(ReverseCase c);

struct ColumnStep {
  Column column;
  std::optional<Letter> bumped;
  InsertCase which;
};

struct ReverseStep {
  Column column;
  Letter ejected;
  ReverseCase which;
};

// One column of the insertion algorithm.  Throws InsertionUndefined when the
// configuration matches none of the cases.
ColumnStep column_step(const Column& col, Letter a);
// Pushes `incoming` into `col` from the right and ejects a letter on the left.
ReverseStep reverse_column_step(const Column& col, Letter incoming);

// Semistandard tableau with at most two rows.
class TwoRowTableau {
 public:
  TwoRowTableau() = default;
  TwoRowTableau(Word row1, Word row2);

  const Word& row1() const { return r1_; }
  const Word& row2() const { return r2_; }
  int width() const { return static_cast<int>(r1_.size()); }
  int size() const { return static_cast<int>(r1_.size() + r2_.size()); }
  bool empty() const { return r1_.empty(); }

  Column column(int j) const;

  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;

  // Skips validation; callers guarantee the tableau conditions.
  static TwoRowTableau unchecked(Word row1, Word row2);

 private:
  Word r1_, r2_;
};

bool is_semistandard(const Word& row1, const Word& row2);

// Japanese reading word: columns right to left, each column top to bottom.
Word reading_word(const TwoRowTableau& t);

// Two text lines with barred letters as "Nb".
std::string render(const TwoRowTableau& t);

struct InsertRecord {
  Letter inserted;
  std::vector<Letter> bumped;
  TwoRowTableau after;
};

TwoRowTableau insert_letter(const TwoRowTableau& t, Letter a,
                            std::vector<Letter>* bumped = nullptr);
// Inserts the letters of a one-row word from its rightmost letter to its leftmost.
TwoRowTableau insert_word(const Word& source, const TwoRowTableau& target,
                          std::vector<InsertRecord>* trace = nullptr);

// row is 1 or 2, col is 1-based.  The cell must be an outer corner.
std::pair<TwoRowTableau, Letter> reverse_bump(const TwoRowTableau& t, int row, int col);

struct BumpTrace {
  std::vector<Letter> ejected;
  std::vector<TwoRowTableau> snapshots;
};

}  // namespace crystalr
