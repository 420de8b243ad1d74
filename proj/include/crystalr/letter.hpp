#pragma once

#include <compare>
#include <string>
#include <vector>

namespace crystalr {

// A letter of the alphabet 0 < 1 < ... < n < nb < ... < 1b < 0b.
struct Letter {
  int value = 0;
  bool barred = false;

  constexpr int rank() const { return barred ? (1 << 20) - value : value; }

  friend constexpr bool operator==(Letter a, Letter b) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.rank() <=> b.rank();
  }
};

using Word = std::vector<Letter>;

constexpr Letter plain(int v) { return Letter{v, false}; }
constexpr Letter bar(int v) { return Letter{v, true}; }

// True when (a, b) has the form (v, vb) for one value v.
constexpr bool is_pair(Letter a, Letter b) {
  return !a.barred && b.barred && a.value == b.value;
}

// ASCII rendering: "3" or "3b".
std::string to_string(Letter a);
std::string to_string(const Word& w);

// Parses one token of the form DIGIT+ or DIGIT+ "b".
Letter parse_letter(const std::string& token);
// Parses a whitespace-separated token list.
Word parse_word(const std::string& text);

// Shifts every letter value up by one (0 -> 1, 0b -> 1b, ...).
Word sigma_embed(const Word& w);

}  // namespace crystalr
