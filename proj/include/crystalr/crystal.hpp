#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crystalr/letter.hpp"

namespace crystalr {

enum class Family { C1, A2 };

std::string to_string(Family f);
Family parse_family(const std::string& s);

// An element of the one-row crystal B_l.  Coordinates are kept in the order
// (x_1, ..., x_n, xb_n, ..., xb_1).
class OneRowElement {
 public:
  OneRowElement(Family family, int n, int l, std::vector<int> coords);

  // Builds from separate x = (x_1..x_n) and xbar = (xb_1..xb_n) arrays.
  static OneRowElement from_xs(Family family, int n, int l, std::span<const int> x,
                               std::span<const int> xbar);

  Family family() const { return family_; }
  int rank() const { return n_; }
  int capacity() const { return l_; }
  const std::vector<int>& coords() const { return c_; }

  int x(int i) const { return c_[i - 1]; }
  int xbar(int i) const { return c_[2 * n_ - i]; }
  // Number of (0, 0b) pairs in the tableau; always 0 for A2.
  int x0() const;
  int coord_sum() const;

  OneRowElement with_coords(std::vector<int> coords) const;
  OneRowElement with_capacity(int l) const;

  friend bool operator==(const OneRowElement&, const OneRowElement&) = default;
  friend std::strong_ordering operator<=>(const OneRowElement& a, const OneRowElement& b);

 private:
  OneRowElement(Family family, int n, int l, std::vector<int> coords, bool);

  Family family_;
  int n_;
  int l_;
  std::vector<int> c_;
};

struct StringLengths {
  int eps = 0;
  int phi = 0;
  friend bool operator==(StringLengths, StringLengths) = default;
};

std::optional<OneRowElement> apply_e(const OneRowElement& b, int i);
std::optional<OneRowElement> apply_f(const OneRowElement& b, int i);
StringLengths eps_phi(const OneRowElement& b, int i);

// "(1,0,0,1) in B_2" style rendering.
std::string to_string(const OneRowElement& b);

class TensorElement {
 public:
  explicit TensorElement(std::vector<OneRowElement> factors);

  std::size_t size() const { return f_.size(); }
  const OneRowElement& operator[](std::size_t i) const { return f_[i]; }
  const std::vector<OneRowElement>& factors() const { return f_; }
  Family family() const { return f_.front().family(); }
  int rank() const { return f_.front().rank(); }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::vector<OneRowElement> f_;
};

// Signature-rule composition of string lengths for a (left) ⊗ (right) pair.
constexpr StringLengths tensor_lengths(StringLengths left, StringLengths right) {
  int eps = left.eps + (right.eps - left.phi > 0 ? right.eps - left.phi : 0);
  int phi = right.phi + (left.phi - right.eps > 0 ? left.phi - right.eps : 0);
  return {eps, phi};
}

std::optional<TensorElement> tensor_e(const TensorElement& t, int i);
std::optional<TensorElement> tensor_f(const TensorElement& t, int i);
StringLengths tensor_eps_phi(const TensorElement& t, int i);

// Same operators, but the factors [0, split) and [split, L) are first grouped
// and the pairwise rule applied to the two groups.  Used to check associativity.
std::optional<TensorElement> tensor_e_grouped(const TensorElement& t, int i, std::size_t split);
std::optional<TensorElement> tensor_f_grouped(const TensorElement& t, int i, std::size_t split);

// Killed by e_1 .. e_n.
bool is_cn_highest(const TensorElement& t);

OneRowElement tau_c(const OneRowElement& b);
OneRowElement tau_a_acute(const OneRowElement& b);
OneRowElement tau_a_grave(const OneRowElement& b);

// The involution x_i <-> xb_i.  It exchanges e_i and f_i.
OneRowElement star(const OneRowElement& b);

}  // namespace crystalr
