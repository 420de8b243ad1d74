#include "crystalr/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "crystalr/errors.hpp"

namespace crystalr {

namespace {

int pos(int v) { return v > 0 ? v : 0; }

void check_index(const OneRowElement& b, int i) {
  if (i < 0 || i > b.rank())
    throw std::out_of_range("crystal index " + std::to_string(i) + " outside 0.." +
                            std::to_string(b.rank()));
}

// Offsets into the coordinate vector.
int ix(int, int i) { return i - 1; }
int ixb(int n, int i) { return 2 * n - i; }

}  // namespace

std::string to_string(Family f) { return f == Family::C1 ? "c1" : "a2"; }

Family parse_family(const std::string& s) {
  if (s == "c1" || s == "C1") return Family::C1;
  if (s == "a2" || s == "A2") return Family::A2;
  throw ParseError("unknown family '" + s + "' (expected c1 or a2)");
}

OneRowElement::OneRowElement(Family family, int n, int l, std::vector<int> coords, bool)
    : family_(family), n_(n), l_(l), c_(std::move(coords)) {}

OneRowElement::OneRowElement(Family family, int n, int l, std::vector<int> coords)
    : OneRowElement(family, n, l, std::move(coords), true) {
  if (n_ < 2) throw PreconditionError("rank n must be at least 2");
  if (l_ < 1) throw PreconditionError("capacity l must be at least 1");
  if (static_cast<int>(c_.size()) != 2 * n_)
    throw PreconditionError("expected " + std::to_string(2 * n_) + " coordinates");
  for (int v : c_)
    if (v < 0) throw PreconditionError("coordinates must be nonnegative");
  int s = coord_sum();
  if (family_ == Family::A2) {
    if (s != l_) throw PreconditionError("A2 coordinates must sum to l");
  } else if (s > l_ || (l_ - s) % 2 != 0) {
    throw PreconditionError("C1 coordinate sum must be l, l-2, l-4, ...");
  }
}

OneRowElement OneRowElement::from_xs(Family family, int n, int l, std::span<const int> x,
                                     std::span<const int> xbar) {
  if (static_cast<int>(x.size()) != n || static_cast<int>(xbar.size()) != n)
    throw PreconditionError("from_xs: expected n values per side");
  std::vector<int> c(2 * n);
  for (int i = 1; i <= n; ++i) {
    c[ix(n, i)] = x[i - 1];
    c[ixb(n, i)] = xbar[i - 1];
  }
  return OneRowElement(family, n, l, std::move(c));
}

int OneRowElement::coord_sum() const { return std::accumulate(c_.begin(), c_.end(), 0); }

int OneRowElement::x0() const {
  return family_ == Family::C1 ? (l_ - coord_sum()) / 2 : 0;
}

OneRowElement OneRowElement::with_coords(std::vector<int> coords) const {
  return OneRowElement(family_, n_, l_, std::move(coords));
}

OneRowElement OneRowElement::with_capacity(int l) const {
  return OneRowElement(family_, n_, l, c_);
}

std::strong_ordering operator<=>(const OneRowElement& a, const OneRowElement& b) {
  if (auto c = a.family_ <=> b.family_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.l_ <=> b.l_; c != 0) return c;
  return a.c_ <=> b.c_;
}

StringLengths eps_phi(const OneRowElement& b, int i) {
  check_index(b, i);
  const int n = b.rank();
  if (i == n) return {b.xbar(n), b.x(n)};
  if (i == 0) {
    if (b.family() == Family::C1) {
      int x0 = b.x0();
      return {x0 + pos(b.x(1) - b.xbar(1)), x0 + pos(b.xbar(1) - b.x(1))};
    }
    return {b.x(1) + pos(b.x(2) - b.xbar(2)), b.xbar(1) + pos(b.xbar(2) - b.x(2))};
  }
  return {b.xbar(i) + pos(b.x(i + 1) - b.xbar(i + 1)),
          b.x(i) + pos(b.xbar(i + 1) - b.x(i + 1))};
}

std::optional<OneRowElement> apply_e(const OneRowElement& b, int i) {
  if (eps_phi(b, i).eps == 0) return std::nullopt;
  const int n = b.rank();
  std::vector<int> c = b.coords();
  if (i == n) {
    c[ix(n, n)] += 1;
    c[ixb(n, n)] -= 1;
  } else if (i == 0 && b.family() == Family::C1) {
    int x1 = b.x(1), xb1 = b.xbar(1);
    if (x1 >= xb1 + 2) {
      c[ix(n, 1)] -= 2;
    } else if (x1 == xb1 + 1) {
      c[ix(n, 1)] -= 1;
      c[ixb(n, 1)] += 1;
    } else {
      c[ixb(n, 1)] += 2;
    }
  } else if (i == 0) {
    if (b.x(2) > b.xbar(2)) {
      c[ix(n, 2)] -= 1;
      c[ixb(n, 1)] += 1;
    } else {
      c[ix(n, 1)] -= 1;
      c[ixb(n, 2)] += 1;
    }
  } else if (b.x(i + 1) > b.xbar(i + 1)) {
    c[ix(n, i)] += 1;
    c[ix(n, i + 1)] -= 1;
  } else {
    c[ixb(n, i + 1)] += 1;
    c[ixb(n, i)] -= 1;
  }
  return b.with_coords(std::move(c));
}

std::optional<OneRowElement> apply_f(const OneRowElement& b, int i) {
  if (eps_phi(b, i).phi == 0) return std::nullopt;
  const int n = b.rank();
  std::vector<int> c = b.coords();
  if (i == n) {
    c[ix(n, n)] -= 1;
    c[ixb(n, n)] += 1;
  } else if (i == 0 && b.family() == Family::C1) {
    int x1 = b.x(1), xb1 = b.xbar(1);
    if (x1 >= xb1) {
      c[ix(n, 1)] += 2;
    } else if (x1 == xb1 - 1) {
      c[ix(n, 1)] += 1;
      c[ixb(n, 1)] -= 1;
    } else {
      c[ixb(n, 1)] -= 2;
    }
  } else if (i == 0) {
    if (b.x(2) >= b.xbar(2)) {
      c[ix(n, 2)] += 1;
      c[ixb(n, 1)] -= 1;
    } else {
      c[ix(n, 1)] += 1;
      c[ixb(n, 2)] -= 1;
    }
  } else if (b.x(i + 1) >= b.xbar(i + 1)) {
    c[ix(n, i)] -= 1;
    c[ix(n, i + 1)] += 1;
  } else {
    c[ixb(n, i + 1)] -= 1;
    c[ixb(n, i)] += 1;
  }
  return b.with_coords(std::move(c));
}

std::string to_string(const OneRowElement& b) {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < b.coords().size(); ++j) {
    if (j) out << ',';
    out << b.coords()[j];
  }
  out << ") in B_" << b.capacity();
  return out.str();
}

TensorElement::TensorElement(std::vector<OneRowElement> factors) : f_(std::move(factors)) {
  if (f_.empty()) throw PreconditionError("tensor product needs at least one factor");
  for (const auto& b : f_)
    if (b.family() != f_.front().family() || b.rank() != f_.front().rank())
      throw PreconditionError("tensor factors must share family and rank");
}

namespace {

StringLengths range_lengths(const std::vector<OneRowElement>& f, std::size_t lo, std::size_t hi,
                            int i) {
  StringLengths acc = eps_phi(f[lo], i);
  for (std::size_t j = lo + 1; j < hi; ++j) acc = tensor_lengths(acc, eps_phi(f[j], i));
  return acc;
}

// Index of the factor on which e_i (raise) or f_i (lower) acts, with the
// left-to-right fold over [lo, hi).
std::size_t acting_factor(const std::vector<OneRowElement>& f, std::size_t lo, std::size_t hi,
                          int i, bool raise) {
  std::vector<StringLengths> prefix(hi - lo);
  prefix[0] = eps_phi(f[lo], i);
  for (std::size_t j = lo + 1; j < hi; ++j)
    prefix[j - lo] = tensor_lengths(prefix[j - lo - 1], eps_phi(f[j], i));
  for (std::size_t j = hi - 1; j > lo; --j) {
    int phi_left = prefix[j - lo - 1].phi;
    int eps_right = eps_phi(f[j], i).eps;
    bool left = raise ? phi_left >= eps_right : phi_left > eps_right;
    if (!left) return j;
  }
  return lo;
}

std::optional<TensorElement> act_on(const TensorElement& t, std::size_t j, int i, bool raise) {
  auto moved = raise ? apply_e(t[j], i) : apply_f(t[j], i);
  if (!moved) return std::nullopt;
  std::vector<OneRowElement> f = t.factors();
  f[j] = *moved;
  return TensorElement(std::move(f));
}

std::optional<TensorElement> grouped(const TensorElement& t, int i, std::size_t split,
                                     bool raise) {
  const auto& f = t.factors();
  if (split == 0 || split >= f.size()) return act_on(t, acting_factor(f, 0, f.size(), i, raise), i, raise);
  StringLengths g1 = range_lengths(f, 0, split, i);
  StringLengths g2 = range_lengths(f, split, f.size(), i);
  bool left = raise ? g1.phi >= g2.eps : g1.phi > g2.eps;
  std::size_t j = left ? acting_factor(f, 0, split, i, raise)
                       : acting_factor(f, split, f.size(), i, raise);
  return act_on(t, j, i, raise);
}

}  // namespace

std::optional<TensorElement> tensor_e(const TensorElement& t, int i) {
  return act_on(t, acting_factor(t.factors(), 0, t.size(), i, true), i, true);
}

std::optional<TensorElement> tensor_f(const TensorElement& t, int i) {
  return act_on(t, acting_factor(t.factors(), 0, t.size(), i, false), i, false);
}

std::optional<TensorElement> tensor_e_grouped(const TensorElement& t, int i, std::size_t split) {
  return grouped(t, i, split, true);
}

std::optional<TensorElement> tensor_f_grouped(const TensorElement& t, int i, std::size_t split) {
  return grouped(t, i, split, false);
}

StringLengths tensor_eps_phi(const TensorElement& t, int i) {
  return range_lengths(t.factors(), 0, t.size(), i);
}

bool is_cn_highest(const TensorElement& t) {
  for (int i = 1; i <= t.rank(); ++i)
    if (tensor_eps_phi(t, i).eps != 0) return false;
  return true;
}

OneRowElement tau_c(const OneRowElement& b) {
  if (b.family() != Family::C1) throw PreconditionError("tau_c needs a C1 element");
  return b.with_capacity(b.capacity() + 2);
}

OneRowElement tau_a_acute(const OneRowElement& b) {
  if (b.family() != Family::A2) throw PreconditionError("tau_a_acute needs an A2 element");
  std::vector<int> c = b.coords();
  c[0] += 1;
  return OneRowElement(Family::A2, b.rank(), b.capacity() + 1, std::move(c));
}

OneRowElement tau_a_grave(const OneRowElement& b) {
  if (b.family() != Family::A2) throw PreconditionError("tau_a_grave needs an A2 element");
  std::vector<int> c = b.coords();
  c.back() += 1;
  return OneRowElement(Family::A2, b.rank(), b.capacity() + 1, std::move(c));
}

OneRowElement star(const OneRowElement& b) {
  std::vector<int> c(b.coords().rbegin(), b.coords().rend());
  return b.with_coords(std::move(c));
}

}  // namespace crystalr
