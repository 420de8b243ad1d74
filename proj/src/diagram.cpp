#include "crystalr/diagram.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "crystalr/errors.hpp"

namespace crystalr {

namespace {

struct Symbol {
  bool plus;
  int row;
  bool marked = false;
};

// Symbols of one element in diagram order: -'s for rows 0..n, then +'s for rows n..0.
std::vector<Symbol> layout(const OneRowElement& b) {
  const int n = b.rank();
  std::vector<Symbol> out;
  out.insert(out.end(), b.x0(), Symbol{false, 0});
  for (int r = 1; r <= n; ++r) out.insert(out.end(), b.xbar(r), Symbol{false, r});
  for (int r = n; r >= 1; --r) out.insert(out.end(), b.x(r), Symbol{true, r});
  out.insert(out.end(), b.x0(), Symbol{true, 0});
  return out;
}

class Diagram {
 public:
  Diagram(const OneRowElement& b1, const OneRowElement& b2, const DiagramOptions& opt)
      : n_(b1.rank()), opt_(opt), rng_(opt.choice_seed) {
    sym_ = layout(b1);
    left_ = static_cast<int>(sym_.size());
    auto r = layout(b2);
    sym_.insert(sym_.end(), r.begin(), r.end());
  }

  void premark(int h) {
    for (int j = 0; j < h; ++j) sym_[j].marked = true;
  }

  // Processes right-region symbols until one has no partner or only `keep`
  // remain.  Returns the number of symbols left in the right region.
  int run(int keep) {
    const int total = static_cast<int>(sym_.size());
    for (ptr_ = left_; ptr_ < total - keep; ++ptr_) {
      show("turn");
      int partner = sym_[ptr_].plus ? plus_partner() : minus_partner();
      if (partner < 0) break;
      mark(partner);
    }
    show("stop");
    return total - ptr_;
  }

  std::pair<std::vector<int>, std::vector<int>> readout() const {
    // counts[sign][row]
    std::vector<int> marked(2 * (n_ + 1), 0), unmarked(2 * (n_ + 1), 0);
    for (const Symbol& s : sym_) (s.marked ? marked : unmarked)[s.plus * (n_ + 1) + s.row] += 1;
    return {marked, unmarked};
  }

 private:
  bool in_left(int j) const { return j < left_; }

  int minus_partner() {
    Symbol& a = sym_[ptr_];
    const int i = a.row;
    int c = -1;
    for (int j = 0; j < left_; ++j)
      if (sym_[j].plus && !sym_[j].marked && sym_[j].row == i) {
        c = j;
        break;
      }
    if (c >= 0) {
      bool others = false;
      for (int j = 0; j < left_; ++j)
        if (j != c && !sym_[j].marked && sym_[j].row >= i) others = true;
      if (!others) return c;
      if (i == 0) throw ConsistencyError("diagram: cannot move above row 0");
      a.row -= 1;
      sym_[c].row -= 1;
    }
    int best = -1;
    for (int j = 0; j < left_; ++j)
      if (!sym_[j].plus && !sym_[j].marked && sym_[j].row > a.row &&
          (best < 0 || sym_[j].row < sym_[best].row))
        best = j;
    if (best >= 0) return best;
    for (int j = 0; j < left_; ++j)
      if (sym_[j].plus && !sym_[j].marked && (best < 0 || sym_[j].row > sym_[best].row)) best = j;
    return best;
  }

  int plus_partner() const {
    const int i = sym_[ptr_].row;
    int best = -1;
    for (int j = 0; j < left_; ++j)
      if (sym_[j].plus && !sym_[j].marked && sym_[j].row < i &&
          (best < 0 || sym_[j].row > sym_[best].row))
        best = j;
    return best;
  }

  void mark(int b) {
    Symbol& s = sym_[b];
    if (s.plus) {
      std::vector<int> cand;
      for (int j = 0; j < ptr_; ++j)
        if (!sym_[j].plus && !sym_[j].marked && sym_[j].row == s.row) cand.push_back(j);
      if (!cand.empty()) {
        int d = cand.front();
        if (opt_.choice_seed != 0)
          d = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng_)];
        if (s.row == n_) throw ConsistencyError("diagram: cannot move below row n");
        s.row += 1;
        sym_[d].row += 1;
      }
    }
    s.marked = true;
  }

  void show(const char* label) const {
    if (!opt_.trace) return;
    std::ostream& out = *opt_.trace;
    out << "-- " << label << '\n';
    for (int r = 0; r <= n_; ++r) {
      std::string line = std::to_string(r);
      line.resize(3, ' ');
      for (int j = 0; j < static_cast<int>(sym_.size()); ++j) {
        if (j == left_ || j == ptr_) line += '|';
        const Symbol& s = sym_[j];
        if (s.row != r) {
          line += "   ";
        } else {
          char c = s.plus ? '+' : '-';
          line += s.marked ? std::string{'(', c, ')'} : std::string{' ', c, ' '};
        }
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

  int n_;
  DiagramOptions opt_;
  std::mt19937_64 rng_;
  std::vector<Symbol> sym_;
  int left_ = 0;
  int ptr_ = 0;
};

OneRowElement assemble(const std::vector<int>& counts, int n, int cap) {
  // counts[sign*(n+1)+row]
  const int zeros = counts[(n + 1)], zero_bars = counts[0];
  if (zeros != zero_bars) throw ConsistencyError("diagram: unbalanced 0 / 0b symbols");
  std::vector<int> c(2 * n, 0);
  for (int r = 1; r <= n; ++r) {
    c[r - 1] = counts[(n + 1) + r];
    c[2 * n - r] = counts[r];
  }
  return OneRowElement(Family::C1, n, cap, std::move(c));
}

// l >= k, after the common (0, 0b) pairs have been stripped.
RMatrixResult forward(const OneRowElement& b1, const OneRowElement& b2, const DiagramOptions& opt) {
  const int n = b1.rank(), l = b1.capacity(), k = b2.capacity();
  int h;
  Diagram first(b1, b2, opt);
  h = first.run(0);
  Diagram* done = &first;
  Diagram second(b1, b2, opt);
  if (h > 0) {
    second.premark(h);
    if (second.run(h) != h) throw ConsistencyError("diagram: second pass stalled early");
    done = &second;
  }
  auto [marked, unmarked] = done->readout();
  return {assemble(marked, n, k), assemble(unmarked, n, l), h, std::nullopt};
}

}  // namespace

RMatrixResult rmap_diagram_c(const OneRowElement& b1, const OneRowElement& b2,
                             const DiagramOptions& opt) {
  if (b1.family() != Family::C1 || b2.family() != Family::C1)
    throw PreconditionError("the diagram algorithm is defined for family c1 only");
  if (b1.rank() != b2.rank()) throw PreconditionError("factors have different ranks");
  const int l = b1.capacity(), k = b2.capacity();
  const int z = std::min(b1.x0(), b2.x0());
  if (l == 2 * z || k == 2 * z) return {b2, b1, 0, std::nullopt};
  const OneRowElement c1 = b1.with_capacity(l - 2 * z);
  const OneRowElement c2 = b2.with_capacity(k - 2 * z);
  if (l >= k) {
    RMatrixResult r = forward(c1, c2, opt);
    return {r.image_left.with_capacity(k), r.image_right.with_capacity(l), r.energy, std::nullopt};
  }
  // iota_{lk} = J iota_{kl} J with J(c ⊗ d) = star(d) ⊗ star(c); the energy
  // follows from H(b1 ⊗ b2) = H(b2' ⊗ b1').
  DiagramOptions quiet = opt;
  quiet.trace = nullptr;
  RMatrixResult swapped = forward(star(c2), star(c1), quiet);
  OneRowElement left = star(swapped.image_right);
  OneRowElement right = star(swapped.image_left);
  RMatrixResult back = forward(left, right, opt);
  if (!(back.image_left == c1 && back.image_right == c2))
    throw ConsistencyError("diagram: involution check failed for l < k");
  return {left.with_capacity(k), right.with_capacity(l), back.energy, std::nullopt};
}

}  // namespace crystalr
