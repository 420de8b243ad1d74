#include "crystalr/rmatrix.hpp"

#include <algorithm>

#include "crystalr/errors.hpp"

namespace crystalr {

namespace {

void check_pair(const OneRowElement& b1, const OneRowElement& b2, Family family) {
  if (b1.family() != family || b2.family() != family)
    throw PreconditionError("rmap: both factors must belong to family " + to_string(family));
  if (b1.rank() != b2.rank()) throw PreconditionError("rmap: factors have different ranks");
}

int count(const Word& w, Letter a) { return static_cast<int>(std::count(w.begin(), w.end(), a)); }

// Inserts `right` into `left`, then reverse-bumps l' cells in the order
// prescribed by the recording tableau.  Returns the remaining one-row word.
Word insert_and_unbump(const Word& left, const Word& right, RMatrixTrace& tr, bool snapshots) {
  tr.l_prime = static_cast<int>(left.size());
  tr.k_prime = static_cast<int>(right.size());
  TwoRowTableau t = insert_word(right, TwoRowTableau(left, {}), snapshots ? &tr.inserts : nullptr);
  tr.insertion = t;
  tr.m = static_cast<int>(t.row2().size());
  if (t.width() != tr.l_prime + tr.k_prime - tr.m || tr.m > tr.l_prime)
    throw ConsistencyError("insertion tableau has unexpected shape");
  for (int s = 0; s < tr.l_prime; ++s) {
    int row = s < tr.l_prime - tr.m ? 1 : 2;
    int col = row == 1 ? t.width() : static_cast<int>(t.row2().size());
    auto [next, w] = reverse_bump(t, row, col);
    t = std::move(next);
    tr.bumps.ejected.push_back(w);
    if (snapshots) tr.bumps.snapshots.push_back(t);
  }
  if (!t.row2().empty() || t.width() != tr.k_prime)
    throw ConsistencyError("reverse bumping left an unexpected tableau");
  if (!std::is_sorted(tr.bumps.ejected.begin(), tr.bumps.ejected.end()))
    throw ConsistencyError("ejected letters are not weakly increasing");
  return t.row1();
}

}  // namespace

RMatrixResult rmap_c(const OneRowElement& b1, const OneRowElement& b2, bool snapshots) {
  check_pair(b1, b2, Family::C1);
  const int n = b1.rank();
  RMatrixTrace tr;
  tr.z = std::min(b1.x0(), b2.x0());
  auto strip = [&](const Word& w) { return Word(w.begin() + tr.z, w.end() - tr.z); };
  Word rest = insert_and_unbump(strip(to_tableau(b1)), strip(to_tableau(b2)), tr, snapshots);

  auto wrap = [&](const Word& core) {
    Word w(tr.z, plain(0));
    w.insert(w.end(), core.begin(), core.end());
    w.insert(w.end(), tr.z, bar(0));
    return w;
  };
  OneRowElement left = from_word(wrap(rest), Family::C1, n, b2.capacity());
  Word ejected = tr.bumps.ejected;
  OneRowElement right = from_word(wrap(ejected), Family::C1, n, b1.capacity());
  int energy = std::min(tr.l_prime, tr.k_prime) - tr.m;
  return {left, right, energy, std::move(tr)};
}

RMatrixResult rmap_a(const OneRowElement& b1, const OneRowElement& b2, bool snapshots) {
  check_pair(b1, b2, Family::A2);
  const int n = b1.rank();
  Word t1 = to_tableau(b1), t2 = to_tableau(b2);
  RMatrixTrace tr;
  tr.z = std::min(count(t1, plain(1)), count(t2, bar(1)));
  Word left_core(t1.begin() + tr.z, t1.end());
  Word right_core(t2.begin(), t2.end() - tr.z);
  Word rest = insert_and_unbump(left_core, right_core, tr, snapshots);

  Word w2(tr.z, plain(1));
  w2.insert(w2.end(), rest.begin(), rest.end());
  Word w1 = tr.bumps.ejected;
  w1.insert(w1.end(), tr.z, bar(1));
  OneRowElement left = from_word(w2, Family::A2, n, b2.capacity());
  OneRowElement right = from_word(w1, Family::A2, n, b1.capacity());
  int energy = 2 * std::min(tr.l_prime, tr.k_prime) - tr.m;
  return {left, right, energy, std::move(tr)};
}

RMatrixResult rmap(const OneRowElement& b1, const OneRowElement& b2, bool snapshots) {
  return b1.family() == Family::C1 ? rmap_c(b1, b2, snapshots) : rmap_a(b1, b2, snapshots);
}

namespace {

bool interior_zero(const OneRowElement& b, bool keep_x2) {
  const int n = b.rank();
  for (int i = 2; i <= n; ++i) {
    if (b.xbar(i) != 0) return false;
    if (b.x(i) != 0 && !(keep_x2 && i == 2)) return false;
  }
  return true;
}

}  // namespace

HighestType classify_highest(const OneRowElement& b1, const OneRowElement& b2) {
  check_pair(b1, b2, Family::C1);
  if (b1.capacity() < b2.capacity()) throw PreconditionError("highest_image_c requires l >= k");
  if (!is_cn_highest(TensorElement({b1, b2})))
    throw PreconditionError("element is not C_n-highest");
  const int l = b1.capacity(), k = b2.capacity();
  const bool shape = b1.coord_sum() == b1.x(1) && interior_zero(b2, true);
  if (!shape) throw PreconditionError("highest element of unexpected shape");
  const int y0 = b1.x0();
  if (y0 == 0) return HighestType::TypeI;
  const int x1 = b2.x(1), xb1 = b2.xbar(1);
  if (b2.x0() != 0 || l - k < 2 * y0 - x1)
    throw PreconditionError("element satisfies neither type I nor type II hypotheses");
  if (l - k > y0 && y0 >= x1 - xb1) return HighestType::TypeII_Case1;
  return HighestType::TypeII_Case2;
}

RMatrixResult highest_image_c(const OneRowElement& b1, const OneRowElement& b2) {
  const HighestType type = classify_highest(b1, b2);
  const int n = b1.rank(), l = b1.capacity(), k = b2.capacity();
  const int x1 = b2.x(1), x2 = b2.x(2), xb1 = b2.xbar(1);
  auto head = [&](int first, int cap) {
    std::vector<int> c(2 * n, 0);
    c[0] = first;
    return OneRowElement(Family::C1, n, cap, std::move(c));
  };
  auto tail = [&](int a1, int a2, int ab1, int cap) {
    std::vector<int> c(2 * n, 0);
    c[0] = a1;
    c[1] = a2;
    c.back() = ab1;
    return OneRowElement(Family::C1, n, cap, std::move(c));
  };
  if (type == HighestType::TypeI) {
    const int y = std::min(l - k, std::max(xb1 - x1, 0));
    const int x0 = b2.x0();
    return {head(k, k), tail(x1 + l - k - y, x2, xb1 - y, l), x0 + std::max(x1 - xb1, 0),
            std::nullopt};
  }
  const int y0 = b1.x0();
  if (type == HighestType::TypeII_Case1) {
    const int z = std::min(y0 + xb1 - x1, l - k - y0);
    return {head(k, k), tail(x1 + l - k - y0 - z, x2, xb1 + y0 - z, l), 0, std::nullopt};
  }
  const int w = std::min(l - k, std::max(2 * y0 - x1 + xb1, 0));
  return {head(k - 2 * y0 + 2 * w, k), tail(x1 + l - k - w, x2, xb1 + w, l),
          std::max(y0 - l + k, x1 - xb1 - y0), std::nullopt};
}

}  // namespace crystalr
