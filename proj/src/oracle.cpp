#include "crystalr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "crystalr/errors.hpp"

namespace crystalr {

namespace {

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(parts - 1, total - v, cur, out);
    cur.pop_back();
  }
}

std::string coords_text(const OneRowElement& b) {
  std::string s;
  for (std::size_t j = 0; j < b.coords().size(); ++j) {
    if (j) s += ',';
    s += std::to_string(b.coords()[j]);
  }
  return s;
}

}  // namespace

std::vector<OneRowElement> enumerate_b(Family family, int n, int l) {
  if (n < 2 || l < 1) throw PreconditionError("enumerate_b needs n >= 2 and l >= 1");
  std::vector<std::vector<int>> vecs;
  std::vector<int> cur;
  for (int s = l; s >= 0; s -= 2) {
    compositions(2 * n, s, cur, vecs);
    if (family == Family::A2) break;
  }
  std::sort(vecs.begin(), vecs.end());
  std::vector<OneRowElement> out;
  out.reserve(vecs.size());
  for (auto& v : vecs) out.emplace_back(family, n, l, std::move(v));
  return out;
}

FactorTable::FactorTable(Family family, int n, int l)
    : n_(n), elems_(enumerate_b(family, n, l)) {
  e_.assign(n + 1, std::vector<int>(elems_.size(), -1));
  f_.assign(n + 1, std::vector<int>(elems_.size(), -1));
  sl_.assign(n + 1, std::vector<StringLengths>(elems_.size()));
  for (int a = 0; a < size(); ++a) {
    for (int i = 0; i <= n; ++i) {
      sl_[i][a] = eps_phi(elems_[a], i);
      if (auto b = apply_e(elems_[a], i)) e_[i][a] = index_of(*b);
      if (auto b = apply_f(elems_[a], i)) f_[i][a] = index_of(*b);
    }
  }
}

int FactorTable::index_of(const OneRowElement& b) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), b);
  if (it == elems_.end() || !(*it == b)) throw PreconditionError("element not in table: " + to_string(b));
  return static_cast<int>(it - elems_.begin());
}

CrystalGraph::CrystalGraph(std::shared_ptr<const FactorTable> left,
                           std::shared_ptr<const FactorTable> right)
    : left_(std::move(left)), right_(std::move(right)) {}

int CrystalGraph::e(int i, int v) const {
  int a = left_of(v), b = right_of(v);
  if (left_->lengths(i, a).phi >= right_->lengths(i, b).eps) {
    int a2 = left_->e(i, a);
    return a2 < 0 ? -1 : vertex(a2, b);
  }
  int b2 = right_->e(i, b);
  return b2 < 0 ? -1 : vertex(a, b2);
}

int CrystalGraph::f(int i, int v) const {
  int a = left_of(v), b = right_of(v);
  if (left_->lengths(i, a).phi > right_->lengths(i, b).eps) {
    int a2 = left_->f(i, a);
    return a2 < 0 ? -1 : vertex(a2, b);
  }
  int b2 = right_->f(i, b);
  return b2 < 0 ? -1 : vertex(a, b2);
}

StringLengths CrystalGraph::lengths(int i, int v) const {
  return tensor_lengths(left_->lengths(i, left_of(v)), right_->lengths(i, right_of(v)));
}

void CrystalGraph::dump(std::ostream& out) const {
  for (int v = 0; v < size(); ++v)
    out << "v " << v << ' ' << coords_text(left_->element(left_of(v))) << " | "
        << coords_text(right_->element(right_of(v))) << '\n';
  for (int v = 0; v < size(); ++v)
    for (int i = 0; i <= rank(); ++i)
      if (int w = f(i, v); w >= 0) out << "f " << i << ' ' << v << ' ' << w << '\n';
}

RMatrixResult BruteForceRMatrix::lookup(const OneRowElement& b1, const OneRowElement& b2) const {
  int v = src_->vertex(src_->left().index_of(b1), src_->right().index_of(b2));
  int w = image_[v];
  return {dst_->left().element(dst_->left_of(w)), dst_->right().element(dst_->right_of(w)),
          energy_[v], std::nullopt};
}

std::size_t BruteForceRMatrix::energy_axiom_violations() const {
  std::size_t bad = 0;
  for (int v = 0; v < src_->size(); ++v) {
    int u = src_->e(0, v);
    if (u < 0) continue;
    const int w = image_[v];
    const bool left_src = src_->left().lengths(0, src_->left_of(v)).phi >=
                          src_->right().lengths(0, src_->right_of(v)).eps;
    const bool left_dst = dst_->left().lengths(0, dst_->left_of(w)).phi >=
                          dst_->right().lengths(0, dst_->right_of(w)).eps;
    int delta = (left_src && left_dst) ? 1 : (!left_src && !left_dst) ? -1 : 0;
    if (energy_[u] != energy_[v] + delta) ++bad;
  }
  return bad;
}

BruteForceRMatrix rmap_bruteforce(Family family, int n, int l, int k, std::size_t vertex_cap) {
  auto bl = std::make_shared<const FactorTable>(family, n, l);
  auto bk = l == k ? bl : std::make_shared<const FactorTable>(family, n, k);
  if (static_cast<std::size_t>(bl->size()) * static_cast<std::size_t>(bk->size()) > vertex_cap)
    throw PreconditionError("B_l ⊗ B_k exceeds the vertex cap");

  BruteForceRMatrix r;
  r.family_ = family;
  r.n_ = n;
  r.l_ = l;
  r.k_ = k;
  r.src_ = std::make_unique<CrystalGraph>(bl, bk);
  r.dst_ = std::make_unique<CrystalGraph>(bk, bl);
  const CrystalGraph& src = *r.src_;
  const CrystalGraph& dst = *r.dst_;

  auto head = [&](int cap) {
    std::vector<int> c(2 * n, 0);
    c[0] = cap;
    return OneRowElement(family, n, cap, std::move(c));
  };
  const int anchor = src.vertex(bl->index_of(head(l)), bk->index_of(head(k)));
  const int anchor_image = dst.vertex(bk->index_of(head(k)), bl->index_of(head(l)));

  // The anchor must be the only vertex surviving e_0^{l+k} (and, for A2, f_1^{l+k}).
  for (const CrystalGraph* g : {&src, &dst}) {
    int hits = 0, which = -1;
    for (int v = 0; v < g->size(); ++v) {
      bool ok = g->lengths(0, v).eps >= l + k;
      if (family == Family::A2) ok = ok && g->lengths(1, v).phi >= l + k;
      if (ok) {
        ++hits;
        which = v;
      }
    }
    int expect = g == &src ? anchor : anchor_image;
    if (hits != 1 || which != expect) throw ConsistencyError("anchor element is not unique");
  }

  const int N = src.size();
  r.image_.assign(N, -1);
  std::vector<int> raw(N, 0);
  std::vector<char> seen(N, 0);
  std::deque<int> queue{anchor};
  r.image_[anchor] = anchor_image;
  seen[anchor] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int w = r.image_[v];
    for (int i = 0; i <= n; ++i) {
      if (!(src.lengths(i, v) == dst.lengths(i, w)))
        throw ConsistencyError("string lengths differ across the isomorphism");
      for (int dir = 0; dir < 2; ++dir) {
        const int v2 = dir ? src.f(i, v) : src.e(i, v);
        const int w2 = dir ? dst.f(i, w) : dst.e(i, w);
        if ((v2 < 0) != (w2 < 0)) throw ConsistencyError("transport mismatch on null edge");
        if (v2 < 0) continue;
        if (seen[v2]) {
          if (r.image_[v2] != w2) throw ConsistencyError("inconsistent transport of the R matrix");
          continue;
        }
        seen[v2] = 1;
        r.image_[v2] = w2;
        int delta = 0;
        if (i == 0) {
          // delta is the change along the e_0 edge from the lower to the upper vertex.
          const int lo = dir ? v2 : v;
          const int lo_img = dir ? w2 : w;
          const bool left_src = src.left().lengths(0, src.left_of(lo)).phi >=
                                src.right().lengths(0, src.right_of(lo)).eps;
          const bool left_dst = dst.left().lengths(0, dst.left_of(lo_img)).phi >=
                                dst.right().lengths(0, dst.right_of(lo_img)).eps;
          int step = (left_src && left_dst) ? 1 : (!left_src && !left_dst) ? -1 : 0;
          delta = dir ? -step : step;
        }
        raw[v2] = raw[v] + delta;
        queue.push_back(v2);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw ConsistencyError("crystal graph is not connected");

  std::vector<int> norm_right(2 * n, 0);
  int norm_cap_index;
  if (family == Family::C1) {
    norm_right[1] = k;
  } else {
    norm_right.back() = k;
  }
  norm_cap_index = src.vertex(bl->index_of(head(l)),
                              bk->index_of(OneRowElement(family, n, k, norm_right)));
  const int shift = raw[norm_cap_index];
  r.energy_.resize(N);
  for (int v = 0; v < N; ++v) r.energy_[v] = raw[v] - shift;
  r.anchor_energy_ = r.energy_[anchor];
  return r;
}

}  // namespace crystalr
