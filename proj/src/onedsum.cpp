#include "crystalr/onedsum.hpp"

#include <omp.h>

#include <memory>
#include <unordered_map>
#include <vector>

#include "crystalr/errors.hpp"
#include "crystalr/oracle.hpp"
#include "crystalr/rmatrix.hpp"
#include "crystalr/tableau.hpp"

namespace crystalr {

namespace {

using Result = std::map<Partition, LaurentPolynomial>;

struct Setup {
  Partition mu;
  int n;
  std::map<int, std::shared_ptr<const FactorTable>> tables;
  std::vector<const FactorTable*> factor;  // per tensor position

  Setup(const Partition& m, int rank) : mu(m), n(rank) {
    if (n < 2) throw PreconditionError("rank n must be at least 2");
    if (mu.length() == 0) throw PreconditionError("μ must be nonempty");
    for (int p : mu.parts()) {
      auto& t = tables[p];
      if (!t) t = std::make_shared<const FactorTable>(Family::C1, n, p);
      factor.push_back(t.get());
    }
  }
};

// Depth-first search over highest elements, with its own R-matrix cache.
class Search {
 public:
  explicit Search(const Setup& s) : s_(s), L_(s.mu.length()), chosen_(L_), prefix_(L_) {}

  void run_from(int first, Result& out) {
    out_ = &out;
    const FactorTable& t = *s_.factor[0];
    std::vector<StringLengths> lengths(s_.n + 1);
    for (int i = 1; i <= s_.n; ++i) {
      lengths[i] = t.lengths(i, first);
      if (lengths[i].eps != 0) return;
    }
    chosen_[0] = first;
    prefix_[0] = lengths;
    descend(1);
  }

 private:
  void descend(int depth) {
    if (depth == L_) {
      leaf();
      return;
    }
    const FactorTable& t = *s_.factor[depth];
    const auto& prev = prefix_[depth - 1];
    auto& cur = prefix_[depth];
    cur.resize(s_.n + 1);
    for (int a = 0; a < t.size(); ++a) {
      bool ok = true;
      for (int i = 1; i <= s_.n && ok; ++i) {
        StringLengths sl = t.lengths(i, a);
        if (sl.eps > prev[i].phi) ok = false;
        else cur[i] = tensor_lengths(prev[i], sl);
      }
      if (!ok) continue;
      chosen_[depth] = a;
      descend(depth + 1);
    }
  }

  std::pair<int, int> rmat(int i, int bi, int j, int c) {
    // (image index in B_{μ_j}, energy) of b_i ⊗ c with b_i in B_{μ_i}, c in B_{μ_j}.
    const FactorTable& ti = *s_.factor[i];
    const FactorTable& tj = *s_.factor[j];
    std::uint64_t key = (static_cast<std::uint64_t>(s_.mu.part(i + 1)) << 56) ^
                        (static_cast<std::uint64_t>(s_.mu.part(j + 1)) << 48) ^
                        (static_cast<std::uint64_t>(bi) << 24) ^ static_cast<std::uint64_t>(c);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    RMatrixResult r = rmap_c(ti.element(bi), tj.element(c));
    std::pair<int, int> v{tj.index_of(r.image_left), r.energy};
    cache_.emplace(key, v);
    return v;
  }

  void leaf() {
    const auto& last = prefix_[L_ - 1];
    std::vector<int> lam(s_.n + 2, 0);
    for (int i = s_.n; i >= 1; --i) lam[i] = lam[i + 1] + last[i].phi;
    std::vector<int> parts;
    for (int i = 1; i <= s_.n && lam[i] > 0; ++i) parts.push_back(lam[i]);

    int energy = 0;
    for (int j = 0; j < L_; ++j) {
      int c = chosen_[j];
      for (int i = j - 1; i >= 0; --i) {
        auto [img, h] = rmat(i, chosen_[i], j, c);
        energy += h;
        c = img;
      }
      const OneRowElement& b = s_.factor[j]->element(c);
      if (b.coord_sum() != b.x(1))
        throw ConsistencyError("propagated factor is not of the form 0..0 1..1 0b..0b");
      energy -= b.x0();
    }
    (*out_)[Partition(std::move(parts))].add_term(energy, 1);
  }

  const Setup& s_;
  int L_;
  std::vector<int> chosen_;
  std::vector<std::vector<StringLengths>> prefix_;
  std::unordered_map<std::uint64_t, std::pair<int, int>> cache_;
  Result* out_ = nullptr;
};

void merge(Result& into, const Result& from) {
  for (const auto& [lam, p] : from) into[lam] += p;
}

void prune(Result& r) {
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
}

void check_request(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.size() > mu.size()) throw PreconditionError("|λ| exceeds |μ|");
  if ((mu.size() - lambda.size()) % 2 != 0) throw PreconditionError("|μ| - |λ| must be even");
  if (lambda.length() > n) throw PreconditionError("λ has more than n parts");
}

}  // namespace

Result x_polynomials_serial(const Partition& mu, int n) {
  Setup s(mu, n);
  Result out;
  Search search(s);
  for (int a = 0; a < s.factor[0]->size(); ++a) search.run_from(a, out);
  prune(out);
  return out;
}

Result x_polynomials(const Partition& mu, int n) {
  Setup s(mu, n);
  Result out;
  const int top = s.factor[0]->size();
#pragma omp parallel
  {
    Result local;
    Search search(s);
#pragma omp for schedule(dynamic)
    for (int a = 0; a < top; ++a) search.run_from(a, local);
#pragma omp critical
    merge(out, local);
  }
  prune(out);
  return out;
}

LaurentPolynomial x_polynomial(const Partition& lambda, const Partition& mu, int n) {
  check_request(lambda, mu, n);
  Result r = x_polynomials(mu, n);
  auto it = r.find(lambda);
  return it == r.end() ? LaurentPolynomial{} : it->second;
}

LaurentPolynomial x_polynomial_serial(const Partition& lambda, const Partition& mu, int n) {
  check_request(lambda, mu, n);
  Result r = x_polynomials_serial(mu, n);
  auto it = r.find(lambda);
  return it == r.end() ? LaurentPolynomial{} : it->second;
}

bool highest_weight_filter(const TensorElement& t, const Partition& lambda) {
  if (t.family() != Family::C1) throw PreconditionError("highest_weight_filter needs family c1");
  const int n = t.rank();
  if (lambda.length() > n) return false;
  if (!is_cn_highest(t)) return false;
  for (int i = 1; i <= n; ++i)
    if (tensor_eps_phi(t, i).phi != lambda.part(i) - lambda.part(i + 1)) return false;
  return true;
}

std::optional<bool> hwcond_check(const TensorElement& t, const Partition& lambda) {
  if (lambda.length() > 2) return std::nullopt;
  std::vector<Word> words;
  for (const auto& b : t.factors()) {
    Word w = to_tableau(b);
    for (Letter a : w)
      if (a.barred || a.value == 0) return std::nullopt;
    words.push_back(std::move(w));
  }
  TwoRowTableau p(words[0], {});
  try {
    for (std::size_t j = 1; j < words.size(); ++j) p = insert_word(words[j], p);
  } catch (const InsertionUndefined&) {
    return false;
  }
  TwoRowTableau target(Word(lambda.part(1), plain(1)), Word(lambda.part(2), plain(2)));
  return p == target;
}

}  // namespace crystalr
