#include "crystalr/kostka.hpp"

#include <algorithm>
#include <vector>

#include "crystalr/errors.hpp"

namespace crystalr {

LaurentPolynomial q_binomial(int M, int N) {
  if (M < 0 || N < 0 || N > M) return {};
  // Pascal-type recurrence [m, j] = [m-1, j-1] + q^j [m-1, j], row by row.
  std::vector<LaurentPolynomial> row(N + 1);
  row[0] = LaurentPolynomial::constant(1);
  for (int m = 1; m <= M; ++m) {
    for (int j = std::min(m, N); j >= 1; --j) row[j] = row[j - 1] + row[j].shifted(j);
  }
  return row[N];
}

namespace {

struct FermionicSum {
  const Partition& mu;
  int rank;   // n, so a runs over 1..n-1
  int top;    // largest string length worth checking
  std::vector<int> targets;               // targets[a] = λ_{a+1} + ... + λ_n
  std::vector<std::vector<int>> m;        // m[a][i], i in 1..top
  LaurentPolynomial total;

  int cartan(int a, int b) const { return a == b ? 2 : (std::abs(a - b) == 1 ? -1 : 0); }

  int vacancy(int a, int i) const {
    int p = 0;
    if (a == 1)
      for (int mj : mu.parts()) p += std::min(i, mj);
    for (int b = 1; b < rank; ++b) {
      int c = cartan(a, b);
      if (c == 0) continue;
      int s = 0;
      for (int j = 1; j <= top; ++j) s += std::min(i, j) * m[b][j];
      p -= c * s;
    }
    return p;
  }

  void evaluate() {
    std::vector<std::vector<int>> p(rank, std::vector<int>(top + 1, 0));
    for (int a = 1; a < rank; ++a)
      for (int i = 1; i <= top; ++i) {
        p[a][i] = vacancy(a, i);
        if (p[a][i] < 0) return;
      }
    long long c2 = 0;  // twice the quadratic part
    for (int a = 1; a < rank; ++a)
      for (int b = 1; b < rank; ++b) {
        int c = cartan(a, b);
        if (c == 0) continue;
        for (int i = 1; i <= top; ++i)
          for (int j = 1; j <= top; ++j) c2 += static_cast<long long>(c) * std::min(i, j) * m[a][i] * m[b][j];
      }
    long long linear = 0;
    for (int i = 1; i <= top; ++i)
      for (int mj : mu.parts()) linear += static_cast<long long>(std::min(i, mj)) * m[1][i];
    LaurentPolynomial term = LaurentPolynomial::monomial(static_cast<int>(c2 / 2 - linear));
    for (int a = 1; a < rank; ++a)
      for (int i = 1; i <= top; ++i)
        if (m[a][i]) term = term * q_binomial(p[a][i] + m[a][i], m[a][i]);
    total += term;
  }

  // Enumerates m[a] as a partition of targets[a] (multiplicity form) with parts <= max_part.
  void fill(int a, int rest, int max_part) {
    if (a == rank) {
      evaluate();
      return;
    }
    if (rest == 0) {
      fill(a + 1, a + 1 < rank ? targets[a + 1] : 0, top);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      m[a][part] += 1;
      fill(a, rest - part, part);
      m[a][part] -= 1;
    }
  }
};

}  // namespace

LaurentPolynomial kostka_fermionic(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.size() != mu.size()) throw PreconditionError("kostka_fermionic requires |λ| = |μ|");
  if (lambda.length() > n) throw PreconditionError("λ has more than n parts");
  if (n < 2) throw PreconditionError("rank n must be at least 2");
  FermionicSum s{mu, n, std::max(1, mu.size()), {}, {}, {}};
  s.targets.assign(n, 0);
  for (int a = 1; a < n; ++a)
    for (int j = a + 1; j <= n; ++j) s.targets[a] += lambda.part(j);
  s.m.assign(n, std::vector<int>(s.top + 1, 0));
  s.fill(1, s.targets[1], s.top);
  return s.total;
}

}  // namespace crystalr
