#include "crystalr/sweep.hpp"

#include <omp.h>

#include <vector>

#include "crystalr/diagram.hpp"
#include "crystalr/oracle.hpp"
#include "crystalr/rmatrix.hpp"
#include "crystalr/tableau.hpp"

namespace crystalr {

void SweepReport::absorb(const SweepReport& o) {
  checked += o.checked;
  failures += o.failures;
  if (!first_failure && o.first_failure) first_failure = o.first_failure;
}

namespace {

std::string describe(const OneRowElement& b1, const OneRowElement& b2, const std::string& what) {
  return to_string(to_tableau(b1)) + " (x) " + to_string(to_tableau(b2)) + ": " + what;
}

bool same(const RMatrixResult& a, const RMatrixResult& b) {
  return a.image_left == b.image_left && a.image_right == b.image_right && a.energy == b.energy;
}

std::string mismatch(const RMatrixResult& a, const RMatrixResult& b) {
  return "rule gives " + to_string(to_tableau(a.image_left)) + " (x) " +
         to_string(to_tableau(a.image_right)) + " H=" + std::to_string(a.energy) + ", other gives " +
         to_string(to_tableau(b.image_left)) + " (x) " + to_string(to_tableau(b.image_right)) +
         " H=" + std::to_string(b.energy);
}

// Checks one row (fixed left factor) of the sweep.
template <class Other>
SweepReport check_row(const OneRowElement& b1, const std::vector<OneRowElement>& right, Other other) {
  SweepReport r;
  for (const auto& b2 : right) {
    ++r.checked;
    try {
      RMatrixResult a = rmap(b1, b2);
      RMatrixResult b = other(b1, b2);
      if (!same(a, b)) {
        ++r.failures;
        if (!r.first_failure) r.first_failure = describe(b1, b2, mismatch(a, b));
      }
    } catch (const std::exception& e) {
      ++r.failures;
      if (!r.first_failure) r.first_failure = describe(b1, b2, e.what());
    }
  }
  return r;
}

// Rows are merged in index order so the reported first failure is deterministic.
template <class Other>
SweepReport run_rows(const std::vector<OneRowElement>& left, const std::vector<OneRowElement>& right,
                     Other other, bool parallel) {
  std::vector<SweepReport> rows(left.size());
  const int count = static_cast<int>(left.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int a = 0; a < count; ++a) rows[a] = check_row(left[a], right, other);
  SweepReport total;
  for (const auto& r : rows) total.absorb(r);
  return total;
}

SweepReport oracle_sweep(Family family, int n, int l, int k, bool parallel) {
  BruteForceRMatrix oracle = rmap_bruteforce(family, n, l, k);
  auto other = [&](const OneRowElement& b1, const OneRowElement& b2) { return oracle.lookup(b1, b2); };
  SweepReport r = run_rows(oracle.source().left().elements(), oracle.source().right().elements(),
                           other, parallel);
  std::size_t bad = oracle.energy_axiom_violations();
  if (bad) {
    r.failures += bad;
    if (!r.first_failure) r.first_failure = std::to_string(bad) + " energy-axiom violations";
  }
  const int expected_anchor = (family == Family::C1 ? 1 : 2) * std::min(l, k);
  if (oracle.anchor_energy() != expected_anchor) {
    ++r.failures;
    if (!r.first_failure) r.first_failure = "anchor energy " + std::to_string(oracle.anchor_energy());
  }
  return r;
}

SweepReport diagram_sweep(int n, int l, int k, bool parallel) {
  auto left = enumerate_b(Family::C1, n, l);
  auto right = enumerate_b(Family::C1, n, k);
  auto other = [](const OneRowElement& b1, const OneRowElement& b2) { return rmap_diagram_c(b1, b2); };
  return run_rows(left, right, other, parallel);
}

}  // namespace

SweepReport sweep_rule_vs_oracle(Family family, int n, int l, int k) {
  return oracle_sweep(family, n, l, k, true);
}
SweepReport sweep_rule_vs_oracle_serial(Family family, int n, int l, int k) {
  return oracle_sweep(family, n, l, k, false);
}
SweepReport sweep_rule_vs_diagram(int n, int l, int k) { return diagram_sweep(n, l, k, true); }
SweepReport sweep_rule_vs_diagram_serial(int n, int l, int k) { return diagram_sweep(n, l, k, false); }

}  // namespace crystalr
