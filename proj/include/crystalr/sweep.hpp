#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "crystalr/crystal.hpp"

namespace crystalr {

struct SweepReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  // Description of the first failing element in enumeration order.
  std::optional<std::string> first_failure;

  bool ok() const { return failures == 0; }
  void absorb(const SweepReport& other);
};

// Insertion rule against the brute-force oracle on all of B_l ⊗ B_k
// (images, energies, and the energy axiom on every 0-edge).
SweepReport sweep_rule_vs_oracle(Family family, int n, int l, int k);
SweepReport sweep_rule_vs_oracle_serial(Family family, int n, int l, int k);

// Insertion rule against the diagram algorithm on all of B_l ⊗ B_k, family C1.
SweepReport sweep_rule_vs_diagram(int n, int l, int k);
SweepReport sweep_rule_vs_diagram_serial(int n, int l, int k);

}  // namespace crystalr
