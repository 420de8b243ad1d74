#pragma once

#include <optional>
#include <vector>

#include "crystalr/crystal.hpp"
#include "crystalr/tableau.hpp"

namespace crystalr {

struct RMatrixTrace {
  int z = 0;
  int l_prime = 0;
  int k_prime = 0;
  int m = 0;
  TwoRowTableau insertion;  // the product tableau before reverse bumping
  BumpTrace bumps;
  std::vector<InsertRecord> inserts;  // filled only when snapshots are requested
};

struct RMatrixResult {
  OneRowElement image_left;   // b2' in B_k
  OneRowElement image_right;  // b1' in B_l
  int energy = 0;
  std::optional<RMatrixTrace> trace;
};

// Combinatorial R matrix B_l ⊗ B_k -> B_k ⊗ B_l by insertion, C1 family.
RMatrixResult rmap_c(const OneRowElement& b1, const OneRowElement& b2, bool snapshots = false);
// Same for the A2 family.
RMatrixResult rmap_a(const OneRowElement& b1, const OneRowElement& b2, bool snapshots = false);
// Dispatches on the family.
RMatrixResult rmap(const OneRowElement& b1, const OneRowElement& b2, bool snapshots = false);

enum class HighestType { TypeI, TypeII_Case1, TypeII_Case2 };

// Classifies a C_n-highest element (l >= k) of B_l ⊗ B_k.  Throws
// PreconditionError if it is not highest or fits neither type.
HighestType classify_highest(const OneRowElement& b1, const OneRowElement& b2);

// Closed-form image and energy of a C_n-highest element, l >= k, family C1.
RMatrixResult highest_image_c(const OneRowElement& b1, const OneRowElement& b2);

}  // namespace crystalr
