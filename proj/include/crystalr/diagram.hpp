#pragma once

#include <cstdint>
#include <iosfwd>

#include "crystalr/crystal.hpp"
#include "crystalr/rmatrix.hpp"

namespace crystalr {

struct DiagramOptions {
  // 0 picks the leftmost candidate in the marking step; any other value picks
  // a pseudo-random candidate seeded by it.
  std::uint64_t choice_seed = 0;
  // When set, every intermediate diagram is written here.
  std::ostream* trace = nullptr;
};

// R matrix and energy of B_l ⊗ B_k (family C1) by the +/- symbol diagram.
RMatrixResult rmap_diagram_c(const OneRowElement& b1, const OneRowElement& b2,
                             const DiagramOptions& options = {});

}  // namespace crystalr
