#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crystalr/laurent.hpp"
#include "crystalr/partition.hpp"

namespace crystalr {

// All X_{λ,μ}(t) with |μ| fixed and |λ| = |μ| - 2, |μ| - 4, ...
struct XTable {
  int mu_size = 0;
  std::vector<Partition> rows;     // λ
  std::vector<Partition> columns;  // μ
  std::map<std::pair<Partition, Partition>, LaurentPolynomial> entries;
  std::map<Partition, int> rank_used;  // per μ

  LaurentPolynomial at(const Partition& lambda, const Partition& mu) const;
};

// Rank used for column μ: max(2, length(μ), |μ| - 2).  X is n-independent
// once n >= length(μ), and this also covers every row λ.
int table_rank(const Partition& mu);

XTable compute_table(int mu_size, bool parallel = true);

// Aligned plain text: a header line "|mu| = N", then a "lambda\mu" header
// row and one row per λ; zero entries are left blank.
std::string render_table_text(const XTable& t);
// One JSON object per line: {"lambda":..,"mu":..,"n":..,"X":..}.
std::string render_table_records(const XTable& t);

}  // namespace crystalr
