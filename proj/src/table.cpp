#include "crystalr/table.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "crystalr/errors.hpp"
#include "crystalr/onedsum.hpp"

namespace crystalr {

LaurentPolynomial XTable::at(const Partition& lambda, const Partition& mu) const {
  auto it = entries.find({lambda, mu});
  return it == entries.end() ? LaurentPolynomial{} : it->second;
}

int table_rank(const Partition& mu) { return std::max({2, mu.length(), mu.size() - 2}); }

XTable compute_table(int mu_size, bool parallel) {
  if (mu_size < 1) throw PreconditionError("|μ| must be positive");
  XTable t;
  t.mu_size = mu_size;
  for (int s = mu_size % 2; s <= mu_size - 2; s += 2) {
    auto ps = partitions_of(s);
    t.rows.insert(t.rows.end(), ps.begin(), ps.end());
  }
  t.columns = partitions_of(mu_size);
  for (const auto& mu : t.columns) {
    const int n = table_rank(mu);
    t.rank_used[mu] = n;
    auto all = parallel ? x_polynomials(mu, n) : x_polynomials_serial(mu, n);
    for (auto& [lam, p] : all)
      if (lam.size() < mu_size) t.entries[{lam, mu}] = p;
  }
  return t;
}

std::string render_table_text(const XTable& t) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"lambda\\mu"});
  for (const auto& mu : t.columns) cells[0].push_back(mu.render_compact());
  for (const auto& lam : t.rows) {
    std::vector<std::string> row{lam.render_compact()};
    for (const auto& mu : t.columns) {
      LaurentPolynomial p = t.at(lam, mu);
      row.push_back(p.is_zero() ? "" : p.render());
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  out << "|mu| = " << t.mu_size << '\n';
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += " | ";
      line += row[j] + std::string(width[j] - row[j].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_table_records(const XTable& t) {
  std::ostringstream out;
  for (const auto& mu : t.columns)
    for (const auto& lam : t.rows) {
      nlohmann::json j;
      j["lambda"] = lam.render();
      j["mu"] = mu.render();
      j["n"] = t.rank_used.at(mu);
      j["X"] = t.at(lam, mu).render();
      out << j.dump() << '\n';
    }
  return out.str();
}

}  // namespace crystalr
