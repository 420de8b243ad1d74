#include "crystalr/partition.hpp"

#include <sstream>

#include "crystalr/errors.hpp"

namespace crystalr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') t += c;
  if (t.empty() || t == "0" || t == "-") return {};
  std::vector<int> parts;
  std::stringstream in(t);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed partition '" + text + "'");
    parts.push_back(std::stoi(tok));
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + ": '" + text + "'");
  }
}

std::string Partition::render() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::render_compact() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    s += std::to_string(parts_[i]);
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

void build(int rest, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    build(rest - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  build(n, n, cur, out);
  return out;
}

}  // namespace crystalr
