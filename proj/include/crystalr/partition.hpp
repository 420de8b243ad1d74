#pragma once

#include <string>
#include <vector>

namespace crystalr {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // 1-based; zero past the end.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  // "3,1,1" (also "", "0", "-" for the empty partition).
  static Partition parse(const std::string& text);
  // "3,1,1"; the empty partition renders as "-".
  std::string render() const;
  // Compact exponent form used in tables: "31^2", "2^21^2", "-" for empty.
  std::string render_compact() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

}  // namespace crystalr
