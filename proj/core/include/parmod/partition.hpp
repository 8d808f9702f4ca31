#pragma once

#include <compare>
#include <string>
#include <vector>

namespace parmod {

// Integer partition, weakly decreasing, stored without trailing zeros so
// (1,0) and (1) compare equal. Parts are small in this library (bounded by
// Grassmannian boxes) but counts of tableaux are kept in Int by callers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition box(int rows, int cols);  // rectangle cols^rows

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int k) const;  // 0-based, 0 beyond the last row
  int weight() const;     // sum of parts

  bool fits_in_box(int rows, int cols) const;
  bool contains(const Partition& other) const;

  // Conjugate (transpose) partition.
  Partition transpose() const;

  // Complement inside a rows x cols box; requires fits_in_box.
  Partition dual_in_box(int rows, int cols) const;

  std::string to_string() const;  // "(2,1)" / "()"

  friend auto operator<=>(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
};

// All partitions fitting in a rows x cols box, lexicographically increasing.
std::vector<Partition> partitions_in_box(int rows, int cols);

// All partitions of m with at most max_rows rows, each part at most max_part.
std::vector<Partition> partitions_of(int m, int max_rows, int max_part);

// Parses "(2,1)", "2,1" or "()"; throws std::invalid_argument on bad syntax.
Partition parse_partition(const std::string& text);

}  // namespace parmod
