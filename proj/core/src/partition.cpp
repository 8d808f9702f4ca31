#include "parmod/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parmod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  if (!parts_.empty() && parts_.back() < 0)
    throw std::invalid_argument("partition parts must be nonnegative");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::box(int rows, int cols) {
  return Partition(std::vector<int>(rows, cols));
}

int Partition::part(int k) const {
  return k < length() ? parts_[k] : 0;
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int k = 0; k < other.length(); ++k)
    if (parts_[k] < other.parts_[k]) return false;
  return true;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_[0], 0);
  for (int row : parts_)
    for (int c = 0; c < row; ++c) ++t[c];
  return Partition(std::move(t));
}

Partition Partition::dual_in_box(int rows, int cols) const {
  if (!fits_in_box(rows, cols))
    throw std::invalid_argument("partition does not fit in the box");
  std::vector<int> d(rows);
  for (int k = 0; k < rows; ++k) d[k] = cols - part(rows - 1 - k);
  return Partition(std::move(d));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  out += ")";
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> all;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int maxPart) -> void {
    all.emplace_back(Partition(cur));
    if (row == rows) return;
    for (int p = 1; p <= maxPart; ++p) {
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, cols);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Partition> partitions_of(int m, int max_rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int rows_left, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      if (static_cast<long long>(p) * rows_left < remaining) break;
      cur.push_back(p);
      self(self, remaining - p, rows_left - 1, p);
      cur.pop_back();
    }
  };
  rec(rec, m, max_rows, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

Partition parse_partition(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("unbalanced parentheses in partition");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string piece = body.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
    size_t used = 0;
    int value = std::stoi(piece, &used);
    if (used != piece.size())
      throw std::invalid_argument("bad partition entry: " + piece);
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace parmod
