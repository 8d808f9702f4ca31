#include "parmod/schubert.hpp"

#include <algorithm>

namespace parmod {

SchubertIndex SchubertIndex::make(int r, int s, std::vector<int> J) {
  if (r < 1 || s < 0 || s > r)
    fail(errc::precondition, "SchubertIndex needs 0 <= s <= r");
  if (static_cast<int>(J.size()) != s)
    fail(errc::invalid_subset, "SchubertIndex needs |J| = s");
  for (int k = 0; k < s; ++k) {
    if (J[k] < 1 || J[k] > r)
      fail(errc::invalid_subset, "SchubertIndex entries must lie in 1..r");
    if (k > 0 && J[k] <= J[k - 1])
      fail(errc::invalid_subset, "SchubertIndex must be strictly increasing");
  }
  return SchubertIndex{r, s, std::move(J)};
}

int schubert_dim(const SchubertIndex& idx) {
  int dim = 0;
  for (int k = 0; k < idx.s; ++k) dim += idx.J[k] - (k + 1);
  return dim;
}

Partition subset_to_partition(const SchubertIndex& idx) {
  std::vector<int> parts(idx.s);
  for (int k = 0; k < idx.s; ++k)
    parts[k] = idx.r - idx.s + (k + 1) - idx.J[k];
  return Partition(std::move(parts));
}

SchubertIndex partition_to_subset(int r, int s, const Partition& lambda) {
  if (!lambda.fits_in_box(s, r - s))
    fail(errc::box_mismatch, "partition does not fit in the " +
                                 std::to_string(s) + "x" +
                                 std::to_string(r - s) + " box");
  std::vector<int> J(s);
  for (int k = 0; k < s; ++k) J[k] = r - s + (k + 1) - lambda.part(k);
  return SchubertIndex::make(r, s, std::move(J));
}

Partition poincare_dual(int r, int s, const Partition& lambda) {
  return lambda.dual_in_box(s, r - s);
}

namespace {

// Counts LR skew tableaux of shape nu/lambda with content mu. Cells are
// filled in reverse reading order (rows top to bottom, right to left within
// a row) so the lattice-word condition can be enforced per placement.
struct LrCounter {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  int rows;
  int values;
  std::vector<std::vector<int>> grid;  // filled entries, 0 = empty
  std::vector<int> count;              // occurrences of each value so far
  Int total = 0;

  LrCounter(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), mu(m), nu(n), rows(n.length()), values(m.length()) {
    grid.resize(rows);
    for (int i = 0; i < rows; ++i) grid[i].assign(nu.part(i), 0);
    count.assign(values + 1, 0);
  }

  void run() { fill(0, nu.part(0) - 1); }

  void fill(int row, int col) {
    if (row == rows) {
      total += 1;
      return;
    }
    if (col < lambda.part(row)) {
      fill(row + 1, row + 1 < rows ? nu.part(row + 1) - 1 : -1);
      return;
    }
    int lo = 1, hi = values;
    // Weak increase along the row: bounded above by the right neighbor.
    if (col + 1 < nu.part(row) && grid[row][col + 1] != 0)
      hi = std::min(hi, grid[row][col + 1]);
    // Strict increase down the column: bounded below by the cell above
    // (only when that cell is part of the skew shape).
    if (row > 0 && col < nu.part(row - 1) && col >= lambda.part(row - 1))
      lo = std::max(lo, grid[row - 1][col] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu.part(v - 1)) continue;          // content cap
      if (v > 1 && count[v] >= count[v - 1]) continue;   // lattice word
      grid[row][col] = v;
      ++count[v];
      if (col > lambda.part(row))
        fill(row, col - 1);
      else
        fill(row + 1, row + 1 < rows ? nu.part(row + 1) - 1 : -1);
      --count[v];
      grid[row][col] = 0;
    }
  }
};

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (lambda.weight() + mu.weight() != nu.weight()) return 0;
  if (!nu.contains(lambda)) return 0;
  if (mu.length() == 0) return 1;  // nu == lambda at this point
  LrCounter counter(lambda, mu, nu);
  counter.run();
  return counter.total;
}

std::map<Partition, Int> schur_product(const Partition& lambda,
                                       const Partition& mu, int max_rows) {
  std::map<Partition, Int> out;
  const int total = lambda.weight() + mu.weight();
  const int max_part = lambda.part(0) + mu.part(0);
  for (const Partition& nu : partitions_of(total, max_rows, max_part)) {
    if (!nu.contains(lambda) || !nu.contains(mu)) continue;
    Int c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(nu, std::move(c));
  }
  return out;
}

CohomologyClass cohomology_unit(int r, int s) {
  CohomologyClass c{r, s, {}};
  c.terms.emplace(Partition{}, Int(1));
  return c;
}

CohomologyClass cohomology_class(int r, int s, const Partition& lambda) {
  if (!lambda.fits_in_box(s, r - s))
    fail(errc::box_mismatch, "class " + lambda.to_string() +
                                 " does not fit in Gr(" + std::to_string(s) +
                                 "," + std::to_string(r) + ")");
  CohomologyClass c{r, s, {}};
  c.terms.emplace(lambda, Int(1));
  return c;
}

CohomologyClass cup_product(const CohomologyClass& a,
                            const CohomologyClass& b) {
  if (a.r != b.r || a.s != b.s)
    fail(errc::box_mismatch, "cup product of classes from different Grassmannians");
  CohomologyClass out{a.r, a.s, {}};
  const int cols = a.r - a.s;
  for (const auto& [la, ca] : a.terms) {
    for (const auto& [mu, cb] : b.terms) {
      for (auto& [nu, c] : schur_product(la, mu, a.s)) {
        if (!nu.fits_in_box(a.s, cols)) continue;  // outside the box: zero
        Int add = c * ca * cb;
        auto it = out.terms.find(nu);
        if (it == out.terms.end())
          out.terms.emplace(nu, std::move(add));
        else {
          it->second += add;
          if (it->second == 0) out.terms.erase(it);
        }
      }
    }
  }
  return out;
}

}  // namespace parmod
