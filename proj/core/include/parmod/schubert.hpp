#pragma once

#include <map>
#include <vector>

#include "parmod/error.hpp"
#include "parmod/partition.hpp"
#include "parmod/rational.hpp"

namespace parmod {

// Index of a Schubert cell of Gr(s, r): a strictly increasing subset
// J = {J_1 < ... < J_s} of {1, ..., r}, recording where an s-dimensional
// subspace jumps against a full flag.
struct SchubertIndex {
  int r = 0;
  int s = 0;
  std::vector<int> J;  // 1-based, strictly increasing

  static SchubertIndex make(int r, int s, std::vector<int> J);
};

// Dimension of the cell: sum of (J_k - k).
int schubert_dim(const SchubertIndex& idx);

// Partition of the corresponding Schubert class in the s x (r-s) box,
// lambda_k = r - s + k - J_k. Codimension |lambda| = s(r-s) - schubert_dim.
Partition subset_to_partition(const SchubertIndex& idx);

// Inverse of subset_to_partition; requires lambda in the s x (r-s) box.
SchubertIndex partition_to_subset(int r, int s, const Partition& lambda);

// Poincare dual inside the s x (r-s) box.
Partition poincare_dual(int r, int s, const Partition& lambda);

// Littlewood-Richardson coefficient c^nu_{lambda,mu}, counted by direct
// enumeration of LR skew tableaux of shape nu/lambda and content mu with
// incremental lattice-word pruning. Returns 0 on weight mismatch or when
// lambda is not contained in nu.
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

// All c^nu_{lambda,mu} with nu having at most max_rows rows (no width cap).
std::map<Partition, Int> schur_product(const Partition& lambda,
                                       const Partition& mu, int max_rows);

// Formal Z-combination of Schubert classes of a fixed Gr(s, r).
struct CohomologyClass {
  int r = 0;
  int s = 0;
  std::map<Partition, Int> terms;  // keys fit in the s x (r-s) box

  bool is_zero() const { return terms.empty(); }
};

CohomologyClass cohomology_unit(int r, int s);
CohomologyClass cohomology_class(int r, int s, const Partition& lambda);

// Cup product in H*(Gr(s, r)); classes outside the box are discarded.
CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b);

}  // namespace parmod
