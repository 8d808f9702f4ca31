#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "parmod/quantum.hpp"
#include "parmod/weights.hpp"

// Shared enumeration of single-map subbundle data: all (s, d <= 0, J) whose
// Schubert classes lambda(J^i) have n-point Gromov-Witten invariant exactly 1
// in degree -d. Effectiveness tests and cone facets both consume this stream.
namespace parmod::detail {

struct SubsetChoice {
  std::vector<int> J;   // 1-based flag steps, strictly increasing
  Partition lambda;     // subset_to_partition
  int codim = 0;        // |lambda|
};

// All s-element subsets of {1..r} in lexicographic order with their classes.
std::vector<SubsetChoice> subset_choices(int r, int s);

// Derived cap on -d for a stratum: sum of codimensions is at most
// n s (r-s), so -d <= (n-1) s (r-s) / r.
int derived_degree_bound(int r, int n, int s);

// Visits certificates in canonical order (s asc, -d asc, J lex). The visitor
// returns false to stop early. Sets *bounded when dmax cut below the derived
// bound for some stratum. Requires n >= 3.
void enumerate_gw_certificates(
    int r, int n, std::optional<int> dmax, bool* bounded,
    const std::function<bool(const GwCertificate&)>& visit);

}  // namespace parmod::detail
