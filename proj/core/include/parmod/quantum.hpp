#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "parmod/schubert.hpp"

namespace parmod {

// Result of reducing a partition with at most s rows modulo r-rim-hooks:
// the r-core together with the number of hooks removed and the accumulated
// sign. Reduction is empty when the core does not fit the s x (r-s) box,
// in which case the class is zero.
struct RimHookReduction {
  int sign = 1;       // +1 or -1
  int hooks = 0;      // q-degree contributed
  Partition core;     // fits in the s x (r-s) box
};

std::optional<RimHookReduction> rim_hook_reduce(const Partition& rho, int s,
                                                int r);

// Element of QH*(Gr(s, r)): Z[q]-combination of Schubert classes, keyed by
// (partition in the box, q-degree).
struct QuantumClass {
  int r = 0;
  int s = 0;
  std::map<std::pair<Partition, int>, Int> terms;

  bool is_zero() const { return terms.empty(); }
  Int coefficient(const Partition& lambda, int qdeg) const;
};

QuantumClass quantum_unit(int r, int s);
QuantumClass quantum_class(int r, int s, const Partition& lambda, int qdeg = 0);

// Small quantum product. Grading: codim + r * qdeg is additive, so iterated
// products stay finite without truncation.
QuantumClass quantum_product(const QuantumClass& a, const QuantumClass& b);

// Multiply by a single Schubert basis class, with memoized basis-pair
// products shared per (s, r). Used heavily by facet enumeration.
QuantumClass quantum_multiply_basis(const QuantumClass& a,
                                    const Partition& lambda);

// Genus-zero n-point Gromov-Witten invariant of Gr(s, r) in degree d >= 0:
// the number of degree-d maps P^1 -> Gr(s, r) sending n >= 3 fixed points
// into general translates of the given Schubert varieties. Zero unless
// sum |lambda^i| = s(r-s) + d*r. Computed as a coefficient of the iterated
// quantum product. Throws bad_arity when fewer than 3 classes are given.
Int gw_invariant(int r, int s, const std::vector<Partition>& classes, int d);

bool gw_is_one(int r, int s, const std::vector<Partition>& classes, int d);

}  // namespace parmod
