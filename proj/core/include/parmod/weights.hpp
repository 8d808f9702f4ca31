#pragma once

#include <optional>
#include <vector>

#include "parmod/error.hpp"
#include "parmod/partition.hpp"
#include "parmod/rational.hpp"

namespace parmod {

// Parabolic weight for rank r bundles with n marked points: rows
// a^i = (a^i_1 > ... > a^i_{r-1} > 0), normalized so a^i_r = 0. Interior
// means additionally a^i_1 < 1. Scaling directions (rays) may have
// a^i_1 >= 1; operations that need interiority check it explicitly.
class ParabolicWeight {
 public:
  // Fully validated interior weight.
  static ParabolicWeight interior(int r, int n,
                                  std::vector<std::vector<Rat>> rows);
  // Strictly decreasing positive rows, a^i_1 possibly >= 1. Used as the
  // base of scaling paths.
  static ParabolicWeight ray(int r, int n, std::vector<std::vector<Rat>> rows);

  int rank() const { return r_; }
  int points() const { return n_; }

  // 1-based flag step j in 1..r; a(i, r) == 0.
  const Rat& at(int i, int j) const;
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

  bool is_interior() const;

  Rat total() const;                       // |a| = sum of all entries
  Rat row_prefix(int i, int j) const;      // a^i_1 + ... + a^i_j
  Rat subset_sum(int i, const std::vector<int>& J) const;

  ParabolicWeight scaled(const Rat& c) const;  // c * a, c > 0

  friend bool operator==(const ParabolicWeight&,
                         const ParabolicWeight&) = default;

 private:
  ParabolicWeight(int r, int n, std::vector<std::vector<Rat>> rows)
      : r_(r), n_(n), rows_(std::move(rows)) {}
  int r_ = 0;
  int n_ = 0;
  std::vector<std::vector<Rat>> rows_;  // n x (r-1)
};

// Subtracts the trailing entry of each raw row (rows of length r carry an
// explicit a^i_r; rows of length r-1 mean a^i_r = 0 already). Idempotent.
ParabolicWeight normalize_weight(int r, int n,
                                 const std::vector<std::vector<Rat>>& raw);

// Parabolic slope of the full bundle: (deg + |a|) / r.
Rat slope_total(const ParabolicWeight& w, const Int& deg);

// Parabolic slope of a rank-s subbundle of degree d whose flags match steps
// J^i at each point: (d + sum_i sum_{j in J^i} a^i_j) / s.
Rat slope_sub(const ParabolicWeight& w, int s, const Int& d,
              const std::vector<std::vector<int>>& J);

// Consecutive differences d^i_j = a^i_j - a^i_{j+1} (with a^i_r = 0); the
// coordinates in which smallness is stated.
struct DifferenceData {
  int r = 0;
  int n = 0;
  std::vector<std::vector<Rat>> d;  // n x (r-1)

  Rat column_sum(int j) const;  // |d|_j = sum_i d^i_j, 1-based j
};

DifferenceData difference_data(const ParabolicWeight& w);
ParabolicWeight weight_from_difference(const DifferenceData& dd);

// Smallness in difference coordinates: for every 1 <= s <= r-1,
//   sum_{j<=s} j(r-s)|d|_j + sum_{j>s} s(r-j)|d|_j <= r.
bool is_small(const ParabolicWeight& w);

// Equivalent prefix form: r * sum_{j<=s} |a|_j - s|a| <= r for all s, where
// |a|_j = sum_i a^i_j.
bool is_small_equivalent(const ParabolicWeight& w);

// GIT semistability of a torus-fixed flag configuration (each flag is a
// coordinate permutation flag), linearized by the difference data of w:
// for every 1 <= s <= r-1 and every coordinate subspace V' of dimension s,
//   (1/s) sum_i sum_j d^i_j dim(W^i_j cap V') <= (1/r) sum_i sum_j j d^i_j.
// perms[i] lists the basis indices of flag i in order, so
// W^i_j = span(e_{perms[i][0]}, ..., e_{perms[i][j-1]}).
bool git_semistable_torus_fixed(const ParabolicWeight& w,
                                const std::vector<std::vector<int>>& perms);

// Conformal-block divisor coordinates: a level and one partition per point
// (at most r-1 parts each, normalized lambda^i_r = 0).
struct DivisorClass {
  int r = 0;
  int n = 0;
  Int level;
  std::vector<Partition> lambdas;

  static DivisorClass make(int r, int n, Int level,
                           std::vector<Partition> lambdas);
};

// Smallest ell clearing all denominators, lambda^i_j = ell * a^i_j.
DivisorClass pauly_divisor(const ParabolicWeight& w);

// Inverse map a^i_j = lambda^i_j / ell. Errors when the class sits on the
// cone boundary (level <= lambda^i_1, equal adjacent parts): those have
// degenerate weights and are handled by the facet machinery instead.
ParabolicWeight pauly_weight(const DivisorClass& D);

// dim M(r, n) = n r(r-1)/2 - r^2 + 1 for generic small weights.
long long moduli_dimension(int r, int n);

// Violation witness for effectiveness: a subbundle datum (s, d <= 0, J)
// whose single-map count certifies a supporting hyperplane.
struct GwCertificate {
  int s = 0;
  int d = 0;  // <= 0
  std::vector<std::vector<int>> J;
};

struct EffectivenessResult {
  bool effective = false;
  std::optional<GwCertificate> violation;  // set when not effective
  bool bounded_search = false;  // user dmax cut the derived degree bound
};

// Tests whether some positive multiple of the weight's divisor class is
// effective: every certified datum must satisfy
// slope_sub(w, s, d, J) <= slope_total(w, 0). dmax caps -d per stratum
// below the derived bound floor(n s (r-s) / r) when given.
EffectivenessResult is_effective(const ParabolicWeight& w,
                                 std::optional<int> dmax = std::nullopt);

}  // namespace parmod
