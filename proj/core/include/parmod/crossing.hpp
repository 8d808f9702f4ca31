#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parmod/walls.hpp"

namespace parmod {

// Degrees of the line-bundle summands of one side of a destabilizing
// sequence on the projective line. Generic strata are balanced: max and
// min degree differ by at most one.
struct SplittingType {
  int rank = 0;
  int degree = 0;
  std::vector<int> degrees;  // weakly decreasing, sums to degree

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

enum class SplittingSide { sub, quot };

// The unique balanced splitting: degree spread over rank entries as evenly
// as possible. Sub sides carry nonpositive degree, quotient sides
// nonnegative.
SplittingType generic_splitting(int rank, int degree, SplittingSide side);

// dim Hom(E_sub (-(n-2)), E_quot) = sum over summand pairs of
// (e - f + n - 1). Requires e - f + n - 2 >= -1 for every pair so each
// term equals the actual section count; smaller n raises n_too_small.
long long hom_dimension(const SplittingType& sub, const SplittingType& quot,
                        int n);

// Extension count against the generic stratum of W:
//   hom_dimension - n s (r-s) + sum_i schubert_dim(J^i).
long long ext1_dimension(const Wall& W, const SplittingType& sub,
                         const SplittingType& quot);

enum class CrossingKind {
  blow_up,
  blow_down,
  flip,
  boundary,
  divisorial_identity,
};

std::string crossing_kind_name(CrossingKind k);  // "blow-up", ...

// Dimension bookkeeping of a simple crossing of W. Side conventions follow
// the sign of wall_residual: minus means residual < 0.
struct CrossingReport {
  Wall wall;
  long long dim_M = 0;
  long long dim_Y = 0;
  long long ext_minus = 0;  // fiber dimension count over Y on the minus side
  long long ext_plus = 0;
  long long dim_Y_minus = 0;  // dim_Y + ext_minus - 1
  long long dim_Y_plus = 0;
  CrossingKind kind = CrossingKind::flip;
  bool generic_stratum = true;  // balanced splittings assumed throughout
};

struct ClassifyOptions {
  // Verify no second hyperplane passes through w; raises
  // perturbation_required otherwise. dmax bounds that scan.
  bool check_simple = false;
  std::optional<int> dmax;
};

// Classifies the crossing of W at a weight lying exactly on it.
CrossingReport classify(const Wall& W, const ParabolicWeight& w,
                        const ClassifyOptions& opts = {});

struct TraceStep {
  Rat c;  // scaling parameter of the crossing
  CrossingReport report;
};

struct DominanceTrace {
  int r = 0;
  int n = 0;
  bool dominant = false;
  long long rho_initial = 0;  // (r-1) n below the first wall
  long long rho_final = 0;
  std::vector<TraceStep> steps;
  bool bounded_search = false;
  bool ended_at_boundary = false;  // moduli emptied before reaching w
};

// Walks the scaling ray c w for c in (0, 1], folding the Picard number:
// +1 per blow-up, -1 per blow-down, 0 per flip or divisorial identity.
// Dominant means the fold ends at (r-1) n + 1 after at least one blow-up.
// Requires n > 2r and an interior w off every wall.
DominanceTrace is_dominant(const ParabolicWeight& w,
                           std::optional<int> dmax = std::nullopt);

// Sign certificate that no (s, d)-wall on the central ray is a blow-down:
//   n s (s - r) / (2r) + (1 + s (r - s)) / r < 0.
// The bound is degree-independent; d only fixes the orientation (d < 0).
bool no_blowdown_certificate(int r, int n, int s, int d);

// Smallest n for which the certificate holds at (r, s).
int no_blowdown_threshold(int r, int s);

}  // namespace parmod
