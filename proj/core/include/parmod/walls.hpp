#pragma once

#include <optional>
#include <vector>

#include "parmod/weights.hpp"

namespace parmod {

// Stability wall in weight space: the locus where a rank-s, degree-d
// subbundle whose flags match steps J^i at each point has parabolic slope
// equal to the total slope,
//   r (d + sum_i sum_{j in J^i} a^i_j) = s |a|.
// The same hyperplane is carried by the complementary datum
// (r-s, -d, J^c); representatives with d <= 0 name the destabilizing side.
struct Wall {
  int r = 0;
  int n = 0;
  int s = 0;
  int d = 0;
  std::vector<std::vector<int>> J;  // n subsets of {1..r}, each of size s

  static Wall make(int r, int n, int s, int d,
                   std::vector<std::vector<int>> J);

  Wall complement() const;

  // Identity representative: the d < 0 side when d != 0; for d = 0 the
  // (s, J) lexicographically smaller of the two complements. Grouped
  // enumeration output never contains a wall and its complement separately.
  Wall canonical() const;

  friend bool operator==(const Wall&, const Wall&) = default;
};

bool wall_less(const Wall& a, const Wall& b);  // (s, -d, J) lexicographic

// r (d + sum_J a) - s |a|; zero exactly on the wall, positive on the side
// where the subbundle datum destabilizes.
Rat wall_residual(const Wall& W, const ParabolicWeight& w);

// Whether crossing the wall at the weight `at` actually modifies the moduli
// space. A hyperplane can be met with an empty destabilizing stratum: every
// candidate carrying the destabilizing subbundle is itself unstable on the
// near side, so nothing is exchanged. Two explicit subobjects detect this,
// with V = (s, d < 0, J) the destabilizing representative:
//   - any degree-d rank-s subsheaf of the trivial bundle spans at most
//     s + |d| constant directions; when that span is a proper subbundle its
//     slope is at least sum_J a / (s + |d|), and reaching the total slope
//     kills every candidate;
//   - for |d| < s the degree-0 summand of the balanced splitting of V is a
//     subobject occupying the deepest s - |d| flag steps of each J^i, and
//     the same slope comparison applies.
// Slope ties count as failures: a weight where an auxiliary subobject sits
// exactly at the total slope is not general on the wall. Both comparisons
// are scale-invariant, so any positive multiple of `at` gives the same
// answer; GIT walls (d = 0) always pass. Enumeration (scaling_walls,
// segment_walls, on_wall, walls_through) already applies this test at each
// crossing, so their output only contains walls that change the moduli.
bool provides_crossing(const Wall& W, const ParabolicWeight& at);

// The ray c -> c * base for c in (0, c_max], staying interior throughout.
struct ScalingPath {
  ParabolicWeight base;
  Rat c_max;

  static ScalingPath make(ParabolicWeight base, Rat c_max);
};

// Walls crossing a path at a common parameter value. Non-simple groups
// (several hyperplanes at one parameter) block classification traces.
struct WallGroup {
  Rat position;  // scaling parameter c, or segment parameter t
  std::vector<Wall> walls;

  bool simple() const { return walls.size() == 1; }
};

// All walls met by the scaling path, grouped by exact crossing parameter,
// ascending. GIT walls (d = 0) never cross a scaling ray; a ray lying
// inside one raises degenerate_base. dmax caps |d| under the derived bound
// (sets *bounded when binding).
std::vector<WallGroup> scaling_walls(const ScalingPath& path,
                                     std::optional<int> dmax = std::nullopt,
                                     bool* bounded = nullptr);

struct FirstWall {
  Rat c;
  std::vector<Wall> walls;  // minimal-c group
  // Single wall equal to (1,-1,{1}^n) or (r-1,-1,{1..r-1}^n). Expected to
  // hold on every ray; false is a diagnostic worth surfacing.
  bool extremal = false;
};

// Minimal-c crossing of the path, when one exists in range.
std::optional<FirstWall> first_wall(const ScalingPath& path,
                                    std::optional<int> dmax = std::nullopt);

// Walls strictly separating w0 and w1 on the straight segment between them,
// grouped by exact parameter t in (0,1). Includes GIT walls (d = 0).
// Endpoints on any wall raise degenerate_endpoint.
std::vector<WallGroup> segment_walls(const ParabolicWeight& w0,
                                     const ParabolicWeight& w1,
                                     std::optional<int> dmax = std::nullopt,
                                     bool* bounded = nullptr);

// Point query: some wall through w, in canonical order, or nothing.
std::optional<Wall> on_wall(const ParabolicWeight& w,
                            std::optional<int> dmax = std::nullopt);

// Every wall through w, one representative per hyperplane, sorted by
// wall_less. Empty exactly when w is general.
std::vector<Wall> walls_through(const ParabolicWeight& w,
                                std::optional<int> dmax = std::nullopt);

}  // namespace parmod
