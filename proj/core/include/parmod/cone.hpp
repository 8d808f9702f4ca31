#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parmod/crossing.hpp"
#include "parmod/walls.hpp"
#include "parmod/weights.hpp"

namespace parmod {

enum class InequalityKind { ordering, level, gw };

// One closed half-space of the effective cone in the (level, lambda)
// coordinates, stored as an integer linear form with the convention
//   c_level * level + sum_{i,j} c_lambda[i][j] * lambda^i_{j+1} >= 0.
struct ConeInequality {
  InequalityKind kind = InequalityKind::ordering;
  Int c_level;
  std::vector<std::vector<Int>> c_lambda;  // n rows of r-1 coefficients

  // ordering: lambda^point_step >= lambda^point_{step+1}; level:
  // level >= lambda^point_1. Unused otherwise.
  int point = -1;
  int step = -1;

  // gw kind: the verified single-map datum behind the inequality.
  std::optional<GwCertificate> certificate;
};

Int evaluate(const ConeInequality& q, const DivisorClass& D);

struct ConeDescription {
  int r = 0;
  int n = 0;
  std::vector<ConeInequality> inequalities;
  bool bounded_search = false;
};

// Full H-representation: n(r-1) ordering rows, n level rows, and one row
// per enumerated single-map certificate (s, d <= 0, J). Requires n > 2r.
// dmax caps -d per stratum below the derived bound (sets bounded_search).
ConeDescription effective_cone(int r, int n,
                               std::optional<int> dmax = std::nullopt);

struct ConeMembership {
  bool contained = false;
  bool interior = false;
  std::optional<std::size_t> violated;  // first failing inequality index
  std::vector<std::size_t> tight;       // indices with value exactly 0
};

ConeMembership contains(const DivisorClass& D, const ConeDescription& C);

// Projective-model descriptors. Induced weight rows are stored verbatim
// (exact rationals, trailing entries kept); factors of rank 1 carry a
// single-entry row per point.
struct InteriorModel {
  ParabolicWeight weight;
};
struct WallDivisorModel {
  // The divisor sits over a stability wall: the model is the shared
  // contraction of the two adjacent chambers, which has no single weight.
  ParabolicWeight weight;  // pauly weight, lying on `wall`
  Wall wall;
};
struct ProductModel {
  int rank_sub = 0;
  int deg_sub = 0;  // <= 0
  int rank_quot = 0;
  int deg_quot = 0;
  std::vector<std::vector<Rat>> weight_sub;   // n rows of rank_sub entries
  std::vector<std::vector<Rat>> weight_quot;  // n rows of rank_quot entries
  GwCertificate certificate;
};
struct PartialFlagModel {
  int point = 0;  // 1-based marked point whose flag degenerates
  int step = 0;   // dropped flag step
  std::vector<std::vector<Rat>> weight;  // lambda / level, n x (r-1)
};
struct DegreeShiftModel {
  int point = 0;   // 1-based point where the top weight hits the level
  int degree = 0;  // underlying degree of the model, -1
  // Row `point` has r-2 entries (its flag loses the one-dimensional step);
  // all other rows have r-1.
  std::vector<std::vector<Rat>> weight;
};

using ModelDescriptor = std::variant<InteriorModel, WallDivisorModel,
                                     ProductModel, PartialFlagModel,
                                     DegreeShiftModel>;

std::string model_kind_name(const ModelDescriptor& m);

// Maps a divisor class weakly inside the cone to the descriptor of its
// associated projective model: the chamber model off all facets, a facet
// model on exactly one facet. Classes on two or more facet hyperplanes
// raise corner_unsupported; classes outside raise outside_cone.
ModelDescriptor projective_model(const DivisorClass& D,
                                 const ConeDescription& C,
                                 std::optional<int> dmax = std::nullopt);

// Anticanonical class of the small-weight GIT quotient: level (r-1) n,
// each point carrying twice the staircase partition (2(r-1), ..., 2).
DivisorClass git_anticanonical_class(int r, int n);

// Anticanonical class of the moduli space: level 2r, same partitions. Its
// pauly weight is exactly the central weight below.
DivisorClass anticanonical_class(int r, int n);

// a_c with rows ((r-1)/r, (r-2)/r, ..., 1/r) at every point.
ParabolicWeight central_weight(int r, int n);

struct WeakFanoReport {
  int r;
  int n;
  ParabolicWeight weight;  // perturbed central weight actually traced
  DominanceTrace trace;
  bool dominant;
  bool no_blow_down_steps;   // no trace step classified blow-down
  bool all_steps_certified;  // no_blowdown_certificate holds per (s, d)
  bool no_boundary_steps;    // no trace step met the boundary condition
  int attempts;              // perturbations tried before one was general
};

// Perturbs the central weight deterministically until the scaling trace is
// defined, then reports dominance and the blow-down/boundary checks that
// certify the anticanonical class stays big along the ray.
WeakFanoReport weak_fano_report(int r, int n,
                                std::optional<int> dmax = std::nullopt);

}  // namespace parmod
