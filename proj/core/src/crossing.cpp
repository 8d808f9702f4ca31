#include "parmod/crossing.hpp"

#include <algorithm>

#include "parmod/schubert.hpp"

namespace parmod {

namespace {

long long schubert_dim_sum(const Wall& W) {
  long long sum = 0;
  for (const auto& J : W.J)
    sum += schubert_dim(SchubertIndex::make(W.r, W.s, J));
  return sum;
}

}  // namespace

SplittingType generic_splitting(int rank, int degree, SplittingSide side) {
  if (rank < 1) fail(errc::precondition, "splitting needs positive rank");
  if (side == SplittingSide::sub && degree > 0)
    fail(errc::precondition, "sub-side splitting must have degree <= 0");
  if (side == SplittingSide::quot && degree < 0)
    fail(errc::precondition, "quotient-side splitting must have degree >= 0");

  // degree = rank * q + rem with 0 <= rem < rank; rem summands of q + 1.
  int q = degree / rank;
  if (degree < 0 && q * rank != degree) --q;
  int rem = degree - q * rank;

  SplittingType t;
  t.rank = rank;
  t.degree = degree;
  t.degrees.assign(rank, q);
  for (int k = 0; k < rem; ++k) ++t.degrees[k];
  return t;
}

long long hom_dimension(const SplittingType& sub, const SplittingType& quot,
                        int n) {
  long long total = 0;
  for (int f : sub.degrees)
    for (int e : quot.degrees) {
      if (e - f + n - 2 < -1)
        fail(errc::n_too_small,
             "splitting pair (" + std::to_string(f) + ", " +
                 std::to_string(e) + ") needs n >= " + std::to_string(f - e));
      total += e - f + n - 1;
    }
  return total;
}

long long ext1_dimension(const Wall& W, const SplittingType& sub,
                         const SplittingType& quot) {
  if (sub.rank != W.s || quot.rank != W.r - W.s)
    fail(errc::precondition, "splitting ranks do not match the wall");
  if (sub.degree != W.d || quot.degree != -W.d)
    fail(errc::precondition, "splitting degrees do not match the wall");
  long long s = W.s, r = W.r, n = W.n;
  return hom_dimension(sub, quot, W.n) - n * s * (r - s) +
         schubert_dim_sum(W);
}

std::string crossing_kind_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::blow_up:
      return "blow-up";
    case CrossingKind::blow_down:
      return "blow-down";
    case CrossingKind::flip:
      return "flip";
    case CrossingKind::boundary:
      return "boundary";
    case CrossingKind::divisorial_identity:
      return "divisorial-identity";
  }
  fail(errc::precondition, "unknown crossing kind");
}

CrossingReport classify(const Wall& W, const ParabolicWeight& w,
                        const ClassifyOptions& opts) {
  if (w.rank() != W.r || w.points() != W.n)
    fail(errc::precondition, "weight and wall have different (r, n)");
  if (wall_residual(W, w) != 0)
    fail(errc::not_on_wall, "weight does not lie on the wall");
  if (!provides_crossing(W, w))
    fail(errc::empty_stratum,
         "crossing stratum is empty at this weight; the moduli space does "
         "not change across the wall");
  if (opts.check_simple) {
    Wall self = W.canonical();
    for (const Wall& other : walls_through(w, opts.dmax))
      if (!(other.canonical() == self))
        fail(errc::perturbation_required,
             "weight lies on more than one wall; perturb off the others");
  }

  // Dimension formulas are stated for the d <= 0 representative; a d > 0
  // input is the complementary labeling of the same hyperplane with the
  // residual sign reversed, so the two sides swap.
  const bool swapped = W.d > 0;
  const Wall V = swapped ? W.complement() : W;
  const int r = V.r, n = V.n, s = V.s;

  SplittingType sub = generic_splitting(s, V.d, SplittingSide::sub);
  SplittingType quot = generic_splitting(r - s, -V.d, SplittingSide::quot);

  CrossingReport rep;
  rep.wall = W;
  rep.dim_M = moduli_dimension(r, n);
  rep.dim_Y = moduli_dimension(s, n) + moduli_dimension(r - s, n);
  long long ext_m = ext1_dimension(V, sub, quot);
  long long ext_p = rep.dim_M - rep.dim_Y + 1 - ext_m;
  if (swapped) std::swap(ext_m, ext_p);
  if (ext_m < 0 || ext_p < 0)
    fail(errc::precondition,
         "extension count negative; wall outside the formula regime");
  rep.ext_minus = ext_m;
  rep.ext_plus = ext_p;
  rep.dim_Y_minus = rep.dim_Y + ext_m - 1;
  rep.dim_Y_plus = rep.dim_Y + ext_p - 1;

  if (ext_m == 0 || ext_p == 0)
    rep.kind = CrossingKind::boundary;  // one side has empty moduli
  else if (ext_m == 1 && ext_p == 1)
    rep.kind = CrossingKind::divisorial_identity;
  else if (ext_m == 1)
    rep.kind = CrossingKind::blow_up;
  else if (ext_p == 1)
    rep.kind = CrossingKind::blow_down;
  else
    rep.kind = CrossingKind::flip;
  return rep;
}

DominanceTrace is_dominant(const ParabolicWeight& w,
                           std::optional<int> dmax) {
  const int r = w.rank();
  const int n = w.points();
  if (n <= 2 * r)
    fail(errc::n_too_small,
         "dominance trace needs n > 2r so the small-weight quotient has "
         "Picard number (r-1) n");
  if (!w.is_interior())
    fail(errc::invalid_weight, "dominance trace needs an interior weight");

  ScalingPath path = ScalingPath::make(w, Rat(1));
  DominanceTrace trace;
  trace.r = r;
  trace.n = n;
  trace.rho_initial = static_cast<long long>(r - 1) * n;

  std::vector<WallGroup> groups =
      scaling_walls(path, dmax, &trace.bounded_search);
  if (!groups.empty() && groups.back().position == 1)
    fail(errc::degenerate_endpoint,
         "weight lies on a wall; the Picard fold is undefined there");

  long long rho = trace.rho_initial;
  bool any_blow_up = false;
  for (const WallGroup& g : groups) {
    if (!g.simple())
      fail(errc::perturbation_required,
           "several walls cross at one parameter; perturb the weight");
    CrossingReport rep = classify(g.walls[0], w.scaled(g.position));
    trace.steps.push_back({g.position, rep});
    switch (rep.kind) {
      case CrossingKind::blow_up:
        ++rho;
        any_blow_up = true;
        break;
      case CrossingKind::blow_down:
        --rho;
        break;
      case CrossingKind::boundary:
        trace.ended_at_boundary = true;
        break;
      default:
        break;
    }
    if (trace.ended_at_boundary) break;
  }
  trace.rho_final = rho;
  trace.dominant = !trace.ended_at_boundary && any_blow_up &&
                   rho == trace.rho_initial + 1;
  return trace;
}

bool no_blowdown_certificate(int r, int n, int s, int d) {
  if (s < 1 || s >= r) fail(errc::precondition, "need 1 <= s <= r-1");
  if (d >= 0) fail(errc::precondition, "certificate applies to d < 0 walls");
  Rat lhs = Rat(static_cast<long long>(n) * s * (s - r)) / (2 * r) +
            Rat(1 + static_cast<long long>(s) * (r - s)) / r;
  return lhs < 0;
}

int no_blowdown_threshold(int r, int s) {
  if (s < 1 || s >= r) fail(errc::precondition, "need 1 <= s <= r-1");
  // n s (r-s) / (2r) > (1 + s(r-s)) / r, i.e. n > 2 + 2 / (s (r-s));
  // the smallest such integer is floor(2 + 2/k) + 1 in either parity.
  long long k = static_cast<long long>(s) * (r - s);
  return static_cast<int>(2 + 2 / k + 1);
}

}  // namespace parmod
