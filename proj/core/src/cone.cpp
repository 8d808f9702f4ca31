#include "parmod/cone.hpp"

#include <algorithm>
#include <utility>

#include "gw_enum.hpp"

namespace parmod {

namespace {

std::vector<std::vector<Int>> zero_coefficients(int r, int n) {
  return std::vector<std::vector<Int>>(n, std::vector<Int>(r - 1, Int(0)));
}

void check_same_shape(const DivisorClass& D, const ConeDescription& C) {
  if (D.r != C.r || D.n != C.n)
    fail(errc::precondition, "divisor class and cone have different (r, n)");
}

Partition doubled_staircase(int r) {
  std::vector<int> parts;
  for (int j = 1; j <= r - 1; ++j) parts.push_back(2 * (r - j));
  return Partition(std::move(parts));
}

// Rows lambda^i / level for the facet models.
std::vector<std::vector<Rat>> scaled_rows(const DivisorClass& D) {
  std::vector<std::vector<Rat>> rows(D.n);
  for (int i = 0; i < D.n; ++i) {
    rows[i].reserve(D.r - 1);
    for (int j = 0; j < D.r - 1; ++j)
      rows[i].push_back(make_rat(Int(D.lambdas[i].part(j)), D.level));
  }
  return rows;
}

}  // namespace

Int evaluate(const ConeInequality& q, const DivisorClass& D) {
  Int value = q.c_level * D.level;
  for (std::size_t i = 0; i < q.c_lambda.size(); ++i)
    for (std::size_t j = 0; j < q.c_lambda[i].size(); ++j)
      value += q.c_lambda[i][j] *
               D.lambdas[i].part(static_cast<int>(j));
  return value;
}

ConeDescription effective_cone(int r, int n, std::optional<int> dmax) {
  if (n <= 2 * r)
    fail(errc::n_too_small,
         "cone description needs n > 2r (dominant-weight regime)");

  ConeDescription C;
  C.r = r;
  C.n = n;

  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= r - 1; ++j) {
      ConeInequality q;
      q.kind = InequalityKind::ordering;
      q.c_level = 0;
      q.c_lambda = zero_coefficients(r, n);
      q.c_lambda[i][j - 1] = 1;
      if (j < r - 1) q.c_lambda[i][j] = -1;
      q.point = i + 1;
      q.step = j;
      C.inequalities.push_back(std::move(q));
    }

  for (int i = 0; i < n; ++i) {
    ConeInequality q;
    q.kind = InequalityKind::level;
    q.c_level = 1;
    q.c_lambda = zero_coefficients(r, n);
    q.c_lambda[i][0] = -1;
    q.point = i + 1;
    C.inequalities.push_back(std::move(q));
  }

  detail::enumerate_gw_certificates(
      r, n, dmax, &C.bounded_search, [&](const GwCertificate& cert) {
        ConeInequality q;
        q.kind = InequalityKind::gw;
        q.c_level = Int(-cert.d) * r;
        q.c_lambda = zero_coefficients(r, n);
        for (int i = 0; i < n; ++i) {
          for (int j = 1; j <= r - 1; ++j) q.c_lambda[i][j - 1] = cert.s;
          for (int j : cert.J[i])
            if (j <= r - 1) q.c_lambda[i][j - 1] -= r;
        }
        q.certificate = cert;
        C.inequalities.push_back(std::move(q));
        return true;
      });
  return C;
}

ConeMembership contains(const DivisorClass& D, const ConeDescription& C) {
  check_same_shape(D, C);
  ConeMembership m;
  for (std::size_t k = 0; k < C.inequalities.size(); ++k) {
    Int value = evaluate(C.inequalities[k], D);
    if (value < 0) {
      m.contained = false;
      m.interior = false;
      m.violated = k;
      m.tight.clear();
      return m;
    }
    if (value == 0) m.tight.push_back(k);
  }
  m.contained = true;
  m.interior = m.tight.empty();
  return m;
}

std::string model_kind_name(const ModelDescriptor& m) {
  struct Namer {
    std::string operator()(const InteriorModel&) { return "interior"; }
    std::string operator()(const WallDivisorModel&) { return "wall-divisor"; }
    std::string operator()(const ProductModel&) { return "product"; }
    std::string operator()(const PartialFlagModel&) { return "partial-flag"; }
    std::string operator()(const DegreeShiftModel&) { return "degree-shift"; }
  };
  return std::visit(Namer{}, m);
}

ModelDescriptor projective_model(const DivisorClass& D,
                                 const ConeDescription& C,
                                 std::optional<int> dmax) {
  check_same_shape(D, C);
  ConeMembership m = contains(D, C);
  if (!m.contained) {
    const ConeInequality& q = C.inequalities[*m.violated];
    std::string kind = q.kind == InequalityKind::ordering ? "ordering"
                       : q.kind == InequalityKind::level  ? "level"
                                                          : "single-map";
    fail(errc::outside_cone,
         "divisor class violates a " + kind + " inequality");
  }
  if (m.tight.size() > 1)
    fail(errc::corner_unsupported,
         "divisor class lies on " + std::to_string(m.tight.size()) +
             " facet hyperplanes; only facets have model descriptors");

  if (m.tight.size() == 1) {
    const ConeInequality& q = C.inequalities[m.tight.front()];
    switch (q.kind) {
      case InequalityKind::ordering:
        return PartialFlagModel{q.point, q.step, scaled_rows(D)};
      case InequalityKind::level: {
        // Row `point` drops its one-dimensional flag step; the remaining
        // weights shift by the smallest entry of that row.
        std::vector<std::vector<Rat>> rows = scaled_rows(D);
        const int k = q.point - 1;
        Rat last = rows[k][D.r - 2];
        std::vector<Rat> shifted;
        for (int j = 0; j + 1 < D.r - 1; ++j)
          shifted.push_back(rows[k][j] - last);
        rows[k] = std::move(shifted);
        return DegreeShiftModel{q.point, -1, std::move(rows)};
      }
      case InequalityKind::gw: {
        const GwCertificate& cert = *q.certificate;
        const int s = cert.s;
        ProductModel pm;
        pm.rank_sub = s;
        pm.deg_sub = cert.d;
        pm.rank_quot = D.r - s;
        pm.deg_quot = -cert.d;
        pm.certificate = cert;
        pm.weight_sub.resize(D.n);
        pm.weight_quot.resize(D.n);
        for (int i = 0; i < D.n; ++i) {
          std::vector<bool> in_J(D.r + 1, false);
          for (int j : cert.J[i]) in_J[j] = true;
          for (int j = 1; j <= D.r; ++j) {
            Rat a = j <= D.r - 1
                        ? make_rat(Int(D.lambdas[i].part(j - 1)), D.level)
                        : Rat(0);
            (in_J[j] ? pm.weight_sub[i] : pm.weight_quot[i]).push_back(a);
          }
        }
        return pm;
      }
    }
    fail(errc::precondition, "unknown inequality kind");
  }

  ParabolicWeight b = pauly_weight(D);
  if (auto W = on_wall(b, dmax)) return WallDivisorModel{b, *W};
  return InteriorModel{b};
}

DivisorClass git_anticanonical_class(int r, int n) {
  if (n <= 2 * r)
    fail(errc::n_too_small, "maximal stable locus regime needs n > 2r");
  return DivisorClass::make(
      r, n, Int(r - 1) * n,
      std::vector<Partition>(n, doubled_staircase(r)));
}

DivisorClass anticanonical_class(int r, int n) {
  if (n <= 2 * r)
    fail(errc::n_too_small, "anticanonical conversion needs n > 2r");
  return DivisorClass::make(r, n, Int(2) * r,
                            std::vector<Partition>(n, doubled_staircase(r)));
}

ParabolicWeight central_weight(int r, int n) {
  std::vector<Rat> row;
  for (int j = 1; j <= r - 1; ++j) row.push_back(make_rat(Int(r - j), Int(r)));
  return ParabolicWeight::interior(r, n,
                                   std::vector<std::vector<Rat>>(n, row));
}

WeakFanoReport weak_fano_report(int r, int n, std::optional<int> dmax) {
  if (n <= 2 * r)
    fail(errc::n_too_small, "dominance of the central ray needs n > 2r");

  const int K = n * (r - 1);
  const ParabolicWeight center = central_weight(r, n);

  for (int attempt = 0; attempt < 8; ++attempt) {
    // Geometric offsets delta^i_j = delta_max / B^(slot+1) with B = 4rK.
    // Any two linear conditions that could degenerate the trace (a GIT wall
    // containing the ray, a wall sitting exactly at the endpoint, or two
    // distinct walls meeting the ray at one parameter) differ by an integer
    // combination of the offsets with coefficients bounded by 2K(r-1) < B/2,
    // and such a combination vanishes only when every coefficient does, so
    // the perturbed ray is general. The offsets stay below delta_max, which
    // keeps the rows strictly decreasing and the weight interior.
    Rat delta_max =
        make_rat(Int(1), Int(4) * r * r * K * (Int(1) << attempt));
    const Int B = Int(4) * r * K;
    Int bpow = 1;
    std::vector<std::vector<Rat>> rows(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 1; j <= r - 1; ++j) {
        bpow *= B;
        rows[i].push_back(center.at(i, j) + delta_max / bpow);
      }
    }
    ParabolicWeight w = ParabolicWeight::interior(r, n, std::move(rows));

    try {
      DominanceTrace trace = is_dominant(w, dmax);
      bool no_blow_down = true;
      bool certified = true;
      bool no_boundary = true;
      for (const TraceStep& step : trace.steps) {
        if (step.report.kind == CrossingKind::blow_down) no_blow_down = false;
        if (step.report.kind == CrossingKind::boundary) no_boundary = false;
        const Wall& W = step.report.wall;
        if (!no_blowdown_certificate(r, n, W.s, W.d)) certified = false;
      }
      const bool dominant = trace.dominant;
      return WeakFanoReport{r,
                            n,
                            std::move(w),
                            std::move(trace),
                            dominant,
                            no_blow_down,
                            certified,
                            no_boundary,
                            attempt + 1};
    } catch (const DomainError& e) {
      bool retryable = e.kind() == errc::degenerate_base ||
                       e.kind() == errc::degenerate_endpoint ||
                       e.kind() == errc::perturbation_required;
      if (!retryable || attempt == 7) throw;
    }
  }
  fail(errc::perturbation_required,
       "no general perturbation of the central weight found");
}

}  // namespace parmod
