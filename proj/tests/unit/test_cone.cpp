#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "doctest.h"
#include "parmod/cone.hpp"

using parmod::ConeDescription;
using parmod::ConeInequality;
using parmod::CrossingKind;
using parmod::DivisorClass;
using parmod::InequalityKind;
using parmod::Int;
using parmod::ParabolicWeight;
using parmod::Partition;
using parmod::Rat;
using parmod::Wall;

namespace {

parmod::errc kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const parmod::DomainError& e) {
    return e.kind();
  }
  FAIL("expected a DomainError");
  return parmod::errc::precondition;
}

DivisorClass symmetric_divisor(int r, int n, Int level, Partition lam) {
  return DivisorClass::make(r, n, std::move(level),
                            std::vector<Partition>(n, std::move(lam)));
}

}  // namespace

TEST_CASE("central weight and anticanonical classes") {
  auto c37 = parmod::central_weight(3, 7);
  CHECK_EQ(c37.points(), 7);
  CHECK_EQ(c37.at(0, 1), Rat(2, 3));
  CHECK_EQ(c37.at(0, 2), Rat(1, 3));
  CHECK_EQ(parmod::central_weight(2, 5),
           ParabolicWeight::interior(
               2, 5, std::vector<std::vector<Rat>>(5, {Rat(1, 2)})));

  auto K = parmod::anticanonical_class(3, 7);
  CHECK_EQ(K.level, Int(6));
  for (const auto& lam : K.lambdas) CHECK_EQ(lam, Partition({4, 2}));

  auto Kq = parmod::git_anticanonical_class(2, 5);
  CHECK_EQ(Kq.level, Int(5));
  for (const auto& lam : Kq.lambdas) CHECK_EQ(lam, Partition({2}));
  auto Kq4 = parmod::git_anticanonical_class(4, 9);
  CHECK_EQ(Kq4.level, Int(27));
  for (const auto& lam : Kq4.lambdas) CHECK_EQ(lam, Partition({6, 4, 2}));

  // The anticanonical weight is the central weight, at every rank.
  for (int r = 2; r <= 6; ++r) {
    int n = 2 * r + 1;
    CHECK_EQ(parmod::pauly_weight(parmod::anticanonical_class(r, n)),
             parmod::central_weight(r, n));
  }
}

TEST_CASE("effective cone H-representation") {
  ConeDescription C = parmod::effective_cone(2, 5);
  CHECK_EQ(C.r, 2);
  CHECK_EQ(C.n, 5);
  CHECK_FALSE(C.bounded_search);
  REQUIRE_EQ(C.inequalities.size(), 26);

  std::map<InequalityKind, int> kinds;
  std::map<int, int> by_degree;
  for (const ConeInequality& q : C.inequalities) {
    ++kinds[q.kind];
    if (q.kind == InequalityKind::gw) {
      REQUIRE(q.certificate.has_value());
      ++by_degree[q.certificate->d];
    } else {
      CHECK_GE(q.point, 1);
      if (q.kind == InequalityKind::ordering)
        CHECK_GE(q.step, 1);
      else
        CHECK_EQ(q.step, -1);  // level rows only name the point
    }
  }
  CHECK_EQ(kinds[InequalityKind::ordering], 5);
  CHECK_EQ(kinds[InequalityKind::level], 5);
  CHECK_EQ(kinds[InequalityKind::gw], 16);
  CHECK_EQ(by_degree[0], 5);
  CHECK_EQ(by_degree[-1], 10);
  CHECK_EQ(by_degree[-2], 1);

  // Capping the certificate degree drops the deep row and flags the cut.
  ConeDescription cut = parmod::effective_cone(2, 5, 1);
  CHECK_EQ(cut.inequalities.size(), 25);
  CHECK(cut.bounded_search);

  ConeDescription C37 = parmod::effective_cone(3, 7);
  std::map<InequalityKind, int> k37;
  std::map<int, int> d37;
  for (const ConeInequality& q : C37.inequalities) {
    ++k37[q.kind];
    if (q.kind == InequalityKind::gw) ++d37[q.certificate->d];
  }
  CHECK_EQ(C37.inequalities.size(), 1479);
  CHECK_EQ(k37[InequalityKind::ordering], 14);
  CHECK_EQ(k37[InequalityKind::level], 7);
  CHECK_EQ(k37[InequalityKind::gw], 1458);
  CHECK_EQ(d37[0], 56);
  CHECK_EQ(d37[-1], 532);
  CHECK_EQ(d37[-2], 714);
  CHECK_EQ(d37[-3], 154);
  CHECK_EQ(d37[-4], 2);

  CHECK_EQ(kind_of([] { parmod::effective_cone(2, 4); }),
           parmod::errc::n_too_small);
}

TEST_CASE("inequality evaluation and membership") {
  ConeDescription C = parmod::effective_cone(2, 5);
  DivisorClass K = parmod::anticanonical_class(2, 5);  // level 4, (2)^5

  for (const ConeInequality& q : C.inequalities) {
    Int v = parmod::evaluate(q, K);
    CHECK_GT(v, 0);
    if (q.kind == InequalityKind::level) CHECK_EQ(v, Int(2));
    if (q.kind == InequalityKind::ordering) CHECK_EQ(v, Int(2));
  }

  auto mid = parmod::contains(K, C);
  CHECK(mid.contained);
  CHECK(mid.interior);
  CHECK(mid.tight.empty());
  CHECK_FALSE(mid.violated.has_value());

  // The torus-quotient anticanonical weight (2/5)^5 lies on a wall, but the
  // destabilizing datum there is not a certificate, so the class is still in
  // the cone interior.
  auto mid_git = parmod::contains(parmod::git_anticanonical_class(2, 5), C);
  CHECK(mid_git.contained);
  CHECK(mid_git.interior);

  // (4/5)^5 saturates the unique degree -2 certificate row.
  auto facet = parmod::contains(symmetric_divisor(2, 5, Int(5), Partition({4})), C);
  CHECK(facet.contained);
  CHECK_FALSE(facet.interior);
  REQUIRE_EQ(facet.tight.size(), 1);
  const ConeInequality& tq = C.inequalities[facet.tight[0]];
  CHECK_EQ(tq.kind, InequalityKind::gw);
  CHECK_EQ(tq.certificate->s, 1);
  CHECK_EQ(tq.certificate->d, -2);

  auto out = parmod::contains(symmetric_divisor(2, 5, Int(10), Partition({9})), C);
  CHECK_FALSE(out.contained);
  REQUIRE(out.violated.has_value());
  CHECK_EQ(C.inequalities[*out.violated].kind, InequalityKind::gw);
}

TEST_CASE("membership matches weight effectiveness") {
  ConeDescription C = parmod::effective_cone(2, 5);
  for (int num = 1; num <= 11; ++num) {
    auto w = ParabolicWeight::interior(
        2, 5, std::vector<std::vector<Rat>>(5, {Rat(num, 12)}));
    bool inside = parmod::contains(parmod::pauly_divisor(w), C).contained;
    CHECK_EQ(inside, parmod::is_effective(w).effective);
  }
}

TEST_CASE("chamber and facet models") {
  ConeDescription C = parmod::effective_cone(2, 5);

  auto interior =
      parmod::projective_model(symmetric_divisor(2, 5, Int(4), Partition({3})), C);
  CHECK_EQ(parmod::model_kind_name(interior), "interior");
  auto& im = std::get<parmod::InteriorModel>(interior);
  CHECK_EQ(im.weight, ParabolicWeight::interior(
                          2, 5, std::vector<std::vector<Rat>>(5, {Rat(3, 4)})));

  auto walldiv = parmod::projective_model(parmod::git_anticanonical_class(2, 5), C);
  CHECK_EQ(parmod::model_kind_name(walldiv), "wall-divisor");
  auto& wd = std::get<parmod::WallDivisorModel>(walldiv);
  CHECK_EQ(wd.wall, Wall::make(2, 5, 1, -1,
                               std::vector<std::vector<int>>(5, {1})));
  CHECK_EQ(wd.weight.at(0, 1), Rat(2, 5));

  auto prod =
      parmod::projective_model(symmetric_divisor(2, 5, Int(5), Partition({4})), C);
  CHECK_EQ(parmod::model_kind_name(prod), "product");
  auto& pm = std::get<parmod::ProductModel>(prod);
  CHECK_EQ(pm.rank_sub, 1);
  CHECK_EQ(pm.deg_sub, -2);
  CHECK_EQ(pm.rank_quot, 1);
  CHECK_EQ(pm.deg_quot, 2);
  CHECK_EQ(pm.certificate.s, 1);
  CHECK_EQ(pm.certificate.d, -2);
  REQUIRE_EQ(pm.weight_sub.size(), 5);
  CHECK_EQ(pm.weight_sub[0], std::vector<Rat>{Rat(4, 5)});
  CHECK_EQ(pm.weight_quot[0], std::vector<Rat>{Rat(0)});

  CHECK_EQ(kind_of([&] {
             parmod::projective_model(
                 symmetric_divisor(2, 5, Int(10), Partition({9})), C);
           }),
           parmod::errc::outside_cone);
  CHECK_EQ(kind_of([&] {
             // level rows tight at two points, every slope row slack
             std::vector<Partition> lams = {Partition({5}), Partition({5}),
                                            Partition({3}), Partition({3}),
                                            Partition({3})};
             parmod::projective_model(DivisorClass::make(2, 5, Int(5), lams), C);
           }),
           parmod::errc::corner_unsupported);
}

TEST_CASE("rank-3 flag degeneration models") {
  ConeDescription C = parmod::effective_cone(3, 7);
  std::vector<Partition> lams(7, Partition({2, 1}));

  lams[0] = Partition({2, 2});
  auto flag = parmod::projective_model(DivisorClass::make(3, 7, Int(3), lams), C);
  CHECK_EQ(parmod::model_kind_name(flag), "partial-flag");
  auto& fm = std::get<parmod::PartialFlagModel>(flag);
  CHECK_EQ(fm.point, 1);
  CHECK_EQ(fm.step, 1);
  REQUIRE_EQ(fm.weight.size(), 7);
  CHECK_EQ(fm.weight[0], (std::vector<Rat>{Rat(2, 3), Rat(2, 3)}));
  CHECK_EQ(fm.weight[1], (std::vector<Rat>{Rat(2, 3), Rat(1, 3)}));

  lams[0] = Partition({3, 1});
  auto shift = parmod::projective_model(DivisorClass::make(3, 7, Int(3), lams), C);
  CHECK_EQ(parmod::model_kind_name(shift), "degree-shift");
  auto& dm = std::get<parmod::DegreeShiftModel>(shift);
  CHECK_EQ(dm.point, 1);
  CHECK_EQ(dm.degree, -1);
  REQUIRE_EQ(dm.weight.size(), 7);
  CHECK_EQ(dm.weight[0], std::vector<Rat>{Rat(2, 3)});
  CHECK_EQ(dm.weight[1], (std::vector<Rat>{Rat(2, 3), Rat(1, 3)}));
}

TEST_CASE("central ray audit") {
  auto rep25 = parmod::weak_fano_report(2, 5);
  CHECK_EQ(rep25.attempts, 1);
  CHECK(rep25.dominant);
  CHECK(rep25.no_blow_down_steps);
  CHECK(rep25.all_steps_certified);
  CHECK(rep25.no_boundary_steps);
  CHECK(rep25.weight.is_interior());
  CHECK_EQ(rep25.trace.rho_initial, 5);
  CHECK_EQ(rep25.trace.rho_final, 6);
  REQUIRE_EQ(rep25.trace.steps.size(), 1);
  CHECK_EQ(rep25.trace.steps[0].report.kind, CrossingKind::blow_up);
  // The perturbation stays within 1/100 of the central ray.
  CHECK_LT(rep25.weight.at(0, 1) - Rat(1, 2), Rat(1, 100));
  CHECK_LT(Rat(1, 2) - rep25.weight.at(0, 1), Rat(1, 100));

  auto rep37 = parmod::weak_fano_report(3, 7);
  CHECK_EQ(rep37.attempts, 1);
  CHECK(rep37.dominant);
  CHECK(rep37.no_blow_down_steps);
  CHECK(rep37.all_steps_certified);
  CHECK(rep37.no_boundary_steps);
  CHECK_EQ(rep37.trace.rho_initial, 14);
  CHECK_EQ(rep37.trace.rho_final, 15);
  REQUIRE_FALSE(rep37.trace.steps.empty());
  const auto& first = rep37.trace.steps[0].report;
  CHECK_EQ(first.wall.s, 2);
  CHECK_EQ(first.wall.d, -1);
  CHECK_EQ(first.dim_M, 13);
  CHECK_EQ(first.dim_Y, 4);
  CHECK_EQ(first.ext_minus, 1);
  CHECK_EQ(first.ext_plus, 9);
  CHECK_EQ(first.kind, CrossingKind::blow_up);
  for (const auto& step : rep37.trace.steps) {
    CHECK_NE(step.report.kind, CrossingKind::blow_down);
    CHECK_NE(step.report.kind, CrossingKind::boundary);
    CHECK_EQ(step.report.dim_Y_minus + step.report.dim_Y_plus -
                 step.report.dim_Y,
             step.report.dim_M - 1);
  }
}
