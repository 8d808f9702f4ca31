#include <functional>
#include <vector>

#include "doctest.h"
#include "parmod/io.hpp"

using nlohmann::json;
using parmod::DivisorClass;
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

}  // namespace

TEST_CASE("scalar encodings") {
  CHECK_EQ(parmod::rational_json(Rat(-3, 7)), json("-3/7"));
  CHECK_EQ(parmod::rational_json(Rat(4)), json("4"));
  CHECK_EQ(parmod::rational_from_json(json("22/7")), Rat(22, 7));
  CHECK_EQ(parmod::rational_from_json(json("-5")), Rat(-5));
  CHECK_EQ(parmod::int_json(Int("123456789012345678901234567890")),
           json("123456789012345678901234567890"));
  CHECK_EQ(parmod::int_from_json(json("-42")), Int(-42));
  CHECK_EQ(parmod::int_from_json(json(17)), Int(17));

  // Exactness guard: floats are rejected, not rounded.
  CHECK_EQ(kind_of([] { parmod::rational_from_json(json(0.5)); }),
           parmod::errc::parse);
  CHECK_EQ(kind_of([] { parmod::int_from_json(json(1.5)); }),
           parmod::errc::parse);
  CHECK_EQ(kind_of([] { parmod::rational_from_json(json("1/0")); }),
           parmod::errc::parse);
  CHECK_EQ(kind_of([] { parmod::rational_from_json(json("abc")); }),
           parmod::errc::parse);
}

TEST_CASE("weight record round trip") {
  auto w = ParabolicWeight::interior(
      3, 2, {{Rat(1, 2), Rat(1, 3)}, {Rat(2, 5), Rat(1, 5)}});
  json j = parmod::weight_to_json(w);
  CHECK_EQ(j["schema"], "parmod/weight/1");
  CHECK_EQ(j["rank"], 3);
  CHECK_EQ(j["points"], 2);
  CHECK_EQ(j["rows"][0][0], "1/2");
  CHECK_EQ(parmod::weight_from_json(j), w);

  // Rows of length r are normalized on input.
  json raw = {{"schema", "parmod/weight/1"},
              {"rank", 3},
              {"points", 2},
              {"rows", {{"3/4", "7/12", "1/4"}, {"2/5", "1/5"}}}};
  auto parsed = parmod::weight_from_json(raw);
  CHECK_EQ(parsed.at(0, 1), Rat(1, 2));
  CHECK_EQ(parsed.at(0, 2), Rat(1, 3));

  json bad = j;
  bad["rows"][0][0] = 0.5;
  CHECK_EQ(kind_of([&] { parmod::weight_from_json(bad); }),
           parmod::errc::parse);
  json wrong = j;
  wrong["schema"] = "parmod/weight/2";
  CHECK_EQ(kind_of([&] { parmod::weight_from_json(wrong); }),
           parmod::errc::parse);
}

TEST_CASE("divisor record round trip") {
  auto D = DivisorClass::make(
      3, 2, Int(7), {Partition({4, 2}), Partition({3})});
  json j = parmod::divisor_to_json(D);
  CHECK_EQ(j["schema"], "parmod/divisor/1");
  CHECK_EQ(j["level"], "7");
  CHECK_EQ(j["lambdas"][0], json({4, 2}));
  auto back = parmod::divisor_from_json(j);
  CHECK_EQ(back.level, Int(7));
  CHECK_EQ(back.lambdas[0], Partition({4, 2}));
  CHECK_EQ(back.lambdas[1], Partition({3}));
}

TEST_CASE("wall and certificate records") {
  Wall W = Wall::make(3, 2, 2, -1, {{1, 2}, {1, 3}});
  json j = parmod::wall_to_json(W);
  CHECK_EQ(j["schema"], "parmod/wall/1");
  CHECK_EQ(j["s"], 2);
  CHECK_EQ(j["d"], -1);
  CHECK_EQ(j["subsets"][1], json({1, 3}));
  CHECK_EQ(parmod::wall_from_json(j), W);

  parmod::GwCertificate c{1, -2, {{1}, {2}}};
  json cj = parmod::certificate_to_json(c);
  CHECK_EQ(cj["schema"], "parmod/certificate/1");
  auto cb = parmod::certificate_from_json(cj);
  CHECK_EQ(cb.s, 1);
  CHECK_EQ(cb.d, -2);
  CHECK_EQ(cb.J, c.J);
}

TEST_CASE("wall list record") {
  auto base = ParabolicWeight::ray(
      2, 5, std::vector<std::vector<Rat>>(5, {Rat(1, 2)}));
  auto groups =
      parmod::scaling_walls(parmod::ScalingPath::make(base, Rat(7, 5)));
  json j = parmod::wall_groups_record(2, 5, "scaling", "c", groups, false);
  CHECK_EQ(j["schema"], "parmod/wall-list/1");
  CHECK_EQ(j["kind"], "scaling");
  CHECK_EQ(j["parameter"], "c");
  CHECK_EQ(j["bounded_search"], false);
  REQUIRE_EQ(j["groups"].size(), 2);
  CHECK_EQ(j["groups"][0]["schema"], "parmod/wall-group/1");
  CHECK_EQ(j["groups"][0]["position"], "4/5");
  CHECK_EQ(j["groups"][0]["simple"], true);
  CHECK_EQ(j["groups"][0]["walls"][0]["d"], -1);
  CHECK_EQ(j["groups"][1]["simple"], false);
}

TEST_CASE("result records carry their schema tags") {
  auto w = ParabolicWeight::interior(
      2, 5, std::vector<std::vector<Rat>>(5, {Rat(9, 10)}));
  json e = parmod::effectiveness_to_json(parmod::is_effective(w));
  CHECK_EQ(e["schema"], "parmod/effectiveness/1");
  CHECK_EQ(e["effective"], false);
  CHECK_EQ(e["violation"]["schema"], "parmod/certificate/1");
  CHECK_EQ(e["violation"]["d"], -2);

  Wall W = Wall::make(2, 5, 1, -1, std::vector<std::vector<int>>(5, {1}));
  auto on = ParabolicWeight::interior(
      2, 5, std::vector<std::vector<Rat>>(5, {Rat(2, 5)}));
  json rep = parmod::crossing_report_to_json(parmod::classify(W, on));
  CHECK_EQ(rep["schema"], "parmod/crossing-report/1");
  CHECK_EQ(rep["kind"], "blow-up");
  CHECK_EQ(rep["dim_M"], 2);
  CHECK_EQ(rep["ext_minus"], 1);
  CHECK_EQ(rep["wall"]["schema"], "parmod/wall/1");

  auto mid = ParabolicWeight::interior(
      2, 5, std::vector<std::vector<Rat>>(5, {Rat(1, 2)}));
  json tr = parmod::dominance_trace_to_json(parmod::is_dominant(mid));
  CHECK_EQ(tr["schema"], "parmod/dominance-trace/1");
  CHECK_EQ(tr["dominant"], true);
  CHECK_EQ(tr["rho_final"], 6);
  REQUIRE_EQ(tr["steps"].size(), 1);
  CHECK_EQ(tr["steps"][0]["c"], "4/5");

  json cone = parmod::cone_to_json(parmod::effective_cone(2, 5));
  CHECK_EQ(cone["schema"], "parmod/cone/1");
  REQUIRE_EQ(cone["inequalities"].size(), 26);
  bool saw_certificate = false;
  for (const auto& q : cone["inequalities"]) {
    CHECK(q.contains("kind"));
    if (q.contains("certificate")) saw_certificate = true;
  }
  CHECK(saw_certificate);

  json model = parmod::model_to_json(parmod::projective_model(
      parmod::git_anticanonical_class(2, 5), parmod::effective_cone(2, 5)));
  CHECK_EQ(model["schema"], "parmod/model/1");
  CHECK_EQ(model["kind"], "wall-divisor");
  CHECK_EQ(model["wall"]["s"], 1);

  json fano = parmod::fano_report_to_json(parmod::weak_fano_report(2, 5));
  CHECK_EQ(fano["schema"], "parmod/fano-report/1");
  CHECK_EQ(fano["dominant"], true);
  CHECK_EQ(fano["attempts"], 1);
  CHECK_EQ(fano["trace"]["schema"], "parmod/dominance-trace/1");
}
