#include <vector>

#include "doctest.h"
#include "parmod/quantum.hpp"

using parmod::Int;
using parmod::Partition;
using parmod::QuantumClass;

namespace {

QuantumClass qcls(int r, int s, std::vector<int> p, int qdeg = 0) {
  return parmod::quantum_class(r, s, Partition(std::move(p)), qdeg);
}

// Exactly the given (partition, q-degree) -> coefficient entries.
void check_terms(
    const QuantumClass& got,
    const std::vector<std::tuple<std::vector<int>, int, int>>& expect) {
  REQUIRE_EQ(got.terms.size(), expect.size());
  for (const auto& [parts, qdeg, coeff] : expect) {
    CAPTURE(Partition(parts).to_string());
    CAPTURE(qdeg);
    CHECK_EQ(got.coefficient(Partition(parts), qdeg), Int(coeff));
  }
}

}  // namespace

TEST_CASE("rim hook reduction basics") {
  auto red = parmod::rim_hook_reduce(Partition({2}), 1, 2);
  REQUIRE(red.has_value());
  CHECK_EQ(red->core, Partition());
  CHECK_EQ(red->hooks, 1);
  CHECK_EQ(red->sign, 1);

  auto tall = parmod::rim_hook_reduce(Partition({3}), 1, 2);
  REQUIRE(tall.has_value());
  CHECK_EQ(tall->core, Partition({1}));
  CHECK_EQ(tall->hooks, 1);

  // Already reduced: zero hooks.
  auto flat = parmod::rim_hook_reduce(Partition({1}), 1, 2);
  REQUIRE(flat.has_value());
  CHECK_EQ(flat->core, Partition({1}));
  CHECK_EQ(flat->hooks, 0);

  // (2,1) has no removable 2-hook and exceeds one row: the class is zero.
  CHECK_FALSE(parmod::rim_hook_reduce(Partition({2, 1}), 1, 2).has_value());
}

TEST_CASE("quantum ring of the projective line") {
  // Gr(1,2): h * h = q.
  check_terms(parmod::quantum_product(qcls(2, 1, {1}), qcls(2, 1, {1})),
              {{{}, 1, 1}});
  // h^3 = q h.
  auto h3 = parmod::quantum_product(
      parmod::quantum_product(qcls(2, 1, {1}), qcls(2, 1, {1})),
      qcls(2, 1, {1}));
  check_terms(h3, {{{1}, 1, 1}});
}

TEST_CASE("quantum ring of the projective plane") {
  // Gr(1,3): h * h = h^2, h * h^2 = q, h^2 * h^2 = q h.
  check_terms(parmod::quantum_product(qcls(3, 1, {1}), qcls(3, 1, {1})),
              {{{2}, 0, 1}});
  check_terms(parmod::quantum_product(qcls(3, 1, {1}), qcls(3, 1, {2})),
              {{{}, 1, 1}});
  check_terms(parmod::quantum_product(qcls(3, 1, {2}), qcls(3, 1, {2})),
              {{{1}, 1, 1}});
}

TEST_CASE("quantum multiplication table of Gr(2,4)") {
  auto prod = [&](std::vector<int> a, std::vector<int> b) {
    return parmod::quantum_product(qcls(4, 2, std::move(a)),
                                   qcls(4, 2, std::move(b)));
  };
  check_terms(prod({1}, {1}), {{{2}, 0, 1}, {{1, 1}, 0, 1}});
  check_terms(prod({1}, {2}), {{{2, 1}, 0, 1}});
  check_terms(prod({1}, {1, 1}), {{{2, 1}, 0, 1}});
  check_terms(prod({2}, {1, 1}), {{{}, 1, 1}});
  check_terms(prod({2}, {2}), {{{2, 2}, 0, 1}});
  check_terms(prod({1, 1}, {1, 1}), {{{2, 2}, 0, 1}});
  check_terms(prod({1}, {2, 1}), {{{2, 2}, 0, 1}, {{}, 1, 1}});
  check_terms(prod({1}, {2, 2}), {{{1}, 1, 1}});
  // The point class swaps the two middle classes up to q.
  check_terms(prod({2}, {2, 2}), {{{1, 1}, 1, 1}});
  check_terms(prod({1, 1}, {2, 2}), {{{2}, 1, 1}});
  check_terms(prod({2, 1}, {2, 1}), {{{2}, 1, 1}, {{1, 1}, 1, 1}});
  check_terms(prod({2, 1}, {2, 2}), {{{2, 1}, 1, 1}});
  check_terms(prod({2, 2}, {2, 2}), {{{}, 2, 1}});
}

TEST_CASE("classical part of the quantum product is the cup product") {
  for (const Partition& a : parmod::partitions_in_box(2, 2))
    for (const Partition& b : parmod::partitions_in_box(2, 2)) {
      auto quantum = parmod::quantum_product(parmod::quantum_class(4, 2, a),
                                             parmod::quantum_class(4, 2, b));
      auto classical = parmod::cup_product(parmod::cohomology_class(4, 2, a),
                                           parmod::cohomology_class(4, 2, b));
      for (const auto& [nu, c] : classical.terms)
        CHECK_EQ(quantum.coefficient(nu, 0), c);
      for (const auto& [key, c] : quantum.terms)
        if (key.second == 0) CHECK_EQ(classical.terms.count(key.first), 1);
    }
}

TEST_CASE("basis multiplication agrees with the general product") {
  auto a = parmod::quantum_product(qcls(6, 3, {2, 1}), qcls(6, 3, {1, 1}));
  CHECK_EQ(parmod::quantum_multiply_basis(a, Partition({3, 2})).terms,
           parmod::quantum_product(a, qcls(6, 3, {3, 2})).terms);
  CHECK_EQ(parmod::quantum_multiply_basis(a, Partition()).terms, a.terms);
}

TEST_CASE("unit is the identity and grading is additive") {
  auto u = parmod::quantum_unit(6, 2);
  auto x = parmod::quantum_product(qcls(6, 2, {3, 1}), qcls(6, 2, {4, 2}));
  CHECK_EQ(parmod::quantum_product(u, x).terms, x.terms);
  // codim + r * qdeg is constant across all terms of a homogeneous product.
  REQUIRE_FALSE(x.is_zero());
  const int grade = 3 + 1 + 4 + 2;
  for (const auto& [key, c] : x.terms) {
    CHECK_EQ(key.first.weight() + 6 * key.second, grade);
    CHECK_GT(c, Int(0));
  }
}

TEST_CASE("frozen Gromov-Witten invariants") {
  using parmod::gw_invariant;
  const Partition pt({1});
  // Three and five points on a line through fixed points of Gr(1,2).
  CHECK_EQ(gw_invariant(2, 1, {pt, pt, pt}, 1), Int(1));
  CHECK_EQ(gw_invariant(2, 1, {pt, pt, pt, pt, pt}, 2), Int(1));
  // Four general lines in P^3 have two common transversals.
  CHECK_EQ(gw_invariant(4, 2, {pt, pt, pt, pt}, 0), Int(2));
  // Lines on a smooth quadric through three general points.
  const Partition box({2, 2});
  CHECK_EQ(gw_invariant(4, 2, {box, box, box}, 2), Int(1));
  CHECK_EQ(gw_invariant(4, 2, {Partition({2}), Partition({1, 1}), box}, 1),
           Int(1));
  CHECK_EQ(gw_invariant(4, 2, {Partition({2}), Partition({2}), box}, 1),
           Int(0));
  // Degree/codimension mismatch vanishes identically.
  CHECK_EQ(gw_invariant(2, 1, {pt, pt, pt}, 0), Int(0));
  CHECK(parmod::gw_is_one(2, 1, {pt, pt, pt, pt, pt}, 2));
  CHECK_FALSE(parmod::gw_is_one(4, 2, {pt, pt, pt, pt}, 0));
}

TEST_CASE("Gromov-Witten arity guard") {
  const Partition pt({1});
  CHECK_THROWS_AS(parmod::gw_invariant(2, 1, {pt, pt}, 1),
                  parmod::DomainError);
  try {
    parmod::gw_invariant(2, 1, {pt, pt}, 1);
  } catch (const parmod::DomainError& e) {
    CHECK_EQ(e.kind(), parmod::errc::bad_arity);
  }
}
