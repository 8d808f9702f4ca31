#include <stdexcept>

#include "doctest.h"
#include "parmod/partition.hpp"

using parmod::Partition;

TEST_CASE("partition normal form drops trailing zeros") {
  CHECK_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
  CHECK_EQ(Partition({0, 0}), Partition());
  CHECK_EQ(Partition({2, 1}).length(), 2);
  CHECK_EQ(Partition({2, 1}).weight(), 3);
  CHECK_EQ(Partition({2, 1}).part(0), 2);
  CHECK_EQ(Partition({2, 1}).part(5), 0);
}

TEST_CASE("box and containment") {
  CHECK_EQ(Partition::box(2, 3), Partition({3, 3}));
  CHECK(Partition({3, 1}).fits_in_box(2, 3));
  CHECK_FALSE(Partition({3, 1}).fits_in_box(1, 3));
  CHECK_FALSE(Partition({4}).fits_in_box(2, 3));
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
  CHECK(Partition().fits_in_box(0, 0));
}

TEST_CASE("transpose is an involution with known values") {
  CHECK_EQ(Partition({4, 2, 1}).transpose(), Partition({3, 2, 1, 1}));
  CHECK_EQ(Partition().transpose(), Partition());
  for (const Partition& p : parmod::partitions_in_box(4, 4))
    CHECK_EQ(p.transpose().transpose(), p);
}

TEST_CASE("dual in box is an involution with known values") {
  CHECK_EQ(Partition({1}).dual_in_box(2, 3), Partition({3, 2}));
  CHECK_EQ(Partition().dual_in_box(2, 2), Partition({2, 2}));
  for (const Partition& p : parmod::partitions_in_box(3, 4))
    CHECK_EQ(p.dual_in_box(3, 4).dual_in_box(3, 4), p);
}

TEST_CASE("partitions_in_box enumerates binomially many, sorted") {
  auto all = parmod::partitions_in_box(2, 2);
  REQUIRE_EQ(all.size(), 6);  // C(4, 2)
  CHECK_EQ(all.front(), Partition());
  CHECK_EQ(all.back(), Partition({2, 2}));
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_EQ(parmod::partitions_in_box(3, 4).size(), 35);  // C(7, 3)
}

TEST_CASE("partitions_of matches the partition numbers") {
  CHECK_EQ(parmod::partitions_of(4, 2, 4).size(), 3);  // (4) (3,1) (2,2)
  CHECK_EQ(parmod::partitions_of(5, 5, 5).size(), 7);
  CHECK_EQ(parmod::partitions_of(8, 8, 8).size(), 22);
  CHECK_EQ(parmod::partitions_of(0, 3, 3).size(), 1);
}

TEST_CASE("parse_partition round trip and failure modes") {
  CHECK_EQ(parmod::parse_partition("(2,1)"), Partition({2, 1}));
  CHECK_EQ(parmod::parse_partition("2,1"), Partition({2, 1}));
  CHECK_EQ(parmod::parse_partition("()"), Partition());
  CHECK_EQ(Partition({2, 1}).to_string(), "(2,1)");
  CHECK_EQ(Partition().to_string(), "()");
  CHECK_THROWS_AS(parmod::parse_partition("(2,x)"), std::invalid_argument);
  CHECK_THROWS_AS(parmod::parse_partition("(1,2)"), std::invalid_argument);
}
