#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

#include "ale/delpezzo.hpp"
#include "ale/errors.hpp"
#include "ale/tsing.hpp"

using namespace ale;

namespace {

using Key = std::tuple<long, long, bool, int>;

std::vector<Key> inventory_keys(const CyclicAction& act) {
  std::vector<Key> keys;
  for (const FixedPointEntry& e : singularity_inventory(act))
    keys.emplace_back(e.stabilizer, e.q, e.isolated, int(e.type.kind));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST_CASE("order four diagonal action") {
  auto inv = singularity_inventory({4, 1, 1});
  REQUIRE(inv.size() == 4);
  int rdp = 0, classT = 0;
  for (const FixedPointEntry& e : inv) {
    CHECK(e.stabilizer == 4);
    CHECK(e.isolated);
    if (e.type.kind == TSingularity::Kind::RDP_A) {
      ++rdp;
      CHECK(e.q == 3);
      CHECK(e.type.r == 4);
    } else {
      REQUIRE(e.type.kind == TSingularity::Kind::ClassT);
      ++classT;
      CHECK(e.q == 1);
      CHECK(e.type.d == 1);
      CHECK(e.type.n == 2);
      CHECK(e.type.a == 1);
    }
  }
  CHECK(rdp == 2);
  CHECK(classT == 2);
  // mixed charts carry the du Val points, diagonal charts the others
  for (const FixedPointEntry& e : inv) {
    bool mixed = e.chart[0] != e.chart[1];
    CHECK((e.type.kind == TSingularity::Kind::RDP_A) == mixed);
  }
}

TEST_CASE("order two diagonal action gives four A1 points") {
  auto inv = singularity_inventory({2, 1, 1});
  REQUIRE(inv.size() == 4);
  for (const FixedPointEntry& e : inv) {
    CHECK(e.stabilizer == 2);
    CHECK(e.isolated);
    CHECK(e.type.kind == TSingularity::Kind::RDP_A);
    CHECK(e.type.r == 2);
    CHECK(e.q == 1);
  }
}

TEST_CASE("action on a single factor fixes curves") {
  auto inv = singularity_inventory({2, 1, 0});
  REQUIRE(inv.size() == 4);
  for (const FixedPointEntry& e : inv) {
    CHECK_FALSE(e.isolated);
    CHECK(e.stabilizer == 2);
    CHECK(e.q == 0);
    CHECK(e.label.find("curve") != std::string::npos);
  }
}

TEST_CASE("order three asymmetric action") {
  auto inv = singularity_inventory({3, 1, 2});
  REQUIRE(inv.size() == 4);
  int rdp = 0, notT = 0;
  for (const FixedPointEntry& e : inv) {
    CHECK(e.stabilizer == 3);
    CHECK(e.isolated);
    if (e.type.kind == TSingularity::Kind::RDP_A) {
      ++rdp;
      CHECK(e.q == 2);
    } else {
      CHECK(e.type.kind == TSingularity::Kind::NotClassT);
      ++notT;
      CHECK(e.q == 1);
    }
  }
  CHECK(rdp == 2);
  CHECK(notT == 2);
}

TEST_CASE("weights sharing factors with the order are never isolated") {
  auto inv = singularity_inventory({6, 2, 3});
  REQUIRE(inv.size() == 4);
  for (const FixedPointEntry& e : inv) {
    CHECK(e.stabilizer == 6);
    CHECK_FALSE(e.isolated);
  }
}

TEST_CASE("ineffective actions reduce to the effective stabilizer") {
  auto inv = singularity_inventory({4, 2, 2});
  REQUIRE(inv.size() == 4);
  for (const FixedPointEntry& e : inv) {
    CHECK(e.stabilizer == 2);
    CHECK(e.isolated);
    CHECK(e.type.kind == TSingularity::Kind::RDP_A);
    CHECK(e.type.r == 2);
  }
}

TEST_CASE("factor swap leaves the inventory invariant") {
  for (auto [r, w1, w2] : {std::tuple<long, long, long>{8, 1, 3},
                           {5, 1, 2},
                           {12, 2, 3},
                           {9, 3, 1}})
    CHECK(inventory_keys({r, w1, w2}) == inventory_keys({r, w2, w1}));
}

TEST_CASE("isolated points have unit weights") {
  for (long r = 2; r <= 12; ++r)
    for (long w1 = 0; w1 < r; ++w1)
      for (long w2 = 0; w2 < r; ++w2) {
        if (w1 == 0 && w2 == 0) continue;
        for (const FixedPointEntry& e : singularity_inventory({r, w1, w2})) {
          CHECK(e.stabilizer >= 2);
          CHECK(e.stabilizer <= r);
          CHECK(r % e.stabilizer == 0);
          if (e.isolated) {
            CHECK(std::gcd(e.weights[0], e.stabilizer) == 1);
            CHECK(std::gcd(e.weights[1], e.stabilizer) == 1);
            CHECK(e.q >= 1);
            CHECK(e.q < e.stabilizer);
            CHECK(std::gcd(e.q, e.stabilizer) == 1);
          }
        }
      }
}

TEST_CASE("degenerate actions are rejected") {
  CHECK_THROWS_AS(singularity_inventory({0, 1, 1}), SchemaError);
  CHECK_THROWS_AS(singularity_inventory({-3, 1, 1}), SchemaError);
  CHECK_THROWS_AS(singularity_inventory({1, 1, 1}), SchemaError);
  CHECK_THROWS_AS(singularity_inventory({5, 0, 0}), SchemaError);
  CHECK_THROWS_AS(singularity_inventory({5, 5, 10}), SchemaError);
}
