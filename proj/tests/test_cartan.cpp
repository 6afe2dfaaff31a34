#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ale/errors.hpp"
#include "ale/rootsys.hpp"
#include "ale/tsing.hpp"

using namespace ale;

namespace {

std::vector<RatVec> all_roots(const RootSystem& rs) {
  std::vector<RatVec> out = rs.positive_roots;
  for (const RatVec& r : rs.positive_roots) {
    RatVec neg = r;
    for (Rational& x : neg) x = -x;
    out.push_back(neg);
  }
  return out;
}

bool contains(const std::vector<RatVec>& set, const RatVec& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

}  // namespace

TEST_CASE("positive root counts match the closed forms") {
  for (int d = 1; d <= 6; ++d)
    CHECK(int(build_root_system(RootKind::A, d).positive_roots.size()) == d * (d + 1) / 2);
  for (int d = 4; d <= 6; ++d)
    CHECK(int(build_root_system(RootKind::D, d).positive_roots.size()) == d * (d - 1));
  CHECK(build_root_system(RootKind::E, 6).positive_roots.size() == 36);
  CHECK(build_root_system(RootKind::E, 7).positive_roots.size() == 63);
  CHECK(build_root_system(RootKind::E, 8).positive_roots.size() == 120);
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(build_root_system(RootKind::A, 0), SchemaError);
  CHECK_THROWS_AS(build_root_system(RootKind::D, 3), SchemaError);
  CHECK_THROWS_AS(build_root_system(RootKind::E, 5), SchemaError);
  CHECK_THROWS_AS(build_root_system(RootKind::E, 9), SchemaError);
}

TEST_CASE("type A roots are exactly the coordinate differences") {
  for (int d : {1, 2, 3, 5}) {
    RootSystem rs = build_root_system(RootKind::A, d);
    std::vector<RatVec> expect;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= d; ++b) {
        if (a == b) continue;
        RatVec v(d + 1, 0);
        v[a] = 1;
        v[b] = -1;
        expect.push_back(v);
      }
    std::vector<RatVec> got = all_roots(rs);
    CHECK(got.size() == expect.size());
    for (const RatVec& v : expect) CHECK(contains(got, v));
  }
}

TEST_CASE("type D roots are the signed coordinate pairs") {
  RootSystem rs = build_root_system(RootKind::D, 4);
  std::vector<RatVec> expect;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RatVec v(4, 0);
          v[i] = si;
          v[j] = sj;
          expect.push_back(v);
        }
  std::vector<RatVec> got = all_roots(rs);
  CHECK(got.size() == expect.size());
  for (const RatVec& v : expect) CHECK(contains(got, v));
}

TEST_CASE("E8 roots match the direct enumeration") {
  RootSystem rs = build_root_system(RootKind::E, 8);
  std::vector<RatVec> got = all_roots(rs);
  CHECK(got.size() == 240);
  // integer roots +-e_i +- e_j and half-integer roots with an even number of
  // minus signs
  int n_int = 0, n_half = 0;
  for (const RatVec& v : got) {
    bool half = std::any_of(v.begin(), v.end(), [](const Rational& x) {
      return x == Rational(1, 2) || x == Rational(-1, 2);
    });
    if (half) {
      int minus = 0;
      for (const Rational& x : v) {
        CHECK((x == Rational(1, 2) || x == Rational(-1, 2)));
        if (x < 0) ++minus;
      }
      CHECK(minus % 2 == 0);
      ++n_half;
    } else {
      int nz = 0;
      for (const Rational& x : v)
        if (x != 0) {
          CHECK((x == 1 || x == -1));
          ++nz;
        }
      CHECK(nz == 2);
      ++n_int;
    }
  }
  CHECK(n_int == 112);
  CHECK(n_half == 128);
}

TEST_CASE("all roots have squared length two and integral simple expansions") {
  for (auto [kind, rank] : std::vector<std::pair<RootKind, int>>{
           {RootKind::A, 3}, {RootKind::D, 5}, {RootKind::E, 6}, {RootKind::E, 8}}) {
    RootSystem rs = build_root_system(kind, rank);
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
      CHECK(dot(rs.positive_roots[i], rs.positive_roots[i]) == 2);
      RatVec rebuilt(rs.ambient_dim, 0);
      for (int j = 0; j < rank; ++j) {
        CHECK(rs.positive_coeffs[i][j] >= 0);
        for (int a = 0; a < rs.ambient_dim; ++a)
          rebuilt[a] += Rational(rs.positive_coeffs[i][j]) * rs.simple_roots[j][a];
      }
      CHECK(rebuilt == rs.positive_roots[i]);
    }
    CHECK(std::is_sorted(rs.positive_coeffs.begin(), rs.positive_coeffs.end()));
  }
}

TEST_CASE("root sets are closed under reflection") {
  for (auto [kind, rank] : std::vector<std::pair<RootKind, int>>{
           {RootKind::A, 3}, {RootKind::D, 4}, {RootKind::E, 6}}) {
    RootSystem rs = build_root_system(kind, rank);
    std::vector<RatVec> roots = all_roots(rs);
    for (const RatVec& a : roots)
      for (const RatVec& b : roots) CHECK(contains(roots, reflect(b, a)));
  }
}

TEST_CASE("reflection is an isometric involution") {
  RootSystem rs = build_root_system(RootKind::D, 4);
  const RatVec& alpha = rs.positive_roots[2];
  RatVec v{Rational(3), Rational(-1, 2), Rational(7), Rational(2)};
  RatVec w = reflect(v, alpha);
  CHECK(reflect(w, alpha) == v);
  CHECK(dot(w, w) == dot(v, v));
  RatVec ma = alpha;
  for (Rational& x : ma) x = -x;
  CHECK(reflect(alpha, alpha) == ma);
}

TEST_CASE("wall test agrees with direct pairings") {
  RootSystem rs = build_root_system(RootKind::A, 2);
  RatVec v{1, 1, -2};
  std::vector<int> walls = wall_test(rs, v);
  std::set<int> expect;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (dot(rs.positive_roots[i], v) == 0) expect.insert(int(i));
  CHECK(std::set<int>(walls.begin(), walls.end()) == expect);
  CHECK(expect.size() == 1);

  CartanVec vd{1.0, 1.0, -2.0};
  std::vector<int> wd = wall_test(rs, vd);
  CHECK(std::set<int>(wd.begin(), wd.end()) == expect);

  CartanVecC vc{{0, 1}, {0, 1}, {0, -2}};
  std::vector<int> wc = wall_test(rs, vc);
  CHECK(std::set<int>(wc.begin(), wc.end()) == expect);

  CHECK(wall_test(rs, CartanVec{1.0, -0.3, -0.7}).empty());
  CHECK(wall_test(rs, RatVec{0, 0, 0}).size() == rs.positive_roots.size());
}

TEST_CASE("wall test tolerance is relative") {
  RootSystem rs = build_root_system(RootKind::A, 1);
  CHECK(wall_test(rs, CartanVec{1e8, 1e8 - 1e-3}, 1e-9).size() == 1);
  CHECK(wall_test(rs, CartanVec{1.0, 1.0 - 1e-3}, 1e-9).empty());
}

TEST_CASE("primitive decomposition matches exhaustive pair search") {
  for (auto [kind, rank] : std::vector<std::pair<RootKind, int>>{
           {RootKind::A, 3}, {RootKind::D, 4}}) {
    RootSystem rs = build_root_system(kind, rank);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<char> mask(rs.positive_roots.size());
      for (auto& m : mask) m = rng() % 2;
      auto P = [&](const RootSystem&, int i) { return bool(mask[i]); };
      for (std::size_t t = 0; t < rs.positive_roots.size(); ++t) {
        bool brute_primitive = true;
        for (std::size_t i = 0; i < rs.positive_roots.size() && brute_primitive; ++i)
          for (std::size_t j = 0; j < rs.positive_roots.size(); ++j) {
            if (!mask[i] || !mask[j]) continue;
            RatVec sum(rs.ambient_dim, 0);
            for (int a = 0; a < rs.ambient_dim; ++a)
              sum[a] = rs.positive_roots[i][a] + rs.positive_roots[j][a];
            if (sum == rs.positive_roots[t]) {
              brute_primitive = false;
              break;
            }
          }
        PrimitiveDecomposition pd = primitive_decomposition(rs, int(t), P);
        CHECK(pd.primitive == brute_primitive);
        if (!pd.primitive) {
          REQUIRE(pd.witness.has_value());
          auto [i, j] = *pd.witness;
          CHECK(mask[i]);
          CHECK(mask[j]);
          RatVec sum(rs.ambient_dim, 0);
          for (int a = 0; a < rs.ambient_dim; ++a)
            sum[a] = rs.positive_roots[i][a] + rs.positive_roots[j][a];
          CHECK(sum == rs.positive_roots[t]);
        }
      }
    }
  }
}

TEST_CASE("simple roots are always primitive, highest root is not") {
  RootSystem rs = build_root_system(RootKind::A, 3);
  auto all = [](const RootSystem&, int) { return true; };
  for (int j = 0; j < rs.rank; ++j) {
    RatVec simple = rs.simple_roots[j];
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
      if (rs.positive_roots[i] == simple)
        CHECK(primitive_decomposition(rs, int(i), all).primitive);
  }
  // e_1 - e_4 = (e_1 - e_2) + (e_2 - e_4)
  RatVec high{1, 0, 0, -1};
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (rs.positive_roots[i] == high)
      CHECK_FALSE(primitive_decomposition(rs, int(i), all).primitive);
}

TEST_CASE("weyl orbits have the expected sizes") {
  RootSystem a2 = build_root_system(RootKind::A, 2);
  CHECK(weyl_orbit(a2, a2.positive_roots[0]).size() == 6);
  CHECK(weyl_orbit(a2, RatVec{1, 2, -3}).size() == 6);
  CHECK(weyl_orbit(a2, RatVec{1, 1, -2}).size() == 3);

  RootSystem d4 = build_root_system(RootKind::D, 4);
  CHECK(weyl_orbit(d4, RatVec{1, 2, 3, 4}).size() == 192);
  CHECK(weyl_orbit(d4, d4.positive_roots[0]).size() == 24);

  RootSystem e6 = build_root_system(RootKind::E, 6);
  CHECK(weyl_orbit(e6, e6.positive_roots[0]).size() == 72);
}

TEST_CASE("orbit size cap triggers") {
  RootSystem d5 = build_root_system(RootKind::D, 5);
  CHECK_THROWS_AS(weyl_orbit(d5, RatVec{1, 2, 3, 4, 5}, 100), NumericsError);
}

TEST_CASE("orders of Weyl elements match Coxeter theory") {
  RootSystem a2 = build_root_system(RootKind::A, 2);
  CHECK(weyl_element_order(a2, {0}) == 2);
  CHECK(weyl_element_order(a2, {0, 0}) == 1);
  CHECK(weyl_element_order(a2, {0, 1}) == 3);

  RootSystem a3 = build_root_system(RootKind::A, 3);
  CHECK(weyl_element_order(a3, {0, 1, 2}) == 4);

  RootSystem d4 = build_root_system(RootKind::D, 4);
  CHECK(weyl_element_order(d4, {0, 1, 2, 3}) == 6);

  RootSystem e8 = build_root_system(RootKind::E, 8);
  CHECK(weyl_element_order(e8, {0, 1, 2, 3, 4, 5, 6, 7}) == 30);
}

TEST_CASE("T-singularity classification on the anchor cases") {
  TSingularity s = classify_T_singularity(4, 3);
  CHECK(s.kind == TSingularity::Kind::RDP_A);
  CHECK(s.describe() == "A3");

  s = classify_T_singularity(4, 1);
  CHECK(s.kind == TSingularity::Kind::ClassT);
  CHECK(s.d == 1);
  CHECK(s.n == 2);
  CHECK(s.a == 1);

  s = classify_T_singularity(8, 3);
  CHECK(s.kind == TSingularity::Kind::ClassT);
  CHECK(s.d == 2);
  CHECK(s.n == 2);

  s = classify_T_singularity(25, 4);
  CHECK(s.kind == TSingularity::Kind::ClassT);
  CHECK(s.n == 5);

  CHECK(classify_T_singularity(5, 2).kind == TSingularity::Kind::NotClassT);
  CHECK(classify_T_singularity(7, 3).kind == TSingularity::Kind::NotClassT);
  CHECK(classify_T_singularity(2, 1).kind == TSingularity::Kind::RDP_A);
}

TEST_CASE("T-singularity classification against brute force") {
  for (long r = 2; r <= 60; ++r)
    for (long q = 1; q < r; ++q) {
      if (std::gcd(q, r) != 1) continue;
      TSingularity s = classify_T_singularity(r, q);
      if (q == r - 1) {
        CHECK(s.kind == TSingularity::Kind::RDP_A);
        continue;
      }
      bool found = false;
      long bd = 0, bn = 0, ba = 0;
      for (long n = 2; n * n <= r && !found; ++n) {
        if (r % (n * n) != 0) continue;
        long d = r / (n * n);
        for (long a = 1; a < n && !found; ++a) {
          if (std::gcd(a, n) != 1) continue;
          if (((d * n * a - 1) % r + r) % r == q % r) {
            found = true;
            bd = d;
            bn = n;
            ba = a;
          }
        }
      }
      if (found) {
        CHECK(s.kind == TSingularity::Kind::ClassT);
        CHECK(s.d == bd);
        CHECK(s.n == bn);
        CHECK(s.a == ba);
      } else {
        CHECK(s.kind == TSingularity::Kind::NotClassT);
      }
    }
}

TEST_CASE("T-singularity input validation") {
  CHECK_THROWS_AS(classify_T_singularity(1, 0), SchemaError);
  CHECK_THROWS_AS(classify_T_singularity(4, 0), SchemaError);
  CHECK_THROWS_AS(classify_T_singularity(4, 4), SchemaError);
  CHECK_THROWS_AS(classify_T_singularity(4, 2), SchemaError);
}
