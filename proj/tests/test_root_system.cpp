#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "hv/root_system.hpp"

using namespace hv;

TEST_CASE("root counts") {
  CHECK(build_root_system(Family::B, 3).size() == 18);
  CHECK(build_root_system(Family::F, 4).size() == 48);
  CHECK(build_root_system(Family::A, 1).size() == 2);
  for (int m = 3; m <= 5; ++m) CHECK(build_root_system(Family::B, m).size() == static_cast<std::size_t>(2 * m * m));
}

TEST_CASE("Chevalley constants in rank one are all zero") {
  RootSystem rs = build_root_system(Family::A, 1);
  ChevalleyConstants n(rs);
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) CHECK(n(a, b) == 0);
}

TEST_CASE("Chevalley constants of B3 follow chain lengths") {
  RootSystem rs = build_root_system(Family::B, 3);
  ChevalleyConstants n(rs);
  std::size_t a2 = rs.simple_index(1), a3 = rs.simple_index(2);
  int a23 = rs.index_of({0, 1, 1});
  REQUIRE(a23 >= 0);
  CHECK(std::abs(n(a2, a3)) == 1);
  CHECK(std::abs(n(a3, static_cast<std::size_t>(a23))) == 2);
  // N_{a,b} = +-(p+1) for every pair with a+b a root.
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b)
      if (rs.sum_index(a, b) >= 0) CHECK(std::abs(n(a, b)) == n.string_p(a, b) + 1);
}

TEST_CASE("Chevalley constants of F4 are bounded by 3") {
  RootSystem rs = build_root_system(Family::F, 4);
  ChevalleyConstants n(rs);
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (rs.sum_index(a, b) < 0) continue;
      int v = std::abs(n(a, b));
      CHECK(v >= 1);
      CHECK(v <= 3);
    }
}

TEST_CASE("characteristic elements") {
  RootSystem b3 = build_root_system(Family::B, 3);
  auto e = characteristic_element(b3, 2);
  CHECK(e.coords == QVector{1, 1, 0});

  RootSystem a1 = build_root_system(Family::A, 1);
  auto ea = characteristic_element(a1, 1);
  CHECK(evaluate(ea, a1.simple_roots[0]) == 1);

  RootSystem f4 = build_root_system(Family::F, 4);
  auto ef = characteristic_element(f4, 2);
  for (int j = 0; j < 4; ++j) CHECK(evaluate(ef, f4.simple_roots[j]) == (j == 1 ? 1 : 0));
}

TEST_CASE("root gradings") {
  RootSystem b3 = build_root_system(Family::B, 3);
  auto g = grade_roots(b3, characteristic_element(b3, 2));
  CHECK(g[-2].size() == 1);
  CHECK(g[-1].size() == 6);
  CHECK(g[0].size() == 4);
  CHECK(g[1].size() == 6);
  CHECK(g[2].size() == 1);
  CHECK(g[0].size() + 3 == 7);

  for (int m = 3; m <= 5; ++m) {
    RootSystem rs = build_root_system(Family::B, m);
    auto gm = grade_roots(rs, characteristic_element(rs, m - 1));
    CHECK(gm[-1].size() == static_cast<std::size_t>(3 * (m - 1)));
    CHECK(gm[-2].size() == static_cast<std::size_t>((m - 1) * (m - 2) / 2));
  }

  RootSystem f4 = build_root_system(Family::F, 4);
  auto gf = grade_roots(f4, characteristic_element(f4, 2));
  CHECK(gf[-1].size() == 12);
  CHECK(gf[-2].size() == 6);
  CHECK(gf[-3].size() == 2);
}

TEST_CASE("positive and negative roots pair up") {
  RootSystem rs = build_root_system(Family::F, 4);
  CHECK(rs.num_positive == 24);
  for (std::size_t r = 0; r < rs.num_positive; ++r) {
    auto neg = rs.roots[rs.negative_of(r)];
    for (std::size_t i = 0; i < neg.size(); ++i) CHECK(neg[i] == -rs.roots[r][i]);
  }
}
