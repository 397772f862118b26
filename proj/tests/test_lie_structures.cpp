#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hv/horospherical.hpp"
#include "hv/prolongation.hpp"

using namespace hv;

namespace {

std::size_t count_grade(const LieModule& u, int p) {
  std::size_t n = 0;
  for (int g : u.grade) n += g == p;
  return n;
}

}  // namespace

TEST_CASE("semisimple algebras") {
  RootSystem a1 = build_root_system(Family::A, 1);
  GradedLieAlgebra sl2 = build_semisimple(a1, ChevalleyConstants(a1));
  REQUIRE(sl2.dim() == 3);
  // Basis h, e, f.
  CHECK(sl2.bracket(1, 2) == SparseVec{{0, RationalScalar(1)}});
  CHECK(sl2.bracket(0, 1) == SparseVec{{1, RationalScalar(2)}});
  CHECK(jacobi_violations(sl2) == 0);

  RootSystem b3 = build_root_system(Family::B, 3);
  GradedLieAlgebra so7 = build_semisimple(b3, ChevalleyConstants(b3));
  CHECK(so7.dim() == 21);
  CHECK(jacobi_violations(so7) == 0);

  RootSystem f4 = build_root_system(Family::F, 4);
  GradedLieAlgebra f = build_semisimple(f4, ChevalleyConstants(f4));
  CHECK(f.dim() == 52);
  CHECK(antisymmetry_violations(f) == 0);
}

TEST_CASE("modules and their gradings") {
  auto b3 = get_case("b3");
  CHECK(b3->u.dim == 8);
  for (const auto& w : b3->u.weight)
    for (const auto& x : w) CHECK(abs(x) == make_rational(1, 2));
  CHECK(count_grade(b3->u, -1) == 2);
  CHECK(count_grade(b3->u, 0) == 4);
  CHECK(count_grade(b3->u, 1) == 2);
  CHECK(representation_violations(b3->l, b3->u) == 0);

  auto b4 = get_case("b4");
  CHECK(b4->u.dim == 16);
  RationalScalar lowest = 0;
  for (const auto& w : b4->u.weight) {
    RationalScalar v = evaluate(b4->e, w);
    if (v < lowest) lowest = v;
  }
  CHECK(lowest == make_rational(-3, 2));
  CHECK(count_grade(b4->u, -1) == 2);

  auto f4 = get_case("f4");
  CHECK(f4->u.dim == 26);
  std::size_t zero = 0;
  for (const auto& w : f4->u.weight) zero += is_zero(w);
  CHECK(zero == 2);
  CHECK(count_grade(f4->u, -1) == 3);
  CHECK(count_grade(f4->u, 0) == 6);
  CHECK(representation_violations(f4->l, f4->u) == 0);
}

TEST_CASE("F4 module multiplicities agree with Freudenthal") {
  RootSystem f4 = build_root_system(Family::F, 4);
  CHECK(module_weight_multiplicities(f4_module_26()) == freudenthal_multiplicities(f4, {0, 0, 0, 1}));
}

TEST_CASE("horospherical extensions") {
  const std::map<std::string, std::size_t> dims = {{"b3", 30}, {"b4", 53}, {"b5", 88}, {"f4", 79}};
  for (const auto& [id, d] : dims) {
    auto c = get_case(id);
    CHECK(c->g.dim() == d);
    CHECK(jacobi_violations(c->g) == 0);
    CHECK(grading_violations(c->g) == 0);
    CHECK(check_p0(*c));
    CHECK(verify_p1(*c));
  }
}

TEST_CASE("negative parts") {
  CHECK(negative_part(get_case("b3")->g).m.dim() == 9);
  auto f4 = negative_part(get_case("f4")->g);
  CHECK(f4.m.dim() == 23);
  CHECK(f4.m.grade_dim(-1) == 15);
  CHECK(f4.m.grade_dim(-2) == 6);
  CHECK(f4.m.grade_dim(-3) == 2);
  for (int m = 3; m <= 5; ++m) {
    auto c = get_case("b" + std::to_string(m));
    CHECK(c->g.grade_dim(-1) == static_cast<std::size_t>(3 * m - 1));
  }
}

TEST_CASE("negative part must be generated in degree -1") {
  GradedLieAlgebra g(2);
  g.grade = {-1, -2};
  g.labels = {"x", "y"};
  g.weight = {{1}, {2}};
  CHECK_THROWS_AS(negative_part(g), Error);
}

TEST_CASE("prolongations") {
  auto b3 = get_case("b3");
  CHECK(tanaka_prolongation(prolongation_input(b3->g), 4) == std::vector<std::size_t>{8, 1, 0});
  auto f4 = get_case("f4");
  std::vector<std::size_t> expected;
  for (int p = 1; p <= 3; ++p) expected.push_back(f4->g.grade_dim(p));
  expected.push_back(0);
  CHECK(tanaka_prolongation(prolongation_input(f4->g), 5) == expected);
}

TEST_CASE("first prolongation of an abelian algebra with full g_0") {
  const std::size_t n = 3;
  ProlongationInput in;
  in.m = GradedLieAlgebra(n);
  in.m.grade.assign(n, -1);
  in.m.labels = {"x1", "x2", "x3"};
  in.m.weight.assign(n, WeightKey{0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMatrixBuilder b(n, n);
      b.add(i, j, 1);
      in.g0.push_back(b.build());
    }
  auto dims = prolongation_dims(in, 1);
  REQUIRE(!dims.empty());
  CHECK(dims[0] == n * n * (n + 1) / 2);
}
