#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hv/free_lie.hpp"
#include "hv/splitting.hpp"
#include "hv/vmrt.hpp"

using namespace hv;

namespace {

ConePoint unit_point(int dv, int dw) {
  ConePoint b;
  b.v.assign(dv, 0);
  b.w.assign(dw, 0);
  b.v[0] = 1;
  b.w[0] = 1;
  return b;
}

}  // namespace

TEST_CASE("polynomial derivatives") {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  Polynomial f = x * x * y + Polynomial::constant(2, 3);
  CHECK(f.degree() == 3);
  CHECK(f.derivative(0) == (x * y).scaled(2));
  CHECK(f.evaluate({2, 5}) == 23);
  CHECK(f.derivative(1).derivative(1).is_zero());
}

TEST_CASE("tangent spaces of the model cone") {
  ConeModel b3(2, 2);
  CHECK(span_rank(b3.tangent_space(unit_point(2, 2)), b3.dim_u()) == 4);
  ConeModel f4(3, 2);
  CHECK(span_rank(f4.tangent_space(unit_point(3, 2)), f4.dim_u()) == 5);

  ConeModel b4(2, 3);
  ConePoint b = sample_points(2, 3, 1).front();
  ConePoint doubled = b;
  doubled.c *= 2;
  for (auto& x : doubled.w) x *= 2;
  CHECK(b4.point(doubled) == scale(b4.point(b), 2));
  auto t1 = span_basis(b4.tangent_space(b), b4.dim_u());
  auto t2 = b4.tangent_space(doubled);
  CHECK(span_rank(t2, b4.dim_u()) == t1.size());
  for (const auto& v : t2) CHECK(in_span(t1, v));

  ConePoint bad = unit_point(2, 2);
  bad.v.assign(2, 0);
  CHECK_THROWS_AS(b3.tangent_space(bad), Error);
}

TEST_CASE("second and third fundamental forms") {
  for (int m = 3; m <= 5; ++m) {
    ConeModel model(2, m - 1);
    for (const auto& b : sample_points(2, m - 1)) {
      auto ii = model.second_fundamental_form(b);
      CHECK(ii.r == static_cast<std::size_t>(m));
      CHECK(ii.w_directions_vanish);
      auto iii = model.third_fundamental_form(b);
      CHECK(iii.surjective);
      CHECK(iii.s == static_cast<std::size_t>(m - 2));
      CHECK(iii.vanishes_off_w_slot);
    }
  }
  ConeModel f4(3, 2);
  auto b = sample_points(3, 2).front();
  CHECK(f4.second_fundamental_form(b).r == 7);
  CHECK(f4.third_fundamental_form(b).s == 3);
  CHECK(f4.third_fundamental_form(b).surjective);
}

TEST_CASE("osculating tables") {
  auto b4 = osculating_table(*get_case("b4"));
  CHECK(b4.p == 4);
  CHECK(b4.q_d == 6);
  CHECK(b4.r == 4);
  CHECK(b4.s == 2);
  CHECK(b4.t == 1);
  CHECK(b4.orbit_p == b4.p);
  CHECK(b4.orbit_r == b4.r);
  CHECK(b4.orbit_s == b4.s);
  auto f4 = osculating_table(*get_case("f4"));
  CHECK(f4.p == 4);
  CHECK(f4.q_d == 10);
  CHECK(f4.r == 7);
  CHECK(f4.s == 3);
  CHECK(f4.t == 5);
  CHECK(osculating_table(*get_case("b3")).t == 0);
}

TEST_CASE("bracket rank at the grading root") {
  for (int m = 3; m <= 5; ++m)
    CHECK(bracket_rank_at_alpha(*get_case("b" + std::to_string(m))) == static_cast<std::size_t>(m - 2));
  CHECK(bracket_rank_at_alpha(*get_case("f4")) == 3);
}

TEST_CASE("Frobenius kernel and determined-by checks") {
  OrbitCone b3(get_case("b3"));
  auto f = frobenius_kernel_check(b3);
  CHECK(f.kernel_dim == 27);
  CHECK(f.pass());
  auto d = determined_by_check(b3, f);
  CHECK(d.pass());
  REQUIRE(!d.degrees.empty());
  CHECK(d.degrees[0].degree == 2);
  CHECK(d.degrees[0].quotient_dim == 1);

  OrbitCone b4(get_case("b4"));
  auto db4 = determined_by_check(b4, frobenius_kernel_check(b4));
  REQUIRE(!db4.degrees.empty());
  CHECK(db4.degrees[0].quotient_dim == 3);
}

TEST_CASE("Frobenius kernel and determined-by checks for F4") {
  OrbitCone f4(get_case("f4"));
  auto f = frobenius_kernel_check(f4);
  CHECK(f.kernel_dim == 99);
  CHECK(f.tangent_isotropic);
  CHECK(f.pass());
  auto d = determined_by_check(f4, f);
  CHECK(d.pass());
  REQUIRE(d.degrees.size() == 2);
  CHECK(d.degrees[1].degree == 3);
  CHECK(d.degrees[1].quotient_dim == 2);
}

TEST_CASE("free Lie algebra dimensions") {
  CHECK(FreeLieAlgebra::witt_dimension(2, 1) == 2);
  CHECK(FreeLieAlgebra::witt_dimension(2, 2) == 1);
  CHECK(FreeLieAlgebra::witt_dimension(2, 3) == 2);
  CHECK(FreeLieAlgebra::witt_dimension(2, 4) == 3);
  CHECK(FreeLieAlgebra::witt_dimension(3, 3) == 8);
  FreeLieAlgebra fl(3, 4);
  for (int d = 1; d <= 4; ++d) {
    auto b = fl.basis(d);
    CHECK(b.size() == FreeLieAlgebra::witt_dimension(3, d));
    std::vector<SparseVec> ts;
    for (auto e : b) ts.push_back(fl.tensor(e));
    CHECK(sparse_rank(ts) == b.size());
  }
}

TEST_CASE("model automorphism algebras") {
  auto b3 = ConeModel(2, 2).automorphism_algebra();
  CHECK(b3.projective_dim == 11);
  CHECK(b3.contains_identity);
  CHECK(b3.bracket_closed);
  CHECK(b3.equals_explicit_generators);
  auto f4 = ConeModel(3, 2).automorphism_algebra();
  CHECK(f4.projective_dim == 18);
  CHECK(f4.contains_identity);
  for (int m = 3; m <= 5; ++m) {
    auto a = ConeModel(2, m - 1).automorphism_algebra();
    std::size_t expected = 2 * (m - 1) + ((m - 1) * (m - 1) - 1) + 4;
    CHECK(a.projective_dim == expected);
  }
}

TEST_CASE("automorphisms equal the g_0 image") {
  for (const std::string id : {"b3", "f4"}) {
    auto r = g0_image_check(OrbitCone(get_case(id)));
    CHECK(r.equal);
    CHECK(r.image_preserves);
    CHECK(r.bracket_closed);
  }
}

TEST_CASE("splitting types on minimal rational curves") {
  for (int m = 3; m <= 5; ++m) {
    auto s = splitting_solver(*get_case("b" + std::to_string(m)));
    std::vector<int> b(m - 1, -1);
    b[0] = 0;
    CHECK(s.a == std::vector<int>{1, 0});
    CHECK(s.b == b);
    CHECK(s.v_splitting == "O(1)+O");
    CHECK(s.solutions == 1);
  }
  auto f = splitting_solver(*get_case("f4"));
  CHECK(f.a == std::vector<int>{1, 0, 0});
  CHECK(f.b == std::vector<int>{0, -1});
  SplittingInput in{2, 2, 3, 3, 1};
  CHECK(splitting_residuals(in, {1, 0}, {0, -1}) == std::vector<int>{0, 0, 0, 0});
  SplittingInput impossible{2, 2, 9, 9, 9};
  CHECK_THROWS_AS(splitting_solver(impossible), Error);
}

TEST_CASE("VMRT dimension") {
  CHECK(vmrt_dimension_check(*get_case("b5")).computed_p == 5);
  CHECK(vmrt_dimension_check(*get_case("f4")).computed_p == 4);
  CHECK(vmrt_dimension_check(*get_case("b3")).computed_p == 3);
  for (const std::string id : {"b3", "b4", "b5", "f4"}) CHECK(exact_sequence_dims(*get_case(id)).pass());
}
