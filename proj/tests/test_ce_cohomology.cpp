#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hv/lemmas.hpp"
#include "hv/normalize.hpp"

using namespace hv;

namespace {

const PatternCheck& item(const std::vector<PatternCheck>& v, const std::string& name) {
  for (const auto& p : v)
    if (p.item == name) return p;
  FAIL("missing item " << name);
  return v.front();
}

std::size_t dim_at(const PatternCheck& p, int idx) {
  auto it = p.dims.find(idx);
  return it == p.dims.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("differential squares to zero") {
  for (const std::string id : {"b3", "f4"}) {
    auto cc = get_complexes(id);
    for (int k = 0; k <= 2; ++k)
      for (int q = 0; q <= 1; ++q) {
        QMatrix d0 = cc->m_g->differential(q, k);
        QMatrix d1 = cc->m_g->differential(q + 1, k);
        CHECK((d1 * d0).is_zero());
      }
  }
}

TEST_CASE("differential shapes") {
  auto cc = get_complexes("b3");
  QMatrix d = cc->m_g->differential(1, 1);
  CHECK(d.rows() == cc->m_g->space(2, 1)->dim());
  CHECK(d.cols() == cc->m_g->space(1, 1)->dim());
  CHECK(d.rows() > 0);
  CHECK(d.cols() > 0);
}

TEST_CASE("trivial coefficients have zero degree-0 differential") {
  auto cc = get_complexes("b4");
  for (int k = -3; k <= 0; ++k) CHECK(cc->lm_z->differential(0, k).is_zero());
}

TEST_CASE("H1 of m with values in g vanishes in positive degrees") {
  for (const std::string id : {"b3", "b4", "b5", "f4"}) {
    auto p = verify_h1_vanishing(*get_complexes(id));
    CHECK(p.pass());
    CHECK(p.nonzero_summary() == "{}");
  }
}

TEST_CASE("first cohomology patterns") {
  auto b4 = verify_lemma_6_2(*get_complexes("b4"));
  CHECK(item(b4, "i").nonzero_summary() == "{}");
  auto b3 = verify_lemma_6_2(*get_complexes("b3"));
  CHECK(dim_at(item(b3, "i"), 1) == 15);
  CHECK(item(b3, "i").pass());
  auto f4 = verify_lemma_6_2(*get_complexes("f4"));
  CHECK(dim_at(item(f4, "iii"), 1) > 0);
  CHECK(item(f4, "iii").pass());
  for (const auto* v : {&b3, &b4, &f4}) CHECK(item(*v, "ii").nonzero_summary().find("2:") != std::string::npos);
}

TEST_CASE("second cohomology of l_- patterns") {
  auto f4 = verify_lemma_6_3(*get_complexes("f4"));
  CHECK(dim_at(item(f4, "iii"), 2) == 0);
  CHECK(item(f4, "i").pass());
  auto b4 = verify_lemma_6_3(*get_complexes("b4"));
  CHECK(dim_at(item(b4, "iii"), 3) == 0);
  auto b3 = verify_lemma_6_3(*get_complexes("b3"));
  CHECK(item(b3, "ii").pass());
  CHECK(dim_at(item(b3, "ii"), 2) > 0);
  // H^2(l_-, l)_1 does not vanish for B3 and B4; it does for B5 and F4.
  CHECK(dim_at(item(b3, "i"), 1) == 34);
  CHECK(dim_at(item(b4, "i"), 1) == 42);
  CHECK(item(verify_lemma_6_3(*get_complexes("b5")), "i").pass());
}

TEST_CASE("second cohomology of m with values in g") {
  auto f4 = verify_prop_6_4(*get_complexes("f4"));
  for (const auto& p : f4) CHECK(p.pass());
  CHECK(dim_at(item(f4, "k2"), 2) == 0);
  CHECK(dim_at(item(f4, "k3plus"), 3) == 0);

  auto b3 = verify_prop_6_4(*get_complexes("b3"));
  CHECK(item(b3, "k1").pass());
  CHECK(item(b3, "k3plus").pass());

  // Only 33 of the 75 degree-1 classes of B4 are reached from wedge^2 g_-1^* (x) U_-1.
  auto b4 = verify_prop_6_4(*get_complexes("b4"));
  CHECK(dim_at(item(b4, "k1"), 1) == 75);
  CHECK(item(b4, "k1").supported.at(1) == 33);
}

TEST_CASE("cohomology report fields") {
  auto r = get_complexes("f4")->m_g->cohomology(2, 1);
  CHECK(r.q == 2);
  CHECK(r.k == 1);
  CHECK(r.dim_h == r.dim_z - r.dim_b);
  CHECK(r.dim_h == 200);
}

TEST_CASE("normal forms of cocycles") {
  auto cc = get_complexes("b5");
  CocycleNormalizer nz(cc, 1);
  CHECK(nz.complete());
  CHECK(nz.classes_reached() == cc->m_g->cohomology(2, 1).dim_h);

  auto zero = nz.normalize(QVector(nz.cochain_dim()));
  CHECK(is_zero(zero.eta));
  CHECK(is_zero(zero.zeta));

  QVector boundary = nz.differential1(nz.random_cochain1(3));
  CHECK(is_zero(nz.normalize(boundary).zeta));

  QVector phi = nz.random_cocycle(11);
  auto d = nz.normalize(phi);
  CHECK(is_zero(sub(sub(phi, d.zeta), nz.differential1(d.eta))));
  CHECK(nz.satisfies_conditions(d.zeta));
  QVector shifted = add(phi, nz.differential1(nz.random_cochain1(12)));
  CHECK(nz.normalize(shifted).zeta == d.zeta);

  QVector not_closed(nz.cochain_dim());
  bool found = false;
  for (std::size_t i = 0; i < not_closed.size() && !found; ++i) {
    not_closed.assign(not_closed.size(), 0);
    not_closed[i] = 1;
    found = !is_zero(nz.differential2(not_closed));
  }
  REQUIRE(found);
  CHECK_THROWS_AS(nz.normalize(not_closed), Error);
}

TEST_CASE("rank bounds on images of the differential") {
  auto f4 = min_image_rank_u0(*get_complexes("f4"));
  CHECK(f4.exact);
  CHECK(f4.min_rank >= 3);
  CHECK(f4.kernel_dim == 0);
  for (const std::string id : {"b3", "b4", "f4"}) {
    auto r = lemma_6_6_report(*get_complexes(id));
    CHECK(r.image_dim > 0);
    CHECK(r.min_rank == 1);
  }
}
