#include <doctest.h>

#include "betaring/burnside.hpp"
#include "betaring/error.hpp"
#include "test_groups.hpp"

using namespace betaring;
using namespace testgroups;

TEST_CASE("orbit decomposition") {
  auto g = c3();
  CHECK(orbit_decompose(GSet::empty(g)).is_zero());
  CHECK(orbit_decompose(GSet::regular(g)) == BurnsideElement::basis(g, 0));
  CHECK(orbit_decompose(GSet::point(g)) == BurnsideElement::one(g));

  // unordered pairs with repetition of the regular C3-set: 6 points, free
  auto pairs = beta_on_gset(PermGroup::symmetric(2), GSet::regular(g));
  CHECK(pairs.size() == 6);
  CHECK(orbit_decompose(pairs) == Int(2) * BurnsideElement::basis(g, 0));

  auto s = s3();
  for (std::size_t k = 0; k < s->size(); ++k) {
    auto x = GSet::cosets(s, (*s)[k].rep);
    x.validate();
    CHECK(orbit_decompose(x) == BurnsideElement::basis(s, k));
    CHECK(orbit_decompose(x).cardinality() == Int(static_cast<unsigned long>(x.size())));
  }
}

TEST_CASE("marks are fixed point counts") {
  auto s = s3();
  auto x = GSet::product(GSet::cosets(s, (*s)[1].rep), GSet::cosets(s, (*s)[2].rep));
  auto e = orbit_decompose(x);
  auto m = e.marks();
  for (std::size_t k = 0; k < s->size(); ++k)
    CHECK(m[k] == Int(static_cast<unsigned long>(x.fixed_points((*s)[k].rep))));
  CHECK(e.is_effective());
}

TEST_CASE("products in A(G)") {
  auto g = c3();
  auto free = BurnsideElement::basis(g, 0);
  CHECK(free * BurnsideElement::one(g) == free);
  CHECK(free * free == Int(3) * free);

  auto s = s3();
  auto c2 = BurnsideElement::basis(s, 1);
  CHECK(c2 * c2 == c2 + BurnsideElement::basis(s, 0));
  // product of marks equals the product G-set
  for (std::size_t a = 0; a < s->size(); ++a)
    for (std::size_t b = 0; b < s->size(); ++b) {
      auto x = GSet::cosets(s, (*s)[a].rep), y = GSet::cosets(s, (*s)[b].rep);
      CHECK(orbit_decompose(GSet::product(x, y)) ==
            BurnsideElement::basis(s, a) * BurnsideElement::basis(s, b));
    }
}

TEST_CASE("bad marks are rejected") {
  auto s = s3();
  std::vector<Int> marks{1, 0, 0, 0};
  CHECK_THROWS_AS(BurnsideElement::from_marks(s, marks), IntegralityViolation);
}

TEST_CASE("beta on G-sets") {
  auto g = c3();
  auto x = GSet::regular(g);
  CHECK(orbit_decompose(beta_on_gset(PermGroup::symmetric(1), x)) == orbit_decompose(x));
  auto pt = beta_on_gset(PermGroup::symmetric(3), GSet::point(g));
  CHECK(pt.size() == 1);
  pt.validate();
  auto big = beta_on_gset(PermGroup::symmetric(3), x);
  big.validate();
  CHECK(big.size() == 10);

  Config tiny;
  tiny.size_cap = 20;
  CHECK_THROWS_AS(beta_on_gset(PermGroup::trivial(3), x, tiny), SizeCap);
}

TEST_CASE("beta2 on pairs of G-sets") {
  auto g = c2();
  auto x = GSet::regular(g), y = GSet::regular(g);
  auto l11 = PermGroup::trivial(2);
  CHECK(orbit_decompose(beta2_on_gsets(l11, 1, 1, x, y)) ==
        orbit_decompose(GSet::product(x, y)));
  auto l21 = direct_embed(PermGroup::symmetric(2), PermGroup::symmetric(1));
  auto direct = beta2_on_gsets(l21, 2, 1, x, y);
  CHECK(direct.size() == 6);
  auto expected = GSet::product(beta_on_gset(PermGroup::symmetric(2), x), y);
  CHECK(orbit_decompose(direct) == orbit_decompose(expected));
  // X^2/S2 is a fixed point plus a free orbit; times the free Y: 3 free orbits
  CHECK(orbit_decompose(direct) == Int(3) * BurnsideElement::basis(g, 0));
}

TEST_CASE("virtual extension") {
  auto one = trivial();
  auto s2 = PermGroup::symmetric(2);
  auto minus_one = -BurnsideElement::one(one);
  CHECK(beta_virtual(s2, minus_one).is_zero());
  for (int r = 1; r <= 4; ++r) {
    auto x = Int(-r) * BurnsideElement::one(one);
    CHECK(beta_virtual(s2, x).coords()[0] == Int((r * r - r) / 2));
  }
  CHECK(beta_virtual(s2, BurnsideElement::zero(one)).is_zero());

  auto g = c3();
  auto free = BurnsideElement::basis(g, 0);
  auto psi2 = Int(2) * beta_virtual(s2, free) - beta_virtual(PermGroup::trivial(2), free);
  CHECK(psi2 == free);

  // effective elements go through the direct construction
  auto s = s3();
  for (const auto& x : small_effective(s))
    CHECK(beta_virtual(s2, x) == orbit_decompose(beta_on_gset(s2, realize(x))));
}

TEST_CASE("virtual extension is the polynomial one") {
  // x -> beta_H(x) has degree n: the (n+1)-st difference vanishes on every line
  auto g = c2();
  auto s3g = PermGroup::symmetric(3);
  auto a = BurnsideElement::basis(g, 1), b = BurnsideElement::basis(g, 0);
  std::vector<BurnsideElement> values;
  for (int k = -3; k <= 1; ++k) values.push_back(beta_virtual(s3g, a + Int(k) * b));
  auto diff = values[4] - Int(4) * values[3] + Int(6) * values[2] - Int(4) * values[1] + values[0];
  CHECK(diff.is_zero());
}

TEST_CASE("composition on effective G-sets") {
  auto g = c3();
  auto x = GSet::regular(g);
  auto s2 = PermGroup::symmetric(2);
  auto w = wreath(s2, s2, 6);
  CHECK(orbit_decompose(beta_on_gset(w, x)) ==
        orbit_decompose(beta_on_gset(s2, beta_on_gset(s2, x))));
  auto c3p = PermGroup::cyclic(3);
  auto w2 = wreath(s2, c3p, 6);  // C3 on three blocks of S2
  auto y = GSet::cosets(c2(), PermGroup::trivial(2));
  CHECK(orbit_decompose(beta_on_gset(w2, y)) ==
        orbit_decompose(beta_on_gset(c3p, beta_on_gset(s2, y))));
}

TEST_CASE("transfer identity on C2 x C2") {
  auto g = klein();
  for (std::size_t u = 0; u < g->size(); ++u) {
    auto ucat = burnside_catalog("U" + std::to_string(u), (*g)[u].rep);
    for (std::size_t a = 0; a < g->size(); ++a) {
      auto m = GSet::cosets(g, (*g)[a].rep);
      for (std::size_t b = 0; b < ucat->size(); ++b) {
        auto n = GSet::cosets(ucat, (*ucat)[b].rep);
        auto lhs = induce(GSet::product(restrict_to(m, ucat), n), g);
        auto rhs = GSet::product(m, induce(n, g));
        lhs.validate();
        CHECK(orbit_decompose(lhs) == orbit_decompose(rhs));
      }
    }
  }
}

TEST_CASE("induction from the trivial group gives the regular set") {
  auto g = s3();
  auto e = burnside_catalog("e3", PermGroup::trivial(3));
  CHECK(orbit_decompose(induce(GSet::point(e), g)) == BurnsideElement::basis(g, 0));
}
