#include <doctest.h>

#include <random>

#include "betaring/bring.hpp"
#include "betaring/error.hpp"
#include "test_groups.hpp"

using namespace betaring;
using namespace testgroups;

namespace {

const BRing& ring() {
  static BRing r;
  return r;
}

BElement b(const char* text) { return ring().parse(text); }

/// |X^n / H| for an r-point set X, counted by walking all tuples.
std::uint64_t orbit_count(const PermGroup& h, int r) {
  const int n = h.degree();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(r);
  std::vector<char> seen(total, 0);
  std::uint64_t orbits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    ++orbits;
    std::vector<int> t(static_cast<std::size_t>(n));
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(r));
      c /= static_cast<std::uint64_t>(r);
    }
    for (const auto& g : h.elements()) {
      std::uint64_t img = 0, w = 1;
      std::vector<int> u(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(g(i))] = t[static_cast<std::size_t>(i)];
      for (int i = 0; i < n; ++i) {
        img += static_cast<std::uint64_t>(u[static_cast<std::size_t>(i)]) * w;
        w *= static_cast<std::uint64_t>(r);
      }
      seen[img] = 1;
    }
  }
  return orbits;
}

std::vector<BElement> basis_upto(int n) {
  std::vector<BElement> out;
  for (int d = 0; d <= n; ++d)
    for (std::size_t i = 0; i < ring().sym(d)->size(); ++i) out.push_back(ring().basis(d, i));
  return out;
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(ring().to_string(b("2*S3:e - S2:S2 + 1")) == "1 - S2:S2 + 2*S3:e");
  CHECK(b("S1") == ring().beta(1));
  CHECK(b("S2:#0") == ring().regular(2));
  CHECK(b("S2:S2 - S2") == BElement());
  CHECK_THROWS(b("S2:nonsense"));
  CHECK_THROWS(b("T2"));
}

TEST_CASE("products") {
  const auto& r = ring();
  CHECK(r.product(r.beta(1), r.beta(1)) == r.regular(2));
  CHECK(r.product(r.beta(2), r.unit()) == r.beta(2));
  auto klein = PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)")});
  CHECK(r.product(r.beta(2), r.beta(2)) == BElement::term(r.class_of(klein)));
  Config small;
  small.max_degree = 3;
  BRing tight(small);
  CHECK_THROWS_AS(tight.product(tight.beta(2), tight.beta(2)), DegreeCap);
}

TEST_CASE("ring axioms of B") {
  const auto& r = ring();
  std::mt19937 rng(11);
  auto random_element = [&](int maxdeg) {
    BElement e;
    for (int t = 0; t < 3; ++t) {
      int d = std::uniform_int_distribution<int>(0, maxdeg)(rng);
      auto cat = r.sym(d);
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, cat->size() - 1)(rng);
      e.add({d, i}, Int(std::uniform_int_distribution<int>(-3, 3)(rng)));
    }
    return e;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_element(2), y = random_element(2), z = random_element(2);
    CHECK(r.product(x, y) == r.product(y, x));
    CHECK(r.product(r.product(x, y), z) == r.product(x, r.product(y, z)));
    CHECK(r.product(x, y + z) == r.product(x, y) + r.product(x, z));
    CHECK(r.product(x, r.unit()) == x);
  }
}

TEST_CASE("diagonal") {
  const auto& r = ring();
  for (int n = 0; n <= 5; ++n) {
    B2Element expected;
    for (int p = 0; p <= n; ++p) expected.add({p, n - p, r.pair(p, n - p)->full_class()}, 1);
    CHECK(r.diagonal(r.beta(n)) == expected);
  }
  B2Element reg;
  reg.add({2, 0, 0}, 1);
  reg.add({1, 1, 0}, 2);
  reg.add({0, 2, 0}, 1);
  CHECK(r.diagonal(r.regular(2)) == reg);
  B2Element one;
  one.add({0, 0, 0}, 1);
  CHECK(r.diagonal(r.unit()) == one);
}

TEST_CASE("diagonal is multiplicative and coassociative") {
  const auto& r = ring();
  auto basis = basis_upto(3);
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (x.max_degree() + y.max_degree() <= 5)
        CHECK(r.diagonal(r.product(x, y)) == r.product2(r.diagonal(x), r.diagonal(y)));
  for (const auto& x : basis_upto(5)) CHECK(r.delta_left_then(x) == r.delta_right_then(x));
}

TEST_CASE("star on basis elements") {
  const auto& r = ring();
  for (const auto& k : basis_upto(4)) {
    CHECK(r.star(r.beta(1), k) == k);
    CHECK(r.star(k, r.beta(1)) == k);
  }
  auto d4 = r.star(r.beta(2), r.beta(2));
  CHECK(r.info(d4.terms().begin()->first).order == 8);
  // S2 permuting two blocks of S3: order 6^2 * 2
  auto w = r.star(r.beta(2), r.beta(3));
  REQUIRE(w.terms().size() == 1);
  CHECK(r.info(w.terms().begin()->first).order == 72);
  CHECK(w.terms().begin()->first.degree == 6);
  // S3 permuting three blocks of S2: order 2^3 * 6
  auto w2 = r.star(r.beta(3), r.beta(2));
  CHECK(r.info(w2.terms().begin()->first).order == 48);
  CHECK(w2 == BElement::term(r.class_of(wreath(PermGroup::symmetric(2), PermGroup::symmetric(3), 6))));
}

TEST_CASE("wreath orientation") {
  // beta_H * beta_K evaluates as beta_H(beta_K(r)); the other orientation
  // differs at (C3 on 3 blocks, S2 inside) versus (S2 on 2 blocks, C3 inside).
  const auto& r = ring();
  auto c3 = BElement::term(r.class_of(PermGroup::cyclic(3)));
  auto s2 = r.beta(2);
  for (int x = 0; x <= 4; ++x) {
    CHECK(r.eval_z(r.star(c3, s2), x) == r.eval_z(c3, r.eval_z(s2, x)));
    CHECK(r.eval_z(r.star(s2, c3), x) == r.eval_z(s2, r.eval_z(c3, x)));
  }
  CHECK(r.eval_z(r.star(c3, s2), 2) != r.eval_z(r.star(s2, c3), 2));
}

TEST_CASE("star on effective and virtual second arguments") {
  const auto& r = ring();
  auto two = Int(2) * r.beta(1);
  CHECK(r.star(r.beta(2), two) == Int(2) * r.beta(2) + r.regular(2));
  CHECK(r.star(r.beta(2), BElement()) == BElement());
  CHECK(r.star(r.unit(), BElement()) == r.unit());
  CHECK(r.star(r.beta(2), -r.beta(1)) == r.regular(2) - r.beta(2));
  CHECK_THROWS_AS(r.star_effective(r.beta(2), -r.beta(1)), NotEffective);
  for (int x = -3; x <= 3; ++x)
    CHECK(r.eval_z(r.star(r.beta(2), two), x) == 2 * x * x + x);
}

TEST_CASE("operator ring laws") {
  const auto& r = ring();
  std::vector<BElement> as{r.beta(1), r.beta(2), r.regular(2), r.beta(2) - r.regular(2)};
  std::vector<BElement> bs{r.beta(1), r.regular(2), r.beta(1) + r.beta(2), r.beta(2) - r.beta(1),
                           r.unit() + r.beta(1)};
  for (const auto& a1 : as)
    for (const auto& a2 : as)
      for (const auto& bb : bs) {
        if (bb.max_degree() * 2 > 3) continue;
        CHECK(r.star(a1 + a2, bb) == r.star(a1, bb) + r.star(a2, bb));
        if (a1.max_degree() + a2.max_degree() <= 3)
          CHECK(r.star(r.product(a1, a2), bb) == r.product(r.star(a1, bb), r.star(a2, bb)));
      }
  // associativity on a few triples
  CHECK(r.star(r.star(r.beta(2), r.beta(1) + r.unit()), r.beta(2)) ==
        r.star(r.beta(2), r.star(r.beta(1) + r.unit(), r.beta(2))));
  CHECK(r.star(r.star(r.beta(2), r.beta(2)), r.regular(1)) ==
        r.star(r.beta(2), r.star(r.beta(2), r.regular(1))));
}

TEST_CASE("evaluation on Z") {
  const auto& r = ring();
  CHECK(r.eval_z(r.beta(2), 3) == 6);
  for (int x = -3; x <= 3; ++x) CHECK(r.eval_z(r.regular(2), x) == x * x);
  for (const auto& h : basis_upto(4)) CHECK(r.eval_z(h, 1) == 1);
  for (int n = 1; n <= 4; ++n)
    for (std::size_t i = 0; i < r.sym(n)->size(); ++i)
      for (int x = 0; x <= 4; ++x)
        CHECK(r.eval_z(r.basis(n, i), x) ==
              Int(static_cast<unsigned long>(orbit_count(r.rep({n, i}), x))));
  for (int x = 0; x <= 5; ++x) CHECK(r.eval_z(r.beta(2), -x) == (x * x - x) / 2);
}

TEST_CASE("degree of beta_H as a polynomial map") {
  const auto& r = ring();
  auto c = trivial();
  auto one = BurnsideElement::one(c);
  for (const auto& h : {r.beta(2), r.beta(3), r.regular(2)}) {
    const int n = h.max_degree();
    std::vector<Int> v;
    for (int k = 0; k <= n + 1; ++k) v.push_back(r.eval_burnside(h, Int(k) * one).coords()[0]);
    auto diff = [&](int order) {
      Int d = 0;
      for (int j = 0; j <= order; ++j) {
        Int t = binomial(static_cast<unsigned>(order), static_cast<unsigned>(j)) * v[static_cast<std::size_t>(j)];
        d += (order - j) % 2 ? -t : t;
      }
      return d;
    };
    CHECK(diff(n + 1) == 0);
    CHECK(diff(n) != 0);
  }
}

TEST_CASE("evaluation on A(G)") {
  const auto& r = ring();
  auto g = c3();
  auto x = BurnsideElement::basis(g, 0);
  CHECK(r.eval_burnside(r.unit(), x) == BurnsideElement::one(g));
  CHECK(r.eval_burnside(r.beta(1), x) == x);
  auto d4 = r.star(r.beta(2), r.beta(2));
  CHECK(r.eval_burnside(d4, x) == r.eval_burnside(r.beta(2), r.eval_burnside(r.beta(2), x)));
  // on the trivial group the action is evaluation on Z
  auto one = BurnsideElement::one(trivial());
  for (const auto& h : basis_upto(3))
    for (int k = -2; k <= 3; ++k)
      CHECK(r.eval_burnside(h, Int(k) * one).coords()[0] == r.eval_z(h, k));
}

TEST_CASE("eval is an action of the star product") {
  const auto& r = ring();
  auto g = c2();
  std::vector<BElement> as{r.beta(2), r.regular(2), r.beta(2) - r.regular(2)};
  std::vector<BElement> bs{r.beta(1), r.beta(2), r.beta(1) - r.unit(), r.regular(2)};
  for (const auto& a : as)
    for (const auto& bb : bs)
      for (std::size_t i = 0; i < g->size(); ++i) {
        auto x = BurnsideElement::basis(g, i);
        CHECK(r.eval_burnside(r.star(a, bb), x) == r.eval_burnside(a, r.eval_burnside(bb, x)));
      }
}

TEST_CASE("addition axiom on A(C2)") {
  const auto& r = ring();
  auto g = c2();
  auto xs = small_effective(g);
  for (const auto& h : basis_upto(3))
    for (const auto& x : xs)
      for (const auto& y : xs) {
        if (x.cardinality() + y.cardinality() > 4) continue;
        CHECK(r.eval_burnside(h, x + y) == r.eval2_burnside(r.diagonal(h), x, y));
      }
}
