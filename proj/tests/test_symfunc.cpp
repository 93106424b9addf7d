#include <doctest.h>

#include "betaring/symfunc.hpp"

using namespace betaring;

namespace {

SymFunc e(int k) { return SymFunc::gen(Basis::E, k); }
SymFunc h(int k) { return SymFunc::gen(Basis::H, k); }
SymFunc p(int k) { return SymFunc::gen(Basis::P, k); }
Rat q(long a, long b = 1) { Rat r(a, b); r.canonicalize(); return r; }
Partition pt(std::vector<int> v) { return Partition(std::move(v)); }

const BRing& ring() {
  static BRing r;
  return r;
}

}  // namespace

TEST_CASE("Newton conversions") {
  CHECK(convert(h(1), Basis::P) == p(1));
  CHECK(convert(p(1), Basis::E).terms() == e(1).terms());
  SymFunc p2h = convert(p(2), Basis::H);
  CHECK(p2h.coeff(pt({2})) == 2);
  CHECK(p2h.coeff(pt({1, 1})) == -1);
  CHECK(p2h.terms().size() == 2);
  SymFunc h2p = convert(h(2), Basis::P);
  CHECK(h2p.coeff(pt({1, 1})) == q(1, 2));
  CHECK(h2p.coeff(pt({2})) == q(1, 2));
  CHECK(convert(p(3), Basis::H) == Rat(3) * h(3) - Rat(3) * (h(1) * h(2)) + h(1) * h(1) * h(1));
  CHECK(p2h.to_string() == "-h1^2 + 2*h2");
}

TEST_CASE("round trips through every basis") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      for (Basis from : {Basis::E, Basis::H, Basis::P})
        for (Basis to : {Basis::E, Basis::H, Basis::P}) {
          SymFunc f = SymFunc::monomial(from, l);
          CHECK(convert(convert(f, to), from).terms() == f.terms());
        }
}

TEST_CASE("e and h are integral in each other") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(convert(e(n), Basis::H).is_integral());
    CHECK(convert(h(n), Basis::E).is_integral());
    CHECK(convert(p(n), Basis::H).is_integral());
    CHECK(!convert(h(n), Basis::P).is_integral() == (n > 1));
  }
}

TEST_CASE("coproduct") {
  SymTensor dh2(Basis::H, 2);
  dh2.add({pt({2}), pt({})}, 1);
  dh2.add({pt({1}), pt({1})}, 1);
  dh2.add({pt({}), pt({2})}, 1);
  CHECK(coproduct(h(2)) == dh2);
  SymTensor dp3(Basis::P, 2);
  dp3.add({pt({3}), pt({})}, 1);
  dp3.add({pt({}), pt({3})}, 1);
  CHECK(coproduct(p(3)) == dp3);
  for (int n = 0; n <= 6; ++n) {
    for (Basis b : {Basis::E, Basis::H}) {
      SymTensor expected(b, 2);
      for (int i = 0; i <= n; ++i) {
        std::vector<int> l, r;
        if (i) l.push_back(i);
        if (n - i) r.push_back(n - i);
        expected.add({Partition(l), Partition(r)}, 1);
      }
      CHECK(coproduct(SymFunc::gen(b, n)) == expected);
    }
  }
  // the coproduct is multiplicative on a sample
  SymFunc f = h(2) * e(1), g = h(1);
  SymTensor lhs = coproduct(f * g);
  SymTensor a = coproduct(f), b = coproduct(g);
  SymTensor prod(Basis::H, 2);
  const SymTensor ah = convert(a, Basis::H), bh = convert(b, Basis::H);
  for (const auto& [ka, ca] : ah.terms())
    for (const auto& [kb, cb] : bh.terms())
      prod.add({ka[0].merged(kb[0]), ka[1].merged(kb[1])}, ca * cb);
  CHECK(lhs == prod);
}

TEST_CASE("multiplication") {
  SymFunc sq = h(1) * h(1);
  CHECK(sq.terms().size() == 1);
  CHECK(sq.coeff(pt({1, 1})) == 1);
  CHECK(h(1) * p(1) == e(1) * e(1));
}

TEST_CASE("plethysm") {
  CHECK(plethysm(p(2), p(3)) == p(6));
  CHECK(plethysm(e(3), p(1)) == e(3));
  CHECK(plethysm(p(1), h(3)) == h(3));
  SymFunc d4(Basis::P);
  d4.add(pt({1, 1, 1, 1}), q(1, 8));
  d4.add(pt({2, 1, 1}), q(2, 8));
  d4.add(pt({2, 2}), q(3, 8));
  d4.add(pt({4}), q(2, 8));
  CHECK(plethysm(h(2), h(2)) == d4);

  std::vector<SymFunc> fs{h(2), e(2), p(2) + h(1), h(1) * e(1)};
  for (const auto& f : fs)
    for (const auto& g : fs)
      for (const auto& k : {h(1), e(2), p(1) + p(2)}) {
        CHECK(plethysm(plethysm(f, g), k) == plethysm(f, plethysm(g, k)));
        CHECK(plethysm(f * g, k) == plethysm(f, k) * plethysm(g, k));
        CHECK(plethysm(f + g, k) == plethysm(f, k) + plethysm(g, k));
      }
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; k * l <= 8; ++l) CHECK(plethysm(p(k), p(l)) == p(k * l));
}

TEST_CASE("lin on basis elements") {
  const auto& r = ring();
  CHECK(lin(r, r.beta(2)) == h(2));
  CHECK(lin(r, r.regular(2)) == p(1) * p(1));
  auto d4 = r.star(r.beta(2), r.beta(2));
  CHECK(lin(r, d4) == plethysm(h(2), h(2)));
  for (int n = 0; n <= 6; ++n) CHECK(lin(r, r.beta(n)) == h(n));
  for (int n = 0; n <= 6; ++n) CHECK(lin(r, r.regular(n)) == SymFunc::monomial(Basis::P, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
}

TEST_CASE("lin is a ring map and lands in integral h-combinations") {
  const auto& r = ring();
  for (int a = 0; a <= 3; ++a)
    for (std::size_t i = 0; i < r.sym(a)->size(); ++i)
      for (int b = 0; a + b <= 5; ++b)
        for (std::size_t j = 0; j < r.sym(b)->size(); ++j) {
          auto x = r.basis(a, i), y = r.basis(b, j);
          CHECK(lin(r, r.product(x, y)) == lin(r, x) * lin(r, y));
        }
  for (int n = 0; n <= 5; ++n)
    for (std::size_t i = 0; i < r.sym(n)->size(); ++i)
      CHECK(convert(lin(r, r.basis(n, i)), Basis::H).is_integral());
}

TEST_CASE("lin intertwines the diagonals") {
  const auto& r = ring();
  for (int n = 0; n <= 5; ++n)
    for (std::size_t i = 0; i < r.sym(n)->size(); ++i) {
      auto x = r.basis(n, i);
      CHECK(lin2(r, r.diagonal(x)) == coproduct(lin(r, x)));
    }
}

TEST_CASE("generator check") {
  for (int n = 1; n <= 8; ++n) {
    auto rep = generator_check(n);
    CHECK(rep.unimodular());
  }
  auto two = generator_check(2);
  CHECK(abs(two.det_e_to_m) == 1);
}

TEST_CASE("mod 2 congruence") {
  for (int r = 1; r <= 3; ++r) CHECK(mod2_check(r).holds);
  // p_3 is not congruent to h1^3
  auto d = convert(p(3), Basis::H) - h(1) * h(1) * h(1);
  bool even = true;
  for (const auto& [l, c] : d.terms()) even = even && c.get_num() % 2 == 0;
  CHECK(!even);
}
