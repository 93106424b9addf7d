#include <doctest.h>

#include "betaring/error.hpp"
#include "betaring/witt.hpp"

using namespace betaring;

namespace {

WittVector w(std::vector<int> c) {
  std::vector<Rat> r(c.begin(), c.end());
  return WittVector(std::move(r));
}

/// Elementary symmetric functions e_1..e_n of explicit numbers.
std::vector<Rat> elementary(const std::vector<Rat>& xs, int n) {
  std::vector<Rat> e(static_cast<std::size_t>(n) + 1, Rat(0));
  e[0] = 1;
  for (const auto& x : xs)
    for (int k = n; k >= 1; --k) e[static_cast<std::size_t>(k)] += x * e[static_cast<std::size_t>(k - 1)];
  e.erase(e.begin());
  return e;
}

std::string failures(const Report& r) {
  std::string out;
  for (const auto& i : r)
    if (i.status == Status::Fail) out += i.identity + " [" + i.witness + "]\n";
  return out;
}

}  // namespace

TEST_CASE("addition is the series product") {
  const WittVector a = w({3, -1, 4, 1});
  CHECK(a + WittVector::zero(4) == a);
  CHECK(w({1, 0}) + w({1, 0}) == w({2, 1}));
  CHECK(a + (-a) == WittVector::zero(4));
  CHECK(-(-a) == a);
  CHECK_THROWS_AS(a + w({1, 2}), PrecisionMismatch);
}

TEST_CASE("ghost components are power sums") {
  // 1 + t is e(X) for X = {1}
  const auto g = WittVector::one(5).ghost();
  for (const auto& x : g) CHECK(x == 1);
  // X = {2, 3}: e = (5, 6), p_k = 2^k + 3^k
  const auto h = w({5, 6, 0, 0}).ghost();
  CHECK(h == std::vector<Rat>{5, 13, 35, 97});
  const WittVector a = w({2, -3, 0, 7, 1});
  CHECK(WittVector::from_ghost(a.ghost()) == a);
  const WittVector b = w({-1, 1, 5, 2, 2});
  const auto ga = a.ghost(), gb = b.ghost(), gs = (a + b).ghost();
  for (std::size_t i = 0; i < ga.size(); ++i) CHECK(gs[i] == ga[i] + gb[i]);
}

TEST_CASE("product from explicit roots") {
  const std::vector<Rat> xs{2, -1, 3}, ys{1, -2, 5};
  std::vector<Rat> xy;
  for (const auto& x : xs)
    for (const auto& y : ys) xy.push_back(x * y);
  const int n = 8;
  const WittVector a(elementary(xs, n)), b(elementary(ys, n));
  CHECK(a * b == WittVector(elementary(xy, n)));
}

TEST_CASE("unit and small products") {
  const WittVector a = w({3, -1, 4});
  CHECK(a * WittVector::one(3) == a);
  CHECK(WittVector::one(2) * WittVector::one(2) == WittVector::one(2));
  CHECK((a * w({2, 0, 0})).coeffs()[0] == 6);
  // P_1 = a_1 b_1
  CHECK((w({4, 1}) * w({-3, 2})).coeffs()[0] == -12);
  CHECK(a * WittVector::zero(3) == WittVector::zero(3));
  // with rational input integrality is not asserted
  const WittVector q(std::vector<Rat>{Rat(1, 2), 0});
  CHECK_NOTHROW(q * q);
}

TEST_CASE("ring axioms on random vectors") {
  const Report r = check_witt_ring(8, 100, 20260415);
  CHECK_MESSAGE(passed(r), failures(r));
  CHECK(r.size() == 14);
}

TEST_CASE("second diagonal") {
  // e_1 -> e_1 (x) e_1
  SymTensor d1(Basis::E, 2);
  d1.add({Partition({1}), Partition({1})}, 1);
  CHECK(delta_m_generator(1, DeltaRoute::Counting) == d1);
  CHECK(delta_m_generator(1, DeltaRoute::PowerSum) == d1);

  // p_2 -> p_2 (x) p_2
  SymTensor p2(Basis::P, 2);
  p2.add({Partition({2}), Partition({2})}, 1);
  CHECK(delta_m(SymFunc::gen(Basis::P, 2)) == p2);

  // e_2(XY) = e_1^2 (x) e_2 + e_2 (x) e_1^2 - 2 e_2 (x) e_2
  SymTensor d2(Basis::E, 2);
  d2.add({Partition({1, 1}), Partition({2})}, 1);
  d2.add({Partition({2}), Partition({1, 1})}, 1);
  d2.add({Partition({2}), Partition({2})}, -2);
  CHECK(delta_m_generator(2, DeltaRoute::Counting) == d2);

  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(delta_m_generator(n, DeltaRoute::Counting) == delta_m_generator(n, DeltaRoute::PowerSum));
    // P_n has integer coefficients
    const SymTensor d = delta_m_generator(n, DeltaRoute::Counting);
    for (const auto& [k, c] : d.terms()) CHECK(is_integral(c));
  }
  const Report r = check_delta_m(5);
  CHECK_MESSAGE(passed(r), failures(r));
  CHECK(r.size() == 12);
}

TEST_CASE("Witt polynomial matches the product") {
  const WittVector a = w({1, 2, -1, 3, 0, 1}), b = w({-2, 1, 1, 0, 4, -1});
  const WittVector ab = a * b;
  for (int n = 1; n <= 6; ++n)
    CHECK(witt_polynomial(n, a.coeffs(), b.coeffs()) == ab.coeffs()[static_cast<std::size_t>(n - 1)]);
}
