#include <doctest.h>

#include <random>

#include "betaring/error.hpp"
#include "betaring/perm_group.hpp"
#include "oracle_groups.hpp"

using namespace betaring;

namespace {
Permutation cyc(int d, const char* s) { return Permutation::parse_cycles(d, s); }
}  // namespace

TEST_CASE("cycle types") {
  CHECK(cycle_type(Permutation(3)) == Partition({1, 1, 1}));
  CHECK(cycle_type(cyc(2, "(0 1)")) == Partition({2}));
  Permutation p = cyc(6, "(0 1 2 3)") * cyc(6, "(4 5)");
  CHECK(cycle_type(p) == Partition({4, 2}));
  CHECK(p.to_cycle_string() == "(0 1 2 3)(4 5)");
  CHECK(Permutation(4).to_cycle_string() == "()");
}

TEST_CASE("composition applies the right factor first") {
  Permutation a = cyc(3, "(0 1)"), b = cyc(3, "(1 2)");
  CHECK((a * b)(1) == a(b(1)));
  CHECK((a * b)(1) == 2);
  CHECK(a * a.inverse() == Permutation(3));
}

TEST_CASE("bad permutations are rejected") {
  std::vector<int> bad{0, 0, 1};
  CHECK_THROWS_AS(Permutation::from_images(bad), std::invalid_argument);
  CHECK_THROWS(Permutation::parse_cycles(3, "(0 5)"));
}

TEST_CASE("partition bookkeeping") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& pi : partitions_of(n))
      CHECK(pi.centralizer_order() * pi.class_size() == factorial(n));
  CHECK(partitions_of(4).size() == 5);
  CHECK(Partition::parse("(2,1,1)") == Partition({1, 2, 1}));
  CHECK(Partition({3, 1}).centralizer_order() == 3);
}

TEST_CASE("generate") {
  CHECK(PermGroup::generate(2, {cyc(2, "(0 1)")}).order() == 2);
  CHECK(PermGroup::generate(3, {cyc(3, "(0 1)"), cyc(3, "(0 1 2)")}).order() == 6);
  auto d4 = PermGroup::generate(
      4, {cyc(4, "(0 1)"), cyc(4, "(2 3)"), cyc(4, "(0 2)(1 3)")});
  CHECK(d4.order() == 8);
  CHECK_THROWS_AS(PermGroup::symmetric(5, 100), CapExceeded);
}

TEST_CASE("element sets agree with the brute-force closure") {
  oracle::Lattice lat(4);
  std::size_t order8 = 0;
  for (const auto& s : lat.subgroups) order8 += s.size() == 8;
  CHECK(order8 == 3);  // three Sylow 2-subgroups of S4
  CHECK(lat.subgroups.size() == 30);
}

TEST_CASE("direct products") {
  auto s1 = PermGroup::symmetric(1), s2 = PermGroup::symmetric(2),
       s3 = PermGroup::symmetric(3);
  CHECK(direct_embed(s1, s1) == PermGroup::trivial(2));
  auto v = direct_embed(s2, s2);
  CHECK(v.order() == 4);
  CHECK(v.contains(cyc(4, "(0 1)(2 3)")));
  CHECK(direct_embed(s2, s3).order() == 12);
}

TEST_CASE("wreath products") {
  auto s1 = PermGroup::symmetric(1), s2 = PermGroup::symmetric(2),
       s3 = PermGroup::symmetric(3);
  auto c3 = PermGroup::cyclic(3);
  CHECK(wreath(s1, c3, 6) == c3);
  auto d4 = wreath(s2, s2, 6);
  CHECK(d4.order() == 8);
  CHECK(d4.contains(cyc(4, "(0 2)(1 3)")));
  CHECK(wreath(s2, s3, 6).order() == 48);
  auto w = wreath(s3, s2, 6);
  CHECK(w.order() == 72);
  CHECK(w.orbit_partition() == Partition({6}));
  CHECK_THROWS_AS(wreath(s3, s3, 6), DegreeCap);
}

TEST_CASE("mixed wreath products") {
  auto s1 = PermGroup::symmetric(1), s2 = PermGroup::symmetric(2);
  std::vector<int> one{1};
  std::vector<PermGroup> b1{s2};
  CHECK(mixed_wreath(PermGroup::trivial(1), one, b1, 6) == s2);
  std::vector<int> two{2};
  CHECK(mixed_wreath(s2, two, b1, 6) == wreath(s2, s2, 6));
  std::vector<int> sizes{1, 1};
  std::vector<PermGroup> b2{s2, s1};
  auto m = mixed_wreath(PermGroup::trivial(2), sizes, b2, 6);
  CHECK(m.degree() == 3);
  CHECK(m.order() == 2);
  CHECK(m == direct_embed(s2, s1));
  // trivial pattern on distinct blocks is a direct product
  std::vector<PermGroup> b3{PermGroup::symmetric(3), s2};
  CHECK(mixed_wreath(PermGroup::trivial(2), sizes, b3, 6) ==
        direct_embed(PermGroup::symmetric(3), s2));
}

TEST_CASE("double cosets") {
  auto s3 = PermGroup::symmetric(3);
  CHECK(double_cosets(s3, s3, s3).size() == 1);
  auto s2 = PermGroup::symmetric(2), e2 = PermGroup::trivial(2);
  CHECK(double_cosets(s2, e2, e2).size() == 2);
  auto a = PermGroup::generate(3, {cyc(3, "(0 1)")});
  auto b = PermGroup::generate(3, {cyc(3, "(0 1 2)")});
  CHECK(double_cosets(s3, a, b).size() == 1);

  // block sizes |A||B|/|B ∩ s^-1 A s| sum to |G|
  auto g = PermGroup::symmetric(5);
  auto y = PermGroup::young(std::vector<int>{2, 3});
  auto h = PermGroup::generate(5, {cyc(5, "(0 1 2 3 4)")});
  std::uint64_t total = 0;
  auto reps = double_cosets(g, y, h);
  CHECK(reps.front() == Permutation(5));
  for (const auto& s : reps) {
    auto inter = h.intersect(y.conjugate(s.inverse()));
    total += y.order() * h.order() / inter.order();
  }
  CHECK(total == g.order());
}

TEST_CASE("normalizers and orbit types") {
  auto s3 = PermGroup::symmetric(3);
  CHECK(normalizer_order(s3, s3) == 6);
  auto c2 = PermGroup::generate(3, {cyc(3, "(0 1)")});
  CHECK(normalizer_order(s3, c2) == 2);
  CHECK(orbit_partition(c2) == Partition({2, 1}));
  auto c3 = PermGroup::generate(3, {cyc(3, "(0 1 2)")});
  CHECK(normalizer_order(s3, c3) == 6);
  CHECK(orbit_partition(c3) == Partition({3}));
}

TEST_CASE("conjugation preserves cycle type") {
  auto g = PermGroup::symmetric(6);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& p = g.elements()[pick(rng)];
    const auto& q = g.elements()[pick(rng)];
    CHECK(cycle_type(p * q * p.inverse()) == cycle_type(q));
  }
}
