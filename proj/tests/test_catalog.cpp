#include <doctest.h>

#include <filesystem>

#include "betaring/catalog.hpp"
#include "betaring/error.hpp"
#include "oracle_groups.hpp"

using namespace betaring;

namespace {
Permutation cyc(int d, const char* s) { return Permutation::parse_cycles(d, s); }

const Catalog& sym(int n) {
  static std::map<int, std::shared_ptr<const Catalog>> cache;
  auto& c = cache[n];
  if (!c) c = std::make_shared<const Catalog>(Catalog::enumerate(Ambient::sym(n)));
  return *c;
}

std::uint64_t weighted_subgroups(const Catalog& cat) {
  std::uint64_t total = 0;
  for (const auto& c : cat.classes()) total += cat.group().order() / c.norm_order;
  return total;
}
}  // namespace

TEST_CASE("class counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 19, 56};
  for (int n = 0; n <= 6; ++n) CHECK(sym(n).size() == expected[n]);
}

TEST_CASE("class counts against the brute-force lattice") {
  for (int n = 1; n <= 5; ++n) {
    oracle::Lattice lat(n);
    CHECK(sym(n).size() == lat.class_count());
    CHECK(weighted_subgroups(sym(n)) == lat.subgroups.size());
  }
  CHECK(weighted_subgroups(sym(6)) == 1455);
}

TEST_CASE("tables of marks of S2 and S3") {
  auto t2 = sym(2).table_of_marks();
  CHECK(t2.m == std::vector<std::vector<std::int64_t>>{{2, 0}, {1, 1}});
  CHECK(t2.labels == std::vector<std::string>{"e", "S2"});
  auto t3 = sym(3).table_of_marks();
  CHECK(t3.m == std::vector<std::vector<std::int64_t>>{
                    {6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}});
  const auto& c = sym(3);
  auto c2 = *c.find("o2p21"), c3 = *c.find("o3p3");
  CHECK(c.mark(c2, 0) == 3);
  CHECK(c.mark(c2, c2) == 1);
  CHECK(c.mark(c3, c2) == 0);
}

TEST_CASE("table of marks invariants") {
  for (int n = 1; n <= 6; ++n) {
    const auto& cat = sym(n);
    std::set<std::vector<std::int64_t>> rows;
    for (std::size_t h = 0; h < cat.size(); ++h) {
      const auto& c = cat[h];
      CHECK(c.marks[0] == static_cast<std::int64_t>(cat.group().order() / c.order));
      CHECK(c.marks[h] == static_cast<std::int64_t>(c.norm_order / c.order));
      CHECK(cat.mark(cat.full_class(), h) == 1);
      for (std::size_t k = h + 1; k < cat.size(); ++k) CHECK(c.marks[k] == 0);
      rows.insert(c.marks);
    }
    CHECK(rows.size() == cat.size());
  }
}

TEST_CASE("identify") {
  const auto& c4 = sym(4);
  CHECK(c4.identify(PermGroup::trivial(4)) == 0);
  auto normal_klein =
      PermGroup::generate(4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")});
  auto other_klein = PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)")});
  auto a = c4.identify(normal_klein), b = c4.identify(other_klein);
  CHECK(a != b);
  CHECK(c4[a].order == 4);
  CHECK(c4[a].norm_order == 24);
  auto d4 = c4.identify(wreath(PermGroup::symmetric(2), PermGroup::symmetric(2), 6));
  CHECK(c4[d4].order == 8);
  CHECK_THROWS_AS(c4.identify(PermGroup::symmetric(5)), NotASubgroup);
}

TEST_CASE("identify round trip and agreement with conjugacy") {
  for (int n = 1; n <= 5; ++n) {
    const auto& cat = sym(n);
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat.identify(cat[i].rep) == i);
  }
  // every subgroup of S4 lands in the class of a conjugate rep
  oracle::Lattice lat(4);
  const auto& cat = sym(4);
  for (const auto& s : lat.subgroups) {
    std::vector<Permutation> gens;
    for (int x : s) gens.push_back(Permutation::from_images(lat.elems[x]));
    auto h = PermGroup::generate(4, gens);
    auto idx = cat.identify(h);
    CHECK(cat.conjugate_in_ambient(h, cat[idx].rep));
  }
}

TEST_CASE("young ambients and custom groups") {
  auto pair = Catalog::enumerate(Ambient::sym_pair(1, 1));
  CHECK(pair.size() == 1);
  CHECK(pair[0].label == "e");
  auto s2s2 = Catalog::enumerate(Ambient::sym_pair(2, 2));
  CHECK(s2s2.size() == 5);  // e, S2x1, 1xS2, diagonal, S2xS2
  CHECK(s2s2[s2s2.full_class()].label == "S2xS2");
  auto s2s1 = Catalog::enumerate(Ambient::parse("S2xS1"));
  CHECK(s2s1.size() == 2);

  auto c4 = Catalog::enumerate(Ambient::custom("C4", PermGroup::cyclic(4)));
  CHECK(c4.size() == 3);
  auto v = Catalog::enumerate(Ambient::custom(
      "C2xC2", PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)")})));
  CHECK(v.size() == 5);
  CHECK(v.table_of_marks().m.back() == std::vector<std::int64_t>{1, 1, 1, 1, 1});
}

TEST_CASE("degree cap") {
  Config cfg;
  cfg.max_degree = 4;
  CHECK_THROWS_AS(Catalog::enumerate(Ambient::sym(5), cfg), DegreeCap);
}

TEST_CASE("json cache round trip and registry persistence") {
  const auto& cat = sym(4);
  auto back = Catalog::from_json_string(cat.to_json_string(), Ambient::sym(4));
  REQUIRE(back.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(back[i].label == cat[i].label);
    CHECK(back[i].marks == cat[i].marks);
    CHECK(back[i].rep == cat[i].rep);
  }
  CHECK_THROWS(Catalog::from_json_string(cat.to_json_string(), Ambient::sym(3)));

  auto dir = std::filesystem::temp_directory_path() / "betaring_catalog_test";
  std::filesystem::remove_all(dir);
  Config cfg;
  cfg.catalog_dir = dir.string();
  CatalogRegistry reg;
  auto first = reg.get(Ambient::sym(3), cfg);
  CHECK(std::filesystem::exists(dir / "S3.v1.json"));
  CatalogRegistry fresh;
  auto loaded = fresh.get(Ambient::sym(3), cfg);
  CHECK(loaded->table_of_marks().m == first->table_of_marks().m);
  std::filesystem::remove_all(dir);
}
