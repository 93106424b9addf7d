#include "betaring/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "betaring/error.hpp"

namespace betaring {

using nlohmann::json;

// ---------------------------------------------------------------- Ambient

Ambient Ambient::sym(int n) { return young({n}); }

Ambient Ambient::sym_pair(int p, int q) { return young({p, q}); }

Ambient Ambient::young(std::vector<int> composition) {
  if (composition.empty())
    throw std::invalid_argument("empty composition");
  Ambient a;
  for (int c : composition) {
    if (c < 0) throw std::invalid_argument("negative block size");
    if (!a.name_.empty()) a.name_ += 'x';
    a.name_ += "S" + std::to_string(c);
  }
  a.composition_ = std::move(composition);
  return a;
}

Ambient Ambient::custom(std::string name, PermGroup group) {
  Ambient a;
  a.name_ = std::move(name);
  a.custom_ = std::move(group);
  return a;
}

int Ambient::degree() const {
  if (custom_) return custom_->degree();
  return std::accumulate(composition_.begin(), composition_.end(), 0);
}

PermGroup Ambient::build_group(std::uint64_t cap) const {
  if (custom_) return *custom_;
  return PermGroup::young(composition_, cap);
}

std::string Ambient::cache_key() const {
  if (!custom_) return name_;
  std::string k = name_ + "|" + std::to_string(custom_->degree());
  for (const auto& g : custom_->generators()) k += "|" + g.to_cycle_string();
  return k;
}

Ambient Ambient::parse(std::string_view text) {
  std::vector<int> comp;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'S')
      throw std::invalid_argument("bad ambient: " + std::string(text));
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i) throw std::invalid_argument("bad ambient: " + std::string(text));
    comp.push_back(std::stoi(std::string(text.substr(i, j - i))));
    i = j;
    if (i < text.size()) {
      if (text[i] != 'x')
        throw std::invalid_argument("bad ambient: " + std::string(text));
      ++i;
    }
  }
  return young(std::move(comp));
}

std::string catalog_file_name(const Ambient& ambient) {
  return ambient.name() + ".v" + std::to_string(Catalog::kFormatVersion) +
         ".json";
}

// ---------------------------------------------------------------- enumeration

namespace {

/// Conjugation-invariant fingerprint used to bucket subgroups before the
/// exhaustive conjugacy test.
struct Invariants {
  std::uint64_t order;
  std::vector<std::pair<int, int>> orbit_families;  // (family, orbit size)
  std::map<Partition, std::uint64_t> census;

  auto operator<=>(const Invariants&) const = default;
};

std::vector<int> family_of_points(const Ambient& ambient) {
  std::vector<int> fam;
  if (ambient.is_young()) {
    const auto& comp = ambient.composition();
    for (std::size_t f = 0; f < comp.size(); ++f)
      for (int j = 0; j < comp[f]; ++j) fam.push_back(static_cast<int>(f));
  } else {
    fam.assign(static_cast<std::size_t>(ambient.degree()), 0);
  }
  return fam;
}

Invariants invariants_of(const PermGroup& h, const std::vector<int>& family) {
  Invariants inv;
  inv.order = h.order();
  for (const auto& o : h.orbits())
    inv.orbit_families.emplace_back(family[static_cast<std::size_t>(o[0])],
                                    static_cast<int>(o.size()));
  std::sort(inv.orbit_families.begin(), inv.orbit_families.end());
  inv.census = h.cycle_census();
  return inv;
}

bool conjugate_by_some(const PermGroup& g, const PermGroup& a,
                       const PermGroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& x : g.elements()) {
    Permutation xi = x.inverse();
    bool ok = std::all_of(
        a.generators().begin(), a.generators().end(),
        [&](const Permutation& s) { return b.contains(x * s * xi); });
    if (ok) return true;
  }
  return false;
}

std::string label_tail(const SubgroupClass& c) {
  std::string s = "o" + std::to_string(c.order) + "p";
  for (int p : c.ptype.parts()) s += std::to_string(p);
  return s;
}

}  // namespace

Catalog Catalog::enumerate(const Ambient& ambient, const Config& cfg) {
  if (ambient.is_young() && ambient.degree() > cfg.max_degree)
    throw DegreeCap("ambient " + ambient.name() + " exceeds max degree " +
                    std::to_string(cfg.max_degree));
  Catalog cat(ambient, ambient.build_group(cfg.element_cap));
  const PermGroup& g = cat.group_;
  const auto family = family_of_points(ambient);

  std::vector<PermGroup> reps{PermGroup::trivial(g.degree())};
  std::multimap<Invariants, std::size_t> buckets;
  buckets.emplace(invariants_of(reps[0], family), 0);
  std::set<std::vector<Permutation>> seen{reps[0].elements()};

  // Every subgroup J > 1 is <M, x> for a maximal subgroup M of J and any
  // x in J \ M, so extending each class rep by one element reaches a
  // conjugate of every subgroup. <H, x> only depends on the double coset HxH.
  for (std::size_t next = 0; next < reps.size(); ++next) {
    const PermGroup h = reps[next];
    for (const auto& x : double_cosets(g, h, h)) {
      if (h.contains(x)) continue;
      auto gens = h.generators();
      gens.push_back(x);
      PermGroup j = PermGroup::generate(g.degree(), std::move(gens),
                                        cfg.element_cap);
      if (!seen.insert(j.elements()).second) continue;
      Invariants inv = invariants_of(j, family);
      auto [lo, hi] = buckets.equal_range(inv);
      bool known = false;
      for (auto it = lo; it != hi && !known; ++it)
        known = conjugate_by_some(g, j, reps[it->second]);
      if (known) continue;
      buckets.emplace(std::move(inv), reps.size());
      reps.push_back(std::move(j));
    }
  }
  cat.finalize(std::move(reps));
  return cat;
}

std::int64_t Catalog::mark_of(const PermGroup& h, std::size_t k) const {
  const PermGroup& kr = classes_[k].rep;
  if (h.order() % kr.order() != 0) return 0;
  // |(G/H)^K| = #{g : g^{-1} K g <= H} / |H|.
  std::int64_t count = 0;
  for (const auto& x : group_.elements()) {
    Permutation xi = x.inverse();
    bool inside = std::all_of(
        kr.generators().begin(), kr.generators().end(),
        [&](const Permutation& s) { return h.contains(xi * s * x); });
    if (inside) ++count;
  }
  return count / static_cast<std::int64_t>(h.order());
}

std::vector<std::int64_t> Catalog::mark_vector(const PermGroup& h) const {
  std::vector<std::int64_t> row(classes_.size());
  for (std::size_t k = 0; k < classes_.size(); ++k) row[k] = mark_of(h, k);
  return row;
}

void Catalog::finalize(std::vector<PermGroup> reps) {
  const auto family = family_of_points(ambient_);
  // Provisional order: cheap invariants, then discovery order.
  std::vector<std::size_t> prov(reps.size());
  std::iota(prov.begin(), prov.end(), 0);
  std::vector<Invariants> invs;
  for (const auto& r : reps) invs.push_back(invariants_of(r, family));
  std::stable_sort(prov.begin(), prov.end(), [&](std::size_t a, std::size_t b) {
    return invs[a] < invs[b];
  });

  classes_.clear();
  for (std::size_t i : prov) {
    SubgroupClass c;
    c.rep = reps[i];
    c.order = c.rep.order();
    classes_.push_back(std::move(c));
  }
  for (auto& c : classes_) c.marks = mark_vector(c.rep);

  // Final order: subgroup order, then the mark row in provisional columns.
  std::vector<std::size_t> perm(classes_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(classes_[a].order, classes_[a].marks) <
           std::tie(classes_[b].order, classes_[b].marks);
  });
  std::vector<SubgroupClass> sorted;
  for (std::size_t i : perm) {
    SubgroupClass c = classes_[i];
    std::vector<std::int64_t> row(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) row[k] = c.marks[perm[k]];
    c.marks = std::move(row);
    sorted.push_back(std::move(c));
  }
  classes_ = std::move(sorted);

  std::map<std::string, int> tail_count;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    auto& c = classes_[i];
    c.index = i;
    c.norm_order = normalizer_order(group_, c.rep);
    c.ptype = c.rep.orbit_partition();
    ++tail_count[label_tail(c)];
  }
  std::map<std::string, int> used;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    auto& c = classes_[i];
    if (i == 0) {
      c.label = "e";
    } else if (i + 1 == classes_.size()) {
      c.label = ambient_.name();
    } else {
      std::string t = label_tail(c);
      c.label = t;
      if (tail_count[t] > 1) c.label += static_cast<char>('a' + used[t]++);
    }
  }
}

TableOfMarks Catalog::table_of_marks() const {
  TableOfMarks t;
  t.ambient = ambient_.name();
  for (const auto& c : classes_) {
    t.labels.push_back(c.label);
    t.m.push_back(c.marks);
  }
  return t;
}

bool Catalog::conjugate_in_ambient(const PermGroup& a,
                                   const PermGroup& b) const {
  return conjugate_by_some(group_, a, b);
}

std::size_t Catalog::identify(const PermGroup& h) const {
  if (!h.is_subgroup_of(group_))
    throw NotASubgroup("subgroup is not contained in " + ambient_.name());
  const Partition pt = h.orbit_partition();
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].order == h.order() && classes_[i].ptype == pt)
      cand.push_back(i);
  // Mark rows separate classes; only the distinguishing columns are computed.
  for (std::size_t k = 0; k < classes_.size() && cand.size() > 1; ++k) {
    std::int64_t first = classes_[cand[0]].marks[k];
    bool differ = std::any_of(cand.begin(), cand.end(), [&](std::size_t c) {
      return classes_[c].marks[k] != first;
    });
    if (!differ) continue;
    std::int64_t m = mark_of(h, k);
    std::erase_if(cand,
                  [&](std::size_t c) { return classes_[c].marks[k] != m; });
  }
  if (cand.size() != 1)
    throw std::logic_error("catalog of " + ambient_.name() +
                           " does not resolve a subgroup of order " +
                           std::to_string(h.order()));
  return cand[0];
}

std::optional<std::size_t> Catalog::find(std::string_view label) const {
  if (!label.empty() && label[0] == '#') {
    std::size_t idx = std::stoul(std::string(label.substr(1)));
    if (idx < classes_.size()) return idx;
    return std::nullopt;
  }
  if (label == "e") return trivial_class();
  if (label == ambient_.name() || label == "full") return full_class();
  for (const auto& c : classes_)
    if (c.label == label) return c.index;
  return std::nullopt;
}

// ---------------------------------------------------------------- JSON cache

std::string Catalog::to_json_string() const {
  json classes = json::array();
  json matrix = json::array();
  for (const auto& c : classes_) {
    json gens = json::array();
    for (const auto& g : c.rep.generators()) gens.push_back(g.images());
    classes.push_back({{"index", c.index},
                       {"label", c.label},
                       {"generators", gens},
                       {"order", c.order},
                       {"norm_order", c.norm_order},
                       {"ptype", c.ptype.parts()},
                       {"marks", c.marks}});
    matrix.push_back(c.marks);
  }
  json doc = {{"ambient", ambient_.name()},
              {"degree", ambient_.degree()},
              {"version", kFormatVersion},
              {"classes", classes},
              {"marks_matrix", matrix}};
  return doc.dump();
}

Catalog Catalog::from_json_string(const std::string& text,
                                  const Ambient& ambient) {
  json doc = json::parse(text);
  if (doc.at("version").get<int>() != kFormatVersion)
    throw std::runtime_error("stale catalog version");
  if (doc.at("ambient").get<std::string>() != ambient.name())
    throw std::runtime_error("catalog belongs to a different ambient");
  Catalog cat(ambient, ambient.build_group());
  const int d = ambient.degree();
  for (const auto& jc : doc.at("classes")) {
    SubgroupClass c;
    c.index = jc.at("index").get<std::size_t>();
    c.label = jc.at("label").get<std::string>();
    std::vector<Permutation> gens;
    for (const auto& jg : jc.at("generators"))
      gens.push_back(Permutation::from_images(jg.get<std::vector<int>>()));
    c.rep = PermGroup::generate(d, std::move(gens));
    c.order = jc.at("order").get<std::uint64_t>();
    c.norm_order = jc.at("norm_order").get<std::uint64_t>();
    c.ptype = Partition(jc.at("ptype").get<std::vector<int>>());
    c.marks = jc.at("marks").get<std::vector<std::int64_t>>();
    if (c.rep.order() != c.order || c.index != cat.classes_.size())
      throw std::runtime_error("catalog entry inconsistent");
    cat.classes_.push_back(std::move(c));
  }
  return cat;
}

CatalogRegistry& CatalogRegistry::global() {
  static CatalogRegistry registry;
  return registry;
}

std::shared_ptr<const Catalog> CatalogRegistry::get(const Ambient& ambient,
                                                    const Config& cfg) {
  if (ambient.is_young() && ambient.degree() > cfg.max_degree)
    throw DegreeCap("ambient " + ambient.name() + " exceeds max degree " +
                    std::to_string(cfg.max_degree));
  std::lock_guard lock(mutex_);
  const std::string key = ambient.cache_key();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  namespace fs = std::filesystem;
  std::shared_ptr<const Catalog> cat;
  const bool persist = ambient.is_young() && !cfg.catalog_dir.empty();
  fs::path file;
  if (persist) {
    file = fs::path(cfg.catalog_dir) / catalog_file_name(ambient);
    if (std::ifstream in(file); in) {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        cat = std::make_shared<const Catalog>(
            Catalog::from_json_string(buf.str(), ambient));
      } catch (const std::exception&) {
        cat.reset();  // regenerate below
      }
    }
  }
  if (!cat) {
    cat = std::make_shared<const Catalog>(Catalog::enumerate(ambient, cfg));
    if (persist) {
      std::error_code ec;
      fs::create_directories(file.parent_path(), ec);
      std::ofstream out(file);
      if (out) out << cat->to_json_string();
    }
  }
  cache_.emplace(key, cat);
  return cat;
}

}  // namespace betaring
