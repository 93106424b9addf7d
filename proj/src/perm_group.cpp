#include "betaring/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "betaring/error.hpp"

namespace betaring {

namespace {

std::vector<std::uint64_t> keys_of(const std::vector<Permutation>& elems) {
  std::vector<std::uint64_t> k;
  k.reserve(elems.size());
  for (const auto& e : elems) k.push_back(e.key());
  return k;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<Permutation> sorted_elements)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(sorted_elements)),
      keys_(keys_of(elements_)) {}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators,
                              std::uint64_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " +
                                  std::to_string(g.degree()) +
                                  " does not match group degree " +
                                  std::to_string(degree));
  std::erase_if(generators, [](const Permutation& g) { return g.is_identity(); });
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_set<std::uint64_t> seen{elems[0].key()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Permutation y = s * elems[i];
      if (seen.insert(y.key()).second) {
        if (elems.size() >= cap)
          throw CapExceeded("group order exceeds element cap " +
                            std::to_string(cap));
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return PermGroup(degree, std::move(generators), std::move(elems));
}

PermGroup PermGroup::from_elements(int degree,
                                   std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  // Greedy generating set, preferring elements of large order.
  std::vector<Permutation> by_order = elements;
  auto elem_order = [](const Permutation& p) {
    int o = 1;
    for (const auto& c : p.cycles()) o = std::lcm(o, static_cast<int>(c.size()));
    return o;
  };
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](const Permutation& a, const Permutation& b) {
                     return elem_order(a) > elem_order(b);
                   });
  std::vector<Permutation> gens;
  PermGroup current = trivial(degree);
  for (const auto& e : by_order) {
    if (current.order() == elements.size()) break;
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = generate(degree, gens);
  }
  if (current.order() != elements.size())
    throw std::invalid_argument("element set is not closed under composition");
  return PermGroup(degree, std::move(gens), std::move(elements));
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {}, {Permutation(degree)});
}

PermGroup PermGroup::symmetric(int n, std::uint64_t cap) {
  const int comp[] = {n};
  return young(comp, cap);
}

PermGroup PermGroup::young(std::span<const int> composition,
                           std::uint64_t cap) {
  int degree = std::accumulate(composition.begin(), composition.end(), 0);
  std::vector<Permutation> gens;
  int offset = 0;
  for (int c : composition) {
    if (c >= 2) {
      gens.push_back(Permutation::from_cycles(degree, {{offset, offset + 1}}));
      if (c >= 3) {
        std::vector<int> cyc(static_cast<std::size_t>(c));
        std::iota(cyc.begin(), cyc.end(), offset);
        gens.push_back(Permutation::from_cycles(degree, {cyc}));
      }
    }
    offset += c;
  }
  return generate(degree, std::move(gens), cap);
}

PermGroup PermGroup::cyclic(int n) {
  if (n <= 1) return trivial(n);
  std::vector<int> cyc(static_cast<std::size_t>(n));
  std::iota(cyc.begin(), cyc.end(), 0);
  return generate(n, {Permutation::from_cycles(n, {cyc})});
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = std::lower_bound(keys_.begin(), keys_.end(), p.key());
  if (it == keys_.end() || *it != p.key()) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

bool PermGroup::contains(const Permutation& p) const {
  return index_of(p).has_value();
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& p) { return g.contains(p); });
}

PermGroup PermGroup::conjugate(const Permutation& g) const {
  Permutation gi = g.inverse();
  std::vector<Permutation> gens, elems;
  for (const auto& h : generators_) gens.push_back(g * h * gi);
  elems.reserve(elements_.size());
  for (const auto& h : elements_) elems.push_back(g * h * gi);
  std::sort(elems.begin(), elems.end());
  return PermGroup(degree_, std::move(gens), std::move(elems));
}

PermGroup PermGroup::intersect(const PermGroup& other) const {
  std::vector<Permutation> common;
  for (const auto& h : elements_)
    if (other.contains(h)) common.push_back(h);
  return from_elements(degree_, std::move(common));
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> owner(static_cast<std::size_t>(degree_), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree_; ++start) {
    if (owner[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> orbit{start};
    owner[static_cast<std::size_t>(start)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& s : generators_) {
        int y = s(orbit[i]);
        if (owner[static_cast<std::size_t>(y)] < 0) {
          owner[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Partition PermGroup::orbit_partition() const {
  std::vector<int> sizes;
  for (const auto& o : orbits()) sizes.push_back(static_cast<int>(o.size()));
  return Partition(std::move(sizes));
}

std::map<Partition, std::uint64_t> PermGroup::cycle_census() const {
  std::map<Partition, std::uint64_t> census;
  for (const auto& e : elements_) ++census[e.cycle_type()];
  return census;
}

PermGroup direct_embed(const PermGroup& h, const PermGroup& k,
                       std::uint64_t cap) {
  const int d = h.degree() + k.degree();
  if (d > Permutation::kMaxDegree)
    throw DegreeCap("direct product degree " + std::to_string(d));
  std::vector<Permutation> gens;
  for (const auto& g : h.generators()) gens.push_back(g.shifted(0, d));
  for (const auto& g : k.generators()) gens.push_back(g.shifted(h.degree(), d));
  return PermGroup::generate(d, std::move(gens), cap);
}

PermGroup wreath(const PermGroup& base, const PermGroup& top, int max_degree,
                 std::uint64_t cap) {
  const int sizes[] = {top.degree()};
  const PermGroup bases[] = {base};
  return mixed_wreath(top, sizes, bases, max_degree, cap);
}

PermGroup mixed_wreath(const PermGroup& pattern,
                       std::span<const int> family_sizes,
                       std::span<const PermGroup> bases, int max_degree,
                       std::uint64_t cap) {
  if (family_sizes.size() != bases.size())
    throw std::invalid_argument("one base group per family is required");
  int npos = std::accumulate(family_sizes.begin(), family_sizes.end(), 0);
  if (npos != pattern.degree())
    throw std::invalid_argument("family sizes do not sum to pattern degree");

  // Block start for every position of the pattern.
  std::vector<int> family_of, offset;
  int degree = 0;
  for (std::size_t f = 0; f < family_sizes.size(); ++f) {
    for (int j = 0; j < family_sizes[f]; ++j) {
      family_of.push_back(static_cast<int>(f));
      offset.push_back(degree);
      degree += bases[f].degree();
    }
  }
  if (degree > max_degree || degree > Permutation::kMaxDegree)
    throw DegreeCap("wreath degree " + std::to_string(degree) +
                    " exceeds max degree " + std::to_string(max_degree));

  std::vector<Permutation> gens;
  for (int t = 0; t < npos; ++t) {
    const auto& b = bases[static_cast<std::size_t>(family_of[static_cast<std::size_t>(t)])];
    for (const auto& g : b.generators())
      gens.push_back(g.shifted(offset[static_cast<std::size_t>(t)], degree));
  }
  for (const auto& s : pattern.generators()) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int t = 0; t < npos; ++t) {
      int u = s(t);
      if (family_of[static_cast<std::size_t>(u)] !=
          family_of[static_cast<std::size_t>(t)])
        throw std::invalid_argument("pattern group mixes families");
      int width = bases[static_cast<std::size_t>(family_of[static_cast<std::size_t>(t)])].degree();
      for (int x = 0; x < width; ++x)
        img[static_cast<std::size_t>(offset[static_cast<std::size_t>(t)] + x)] =
            offset[static_cast<std::size_t>(u)] + x;
    }
    gens.push_back(Permutation::from_images(img));
  }
  return PermGroup::generate(degree, std::move(gens), cap);
}

std::vector<Permutation> double_cosets(const PermGroup& g, const PermGroup& a,
                                       const PermGroup& b) {
  const auto& elems = g.elements();
  std::vector<bool> seen(elems.size(), false);
  std::vector<Permutation> reps;

  auto sweep = [&](std::size_t start) {
    reps.push_back(elems[start]);
    std::vector<std::size_t> queue{start};
    seen[start] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Permutation& x = elems[queue[i]];
      auto visit = [&](const Permutation& y) {
        auto idx = g.index_of(y);
        if (!idx) throw NotASubgroup("double coset factor is not inside G");
        if (!seen[*idx]) {
          seen[*idx] = true;
          queue.push_back(*idx);
        }
      };
      for (const auto& s : a.generators()) visit(s * x);
      for (const auto& s : b.generators()) visit(x * s);
    }
  };

  sweep(*g.index_of(Permutation(g.degree())));
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!seen[i]) sweep(i);
  return reps;
}

std::uint64_t normalizer_order(const PermGroup& g, const PermGroup& h) {
  std::uint64_t count = 0;
  for (const auto& x : g.elements()) {
    Permutation xi = x.inverse();
    bool normalizes = std::all_of(
        h.generators().begin(), h.generators().end(),
        [&](const Permutation& s) { return h.contains(x * s * xi); });
    if (normalizes) ++count;
  }
  return count;
}

}  // namespace betaring
