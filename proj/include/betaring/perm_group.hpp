#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "betaring/permutation.hpp"

namespace betaring {

inline constexpr std::uint64_t kDefaultElementCap = 3628800;  // 10!

/// A finite permutation group with its full element set materialized.
/// Elements are kept sorted by key, so two groups with the same element set
/// compare equal regardless of their generators.
class PermGroup {
 public:
  /// The trivial group of degree 0.
  PermGroup() : PermGroup(trivial(0)) {}

  /// Closure of `generators` under composition. Throws std::invalid_argument
  /// on a degree mismatch and CapExceeded if the group outgrows `cap`.
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::uint64_t cap = kDefaultElementCap);
  /// Wraps a set that the caller guarantees is a group; picks a small
  /// generating set greedily.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int n, std::uint64_t cap = kDefaultElementCap);
  /// S_{c_1} x ... x S_{c_r} acting on consecutive blocks of points.
  static PermGroup young(std::span<const int> composition,
                         std::uint64_t cap = kDefaultElementCap);
  /// <(0 1 ... n-1)>.
  static PermGroup cyclic(int n);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }

  bool contains(const Permutation& p) const;
  /// Position of p in elements(), if present.
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;

  /// g H g^{-1}.
  PermGroup conjugate(const Permutation& g) const;
  PermGroup intersect(const PermGroup& other) const;

  std::vector<std::vector<int>> orbits() const;
  /// Partition of the degree given by the orbit sizes.
  Partition orbit_partition() const;
  /// Number of elements of each cycle type.
  std::map<Partition, std::uint64_t> cycle_census() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.keys_ == b.keys_;
  }

 private:
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<Permutation> sorted_elements);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::uint64_t> keys_;
};

/// H x K inside S_{p+q}: H on the first p points, K on the last q.
PermGroup direct_embed(const PermGroup& h, const PermGroup& k,
                       std::uint64_t cap = kDefaultElementCap);

/// base wr top inside S_{a*b}: b blocks of a consecutive points, a copy of
/// `base` (degree a) on every block and `top` (degree b) permuting the
/// blocks. Throws DegreeCap when a*b exceeds max_degree.
PermGroup wreath(const PermGroup& base, const PermGroup& top, int max_degree,
                 std::uint64_t cap = kDefaultElementCap);

/// Generalized wreath product. `pattern` is a subgroup of
/// S_{p_1} x ... x S_{p_r} (degree sum p_i, families on consecutive points);
/// every point of family i is blown up to a block of a_i points carrying a
/// copy of bases[i], and `pattern` permutes the blocks. Degree sum p_i a_i.
PermGroup mixed_wreath(const PermGroup& pattern,
                       std::span<const int> family_sizes,
                       std::span<const PermGroup> bases, int max_degree,
                       std::uint64_t cap = kDefaultElementCap);

/// Representatives of the double cosets A\G/B, the identity first.
std::vector<Permutation> double_cosets(const PermGroup& g, const PermGroup& a,
                                       const PermGroup& b);

/// |N_G(H)|.
std::uint64_t normalizer_order(const PermGroup& g, const PermGroup& h);

inline Partition orbit_partition(const PermGroup& h) {
  return h.orbit_partition();
}

}  // namespace betaring
