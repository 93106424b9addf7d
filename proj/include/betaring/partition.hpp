#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "betaring/scalar.hpp"

namespace betaring {

/// A partition of n: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into non-increasing order; throws std::invalid_argument
  /// on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// m_i: number of parts equal to i, indexed 0..n (entry 0 unused).
  std::vector<int> multiplicities() const;

  /// Centralizer order of a permutation of this cycle type: prod i^{m_i} m_i!.
  Int centralizer_order() const;
  /// Number of permutations in S_n with this cycle type: n! / centralizer.
  Int class_size() const;

  /// Multiset union of the parts.
  Partition merged(const Partition& other) const;
  /// Every part multiplied by k.
  Partition scaled(int k) const;

  /// "(4,2)"; the empty partition prints as "()".
  std::string to_string() const;
  /// Accepts "(4,2)", "4,2", "4 2" or "()".
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, largest first in reverse lexicographic order:
/// (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

}  // namespace betaring
