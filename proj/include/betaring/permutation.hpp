#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betaring/partition.hpp"

namespace betaring {

/// A bijection of {0, ..., d-1}. Degrees up to 16 are supported, which is
/// far beyond anything the catalogs can materialize.
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  /// Identity of degree 0.
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(int degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  /// Parses cycle notation such as "(0 1 2)(3 4)" or "()" for the identity.
  static Permutation parse_cycles(int degree, std::string_view text);

  int degree() const { return degree_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::vector<int> images() const;

  /// Composition with the right factor applied first: (p*q)(i) = p(q(i)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// All cycles, fixed points included, each starting at its least point.
  std::vector<std::vector<int>> cycles() const;
  int num_cycles() const;
  Partition cycle_type() const;
  std::string to_cycle_string() const;

  /// The permutation of degree `new_degree` acting as this one on
  /// [offset, offset + degree()) and fixing everything else.
  Permutation shifted(int offset, int new_degree) const;

  /// Injective packing of the image array (4 bits per point).
  std::uint64_t key() const { return key_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.key_ <=> b.key_;
  }

 private:
  void rekey();

  std::array<std::uint8_t, kMaxDegree> images_{};
  std::uint64_t key_ = 0;
  int degree_ = 0;
};

/// Cycle type including fixed points; sums to the degree.
inline Partition cycle_type(const Permutation& p) { return p.cycle_type(); }

}  // namespace betaring

template <>
struct std::hash<betaring::Permutation> {
  std::size_t operator()(const betaring::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key() ^
                                      (static_cast<std::uint64_t>(p.degree())
                                       << 59));
  }
};
