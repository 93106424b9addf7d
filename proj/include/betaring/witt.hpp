#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betaring/report.hpp"
#include "betaring/scalar.hpp"
#include "betaring/symfunc.hpp"

namespace betaring {

/// Truncated series 1 + a_1 t + ... + a_N t^N, read as a big Witt vector with
/// a_n = e_n(X). Addition is the series product; the product multiplies the
/// ghost components g_n = p_n(X) pointwise. The unit is 1 + t.
class WittVector {
 public:
  static constexpr int kDefaultPrecision = 8;

  /// The series 1 (the additive zero).
  explicit WittVector(int precision = kDefaultPrecision);
  /// Coefficients a_1 ... a_N.
  explicit WittVector(std::vector<Rat> coeffs);

  static WittVector zero(int precision = kDefaultPrecision);
  /// 1 + t, ghost (1, 1, 1, ...).
  static WittVector one(int precision = kDefaultPrecision);
  static WittVector from_ghost(const std::vector<Rat>& ghost);

  int precision() const { return static_cast<int>(a_.size()); }
  const std::vector<Rat>& coeffs() const { return a_; }
  /// g_1 ... g_N by Newton's identities.
  std::vector<Rat> ghost() const;
  bool is_integral() const;

  WittVector operator+(const WittVector& o) const;
  WittVector operator-() const;
  WittVector operator-(const WittVector& o) const;
  /// Throws IntegralityViolation if integer inputs give a non-integer result.
  WittVector operator*(const WittVector& o) const;
  bool operator==(const WittVector&) const = default;

  std::string to_string() const;

 private:
  void check_same(const WittVector& o) const;
  std::vector<Rat> a_;
};

enum class DeltaRoute {
  /// e_n(XY) from 0-1 matrix counts, m expressed back in e.
  Counting,
  /// p_k -> p_k (x) p_k.
  PowerSum,
};

/// Second diagonal on the generator e_n, both slots in the e basis.
SymTensor delta_m_generator(int n, DeltaRoute route);
/// Second diagonal on an arbitrary symmetric function, in the basis of f.
SymTensor delta_m(const SymFunc& f);

/// P_n(a; b) evaluated from the polynomial delta_m_generator(n, Counting).
Rat witt_polynomial(int n, const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Ring axioms on random integer vectors, P_1, integrality of products.
Report check_witt_ring(int precision, int samples, std::uint64_t seed);
/// Agreement of both routes and coassociativity of the second diagonal.
Report check_delta_m(int max_n);

}  // namespace betaring
