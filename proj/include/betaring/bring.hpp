#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "betaring/burnside.hpp"
#include "betaring/catalog.hpp"
#include "betaring/config.hpp"
#include "betaring/scalar.hpp"

namespace betaring {

/// Basis element beta_H of B: H is class `index` of the Sym(degree) catalog.
struct ClassRef {
  int degree = 0;
  std::size_t index = 0;
  auto operator<=>(const ClassRef&) const = default;
};

/// Finitely supported integer combination of the beta_H; zero coefficients
/// are never stored.
class BElement {
 public:
  BElement() = default;
  static BElement term(ClassRef c, Int coeff = 1);

  const std::map<ClassRef, Int>& terms() const { return terms_; }
  Int coeff(ClassRef c) const;
  void add(ClassRef c, const Int& coeff);
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  /// Largest degree with a nonzero coefficient; -1 for zero.
  int max_degree() const;
  /// The homogeneous component of degree n.
  BElement component(int n) const;

  BElement operator+(const BElement& o) const;
  BElement operator-(const BElement& o) const;
  BElement operator-() const;
  friend BElement operator*(const Int& c, const BElement& x);
  bool operator==(const BElement&) const = default;

 private:
  std::map<ClassRef, Int> terms_;
};

/// Basis element of B^2: class `index` of the SymPair(p, q) catalog.
struct Class2Ref {
  int p = 0;
  int q = 0;
  std::size_t index = 0;
  auto operator<=>(const Class2Ref&) const = default;
};

class B2Element {
 public:
  const std::map<Class2Ref, Int>& terms() const { return terms_; }
  Int coeff(Class2Ref c) const;
  void add(Class2Ref c, const Int& coeff);
  bool is_zero() const { return terms_.empty(); }

  B2Element operator+(const B2Element& o) const;
  B2Element operator-(const B2Element& o) const;
  bool operator==(const B2Element&) const = default;

 private:
  std::map<Class2Ref, Int> terms_;
};

/// Element of the sum of A(S_{c_1} x ... x S_{c_r}) over compositions c,
/// used for iterated diagonals.
using YoungTerms = std::map<std::pair<std::vector<int>, std::size_t>, Int>;

/// The graded rings B and B^2 with product, diagonal, composition and the
/// evaluation maps. Catalogs come from the global registry; the caches here
/// are internally synchronized.
class BRing {
 public:
  explicit BRing(Config cfg = {});

  const Config& config() const { return cfg_; }
  std::shared_ptr<const Catalog> sym(int n) const;
  std::shared_ptr<const Catalog> pair(int p, int q) const;
  std::shared_ptr<const Catalog> young(const std::vector<int>& composition) const;

  BElement unit() const;
  /// beta^n = beta_{S_n}.
  BElement beta(int n) const;
  /// beta_H for the trivial subgroup of S_n.
  BElement regular(int n) const;
  BElement basis(int n, std::size_t index) const;
  /// Class of an arbitrary subgroup of S_n.
  ClassRef class_of(const PermGroup& h) const;
  const PermGroup& rep(ClassRef c) const;
  const SubgroupClass& info(ClassRef c) const;

  BElement product(const BElement& a, const BElement& b) const;
  B2Element diagonal(const BElement& a) const;
  /// Componentwise product of B^2, beta_L beta_L' = beta_{L x L'}.
  B2Element product2(const B2Element& x, const B2Element& y) const;

  /// Restriction of class `index` of the Young subgroup S_from to the finer
  /// Young subgroup S_to (same degree, consecutive refinement).
  YoungTerms restrict_young(const std::vector<int>& from, std::size_t index,
                            const std::vector<int>& to) const;
  /// (Delta x 1) Delta and (1 x Delta) Delta, both as YoungTerms over
  /// three-part compositions.
  YoungTerms delta_left_then(const BElement& a) const;
  YoungTerms delta_right_then(const BElement& a) const;

  /// beta_H * beta_K = beta_{H wr K}, K^m semidirect H inside S_{mn}.
  BElement star_basis(ClassRef h, ClassRef k) const;
  /// a * b for b with nonnegative coefficients. Throws NotEffective.
  BElement star_effective(const BElement& a, const BElement& b) const;
  /// a * b for arbitrary b, by Newton extrapolation in b.
  BElement star(const BElement& a, const BElement& b) const;

  /// Value on the beta-ring Z: beta_H(r) = |H|^{-1} sum_h r^{cycles(h)}.
  Int eval_z(const BElement& a, const Int& r) const;
  /// Action of B on A(G).
  BurnsideElement eval_burnside(const BElement& a, const BurnsideElement& x) const;
  /// Action of B^2 on pairs from A(G).
  BurnsideElement eval2_burnside(const B2Element& a, const BurnsideElement& x,
                                 const BurnsideElement& y) const;

  /// "S3:e", "S2:S2", "S4:#3", "S3" (the full group) or "S0".
  ClassRef parse_class(std::string_view text) const;
  /// Integer combinations such as "2*S3:e - S2:S2 + 1".
  BElement parse(std::string_view text) const;
  std::string label(ClassRef c) const;
  std::string label(Class2Ref c) const;
  std::string to_string(const BElement& a) const;
  std::string to_string(const B2Element& a) const;

 private:
  void check_degree(int n) const;

  Config cfg_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<ClassRef, ClassRef>, ClassRef> product_cache_;
  mutable std::map<std::tuple<Class2Ref, Class2Ref>, Class2Ref> product2_cache_;
  mutable std::map<ClassRef, B2Element> diagonal_cache_;
  mutable std::map<std::pair<ClassRef, ClassRef>, ClassRef> star_cache_;
};

}  // namespace betaring
