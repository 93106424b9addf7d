#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "betaring/catalog.hpp"
#include "betaring/scalar.hpp"

namespace betaring {

/// Catalog of an arbitrary finite permutation group G, used as the basis of
/// A(G). Cached process-wide.
std::shared_ptr<const Catalog> burnside_catalog(const std::string& name,
                                                const PermGroup& g,
                                                const Config& cfg = {});

/// A finite G-set given by the permutation each generator of G induces.
class GSet {
 public:
  using Table = std::vector<std::uint32_t>;

  GSet(std::shared_ptr<const Catalog> catalog, std::size_t size,
       std::vector<Table> action);

  static GSet empty(std::shared_ptr<const Catalog> catalog);
  /// The one-point set G/G.
  static GSet point(std::shared_ptr<const Catalog> catalog);
  /// Left cosets G/U with g.(xU) = (gx)U.
  static GSet cosets(std::shared_ptr<const Catalog> catalog, const PermGroup& u);
  static GSet regular(std::shared_ptr<const Catalog> catalog);
  static GSet disjoint_union(const GSet& a, const GSet& b);
  static GSet product(const GSet& a, const GSet& b);

  const std::shared_ptr<const Catalog>& catalog() const { return catalog_; }
  const PermGroup& group() const { return catalog_->group(); }
  std::size_t size() const { return size_; }
  /// action()[i][x] = generator i applied to x.
  const std::vector<Table>& action() const { return action_; }

  /// Permutation of the points induced by an arbitrary element of G.
  Table act(const Permutation& g) const;
  /// Number of points fixed by every element of k (a subgroup of G).
  std::size_t fixed_points(const PermGroup& k) const;

  /// Full closure check: the generator tables extend to a homomorphism
  /// G -> Sym(size). Throws std::logic_error otherwise.
  void validate() const;

 private:
  std::shared_ptr<const Catalog> catalog_;
  std::size_t size_ = 0;
  std::vector<Table> action_;
};

/// An element of A(G): integer coordinates over the subgroup classes of G.
class BurnsideElement {
 public:
  explicit BurnsideElement(std::shared_ptr<const Catalog> catalog);
  BurnsideElement(std::shared_ptr<const Catalog> catalog, std::vector<Int> coords);

  static BurnsideElement zero(std::shared_ptr<const Catalog> catalog);
  static BurnsideElement one(std::shared_ptr<const Catalog> catalog);
  /// [G/K] for the class with index k.
  static BurnsideElement basis(std::shared_ptr<const Catalog> catalog,
                               std::size_t k);

  /// Inverse of marks(): solves the triangular system, throwing
  /// IntegralityViolation when the marks are not those of an element.
  static BurnsideElement from_marks(std::shared_ptr<const Catalog> catalog,
                                    const std::vector<Int>& marks);

  const std::shared_ptr<const Catalog>& catalog() const { return catalog_; }
  const std::vector<Int>& coords() const { return coords_; }
  /// marks()[k] = |X^{K_k}|.
  std::vector<Int> marks() const;
  bool is_effective() const;
  bool is_zero() const;
  /// Number of points of the underlying set: sum of coords times [G:K].
  Int cardinality() const;
  std::string to_string() const;

  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator-(const BurnsideElement& o) const;
  BurnsideElement operator-() const;
  BurnsideElement operator*(const BurnsideElement& o) const;
  friend BurnsideElement operator*(const Int& c, const BurnsideElement& x);
  bool operator==(const BurnsideElement& o) const;

 private:
  void check_same(const BurnsideElement& o) const;

  std::shared_ptr<const Catalog> catalog_;
  std::vector<Int> coords_;
};

BurnsideElement orbit_decompose(const GSet& x);
BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y);

/// The effective element as an explicit G-set (disjoint union of cosets).
/// Throws NotEffective on negative coordinates.
GSet realize(const BurnsideElement& x);

/// L-orbits of X_1^{p_1} x ... x X_r^{p_r}, L a subgroup of
/// S_{p_1} x ... x S_{p_r} permuting coordinates, G acting diagonally.
/// Throws SizeCap when the tuple space exceeds cfg.size_cap.
GSet beta_multi(const PermGroup& l, std::span<const int> family_sizes,
                std::span<const GSet> sets, const Config& cfg = {});

/// beta_H(X) = X^n / H.
GSet beta_on_gset(const PermGroup& h, const GSet& x, const Config& cfg = {});
/// beta_L(X, Y) = (X^p x Y^q) / L.
GSet beta2_on_gsets(const PermGroup& l, int p, int q, const GSet& x,
                    const GSet& y, const Config& cfg = {});

/// beta_H on all of A(G): direct on effective input, otherwise the unique
/// degree-n polynomial extension evaluated by Newton extrapolation.
BurnsideElement beta_virtual(const PermGroup& h, const BurnsideElement& x,
                             const Config& cfg = {});

/// Same for a pattern in a Young subgroup acting on several arguments.
BurnsideElement beta_multi_virtual(const PermGroup& l,
                                   std::span<const int> family_sizes,
                                   std::span<const BurnsideElement> xs,
                                   const Config& cfg = {});

/// Restriction of a G-set to a subgroup U (with its own catalog).
GSet restrict_to(const GSet& x, std::shared_ptr<const Catalog> u_catalog);
/// G x_U N for a U-set N; g_catalog is the catalog of the ambient G.
GSet induce(const GSet& n, std::shared_ptr<const Catalog> g_catalog);

}  // namespace betaring
