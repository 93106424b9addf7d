#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betaring/config.hpp"
#include "betaring/perm_group.hpp"

namespace betaring {

/// The group whose subgroup classes a catalog enumerates: a Young subgroup
/// S_{c_1} x ... x S_{c_r} (Sym(n) and SymPair(p,q) are the one- and
/// two-part cases) or an arbitrary named permutation group.
class Ambient {
 public:
  static Ambient sym(int n);
  static Ambient sym_pair(int p, int q);
  static Ambient young(std::vector<int> composition);
  static Ambient custom(std::string name, PermGroup group);

  bool is_young() const { return !custom_.has_value(); }
  /// Empty for custom ambients.
  const std::vector<int>& composition() const { return composition_; }
  /// "S3", "S2xS1", or the custom name.
  const std::string& name() const { return name_; }
  int degree() const;

  PermGroup build_group(std::uint64_t cap = kDefaultElementCap) const;

  /// Registry key: the name for Young ambients, name plus generators otherwise.
  std::string cache_key() const;

  /// Parses "S3", "S2xS1", "S2xS0xS1".
  static Ambient parse(std::string_view text);

 private:
  std::vector<int> composition_;
  std::string name_;
  std::optional<PermGroup> custom_;
};

struct SubgroupClass {
  std::size_t index = 0;
  std::string label;
  PermGroup rep;
  std::uint64_t order = 0;
  /// Order of the normalizer of rep in the ambient group.
  std::uint64_t norm_order = 0;
  /// Orbit partition of rep on the points of the ambient.
  Partition ptype;
  /// marks[k] = |(G/rep)^K_k|, the number of cosets fixed by class k.
  std::vector<std::int64_t> marks;
};

struct TableOfMarks {
  std::string ambient;
  std::vector<std::string> labels;
  /// m[h][k] = |(G/H_h)^{K_k}|; lower triangular.
  std::vector<std::vector<std::int64_t>> m;
};

/// One representative per conjugacy class of subgroups of an ambient group,
/// sorted by (order, mark vector), together with the table of marks.
class Catalog {
 public:
  static constexpr int kFormatVersion = 1;

  /// Cyclic-extension enumeration. Throws DegreeCap if a Young ambient is
  /// wider than cfg.max_degree.
  static Catalog enumerate(const Ambient& ambient, const Config& cfg = {});

  const Ambient& ambient() const { return ambient_; }
  const PermGroup& group() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }

  std::size_t trivial_class() const { return 0; }
  std::size_t full_class() const { return classes_.size() - 1; }

  std::int64_t mark(std::size_t h, std::size_t k) const {
    return classes_[h].marks[k];
  }
  TableOfMarks table_of_marks() const;

  /// |(G/H)^K| for an arbitrary subgroup H and the class rep K.
  std::int64_t mark_of(const PermGroup& h, std::size_t k) const;
  /// Row of marks of an arbitrary subgroup H against every class.
  std::vector<std::int64_t> mark_vector(const PermGroup& h) const;

  /// Index of the class containing H. Throws NotASubgroup if H is not a
  /// subgroup of the ambient group.
  std::size_t identify(const PermGroup& h) const;

  /// Exhaustive test: is there g in G with g A g^{-1} = B?
  bool conjugate_in_ambient(const PermGroup& a, const PermGroup& b) const;

  /// Resolves a label, "#<index>", "e", or the ambient name for the full
  /// group.
  std::optional<std::size_t> find(std::string_view label) const;

  std::string to_json_string() const;
  /// Throws std::runtime_error on a malformed or stale document.
  static Catalog from_json_string(const std::string& text,
                                  const Ambient& ambient);

 private:
  Catalog(Ambient ambient, PermGroup group)
      : ambient_(std::move(ambient)), group_(std::move(group)) {}

  void finalize(std::vector<PermGroup> reps);

  Ambient ambient_;
  PermGroup group_;
  std::vector<SubgroupClass> classes_;
};

inline std::vector<SubgroupClass> enumerate_classes(const Ambient& ambient,
                                                    const Config& cfg = {}) {
  return Catalog::enumerate(ambient, cfg).classes();
}

/// Process-wide cache of catalogs. Construction of each catalog happens
/// once; afterwards the catalog is immutable and shared. When cfg names a
/// catalog directory, Young catalogs are persisted there as JSON and reused.
class CatalogRegistry {
 public:
  static CatalogRegistry& global();

  std::shared_ptr<const Catalog> get(const Ambient& ambient,
                                     const Config& cfg);

 private:
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const Catalog>> cache_;
};

/// File name used for the JSON cache of an ambient.
std::string catalog_file_name(const Ambient& ambient);

}  // namespace betaring
