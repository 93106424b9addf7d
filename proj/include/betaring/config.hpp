#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace betaring {

struct Config {
  /// Largest degree n for which Sym(n) catalogs and products are built.
  int max_degree = 6;
  /// Element cap for materialized permutation groups (10!).
  std::uint64_t element_cap = 3628800;
  /// Cap on the tuple space |X_1|^{p_1}...|X_r|^{p_r} walked by the
  /// beta constructions on G-sets.
  std::uint64_t size_cap = 2000000;
  /// Directory for the JSON catalog cache; empty means in-memory only.
  std::string catalog_dir;
  /// Enables degree-6 Adams solving and other slow checks.
  bool long_running = false;

  static constexpr int kHardMaxDegree = 7;

  /// Validates the invariants (max_degree in [0, 7], caps positive).
  void validate() const;

  /// Reads BETARING_CATALOG_DIR when catalog_dir is unset.
  static Config from_environment();
};

}  // namespace betaring
