#include "betaring/config.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace betaring {

void Config::validate() const {
  if (max_degree < 0 || max_degree > kHardMaxDegree)
    throw std::invalid_argument("max_degree must lie in [0, " +
                                std::to_string(kHardMaxDegree) + "]");
  if (element_cap == 0 || size_cap == 0)
    throw std::invalid_argument("caps must be positive");
}

Config Config::from_environment() {
  Config c;
  if (const char* dir = std::getenv("BETARING_CATALOG_DIR"); dir && *dir)
    c.catalog_dir = dir;
  return c;
}

}  // namespace betaring
