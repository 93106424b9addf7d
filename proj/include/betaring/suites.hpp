#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betaring/bring.hpp"
#include "betaring/report.hpp"

namespace betaring {

/// The small groups used for A(G) checks: "1", "C<n>", "S<n>", "C2xC2".
PermGroup named_group(std::string_view name);

/// Verification batteries shared by the CLI and the acceptance runner.
struct SuiteOptions {
  /// Largest degree to check; -1 picks the suite's default.
  int n = -1;
  std::uint64_t seed = 20260415;
};

/// Class counts of Sym(n) and the orbit-sum check against subgroup totals.
Report suite_catalog(const BRing& ring, int max_n);
/// Addition and composition axioms of the action of B on A(G).
Report suite_axioms_ag(const BRing& ring, int max_degree);
/// Ring axioms of B, the diagonal, and the operator-ring laws of star.
Report suite_operator_ring(const BRing& ring, std::uint64_t seed);
/// Psi_K tables, closed values in degree 2, and the relations between the
/// Adams operations.
Report suite_adams(const BRing& ring, int max_n);
/// lin(beta_H * beta_K) = lin(beta_H) o lin(beta_K).
Report suite_polya(const BRing& ring, int max_degree);
/// beta_H(r) against direct orbit counting, and negative arguments.
Report suite_evalz(const BRing& ring, int max_n, int max_r);
Report suite_witt(std::uint64_t seed);
Report suite_mod2(int max_r);
Report suite_gcd(const BRing& ring, int max_k);
/// Integrality and unimodularity of the e/h bases, Delta on h_n and e_n.
Report suite_lambda(int max_n);
/// Psi^k * Psi^l against Psi^{kl}; info lines only.
Report suite_psi_star(const BRing& ring, int max_kl);

std::vector<std::string> suite_names();
/// Throws std::invalid_argument on an unknown name.
Report run_suite(const BRing& ring, std::string_view name, const SuiteOptions& opt = {});

/// Number of orbits of H on r-colourings of its points, by walking all of
/// them.
std::uint64_t count_colouring_orbits(const PermGroup& h, int r);

}  // namespace betaring
