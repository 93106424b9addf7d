#pragma once

#include <map>
#include <vector>

#include "betaring/bring.hpp"
#include "betaring/partition.hpp"
#include "betaring/report.hpp"
#include "betaring/scalar.hpp"

namespace betaring {

/// Psi^k from t beta_t' / beta_t with beta_t = sum beta^n t^n, via
/// Psi^k = k beta^k - sum_{0<i<k} beta^i Psi^{k-i}.
BElement psi_upper(const BRing& ring, int k);
/// Psi^1 ... Psi^k in one pass; entry 0 is zero.
std::vector<BElement> psi_upper_all(const BRing& ring, int k);
/// Psi_pi = Psi^{n_1} Psi^{n_2} ...
BElement psi_partition(const BRing& ring, const Partition& pi);

/// Solution Psi_K of beta_H = sum_K mark(H, K) / |N(K)| Psi_K in degree n.
/// psi[k] belongs to class k of Sym(n).
struct AdamsTable {
  int n = 0;
  std::vector<BElement> psi;
};

/// Forward substitution over the lower triangular table of marks. Throws
/// IntegralityViolation if some Psi_K leaves B.
AdamsTable solve_psi_K(const BRing& ring, int n);

/// Substitution back into the system and invertibility of the marks matrix.
Report check_adams_table(const BRing& ring, const AdamsTable& table);

/// Psi_pi as an average of the Psi_H of type pi, exactly over Q, and the
/// image of every Psi_H under lin.
Report check_prop_adams(const BRing& ring, int n);

/// Psi^k = Psi^{gcd(k, |G|)} on every transitive G-set.
Report check_gcd(const BRing& ring, const std::string& name, const PermGroup& g, int k);

/// Psi^k * Psi^l against Psi^{kl} in B for kl <= max_kl. Info lines only.
Report psi_star_report(const BRing& ring, int max_kl);

/// Exact rational combinations of the beta_H.
using RationalB = std::map<ClassRef, Rat>;
RationalB to_rational(const BElement& a);

}  // namespace betaring
