#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace betaring {

/// Arbitrary-precision integers and rationals. Every coefficient in the
/// library lives in one of these; nothing is ever rounded.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

/// Throws IntegralityViolation with `what` in the message when q is not an
/// integer.
Int require_integral(const Rat& q, const std::string& what);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

/// Determinant of a square rational matrix (fraction-free elimination).
Rat determinant(std::vector<std::vector<Rat>> m);

/// Inverse of a square rational matrix; throws std::domain_error if singular.
std::vector<std::vector<Rat>> inverse(std::vector<std::vector<Rat>> m);

}  // namespace betaring
