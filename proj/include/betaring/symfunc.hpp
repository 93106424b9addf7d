#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "betaring/bring.hpp"
#include "betaring/partition.hpp"
#include "betaring/scalar.hpp"

namespace betaring {

/// Elementary, complete homogeneous or power-sum generators.
enum class Basis { E, H, P };

char basis_letter(Basis b);
Basis parse_basis(char c);

/// A symmetric function as a polynomial in the generators of one basis:
/// the partition lambda stands for the monomial g_{lambda_1} g_{lambda_2} ...
/// Zero coefficients are never stored.
class SymFunc {
 public:
  explicit SymFunc(Basis basis = Basis::P) : basis_(basis) {}

  static SymFunc one(Basis basis);
  /// The generator e_k, h_k or p_k.
  static SymFunc gen(Basis basis, int k);
  static SymFunc monomial(Basis basis, const Partition& lambda, Rat coeff = 1);

  Basis basis() const { return basis_; }
  const std::map<Partition, Rat>& terms() const { return terms_; }
  Rat coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const Rat& coeff);
  bool is_zero() const { return terms_.empty(); }
  /// Every coefficient in this basis is an integer.
  bool is_integral() const;

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  friend SymFunc operator*(const Rat& c, const SymFunc& f);
  /// Equality as symmetric functions, whatever the two bases.
  bool operator==(const SymFunc& o) const;

  std::string to_string() const;

 private:
  Basis basis_;
  std::map<Partition, Rat> terms_;
};

SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
/// f o g via p_k o g = g(p_i -> p_{ik}), extended as an algebra map in f.
/// The result is in the P basis.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Element of the tensor power of Lambda, all slots in one basis.
class SymTensor {
 public:
  SymTensor(Basis basis, int arity) : basis_(basis), arity_(arity) {}

  Basis basis() const { return basis_; }
  int arity() const { return arity_; }
  const std::map<std::vector<Partition>, Rat>& terms() const { return terms_; }
  void add(const std::vector<Partition>& key, const Rat& coeff);
  bool operator==(const SymTensor& o) const;
  std::string to_string() const;

 private:
  Basis basis_;
  int arity_;
  std::map<std::vector<Partition>, Rat> terms_;
};

SymTensor convert(const SymTensor& t, Basis target);
/// Delta with p_k primitive; both slots in the basis of f.
SymTensor coproduct(const SymFunc& f);
/// Apply a map Lambda -> Lambda^{(x) k} to one slot of a tensor.
SymTensor apply_to_slot(const SymTensor& t, int slot,
                        const std::function<SymTensor(const SymFunc&)>& map);

/// Cycle index |H|^{-1} sum_h p_{ct(h)}, extended linearly.
SymFunc lin(const BRing& ring, const BElement& a);
/// Cycle index in two families of variables: cycles on the first p points
/// go to the left slot, cycles on the last q points to the right.
SymTensor lin2(const BRing& ring, const B2Element& a);

/// Square matrix whose row lambda holds the coefficients of the monomial
/// g_lambda of `from` in the basis `to`, partitions of n in partitions_of order.
std::vector<std::vector<Rat>> transition_matrix(Basis from, Basis to, int n);

/// Matrices of nonnegative integers (0-1 when binary) with the given row and
/// column sums.
std::uint64_t count_matrices(std::vector<int> rows, std::vector<int> cols, bool binary);

/// Row lambda holds the coefficients of e_lambda (0-1 matrix counts) or
/// h_lambda (nonnegative integer matrix counts) in the monomial basis m_mu.
std::vector<std::vector<Rat>> monomial_matrix(Basis from, int n);

struct GeneratorReport {
  int n = 0;
  /// e_lambda and h_lambda in the monomial basis m_mu (0-1 and nonnegative
  /// integer matrix counts), and e_lambda in the h basis.
  Int det_e_to_m, det_h_to_m, det_e_to_h;
  bool integral = false;
  bool unimodular() const;
};
GeneratorReport generator_check(int n);

struct Mod2Report {
  int r = 0;
  /// p_{2^r} - h_1^{2^r} in integer h-coordinates.
  SymFunc difference{Basis::H};
  bool holds = false;
};
Mod2Report mod2_check(int r);

}  // namespace betaring
