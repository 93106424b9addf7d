#include "betaring/witt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "betaring/error.hpp"

namespace betaring {

WittVector::WittVector(int precision) {
  if (precision < 0) throw std::invalid_argument("negative precision");
  a_.assign(static_cast<std::size_t>(precision), Rat(0));
}

WittVector::WittVector(std::vector<Rat> coeffs) : a_(std::move(coeffs)) {
  for (auto& c : a_) c.canonicalize();
}

WittVector WittVector::zero(int precision) { return WittVector(precision); }

WittVector WittVector::one(int precision) {
  WittVector w(precision);
  if (precision > 0) w.a_[0] = 1;
  return w;
}

std::vector<Rat> WittVector::ghost() const {
  // p_n = sum_{i<n} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
  const std::size_t n = a_.size();
  std::vector<Rat> g(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat v = Rat(static_cast<long>(k)) * a_[k - 1];
    if (k % 2 == 0) v = -v;
    for (std::size_t i = 1; i < k; ++i) {
      Rat t = a_[i - 1] * g[k - i - 1];
      v += i % 2 ? t : Rat(-t);
    }
    g[k - 1] = v;
  }
  return g;
}

WittVector WittVector::from_ghost(const std::vector<Rat>& g) {
  // n e_n = sum_{i=1}^n (-1)^{i-1} e_{n-i} p_i
  const std::size_t n = g.size();
  std::vector<Rat> a(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat v = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rat t = (i == k ? Rat(1) : a[k - i - 1]) * g[i - 1];
      v += i % 2 ? t : Rat(-t);
    }
    v /= Rat(static_cast<long>(k));
    a[k - 1] = v;
  }
  return WittVector(std::move(a));
}

bool WittVector::is_integral() const {
  for (const auto& c : a_)
    if (!betaring::is_integral(c)) return false;
  return true;
}

void WittVector::check_same(const WittVector& o) const {
  if (a_.size() != o.a_.size())
    throw PrecisionMismatch("precision " + std::to_string(a_.size()) + " vs " +
                            std::to_string(o.a_.size()));
}

WittVector WittVector::operator+(const WittVector& o) const {
  check_same(o);
  const std::size_t n = a_.size();
  std::vector<Rat> c(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat v = a_[k - 1] + o.a_[k - 1];
    for (std::size_t i = 1; i < k; ++i) v += a_[i - 1] * o.a_[k - i - 1];
    c[k - 1] = v;
  }
  return WittVector(std::move(c));
}

WittVector WittVector::operator-() const {
  // series inverse: c_k = -(a_k + sum_{0<i<k} a_i c_{k-i})
  const std::size_t n = a_.size();
  std::vector<Rat> c(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat v = a_[k - 1];
    for (std::size_t i = 1; i < k; ++i) v += a_[i - 1] * c[k - i - 1];
    c[k - 1] = -v;
  }
  return WittVector(std::move(c));
}

WittVector WittVector::operator-(const WittVector& o) const { return *this + (-o); }

WittVector WittVector::operator*(const WittVector& o) const {
  check_same(o);
  auto g = ghost();
  const auto h = o.ghost();
  for (std::size_t i = 0; i < g.size(); ++i) g[i] *= h[i];
  WittVector r = from_ghost(g);
  if (is_integral() && o.is_integral())
    for (std::size_t i = 0; i < r.a_.size(); ++i)
      require_integral(r.a_[i], "Witt product coefficient " + std::to_string(i + 1));
  return r;
}

std::string WittVector::to_string() const {
  std::string out = "1";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const Rat& c = a_[i];
    if (c == 0) continue;
    out += c < 0 ? " - " : " + ";
    Rat m = abs(c);
    if (m != 1) out += betaring::to_string(m) + "*";
    out += "t";
    if (i > 0) out += "^" + std::to_string(i + 1);
  }
  return out + " + O(t^" + std::to_string(a_.size() + 1) + ")";
}

// ---------------------------------------------------------------- Delta^m

namespace {

SymTensor counting_route(int n) {
  SymTensor out(Basis::E, 2);
  if (n == 0) {
    out.add({Partition(), Partition()}, 1);
    return out;
  }
  // e_n(XY) = sum_{l,m} B[l][m] m_l(X) m_m(Y), and m = B^{-1} e
  const auto ps = partitions_of(n);
  const auto b = monomial_matrix(Basis::E, n);
  const auto binv = inverse(b);
  const std::size_t s = ps.size();
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t m = 0; m < s; ++m) {
      if (b[l][m] == 0) continue;
      for (std::size_t u = 0; u < s; ++u) {
        if (binv[l][u] == 0) continue;
        for (std::size_t v = 0; v < s; ++v)
          out.add({ps[u], ps[v]}, b[l][m] * binv[l][u] * binv[m][v]);
      }
    }
  return out;
}

const SymTensor& counting_memo(int n) {
  static std::mutex mutex;
  static std::map<int, SymTensor> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, counting_route(n)).first;
  return it->second;
}

}  // namespace

SymTensor delta_m_generator(int n, DeltaRoute route) {
  if (n < 0 || n > 8) throw std::invalid_argument("second diagonal supports n <= 8");
  if (route == DeltaRoute::Counting) return counting_memo(n);
  return delta_m(SymFunc::gen(Basis::E, n));
}

SymTensor delta_m(const SymFunc& f) {
  const SymFunc fp = convert(f, Basis::P);
  SymTensor out(Basis::P, 2);
  for (const auto& [l, c] : fp.terms()) out.add({l, l}, c);
  return convert(out, f.basis());
}

Rat witt_polynomial(int n, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  auto mono = [](const std::vector<Rat>& x, const Partition& l) {
    Rat r = 1;
    for (int part : l.parts()) r *= x.at(static_cast<std::size_t>(part - 1));
    return r;
  };
  if (n < 0 || n > 8) throw std::invalid_argument("Witt polynomials are tabulated for n <= 8");
  Rat total = 0;
  const SymTensor& poly = counting_memo(n);
  for (const auto& [key, c] : poly.terms())
    total += c * mono(a, key[0]) * mono(b, key[1]);
  return total;
}

// ---------------------------------------------------------------- checks

Report check_witt_ring(int precision, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  auto random_vector = [&] {
    std::vector<Rat> c(static_cast<std::size_t>(precision));
    for (auto& x : c) x = dist(rng);
    return WittVector(std::move(c));
  };
  const WittVector zero = WittVector::zero(precision), one = WittVector::one(precision);

  // identity and the first failing a, in order of first appearance
  std::vector<std::pair<std::string, std::string>> results;
  auto note = [&](const std::string& id, bool ok, const WittVector& w) {
    auto it = std::find_if(results.begin(), results.end(),
                           [&](const auto& r) { return r.first == id; });
    if (it == results.end()) it = results.insert(results.end(), {id, ""});
    if (!ok && it->second.empty()) it->second = "a = " + w.to_string();
  };

  for (int s = 0; s < samples; ++s) {
    const WittVector a = random_vector(), b = random_vector(), c = random_vector();
    WittVector ab(precision);
    try {
      ab = a * b;
      note("integrality of a*b", ab.is_integral(), a);
    } catch (const IntegralityViolation&) {
      note("integrality of a*b", false, a);
      continue;
    }
    note("a + b = b + a", a + b == b + a, a);
    note("(a + b) + c = a + (b + c)", (a + b) + c == a + (b + c), a);
    note("a + 0 = a", a + zero == a, a);
    note("a + (-a) = 0", a + (-a) == zero, a);
    note("a*b = b*a", ab == b * a, a);
    note("(a*b)*c = a*(b*c)", ab * c == a * (b * c), a);
    note("a*(b + c) = a*b + a*c", a * (b + c) == ab + a * c, a);
    note("a*1 = a", a * one == a, a);
    note("a*0 = 0", a * zero == zero, a);
    const auto ga = a.ghost(), gb = b.ghost(), gs = (a + b).ghost(), gp = ab.ghost();
    bool additive = true, multiplicative = true;
    for (std::size_t i = 0; i < ga.size(); ++i) {
      additive = additive && gs[i] == ga[i] + gb[i];
      multiplicative = multiplicative && gp[i] == ga[i] * gb[i];
    }
    note("ghost is additive", additive, a);
    note("ghost is multiplicative", multiplicative, a);
    bool poly = true;
    for (int n = 1; n <= precision; ++n)
      poly = poly && ab.coeffs()[static_cast<std::size_t>(n - 1)] == witt_polynomial(n, a.coeffs(), b.coeffs());
    note("(a*b)_n = P_n(a; b)", poly, a);
    if (precision >= 1)
      note("P_1 = a_1 b_1", ab.coeffs()[0] == a.coeffs()[0] * b.coeffs()[0], a);
  }

  Report rep;
  for (const auto& [id, witness] : results)
    expect(rep, id + " (" + std::to_string(samples) + " samples, N = " + std::to_string(precision) + ")",
           witness.empty(), witness);
  return rep;
}

Report check_delta_m(int max_n) {
  Report rep;
  for (int n = 0; n <= max_n; ++n) {
    const SymTensor counted = delta_m_generator(n, DeltaRoute::Counting);
    const SymTensor ghosted = delta_m_generator(n, DeltaRoute::PowerSum);
    expect(rep, "both routes agree on e" + std::to_string(n), counted == ghosted,
           counted.to_string());
    auto map = [](const SymFunc& f) { return delta_m(f); };
    const SymTensor left = apply_to_slot(counted, 0, map);
    const SymTensor right = apply_to_slot(counted, 1, map);
    expect(rep, "second diagonal is coassociative on e" + std::to_string(n), left == right,
           left == right ? "" : left.to_string() + " vs " + right.to_string());
  }
  return rep;
}

}  // namespace betaring
