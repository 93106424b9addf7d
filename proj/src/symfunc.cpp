#include "betaring/symfunc.hpp"

#include <mutex>
#include <stdexcept>

namespace betaring {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::E: return 'e';
    case Basis::H: return 'h';
    case Basis::P: return 'p';
  }
  return '?';
}

Basis parse_basis(char c) {
  switch (c) {
    case 'e': case 'E': return Basis::E;
    case 'h': case 'H': return Basis::H;
    case 'p': case 'P': return Basis::P;
  }
  throw std::invalid_argument(std::string("unknown basis: ") + c);
}

// ---------------------------------------------------------------- SymFunc

SymFunc SymFunc::one(Basis basis) { return monomial(basis, Partition()); }

SymFunc SymFunc::gen(Basis basis, int k) {
  if (k < 0) throw std::invalid_argument("negative generator index");
  if (k == 0) return one(basis);
  return monomial(basis, Partition({k}));
}

SymFunc SymFunc::monomial(Basis basis, const Partition& lambda, Rat coeff) {
  SymFunc f(basis);
  f.add(lambda, coeff);
  return f;
}

Rat SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Rat& c) {
  Rat d = c;
  d.canonicalize();
  if (d == 0) return;
  Rat& v = terms_[lambda];
  v += d;
  if (v == 0) terms_.erase(lambda);
}

bool SymFunc::is_integral() const {
  for (const auto& [l, c] : terms_)
    if (!betaring::is_integral(c)) return false;
  return true;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  for (const auto& [l, c] : convert(o, basis_).terms_) r.add(l, c);
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc r = *this;
  for (const auto& [l, c] : convert(o, basis_).terms_) r.add(l, -c);
  return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const { return multiply(*this, o); }

SymFunc operator*(const Rat& c, const SymFunc& f) {
  SymFunc r(f.basis_);
  for (const auto& [l, v] : f.terms_) r.add(l, c * v);
  return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
  return terms_ == convert(o, basis_).terms_;
}

namespace {

std::string monomial_string(char letter, const Partition& lambda) {
  if (lambda.empty()) return "1";
  std::string out;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += "*";
    out += letter + std::to_string(parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string signed_terms(const std::vector<std::pair<std::string, Rat>>& terms) {
  std::string out;
  for (const auto& [mono, c] : terms) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rat a = abs(c);
    if (mono == "1") out += to_string(a);
    else if (a == 1) out += mono;
    else out += to_string(a) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string SymFunc::to_string() const {
  std::vector<std::pair<std::string, Rat>> t;
  for (const auto& [l, c] : terms_) t.emplace_back(monomial_string(basis_letter(basis_), l), c);
  return signed_terms(t);
}

// ---------------------------------------------------------------- conversion

namespace {

SymFunc monomial_product(const SymFunc& f, const SymFunc& g) {
  SymFunc r(f.basis());
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) r.add(a.merged(b), x * y);
  return r;
}

/// Expansion of one generator of `from` in `to`, memoized.
const SymFunc& generator_in(Basis from, Basis to, int k) {
  static std::mutex mutex;
  static std::map<std::tuple<Basis, Basis, int>, SymFunc> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({from, to, k}); it != memo.end()) return it->second;
  }
  SymFunc v(to);
  if (from == to) {
    v = SymFunc::gen(to, k);
  } else if (to == Basis::P) {
    // h_k = sum p_l / z_l and e_k = sum sign(l) p_l / z_l
    for (const auto& l : partitions_of(k)) {
      Rat c(Int(1), l.centralizer_order());
      c.canonicalize();
      if (from == Basis::E && (k - l.length()) % 2) c = -c;
      v.add(l, c);
    }
  } else if (from == Basis::P) {
    // Newton: p_k = k h_k - sum_{i<k} h_i p_{k-i}
    //         p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    Rat top = k;
    if (to == Basis::E && (k - 1) % 2) top = -top;
    v.add(Partition({k}), top);
    for (int i = 1; i < k; ++i) {
      SymFunc term = monomial_product(SymFunc::gen(to, i), generator_in(Basis::P, to, k - i));
      Rat sign = to == Basis::H ? Rat(-1) : Rat((i - 1) % 2 ? -1 : 1);
      for (const auto& [l, c] : term.terms()) v.add(l, sign * c);
    }
  } else {
    v = convert(generator_in(from, Basis::P, k), to);
  }
  std::lock_guard lock(mutex);
  return memo.emplace(std::make_tuple(from, to, k), std::move(v)).first->second;
}

SymFunc monomial_in(Basis from, const Partition& lambda, Basis to) {
  SymFunc r = SymFunc::one(to);
  for (int part : lambda.parts()) r = monomial_product(r, generator_in(from, to, part));
  return r;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  SymFunc r(target);
  for (const auto& [l, c] : f.terms()) {
    const SymFunc expansion = monomial_in(f.basis(), l, target);
    for (const auto& [m, d] : expansion.terms()) r.add(m, c * d);
  }
  return r;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  return monomial_product(f, convert(g, f.basis()));
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  const SymFunc fp = convert(f, Basis::P), gp = convert(g, Basis::P);
  std::map<int, SymFunc> inner;  // p_k o g
  auto pk_of_g = [&](int k) -> const SymFunc& {
    auto it = inner.find(k);
    if (it != inner.end()) return it->second;
    SymFunc s(Basis::P);
    for (const auto& [l, c] : gp.terms()) s.add(l.scaled(k), c);
    return inner.emplace(k, std::move(s)).first->second;
  };
  SymFunc out(Basis::P);
  for (const auto& [l, c] : fp.terms()) {
    SymFunc t = SymFunc::one(Basis::P);
    for (int part : l.parts()) t = monomial_product(t, pk_of_g(part));
    for (const auto& [m, d] : t.terms()) out.add(m, c * d);
  }
  return out;
}

// ---------------------------------------------------------------- tensors

void SymTensor::add(const std::vector<Partition>& key, const Rat& c) {
  if (static_cast<int>(key.size()) != arity_) throw std::invalid_argument("tensor arity");
  Rat d = c;
  d.canonicalize();
  if (d == 0) return;
  Rat& v = terms_[key];
  v += d;
  if (v == 0) terms_.erase(key);
}

bool SymTensor::operator==(const SymTensor& o) const {
  return arity_ == o.arity_ && terms_ == convert(o, basis_).terms_;
}

std::string SymTensor::to_string() const {
  std::vector<std::pair<std::string, Rat>> t;
  for (const auto& [key, c] : terms_) {
    std::string mono;
    for (const auto& l : key) {
      if (!mono.empty()) mono += " (x) ";
      mono += monomial_string(basis_letter(basis_), l);
    }
    bool all_one = std::all_of(key.begin(), key.end(), [](const Partition& l) { return l.empty(); });
    t.emplace_back(all_one ? "1" : mono, c);
  }
  return signed_terms(t);
}

SymTensor convert(const SymTensor& t, Basis target) {
  if (t.basis() == target) return t;
  SymTensor r(target, t.arity());
  for (const auto& [key, c] : t.terms()) {
    std::map<std::vector<Partition>, Rat> acc{{{}, c}};
    for (const auto& l : key) {
      std::map<std::vector<Partition>, Rat> next;
      const SymFunc expansion = monomial_in(t.basis(), l, target);
      for (const auto& [m, d] : expansion.terms())
        for (const auto& [prefix, v] : acc) {
          auto k = prefix;
          k.push_back(m);
          next[k] += v * d;
        }
      acc = std::move(next);
    }
    for (const auto& [k, v] : acc) r.add(k, v);
  }
  return r;
}

SymTensor coproduct(const SymFunc& f) {
  SymTensor out(Basis::P, 2);
  const SymFunc fp = convert(f, Basis::P);
  for (const auto& [l, c] : fp.terms()) {
    const auto& parts = l.parts();
    const std::size_t len = parts.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      std::vector<int> left, right;
      for (std::size_t i = 0; i < len; ++i)
        ((mask >> i) & 1 ? left : right).push_back(parts[i]);
      out.add({Partition(left), Partition(right)}, c);
    }
  }
  return convert(out, f.basis());
}

SymTensor apply_to_slot(const SymTensor& t, int slot,
                        const std::function<SymTensor(const SymFunc&)>& map) {
  std::optional<SymTensor> out;
  for (const auto& [key, c] : t.terms()) {
    SymTensor image = convert(map(SymFunc::monomial(t.basis(), key[static_cast<std::size_t>(slot)])), t.basis());
    if (!out) out.emplace(t.basis(), t.arity() - 1 + image.arity());
    for (const auto& [ik, d] : image.terms()) {
      std::vector<Partition> k(key.begin(), key.begin() + slot);
      k.insert(k.end(), ik.begin(), ik.end());
      k.insert(k.end(), key.begin() + slot + 1, key.end());
      out->add(k, c * d);
    }
  }
  if (!out) {
    // zero tensor; arity of the image is unknown without a term
    SymTensor probe = map(SymFunc::one(t.basis()));
    return SymTensor(t.basis(), t.arity() - 1 + probe.arity());
  }
  return *out;
}

// ---------------------------------------------------------------- lin

SymFunc lin(const BRing& ring, const BElement& a) {
  SymFunc out(Basis::P);
  for (const auto& [h, x] : a.terms()) {
    const PermGroup& g = ring.rep(h);
    for (const auto& [type, count] : g.cycle_census()) {
      Rat c(x * Int(static_cast<unsigned long>(count)), Int(static_cast<unsigned long>(g.order())));
      c.canonicalize();
      out.add(type, c);
    }
  }
  return out;
}

SymTensor lin2(const BRing& ring, const B2Element& a) {
  SymTensor out(Basis::P, 2);
  for (const auto& [l, x] : a.terms()) {
    const PermGroup& g = (*ring.pair(l.p, l.q))[l.index].rep;
    for (const auto& e : g.elements()) {
      std::vector<int> left, right;
      for (const auto& c : e.cycles())
        (c.front() < l.p ? left : right).push_back(static_cast<int>(c.size()));
      Rat c(x, Int(static_cast<unsigned long>(g.order())));
      c.canonicalize();
      out.add({Partition(left), Partition(right)}, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------- checks

std::vector<std::vector<Rat>> transition_matrix(Basis from, Basis to, int n) {
  const auto ps = partitions_of(n);
  std::vector<std::vector<Rat>> m;
  for (const auto& l : ps) {
    SymFunc f = monomial_in(from, l, to);
    std::vector<Rat> row;
    for (const auto& mu : ps) row.push_back(f.coeff(mu));
    m.push_back(std::move(row));
  }
  return m;
}

/// Matrices with the given row and column sums; entries 0/1 or unbounded.
std::uint64_t count_matrices(std::vector<int> rows, std::vector<int> cols, bool binary) {
  std::function<std::uint64_t(std::size_t)> by_row;
  std::function<std::uint64_t(std::size_t, std::size_t, int)> fill;
  by_row = [&](std::size_t r) -> std::uint64_t {
    if (r == rows.size())
      return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
    return fill(r, 0, rows[r]);
  };
  fill = [&](std::size_t r, std::size_t c, int left) -> std::uint64_t {
    if (c == cols.size()) return left == 0 ? by_row(r + 1) : 0;
    std::uint64_t total = 0;
    int cap = std::min(left, cols[c]);
    if (binary) cap = std::min(cap, 1);
    for (int v = 0; v <= cap; ++v) {
      cols[c] -= v;
      total += fill(r, c + 1, left - v);
      cols[c] += v;
    }
    return total;
  };
  return by_row(0);
}

std::vector<std::vector<Rat>> monomial_matrix(Basis from, int n) {
  if (from == Basis::P) throw std::invalid_argument("power sums have no counting matrix");
  const auto ps = partitions_of(n);
  std::vector<std::vector<Rat>> m;
  for (const auto& l : ps) {
    std::vector<Rat> row;
    for (const auto& mu : ps)
      row.emplace_back(Int(static_cast<unsigned long>(
          count_matrices(l.parts(), mu.parts(), from == Basis::E))));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

Int integer_det(const std::vector<std::vector<Rat>>& m) {
  Rat d = determinant(m);
  return require_integral(d, "determinant of an integer matrix");
}

}  // namespace

bool GeneratorReport::unimodular() const {
  auto unit = [](const Int& d) { return d == 1 || d == -1; };
  return integral && unit(det_e_to_m) && unit(det_h_to_m) && unit(det_e_to_h);
}

GeneratorReport generator_check(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("generator_check supports n <= 8");
  GeneratorReport rep;
  rep.n = n;
  const auto em = monomial_matrix(Basis::E, n);
  const auto hm = monomial_matrix(Basis::H, n);
  auto eh = transition_matrix(Basis::E, Basis::H, n);
  rep.integral = true;
  for (const auto& row : eh)
    for (const auto& c : row) rep.integral = rep.integral && is_integral(c);
  rep.det_e_to_m = integer_det(em);
  rep.det_h_to_m = integer_det(hm);
  rep.det_e_to_h = rep.integral ? integer_det(eh) : Int(0);
  return rep;
}

Mod2Report mod2_check(int r) {
  if (r < 0 || r > 4) throw std::invalid_argument("mod2_check supports r <= 4");
  Mod2Report rep;
  rep.r = r;
  const int k = 1 << r;
  SymFunc h1k = SymFunc::monomial(Basis::H, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
  rep.difference = convert(SymFunc::gen(Basis::P, k), Basis::H) - h1k;
  rep.holds = true;
  for (const auto& [l, c] : rep.difference.terms())
    rep.holds = rep.holds && is_integral(c) && c.get_num() % 2 == 0;
  return rep;
}

}  // namespace betaring
