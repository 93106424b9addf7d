#include "betaring/suites.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "betaring/adams.hpp"
#include "betaring/burnside.hpp"
#include "betaring/error.hpp"
#include "betaring/symfunc.hpp"
#include "betaring/witt.hpp"

namespace betaring {

PermGroup named_group(std::string_view name) {
  auto number = [&](std::string_view digits) {
    int v = 0;
    if (digits.empty()) throw std::invalid_argument("unknown group: " + std::string(name));
    for (char c : digits) {
      if (c < '0' || c > '9') throw std::invalid_argument("unknown group: " + std::string(name));
      v = v * 10 + (c - '0');
    }
    if (v < 1 || v > 8) throw std::invalid_argument("group too large: " + std::string(name));
    return v;
  };
  if (name == "1") return PermGroup::trivial(1);
  if (name == "C2xC2")
    return PermGroup::generate(4, {Permutation::parse_cycles(4, "(0 1)"),
                                   Permutation::parse_cycles(4, "(2 3)")});
  if (name.starts_with("C")) return PermGroup::cyclic(number(name.substr(1)));
  if (name.starts_with("S")) return PermGroup::symmetric(number(name.substr(1)));
  throw std::invalid_argument("unknown group: " + std::string(name));
}

namespace {

/// One line standing for a whole batch: the first failure, or a count.
CheckItem summarize(const std::string& identity, const Report& r) {
  for (const auto& i : r)
    if (i.status == Status::Fail) return {identity, Status::Fail, i.identity + ": " + i.witness};
  return {identity, Status::Pass, std::to_string(r.size()) + " identities"};
}

struct Tally {
  std::size_t checked = 0, skipped = 0;
  std::string failure;
  void add(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failure.empty()) failure = what;
  }
  CheckItem item(const std::string& identity) const {
    std::string w = std::to_string(checked) + " instances";
    if (skipped) w += ", " + std::to_string(skipped) + " over the size cap";
    if (!failure.empty()) return {identity, Status::Fail, failure + " (" + w + ")"};
    return {identity, checked ? Status::Pass : Status::Fail, w};
  }
};

std::vector<ClassRef> classes_between(const BRing& ring, int lo, int hi) {
  std::vector<ClassRef> out;
  for (int d = lo; d <= hi; ++d)
    for (std::size_t i = 0; i < ring.sym(d)->size(); ++i) out.push_back({d, i});
  return out;
}

}  // namespace

std::uint64_t count_colouring_orbits(const PermGroup& h, int r) {
  const int n = h.degree();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(r);
  std::vector<char> seen(total, 0);
  std::uint64_t orbits = 0;
  std::vector<int> t(static_cast<std::size_t>(n)), u(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    ++orbits;
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(r));
      c /= static_cast<std::uint64_t>(r);
    }
    for (const auto& g : h.elements()) {
      for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(g(i))] = t[static_cast<std::size_t>(i)];
      std::uint64_t img = 0, w = 1;
      for (int i = 0; i < n; ++i) {
        img += static_cast<std::uint64_t>(u[static_cast<std::size_t>(i)]) * w;
        w *= static_cast<std::uint64_t>(r);
      }
      seen[img] = 1;
    }
  }
  return orbits;
}

Report suite_catalog(const BRing& ring, int max_n) {
  // classes of subgroups, and all subgroups, of Sym(n)
  static const int classes[] = {1, 1, 2, 4, 11, 19, 56, 96};
  static const long totals[] = {1, 1, 2, 6, 30, 156, 1455, 11300};
  Report rep;
  for (int n = 1; n <= max_n; ++n) {
    auto cat = ring.sym(n);
    expect(rep, "S" + std::to_string(n) + " has " + std::to_string(classes[n]) + " subgroup classes",
           static_cast<int>(cat->size()) == classes[n], std::to_string(cat->size()));
    Int sum = 0;
    const Int order = factorial(static_cast<unsigned>(n));
    for (const auto& c : cat->classes()) sum += order / Int(static_cast<unsigned long>(c.norm_order));
    expect(rep, "sum of [S" + std::to_string(n) + ":N(H)] = " + std::to_string(totals[n]),
           sum == totals[n], to_string(sum));
  }
  return rep;
}

Report suite_axioms_ag(const BRing& base, int max_degree) {
  Report rep;
  // sums of two regular S3-sets raised to a degree-6 wreath need 12^6 tuples
  Config cfg = base.config();
  cfg.size_cap = std::max<std::uint64_t>(cfg.size_cap, 4000000);
  const BRing ring(cfg);
  for (const char* name : {"C2", "C3", "C4", "S3"}) {
    auto cat = burnside_catalog(name, named_group(name), cfg);
    std::vector<BurnsideElement> trans, eff;
    for (std::size_t i = 0; i < cat->size(); ++i) trans.push_back(BurnsideElement::basis(cat, i));
    eff = trans;
    for (std::size_t i = 0; i < trans.size(); ++i)
      for (std::size_t j = i; j < trans.size(); ++j) eff.push_back(trans[i] + trans[j]);

    Tally add;
    for (const auto& h : classes_between(ring, 1, max_degree)) {
      const BElement bh = BElement::term(h);
      const B2Element d = ring.diagonal(bh);
      for (const auto& x : eff)
        for (const auto& y : trans) {
          const bool ok = ring.eval_burnside(bh, x + y) == ring.eval2_burnside(d, x, y);
          add.add(ok, ring.label(h) + " at " + x.to_string() + ", " + y.to_string());
        }
    }
    rep.push_back(add.item(std::string("beta_H(x + y) = Delta(beta_H)(x, y) on A(") + name + ")"));

    Tally comp;
    for (const auto& h : classes_between(ring, 1, max_degree))
      for (const auto& k : classes_between(ring, 1, max_degree)) {
        if (h.degree * k.degree > cfg.max_degree) continue;
        const BElement hk = ring.star_basis(h, k);
        for (const auto& x : eff) {
          try {
            const auto lhs = ring.eval_burnside(hk, x);
            const auto rhs = ring.eval_burnside(BElement::term(h), ring.eval_burnside(BElement::term(k), x));
            comp.add(lhs == rhs, ring.label(h) + " * " + ring.label(k) + " at " + x.to_string());
          } catch (const SizeCap&) {
            ++comp.skipped;
          }
        }
      }
    rep.push_back(comp.item(std::string("beta_{H wr K}(x) = beta_H(beta_K(x)) on A(") + name + ")"));
  }
  return rep;
}

Report suite_operator_ring(const BRing& r, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  auto random_element = [&](int maxdeg) {
    BElement e;
    for (int t = 0; t < 3; ++t) {
      const int d = std::uniform_int_distribution<int>(0, maxdeg)(rng);
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, r.sym(d)->size() - 1)(rng);
      e.add({d, i}, Int(std::uniform_int_distribution<int>(-3, 3)(rng)));
    }
    return e;
  };
  Tally comm, assoc, dist, unit;
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_element(2), y = random_element(2), z = random_element(2);
    const std::string w = r.to_string(x) + ", " + r.to_string(y) + ", " + r.to_string(z);
    comm.add(r.product(x, y) == r.product(y, x), w);
    assoc.add(r.product(r.product(x, y), z) == r.product(x, r.product(y, z)), w);
    dist.add(r.product(x, y + z) == r.product(x, y) + r.product(x, z), w);
    unit.add(r.product(x, r.unit()) == x, w);
  }
  rep.push_back(comm.item("B is commutative"));
  rep.push_back(assoc.item("B is associative"));
  rep.push_back(dist.item("B is distributive"));
  rep.push_back(unit.item("beta^0 is the unit of B"));

  Tally dmul, dco;
  std::vector<BElement> basis;
  for (const auto& c : classes_between(r, 0, 3)) basis.push_back(BElement::term(c));
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (x.max_degree() + y.max_degree() <= 5)
        dmul.add(r.diagonal(r.product(x, y)) == r.product2(r.diagonal(x), r.diagonal(y)),
                 r.to_string(x) + ", " + r.to_string(y));
  for (const auto& c : classes_between(r, 0, 5)) {
    const BElement x = BElement::term(c);
    dco.add(r.delta_left_then(x) == r.delta_right_then(x), r.label(c));
  }
  rep.push_back(dmul.item("Delta is multiplicative"));
  rep.push_back(dco.item("Delta is coassociative"));

  Tally left_unit, right_unit;
  for (const auto& c : classes_between(r, 0, r.config().max_degree)) {
    const BElement x = BElement::term(c);
    left_unit.add(r.star(r.beta(1), x) == x, r.label(c));
    right_unit.add(r.star(x, r.beta(1)) == x, r.label(c));
  }
  rep.push_back(left_unit.item("beta^1 * a = a"));
  rep.push_back(right_unit.item("a * beta^1 = a"));

  const std::vector<BElement> as{r.beta(1), r.beta(2), r.regular(2), r.beta(2) - r.regular(2)};
  const std::vector<BElement> bs{r.beta(1), r.regular(2), r.beta(1) + r.beta(2), r.beta(2) - r.beta(1),
                                 r.unit() + r.beta(1)};
  Tally ladd, lmul;
  for (const auto& a1 : as)
    for (const auto& a2 : as)
      for (const auto& b : bs) {
        if (b.max_degree() * 2 > 3) continue;
        const std::string w = r.to_string(a1) + ", " + r.to_string(a2) + ", " + r.to_string(b);
        ladd.add(r.star(a1 + a2, b) == r.star(a1, b) + r.star(a2, b), w);
        if (a1.max_degree() + a2.max_degree() <= 3)
          lmul.add(r.star(r.product(a1, a2), b) == r.product(r.star(a1, b), r.star(a2, b)), w);
      }
  rep.push_back(ladd.item("(a + a') * b = a * b + a' * b"));
  rep.push_back(lmul.item("(a a') * b = (a * b)(a' * b)"));

  Tally sassoc;
  const std::vector<std::array<BElement, 3>> triples{
      {r.beta(2), r.beta(1) + r.unit(), r.beta(2)},
      {r.beta(2), r.beta(2), r.regular(1)},
      {r.regular(2), r.beta(1), r.beta(3)},
      {r.beta(3), r.beta(2), r.beta(1)},
      {r.beta(2) - r.regular(2), r.regular(1), r.beta(3)},
  };
  for (const auto& [a, b, c] : triples)
    sassoc.add(r.star(r.star(a, b), c) == r.star(a, r.star(b, c)),
               r.to_string(a) + ", " + r.to_string(b) + ", " + r.to_string(c));
  rep.push_back(sassoc.item("(a * b) * c = a * (b * c)"));
  return rep;
}

Report suite_adams(const BRing& ring, int max_n) {
  Report rep;
  for (int n = 1; n <= max_n; ++n) {
    AdamsTable t;
    try {
      t = solve_psi_K(ring, n);
    } catch (const IntegralityViolation& e) {
      expect(rep, "Psi_K integral in degree " + std::to_string(n), false, e.what());
      continue;
    }
    rep.push_back(summarize("Psi_K integral, back-substitution exact, degree " + std::to_string(n),
                            check_adams_table(ring, t)));
  }
  const AdamsTable t2 = solve_psi_K(ring, 2);
  const BElement e2 = ring.regular(2), s2 = ring.beta(2);
  expect(rep, "Psi_e = beta_e in degree 2", t2.psi[0] == e2, ring.to_string(t2.psi[0]));
  expect(rep, "Psi_S2 = 2 beta_S2 - beta_e", t2.psi[1] == Int(2) * s2 - e2, ring.to_string(t2.psi[1]));
  expect(rep, "Psi_S2 = Psi^2", t2.psi[1] == psi_upper(ring, 2), ring.to_string(psi_upper(ring, 2)));
  expect(rep, "Psi_e = Psi_(1,1) in degree 2", t2.psi[0] == psi_partition(ring, Partition({1, 1})));

  for (int n = 1; n <= max_n; ++n)
    rep.push_back(summarize("Psi_pi averages and lin Psi_H, degree " + std::to_string(n),
                            check_prop_adams(ring, n)));
  Report lin_k;
  const auto psi = psi_upper_all(ring, max_n);
  for (int k = 1; k <= max_n; ++k) {
    const SymFunc image = lin(ring, psi[static_cast<std::size_t>(k)]);
    expect(lin_k, "lin Psi^" + std::to_string(k) + " = p" + std::to_string(k),
           image == SymFunc::gen(Basis::P, k), image.to_string());
  }
  append(rep, lin_k);
  return rep;
}

Report suite_polya(const BRing& ring, int max_degree) {
  Report rep;
  Tally t;
  for (const auto& h : classes_between(ring, 1, max_degree))
    for (const auto& k : classes_between(ring, 1, max_degree)) {
      if (h.degree * k.degree > max_degree) continue;
      const SymFunc lhs = lin(ring, ring.star_basis(h, k));
      const SymFunc rhs = plethysm(lin(ring, BElement::term(h)), lin(ring, BElement::term(k)));
      t.add(lhs == rhs, ring.label(h) + " * " + ring.label(k));
    }
  rep.push_back(t.item("lin(beta_H * beta_K) = lin(beta_H) o lin(beta_K)"));

  const SymFunc h2 = SymFunc::gen(Basis::H, 2);
  SymFunc want(Basis::P);
  want.add(Partition({1, 1, 1, 1}), Rat(1, 8));
  want.add(Partition({2, 1, 1}), Rat(2, 8));
  want.add(Partition({2, 2}), Rat(3, 8));
  want.add(Partition({4}), Rat(2, 8));
  const SymFunc got = lin(ring, ring.star(ring.beta(2), ring.beta(2)));
  expect(rep, "lin(beta_S2 * beta_S2) = (p1^4 + 2 p1^2 p2 + 3 p2^2 + 2 p4)/8", got == want, got.to_string());
  expect(rep, "h2 o h2 = (p1^4 + 2 p1^2 p2 + 3 p2^2 + 2 p4)/8", plethysm(h2, h2) == want,
         plethysm(h2, h2).to_string());
  return rep;
}

Report suite_evalz(const BRing& ring, int max_n, int max_r) {
  Report rep;
  Tally t;
  for (const auto& h : classes_between(ring, 1, max_n))
    for (int r = 0; r <= max_r; ++r) {
      const Int formula = ring.eval_z(BElement::term(h), r);
      const Int direct(static_cast<unsigned long>(count_colouring_orbits(ring.rep(h), r)));
      t.add(formula == direct, ring.label(h) + " at r = " + std::to_string(r) + ": " +
                                   to_string(formula) + " vs " + to_string(direct));
    }
  rep.push_back(t.item("beta_H(r) = |{r-set}^n / H|, n <= " + std::to_string(max_n)));
  Tally neg;
  for (int r = 0; r <= 6; ++r) {
    const auto one = BurnsideElement::one(burnside_catalog("1", PermGroup::trivial(1), ring.config()));
    const Int v = ring.eval_burnside(ring.beta(2), Int(-r) * one).coords()[0];
    neg.add(v == (r * r - r) / 2 && ring.eval_z(ring.beta(2), -r) == v, "r = " + std::to_string(r));
  }
  rep.push_back(neg.item("beta_S2(-r) = (r^2 - r)/2"));
  return rep;
}

Report suite_witt(std::uint64_t seed) {
  Report rep;
  append(rep, check_witt_ring(8, 100, seed));
  append(rep, check_delta_m(5));
  std::vector<Rat> one_t{1, 0};
  expect(rep, "(1 + t) + (1 + t) = 1 + 2t + t^2",
         WittVector(one_t) + WittVector(one_t) == WittVector(std::vector<Rat>{2, 1}));
  expect(rep, "(1 + t)(1 + t) = 1 + t", WittVector::one(2) * WittVector::one(2) == WittVector::one(2));
  return rep;
}

Report suite_mod2(int max_r) {
  Report rep;
  for (int r = 1; r <= max_r; ++r) {
    const Mod2Report m = mod2_check(r);
    expect(rep, "p" + std::to_string(1 << r) + " = h1^" + std::to_string(1 << r) + " mod 2", m.holds,
           m.difference.to_string());
  }
  return rep;
}

Report suite_gcd(const BRing& ring, int max_k) {
  Report rep;
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "S3"}) {
    const PermGroup g = named_group(name);
    for (int k = 1; k <= max_k; ++k)
      rep.push_back(summarize("Psi^" + std::to_string(k) + " on A(" + name + ")",
                              check_gcd(ring, name, g, k)));
  }
  auto c3 = burnside_catalog("C3", named_group("C3"), ring.config());
  const BElement psi2 = psi_upper(ring, 2);
  Tally id;
  for (std::size_t i = 0; i < c3->size(); ++i) {
    const auto x = BurnsideElement::basis(c3, i);
    id.add(ring.eval_burnside(psi2, x) == x, x.to_string());
  }
  rep.push_back(id.item("Psi^2 = id on A(C3)"));
  return rep;
}

Report suite_lambda(int max_n) {
  Report rep;
  for (int n = 1; n <= max_n; ++n) {
    const GeneratorReport g = generator_check(n);
    expect(rep, "e, h and m bases unimodular in degree " + std::to_string(n), g.unimodular(),
           "det e->m " + to_string(g.det_e_to_m) + ", h->m " + to_string(g.det_h_to_m) + ", e->h " +
               to_string(g.det_e_to_h));
    const Rat det_ph = determinant(transition_matrix(Basis::P, Basis::H, n));
    expect(rep, "p basis spans over Q in degree " + std::to_string(n), det_ph != 0,
           "det p->h " + to_string(det_ph));
  }
  for (int n = 0; n <= max_n; ++n)
    for (Basis b : {Basis::H, Basis::E}) {
      SymTensor want(b, 2);
      for (int p = 0; p <= n; ++p) {
        std::vector<Partition> key;
        key.push_back(p ? Partition({p}) : Partition());
        key.push_back(n - p ? Partition({n - p}) : Partition());
        want.add(key, 1);
      }
      const SymTensor got = coproduct(SymFunc::gen(b, n));
      const std::string g(1, basis_letter(b));
      expect(rep, "Delta " + g + std::to_string(n) + " = sum " + g + "_p (x) " + g + "_q", got == want,
             got.to_string());
    }
  return rep;
}

Report suite_psi_star(const BRing& ring, int max_kl) { return psi_star_report(ring, max_kl); }

std::vector<std::string> suite_names() {
  return {"catalog", "axioms-AG", "operator-ring", "adams", "polya", "evalz",
          "witt",    "mod2",      "gcd",           "lambda", "psi-star"};
}

Report run_suite(const BRing& ring, std::string_view name, const SuiteOptions& opt) {
  const int cap = ring.config().max_degree;
  auto pick = [&](int dflt) { return std::min(opt.n < 0 ? dflt : opt.n, cap); };
  if (name == "catalog") return suite_catalog(ring, pick(6));
  if (name == "axioms-AG") return suite_axioms_ag(ring, pick(3));
  if (name == "operator-ring") return suite_operator_ring(ring, opt.seed);
  if (name == "adams") return suite_adams(ring, pick(ring.config().long_running ? 6 : 5));
  if (name == "polya") return suite_polya(ring, pick(6));
  if (name == "evalz") return suite_evalz(ring, pick(4), 4);
  if (name == "witt") return suite_witt(opt.seed);
  if (name == "mod2") return suite_mod2(opt.n < 0 ? 3 : std::min(opt.n, 4));
  if (name == "gcd") return suite_gcd(ring, pick(6));
  if (name == "lambda") return suite_lambda(opt.n < 0 ? 6 : std::min(opt.n, 8));
  if (name == "psi-star") return suite_psi_star(ring, pick(4));
  if (name == "all") {
    Report all;
    for (const auto& s : suite_names()) append(all, run_suite(ring, s, opt));
    return all;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace betaring
