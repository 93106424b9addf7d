#include "betaring/adams.hpp"

#include <numeric>
#include <stdexcept>

#include "betaring/burnside.hpp"
#include "betaring/error.hpp"
#include "betaring/symfunc.hpp"

namespace betaring {

RationalB to_rational(const BElement& a) {
  RationalB r;
  for (const auto& [c, v] : a.terms()) r[c] = Rat(v);
  return r;
}

namespace {

void add_to(RationalB& r, ClassRef c, const Rat& v) {
  if (v == 0) return;
  Rat& x = r[c];
  x += v;
  if (x == 0) r.erase(c);
}

std::string rational_string(const BRing& ring, const RationalB& r) {
  if (r.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : r) {
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    Rat a = abs(v);
    if (a != 1) out += to_string(a) + "*";
    out += ring.label(c);
  }
  return out;
}

bool is_cyclic(const PermGroup& g) {
  for (const auto& e : g.elements()) {
    std::uint64_t o = 1;
    for (const auto& c : e.cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
    if (o == g.order()) return true;
  }
  return false;
}

}  // namespace

std::vector<BElement> psi_upper_all(const BRing& ring, int k) {
  if (k < 0) throw std::invalid_argument("negative Adams index");
  if (k > ring.config().max_degree)
    throw DegreeCap("Psi^" + std::to_string(k) + " exceeds max degree " +
                    std::to_string(ring.config().max_degree));
  std::vector<BElement> psi(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j <= k; ++j) {
    BElement v = Int(j) * ring.beta(j);
    for (int i = 1; i < j; ++i)
      v = v - ring.product(ring.beta(i), psi[static_cast<std::size_t>(j - i)]);
    psi[static_cast<std::size_t>(j)] = std::move(v);
  }
  return psi;
}

BElement psi_upper(const BRing& ring, int k) {
  if (k == 0) return BElement();
  return psi_upper_all(ring, k).back();
}

BElement psi_partition(const BRing& ring, const Partition& pi) {
  if (pi.size() > ring.config().max_degree)
    throw DegreeCap("Psi_" + pi.to_string() + " exceeds max degree");
  const int top = pi.empty() ? 0 : pi.parts().front();
  const auto psi = psi_upper_all(ring, top);
  BElement r = ring.unit();
  for (int part : pi.parts()) r = ring.product(r, psi[static_cast<std::size_t>(part)]);
  return r;
}

AdamsTable solve_psi_K(const BRing& ring, int n) {
  auto cat = ring.sym(n);
  const std::size_t size = cat->size();
  std::vector<RationalB> sol(size);
  AdamsTable t;
  t.n = n;
  for (std::size_t h = 0; h < size; ++h) {
    // diagonal coefficient mark(H,H)/|N(H)| = 1/|H|
    RationalB v{{ClassRef{n, h}, Rat(1)}};
    for (std::size_t k = 0; k < h; ++k) {
      const std::int64_t m = cat->mark(h, k);
      if (m == 0) continue;
      Rat c(Int(static_cast<long>(m)), Int(static_cast<unsigned long>((*cat)[k].norm_order)));
      c.canonicalize();
      for (const auto& [cl, x] : sol[k]) add_to(v, cl, -c * x);
    }
    BElement psi;
    for (auto& [cl, x] : v) {
      x *= Int(static_cast<unsigned long>((*cat)[h].order));
      psi.add(cl, require_integral(x, "Psi_K coefficient for " + (*cat)[h].label));
    }
    sol[h] = to_rational(psi);
    t.psi.push_back(std::move(psi));
  }
  return t;
}

Report check_adams_table(const BRing& ring, const AdamsTable& table) {
  Report rep;
  auto cat = ring.sym(table.n);
  const std::size_t size = cat->size();
  std::vector<std::vector<Rat>> m(size, std::vector<Rat>(size));
  for (std::size_t h = 0; h < size; ++h) {
    RationalB back;
    for (std::size_t k = 0; k < size; ++k) {
      Rat c(Int(static_cast<long>(cat->mark(h, k))),
            Int(static_cast<unsigned long>((*cat)[k].norm_order)));
      c.canonicalize();
      m[h][k] = c;
      for (const auto& [cl, x] : table.psi[k].terms()) add_to(back, cl, c * Rat(x));
    }
    const RationalB want{{ClassRef{table.n, h}, Rat(1)}};
    expect(rep, "sum_K mark/|N(K)| Psi_K = beta_" + ring.label(ClassRef{table.n, h}), back == want,
           back == want ? "" : rational_string(ring, back));
  }
  const Rat det = determinant(m);
  expect(rep, "marks system of S" + std::to_string(table.n) + " is invertible", det != 0,
         "det = " + to_string(det));
  return rep;
}

Report check_prop_adams(const BRing& ring, int n) {
  Report rep;
  auto cat = ring.sym(n);
  const AdamsTable table = solve_psi_K(ring, n);

  for (const auto& pi : partitions_of(n)) {
    const Rat zpi(pi.centralizer_order());
    RationalB avg;
    for (std::size_t h = 0; h < cat->size(); ++h) {
      if ((*cat)[h].ptype != pi) continue;
      Rat c = zpi / Rat(Int(static_cast<unsigned long>((*cat)[h].norm_order)));
      for (const auto& [cl, x] : table.psi[h].terms()) add_to(avg, cl, c * Rat(x));
    }
    const RationalB lhs = to_rational(psi_partition(ring, pi));
    expect(rep, "Psi_" + pi.to_string() + " = sum over type " + pi.to_string(), lhs == avg,
           lhs == avg ? "" : rational_string(ring, lhs) + " vs " + rational_string(ring, avg));
  }

  for (std::size_t h = 0; h < cat->size(); ++h) {
    const auto& cls = (*cat)[h];
    const SymFunc image = lin(ring, table.psi[h]);
    SymFunc want(Basis::P);
    std::string what;
    if (is_cyclic(cls.rep)) {
      Rat c(Int(static_cast<unsigned long>(cls.norm_order)), cls.ptype.centralizer_order());
      c.canonicalize();
      want = SymFunc::monomial(Basis::P, cls.ptype, c);
      what = "lin Psi_" + ring.label(ClassRef{n, h}) + " = " + to_string(c) + " p" + cls.ptype.to_string();
    } else {
      what = "lin Psi_" + ring.label(ClassRef{n, h}) + " = 0";
    }
    expect(rep, what, image == want, image.to_string());
  }
  return rep;
}

Report check_gcd(const BRing& ring, const std::string& name, const PermGroup& g, int k) {
  Report rep;
  auto cat = burnside_catalog(name, g, ring.config());
  const auto order = static_cast<int>(g.order());
  const int d = std::gcd(k, order);
  const std::string id = "Psi^" + std::to_string(k) + " = Psi^" + std::to_string(d) + " on A(" + name + ")";
  if (k == d) {
    expect(rep, id, true, "k divides |G|");
    return rep;
  }
  const auto psi = psi_upper_all(ring, k);
  for (std::size_t i = 0; i < cat->size(); ++i) {
    const auto x = BurnsideElement::basis(cat, i);
    const auto a = ring.eval_burnside(psi[static_cast<std::size_t>(k)], x);
    const auto b = ring.eval_burnside(psi[static_cast<std::size_t>(d)], x);
    expect(rep, id + " at [G/" + (*cat)[i].label + "]", a == b,
           a.to_string() + (a == b ? "" : " vs " + b.to_string()));
  }
  return rep;
}

Report psi_star_report(const BRing& ring, int max_kl) {
  Report rep;
  const auto psi = psi_upper_all(ring, max_kl);
  for (int k = 1; k <= max_kl; ++k)
    for (int l = 1; k * l <= max_kl; ++l) {
      const BElement lhs = ring.star(psi[static_cast<std::size_t>(k)], psi[static_cast<std::size_t>(l)]);
      const BElement& rhs = psi[static_cast<std::size_t>(k * l)];
      rep.push_back({"Psi^" + std::to_string(k) + " * Psi^" + std::to_string(l) + " vs Psi^" +
                         std::to_string(k * l),
                     Status::Info,
                     lhs == rhs ? "equal"
                                : "differ by " + ring.to_string(lhs - rhs) +
                                      (lin(ring, lhs - rhs).is_zero() ? "; lin of the difference is 0"
                                                                      : "; lin of the difference is nonzero")});
    }
  return rep;
}

}  // namespace betaring
