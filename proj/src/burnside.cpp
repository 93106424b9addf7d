#include "betaring/burnside.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "betaring/error.hpp"

namespace betaring {

std::shared_ptr<const Catalog> burnside_catalog(const std::string& name,
                                                const PermGroup& g,
                                                const Config& cfg) {
  return CatalogRegistry::global().get(Ambient::custom(name, g), cfg);
}

// ---------------------------------------------------------------- GSet

namespace {

/// Generator indices whose product, rightmost applied first, is g.
std::vector<std::size_t> word_for(const PermGroup& grp, const Permutation& g) {
  const auto target = grp.index_of(g);
  if (!target) throw NotASubgroup("element " + g.to_cycle_string() + " not in G");
  const auto& elems = grp.elements();
  const auto& gens = grp.generators();
  std::vector<std::ptrdiff_t> parent(elems.size(), -2);
  std::vector<std::size_t> via(elems.size(), 0);
  const std::size_t root = *grp.index_of(Permutation(grp.degree()));
  parent[root] = -1;
  std::vector<std::size_t> queue{root};
  for (std::size_t qi = 0; qi < queue.size() && parent[*target] == -2; ++qi) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::size_t child = *grp.index_of(gens[s] * elems[queue[qi]]);
      if (parent[child] != -2) continue;
      parent[child] = static_cast<std::ptrdiff_t>(queue[qi]);
      via[child] = s;
      queue.push_back(child);
    }
  }
  std::vector<std::size_t> word;  // outermost generator first
  for (std::size_t at = *target; parent[at] != -1;
       at = static_cast<std::size_t>(parent[at]))
    word.push_back(via[at]);
  return word;
}

}  // namespace

GSet::GSet(std::shared_ptr<const Catalog> catalog, std::size_t size,
           std::vector<Table> action)
    : catalog_(std::move(catalog)), size_(size), action_(std::move(action)) {
  if (action_.size() != group().generators().size())
    throw std::invalid_argument("one action table per generator required");
  for (const auto& t : action_) {
    if (t.size() != size_) throw std::invalid_argument("action table size");
    std::vector<char> hit(size_, 0);
    for (auto y : t) {
      if (y >= size_ || hit[y]) throw std::invalid_argument("action is not a bijection");
      hit[y] = 1;
    }
  }
}

GSet GSet::empty(std::shared_ptr<const Catalog> catalog) {
  std::size_t r = catalog->group().generators().size();
  return GSet(std::move(catalog), 0, std::vector<Table>(r));
}

GSet GSet::point(std::shared_ptr<const Catalog> catalog) {
  std::size_t r = catalog->group().generators().size();
  return GSet(std::move(catalog), 1, std::vector<Table>(r, Table{0}));
}

GSet GSet::cosets(std::shared_ptr<const Catalog> catalog, const PermGroup& u) {
  const PermGroup& g = catalog->group();
  if (!u.is_subgroup_of(g)) throw NotASubgroup("U is not a subgroup of G");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g.order(), kUnset);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g.elements()[i]);
    for (const auto& x : u.elements()) coset_of[*g.index_of(reps.back() * x)] = c;
  }
  std::vector<Table> action;
  for (const auto& s : g.generators()) {
    Table t(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      t[c] = coset_of[*g.index_of(s * reps[c])];
    action.push_back(std::move(t));
  }
  std::size_t n = reps.size();
  return GSet(std::move(catalog), n, std::move(action));
}

GSet GSet::regular(std::shared_ptr<const Catalog> catalog) {
  int d = catalog->group().degree();
  return cosets(std::move(catalog), PermGroup::trivial(d));
}

GSet GSet::disjoint_union(const GSet& a, const GSet& b) {
  if (a.catalog_ != b.catalog_) throw std::invalid_argument("different groups");
  std::vector<Table> action(a.action_.size());
  for (std::size_t i = 0; i < action.size(); ++i) {
    action[i] = a.action_[i];
    for (auto y : b.action_[i])
      action[i].push_back(static_cast<std::uint32_t>(y + a.size_));
  }
  return GSet(a.catalog_, a.size_ + b.size_, std::move(action));
}

GSet GSet::product(const GSet& a, const GSet& b) {
  if (a.catalog_ != b.catalog_) throw std::invalid_argument("different groups");
  std::vector<Table> action(a.action_.size());
  for (std::size_t i = 0; i < action.size(); ++i) {
    Table t(a.size_ * b.size_);
    for (std::size_t x = 0; x < a.size_; ++x)
      for (std::size_t y = 0; y < b.size_; ++y)
        t[x * b.size_ + y] =
            static_cast<std::uint32_t>(a.action_[i][x] * b.size_ + b.action_[i][y]);
    action[i] = std::move(t);
  }
  return GSet(a.catalog_, a.size_ * b.size_, std::move(action));
}

GSet::Table GSet::act(const Permutation& g) const {
  Table t(size_);
  std::iota(t.begin(), t.end(), 0);
  const auto word = word_for(group(), g);
  // word[0] is applied last
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    for (auto& y : t) y = action_[*it][y];
  return t;
}

std::size_t GSet::fixed_points(const PermGroup& k) const {
  std::vector<Table> tables;
  for (const auto& s : k.generators()) tables.push_back(act(s));
  std::size_t count = 0;
  for (std::size_t x = 0; x < size_; ++x) {
    bool fixed = true;
    for (const auto& t : tables) fixed = fixed && t[x] == x;
    count += fixed;
  }
  return count;
}

void GSet::validate() const {
  const PermGroup& g = group();
  const auto& gens = g.generators();
  std::vector<std::optional<Table>> table(g.order());
  Table id(size_);
  std::iota(id.begin(), id.end(), 0);
  const std::size_t root = *g.index_of(Permutation(g.degree()));
  table[root] = id;
  std::vector<std::size_t> queue{root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Table& cur = *table[queue[qi]];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Table next(size_);
      for (std::size_t x = 0; x < size_; ++x) next[x] = action_[s][cur[x]];
      std::size_t child = *g.index_of(gens[s] * g.elements()[queue[qi]]);
      if (!table[child]) {
        table[child] = std::move(next);
        queue.push_back(child);
      } else if (*table[child] != next) {
        throw std::logic_error("generator tables do not define a G-action");
      }
    }
  }
}

// ---------------------------------------------------------------- A(G)

BurnsideElement::BurnsideElement(std::shared_ptr<const Catalog> catalog)
    : catalog_(std::move(catalog)), coords_(catalog_->size()) {}

BurnsideElement::BurnsideElement(std::shared_ptr<const Catalog> catalog,
                                 std::vector<Int> coords)
    : catalog_(std::move(catalog)), coords_(std::move(coords)) {
  if (coords_.size() != catalog_->size())
    throw std::invalid_argument("coordinate vector has the wrong length");
}

BurnsideElement BurnsideElement::zero(std::shared_ptr<const Catalog> catalog) {
  return BurnsideElement(std::move(catalog));
}

BurnsideElement BurnsideElement::one(std::shared_ptr<const Catalog> catalog) {
  std::size_t full = catalog->full_class();
  return basis(std::move(catalog), full);
}

BurnsideElement BurnsideElement::basis(std::shared_ptr<const Catalog> catalog,
                                       std::size_t k) {
  BurnsideElement x(std::move(catalog));
  x.coords_.at(k) = 1;
  return x;
}

BurnsideElement BurnsideElement::from_marks(std::shared_ptr<const Catalog> catalog,
                                            const std::vector<Int>& marks) {
  const Catalog& cat = *catalog;
  const std::size_t n = cat.size();
  if (marks.size() != n) throw std::invalid_argument("mark vector length");
  std::vector<Int> c(n);
  // Column k only involves classes h >= k.
  for (std::size_t k = n; k-- > 0;) {
    Int rest = marks[k];
    for (std::size_t h = k + 1; h < n; ++h) rest -= c[h] * Int(cat.mark(h, k));
    Int diag(cat.mark(k, k));
    if (rest % diag != 0)
      throw IntegralityViolation("marks are not those of an element of A(" +
                                 cat.ambient().name() + ")");
    c[k] = rest / diag;
  }
  return BurnsideElement(std::move(catalog), std::move(c));
}

std::vector<Int> BurnsideElement::marks() const {
  std::vector<Int> m(coords_.size());
  for (std::size_t h = 0; h < coords_.size(); ++h) {
    if (coords_[h] == 0) continue;
    for (std::size_t k = 0; k <= h; ++k) m[k] += coords_[h] * Int(catalog_->mark(h, k));
  }
  return m;
}

bool BurnsideElement::is_effective() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c >= 0; });
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

Int BurnsideElement::cardinality() const { return marks()[0]; }

std::string BurnsideElement::to_string() const {
  std::string out;
  for (std::size_t h = 0; h < coords_.size(); ++h) {
    const Int& c = coords_[h];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Int a = abs(c);
    if (a != 1) out += betaring::to_string(a) + "*";
    out += "[" + (*catalog_)[h].label + "]";
  }
  return out.empty() ? "0" : out;
}

void BurnsideElement::check_same(const BurnsideElement& o) const {
  if (catalog_ != o.catalog_) throw std::invalid_argument("elements of different A(G)");
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  check_same(o);
  BurnsideElement r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const {
  check_same(o);
  BurnsideElement r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
  return r;
}

BurnsideElement BurnsideElement::operator-() const {
  BurnsideElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

BurnsideElement BurnsideElement::operator*(const BurnsideElement& o) const {
  return multiply(*this, o);
}

BurnsideElement operator*(const Int& c, const BurnsideElement& x) {
  BurnsideElement r = x;
  for (auto& v : r.coords_) v *= c;
  return r;
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  return catalog_ == o.catalog_ && coords_ == o.coords_;
}

BurnsideElement orbit_decompose(const GSet& x) {
  const Catalog& cat = *x.catalog();
  std::vector<Int> marks(cat.size());
  for (std::size_t k = 0; k < cat.size(); ++k)
    marks[k] = Int(static_cast<unsigned long>(x.fixed_points(cat[k].rep)));
  return BurnsideElement::from_marks(x.catalog(), marks);
}

BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.catalog() != y.catalog()) throw std::invalid_argument("elements of different A(G)");
  auto mx = x.marks(), my = y.marks();
  for (std::size_t k = 0; k < mx.size(); ++k) mx[k] *= my[k];
  return BurnsideElement::from_marks(x.catalog(), mx);
}

GSet realize(const BurnsideElement& x) {
  if (!x.is_effective()) throw NotEffective("cannot realize " + x.to_string());
  GSet out = GSet::empty(x.catalog());
  for (std::size_t h = 0; h < x.coords().size(); ++h) {
    if (x.coords()[h] == 0) continue;
    GSet orbit = GSet::cosets(x.catalog(), (*x.catalog())[h].rep);
    for (Int i = 0; i < x.coords()[h]; ++i) out = GSet::disjoint_union(out, orbit);
  }
  return out;
}

// ---------------------------------------------------------------- beta

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

GSet beta_multi(const PermGroup& l, std::span<const int> family_sizes,
                std::span<const GSet> sets, const Config& cfg) {
  if (family_sizes.size() != sets.size() || sets.empty())
    throw std::invalid_argument("one G-set per family required");
  const auto& catalog = sets[0].catalog();
  for (const auto& s : sets)
    if (s.catalog() != catalog) throw std::invalid_argument("G-sets over different groups");
  const int d = l.degree();
  if (std::accumulate(family_sizes.begin(), family_sizes.end(), 0) != d)
    throw std::invalid_argument("family sizes do not add up to the degree");

  std::vector<std::size_t> family;
  for (std::size_t f = 0; f < family_sizes.size(); ++f)
    family.insert(family.end(), static_cast<std::size_t>(family_sizes[f]), f);
  for (const auto& s : l.generators())
    for (int i = 0; i < d; ++i)
      if (family[static_cast<std::size_t>(s(i))] != family[static_cast<std::size_t>(i)])
        throw std::invalid_argument("pattern group mixes argument families");

  std::vector<std::uint64_t> radix(static_cast<std::size_t>(d));
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(d));
  std::uint64_t total = 1;
  for (int i = d; i-- > 0;) {
    auto ui = static_cast<std::size_t>(i);
    radix[ui] = sets[family[ui]].size();
    stride[ui] = total;
    if (radix[ui] != 0 && total > cfg.size_cap / radix[ui])
      throw SizeCap("tuple space exceeds " + std::to_string(cfg.size_cap) + " points");
    total *= radix[ui];
  }
  if (total == 0) return GSet::empty(catalog);

  auto decode = [&](std::uint64_t code, std::vector<std::uint32_t>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = static_cast<std::uint32_t>(code / stride[i]);
      code %= stride[i];
    }
  };

  UnionFind uf(total);
  std::vector<std::uint32_t> t(static_cast<std::size_t>(d));
  for (const auto& s : l.generators()) {
    for (std::uint64_t code = 0; code < total; ++code) {
      decode(code, t);
      std::uint64_t image = 0;
      for (int i = 0; i < d; ++i)
        image += t[static_cast<std::size_t>(i)] * stride[static_cast<std::size_t>(s(i))];
      uf.unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(image));
    }
  }

  std::vector<std::uint32_t> orbit_id(total, ~std::uint32_t{0});
  std::vector<std::uint64_t> orbit_rep;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto r = uf.find(static_cast<std::uint32_t>(code));
    if (r == code) {
      orbit_id[code] = static_cast<std::uint32_t>(orbit_rep.size());
      orbit_rep.push_back(code);
    }
  }

  const std::size_t ngens = catalog->group().generators().size();
  std::vector<GSet::Table> action(ngens, GSet::Table(orbit_rep.size()));
  for (std::size_t g = 0; g < ngens; ++g) {
    for (std::size_t o = 0; o < orbit_rep.size(); ++o) {
      decode(orbit_rep[o], t);
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < t.size(); ++i)
        image += sets[family[i]].action()[g][t[i]] * stride[i];
      action[g][o] = orbit_id[uf.find(static_cast<std::uint32_t>(image))];
    }
  }
  return GSet(catalog, orbit_rep.size(), std::move(action));
}

GSet beta_on_gset(const PermGroup& h, const GSet& x, const Config& cfg) {
  const int sizes[] = {h.degree()};
  const GSet sets[] = {x};
  return beta_multi(h, sizes, sets, cfg);
}

GSet beta2_on_gsets(const PermGroup& l, int p, int q, const GSet& x,
                    const GSet& y, const Config& cfg) {
  const int sizes[] = {p, q};
  const GSet sets[] = {x, y};
  return beta_multi(l, sizes, sets, cfg);
}

BurnsideElement beta_multi_virtual(const PermGroup& l,
                                   std::span<const int> family_sizes,
                                   std::span<const BurnsideElement> xs,
                                   const Config& cfg) {
  std::size_t bad = xs.size();
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!xs[i].is_effective()) {
      bad = i;
      break;
    }
  if (bad == xs.size()) {
    std::vector<GSet> sets;
    for (const auto& x : xs) sets.push_back(realize(x));
    return orbit_decompose(beta_multi(l, family_sizes, sets, cfg));
  }
  // Polynomial of degree <= n in argument `bad`: evaluate at x+ + k x-,
  // k = 0..n, and extrapolate to k = -1.
  const auto& x = xs[bad];
  std::vector<Int> plus(x.coords().size()), minus(x.coords().size());
  for (std::size_t h = 0; h < plus.size(); ++h) {
    if (x.coords()[h] > 0) plus[h] = x.coords()[h];
    else minus[h] = -x.coords()[h];
  }
  const BurnsideElement xp(x.catalog(), plus), xm(x.catalog(), minus);
  const unsigned n = static_cast<unsigned>(family_sizes[bad]);
  std::vector<BurnsideElement> args(xs.begin(), xs.end());
  BurnsideElement result = BurnsideElement::zero(x.catalog());
  for (unsigned j = 0; j <= n; ++j) {
    args[bad] = xp + Int(j) * xm;
    BurnsideElement gj = beta_multi_virtual(l, family_sizes, args, cfg);
    Int c = binomial(n + 1, j + 1);
    if (j % 2) c = -c;
    result = result + c * gj;
  }
  return result;
}

BurnsideElement beta_virtual(const PermGroup& h, const BurnsideElement& x,
                             const Config& cfg) {
  const int sizes[] = {h.degree()};
  const BurnsideElement xs[] = {x};
  return beta_multi_virtual(h, sizes, xs, cfg);
}

// ---------------------------------------------------------------- transfer

GSet restrict_to(const GSet& x, std::shared_ptr<const Catalog> u_catalog) {
  const PermGroup& u = u_catalog->group();
  if (!u.is_subgroup_of(x.group())) throw NotASubgroup("U is not a subgroup of G");
  std::vector<GSet::Table> action;
  for (const auto& s : u.generators()) action.push_back(x.act(s));
  return GSet(std::move(u_catalog), x.size(), std::move(action));
}

GSet induce(const GSet& n, std::shared_ptr<const Catalog> g_catalog) {
  const PermGroup& g = g_catalog->group();
  const PermGroup& u = n.group();
  if (!u.is_subgroup_of(g)) throw NotASubgroup("U is not a subgroup of G");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g.order(), kUnset);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g.elements()[i]);
    for (const auto& x : u.elements()) coset_of[*g.index_of(reps.back() * x)] = c;
  }
  std::map<Permutation, GSet::Table> u_tables;
  auto table_of = [&](const Permutation& x) -> const GSet::Table& {
    auto it = u_tables.find(x);
    if (it == u_tables.end()) it = u_tables.emplace(x, n.act(x)).first;
    return it->second;
  };
  const std::size_t m = n.size();
  std::vector<GSet::Table> action;
  for (const auto& s : g.generators()) {
    GSet::Table t(reps.size() * m);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      Permutation sr = s * reps[c];
      std::uint32_t c2 = coset_of[*g.index_of(sr)];
      // s r_c = r_c2 u
      const auto& tu = table_of(reps[c2].inverse() * sr);
      for (std::size_t y = 0; y < m; ++y)
        t[c * m + y] = static_cast<std::uint32_t>(c2 * m + tu[y]);
    }
    action.push_back(std::move(t));
  }
  std::size_t size = reps.size() * m;
  return GSet(std::move(g_catalog), size, std::move(action));
}

}  // namespace betaring
