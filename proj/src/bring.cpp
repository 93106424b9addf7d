#include "betaring/bring.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "betaring/error.hpp"

namespace betaring {

// ---------------------------------------------------------------- elements

BElement BElement::term(ClassRef c, Int coeff) {
  BElement e;
  e.add(c, coeff);
  return e;
}

Int BElement::coeff(ClassRef c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Int(0) : it->second;
}

void BElement::add(ClassRef c, const Int& coeff) {
  if (coeff == 0) return;
  Int& v = terms_[c];
  v += coeff;
  if (v == 0) terms_.erase(c);
}

bool BElement::is_effective() const {
  for (const auto& [c, v] : terms_)
    if (v < 0) return false;
  return true;
}

int BElement::max_degree() const {
  int d = -1;
  for (const auto& [c, v] : terms_) d = std::max(d, c.degree);
  return d;
}

BElement BElement::component(int n) const {
  BElement r;
  for (const auto& [c, v] : terms_)
    if (c.degree == n) r.add(c, v);
  return r;
}

BElement BElement::operator+(const BElement& o) const {
  BElement r = *this;
  for (const auto& [c, v] : o.terms_) r.add(c, v);
  return r;
}

BElement BElement::operator-(const BElement& o) const {
  BElement r = *this;
  for (const auto& [c, v] : o.terms_) r.add(c, -v);
  return r;
}

BElement BElement::operator-() const { return BElement() - *this; }

BElement operator*(const Int& k, const BElement& x) {
  BElement r;
  for (const auto& [c, v] : x.terms_) r.add(c, k * v);
  return r;
}

Int B2Element::coeff(Class2Ref c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Int(0) : it->second;
}

void B2Element::add(Class2Ref c, const Int& coeff) {
  if (coeff == 0) return;
  Int& v = terms_[c];
  v += coeff;
  if (v == 0) terms_.erase(c);
}

B2Element B2Element::operator+(const B2Element& o) const {
  B2Element r = *this;
  for (const auto& [c, v] : o.terms_) r.add(c, v);
  return r;
}

B2Element B2Element::operator-(const B2Element& o) const {
  B2Element r = *this;
  for (const auto& [c, v] : o.terms_) r.add(c, -v);
  return r;
}

// ---------------------------------------------------------------- ring

BRing::BRing(Config cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

void BRing::check_degree(int n) const {
  if (n > cfg_.max_degree)
    throw DegreeCap("degree " + std::to_string(n) + " exceeds max degree " +
                    std::to_string(cfg_.max_degree));
}

std::shared_ptr<const Catalog> BRing::sym(int n) const {
  check_degree(n);
  return CatalogRegistry::global().get(Ambient::sym(n), cfg_);
}

std::shared_ptr<const Catalog> BRing::pair(int p, int q) const {
  check_degree(p + q);
  return CatalogRegistry::global().get(Ambient::sym_pair(p, q), cfg_);
}

std::shared_ptr<const Catalog> BRing::young(const std::vector<int>& composition) const {
  return CatalogRegistry::global().get(Ambient::young(composition), cfg_);
}

BElement BRing::unit() const { return BElement::term({0, 0}); }

BElement BRing::beta(int n) const {
  return BElement::term({n, sym(n)->full_class()});
}

BElement BRing::regular(int n) const { return BElement::term({n, sym(n)->trivial_class()}); }

BElement BRing::basis(int n, std::size_t index) const {
  if (index >= sym(n)->size()) throw std::out_of_range("no such class");
  return BElement::term({n, index});
}

ClassRef BRing::class_of(const PermGroup& h) const {
  return {h.degree(), sym(h.degree())->identify(h)};
}

const PermGroup& BRing::rep(ClassRef c) const { return info(c).rep; }

const SubgroupClass& BRing::info(ClassRef c) const {
  // Catalogs live in the registry for the life of the process.
  return (*sym(c.degree))[c.index];
}

BElement BRing::product(const BElement& a, const BElement& b) const {
  BElement out;
  for (const auto& [h, x] : a.terms())
    for (const auto& [k, y] : b.terms()) {
      check_degree(h.degree + k.degree);
      auto key = std::minmax(h, k);
      std::optional<ClassRef> hit;
      {
        std::lock_guard lock(mutex_);
        if (auto it = product_cache_.find(key); it != product_cache_.end())
          hit = it->second;
      }
      if (!hit) {
        hit = class_of(direct_embed(rep(h), rep(k), cfg_.element_cap));
        std::lock_guard lock(mutex_);
        product_cache_.emplace(key, *hit);
      }
      out.add(*hit, x * y);
    }
  return out;
}

YoungTerms BRing::restrict_young(const std::vector<int>& from, std::size_t index,
                                 const std::vector<int>& to) const {
  auto src = young(from);
  auto dst = young(to);
  const PermGroup& h = (*src)[index].rep;
  const PermGroup& a = dst->group();
  YoungTerms out;
  for (const auto& s : double_cosets(src->group(), a, h)) {
    std::size_t k = dst->identify(a.intersect(h.conjugate(s)));
    out[{to, k}] += 1;
  }
  return out;
}

B2Element BRing::diagonal(const BElement& a) const {
  B2Element out;
  for (const auto& [h, x] : a.terms()) {
    std::optional<B2Element> d;
    {
      std::lock_guard lock(mutex_);
      if (auto it = diagonal_cache_.find(h); it != diagonal_cache_.end()) d = it->second;
    }
    if (!d) {
      d.emplace();
      const int n = h.degree;
      for (int p = 0; p <= n; ++p)
        for (const auto& [key, c] : restrict_young({n}, h.index, {p, n - p}))
          d->add({p, n - p, key.second}, c);
      std::lock_guard lock(mutex_);
      diagonal_cache_.emplace(h, *d);
    }
    for (const auto& [c, v] : d->terms()) out.add(c, x * v);
  }
  return out;
}

YoungTerms BRing::delta_left_then(const BElement& a) const {
  YoungTerms out;
  const B2Element d = diagonal(a);
  for (const auto& [l, v] : d.terms())
    for (int i = 0; i <= l.p; ++i)
      for (const auto& [key, c] : restrict_young({l.p, l.q}, l.index, {i, l.p - i, l.q}))
        out[key] += v * c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

YoungTerms BRing::delta_right_then(const BElement& a) const {
  YoungTerms out;
  const B2Element d = diagonal(a);
  for (const auto& [l, v] : d.terms())
    for (int i = 0; i <= l.q; ++i)
      for (const auto& [key, c] : restrict_young({l.p, l.q}, l.index, {l.p, i, l.q - i}))
        out[key] += v * c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

B2Element BRing::product2(const B2Element& x, const B2Element& y) const {
  B2Element out;
  for (const auto& [l, a] : x.terms())
    for (const auto& [m, b] : y.terms()) {
      std::optional<Class2Ref> hit;
      auto key = std::make_tuple(l, m);
      {
        std::lock_guard lock(mutex_);
        if (auto it = product2_cache_.find(key); it != product2_cache_.end())
          hit = it->second;
      }
      if (!hit) {
        const int p = l.p + m.p, q = l.q + m.q, d = p + q;
        check_degree(d);
        // L on its own points, L' after it inside each family.
        std::vector<int> where_l, where_m;
        for (int i = 0; i < l.p; ++i) where_l.push_back(i);
        for (int i = 0; i < l.q; ++i) where_l.push_back(p + i);
        for (int i = 0; i < m.p; ++i) where_m.push_back(l.p + i);
        for (int i = 0; i < m.q; ++i) where_m.push_back(p + l.q + i);
        std::vector<Permutation> gens;
        auto embed = [&](const PermGroup& g, const std::vector<int>& where) {
          for (const auto& s : g.generators()) {
            std::vector<int> img(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) img[static_cast<std::size_t>(i)] = i;
            for (std::size_t i = 0; i < where.size(); ++i)
              img[static_cast<std::size_t>(where[i])] = where[static_cast<std::size_t>(s(static_cast<int>(i)))];
            gens.push_back(Permutation::from_images(img));
          }
        };
        embed((*pair(l.p, l.q))[l.index].rep, where_l);
        embed((*pair(m.p, m.q))[m.index].rep, where_m);
        auto target = pair(p, q);
        hit = Class2Ref{p, q, target->identify(PermGroup::generate(d, gens, cfg_.element_cap))};
        std::lock_guard lock(mutex_);
        product2_cache_.emplace(key, *hit);
      }
      out.add(*hit, a * b);
    }
  return out;
}

// ---------------------------------------------------------------- composition

BElement BRing::star_basis(ClassRef h, ClassRef k) const {
  if (h.degree == 0 || k.degree == 0) return unit();
  check_degree(h.degree * k.degree);
  std::pair key{h, k};
  {
    std::lock_guard lock(mutex_);
    if (auto it = star_cache_.find(key); it != star_cache_.end())
      return BElement::term(it->second);
  }
  ClassRef c = class_of(wreath(rep(k), rep(h), cfg_.max_degree, cfg_.element_cap));
  std::lock_guard lock(mutex_);
  star_cache_.emplace(key, c);
  return BElement::term(c);
}

namespace {

void for_each_composition(int m, std::size_t parts,
                          const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      c[i] = left;
      f(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (parts == 0) {
    if (m == 0) f(c);
    return;
  }
  rec(0, m);
}

}  // namespace

BElement BRing::star_effective(const BElement& a, const BElement& b) const {
  if (!b.is_effective()) throw NotEffective("second argument of star is virtual");
  std::vector<ClassRef> summands;
  for (const auto& [k, v] : b.terms())
    for (Int i = 0; i < v; ++i) summands.push_back(k);
  // One summand is the wreath rule itself.
  if (summands.size() == 1) {
    BElement out;
    for (const auto& [h, x] : a.terms()) out = out + x * star_basis(h, summands[0]);
    return out;
  }
  std::vector<PermGroup> bases;
  for (const auto& k : summands) bases.push_back(rep(k));

  BElement out;
  for (const auto& [h, x] : a.terms()) {
    const int m = h.degree;
    if (m == 0) {
      out.add({0, 0}, x);
      continue;
    }
    const PermGroup& hg = rep(h);
    const PermGroup& sm = sym(m)->group();
    for_each_composition(m, summands.size(), [&](const std::vector<int>& p) {
      int degree = 0;
      for (std::size_t i = 0; i < p.size(); ++i) degree += p[i] * summands[i].degree;
      check_degree(degree);
      PermGroup y = PermGroup::young(p, cfg_.element_cap);
      for (const auto& s : double_cosets(sm, y, hg)) {
        PermGroup l = y.intersect(hg.conjugate(s));
        out.add(class_of(mixed_wreath(l, p, bases, cfg_.max_degree, cfg_.element_cap)), x);
      }
    });
  }
  return out;
}

BElement BRing::star(const BElement& a, const BElement& b) const {
  if (b.is_effective()) return star_effective(a, b);
  BElement plus, minus;
  for (const auto& [k, v] : b.terms()) (v > 0 ? plus : minus).add(k, abs(v));
  BElement out;
  for (const auto& [h, x] : a.terms()) {
    const BElement bh = BElement::term(h);
    const unsigned m = static_cast<unsigned>(h.degree);
    // degree <= m in the scalar k of plus + k*minus; extrapolate to k = -1
    for (unsigned j = 0; j <= m; ++j) {
      Int c = binomial(m + 1, j + 1);
      if (j % 2) c = -c;
      out = out + (c * x) * star_effective(bh, plus + Int(j) * minus);
    }
  }
  return out;
}

// ---------------------------------------------------------------- evaluation

Int BRing::eval_z(const BElement& a, const Int& r) const {
  Rat total = 0;
  for (const auto& [h, x] : a.terms()) {
    Int sum = 0;
    for (const auto& [type, count] : rep(h).cycle_census()) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(type.length()));
      sum += pw * Int(static_cast<unsigned long>(count));
    }
    total += Rat(sum * x, Int(static_cast<unsigned long>(rep(h).order())));
  }
  total.canonicalize();
  return require_integral(total, "value of a B-element on Z");
}

BurnsideElement BRing::eval_burnside(const BElement& a, const BurnsideElement& x) const {
  BurnsideElement out = BurnsideElement::zero(x.catalog());
  for (const auto& [h, c] : a.terms())
    out = out + c * beta_virtual(rep(h), x, cfg_);
  return out;
}

BurnsideElement BRing::eval2_burnside(const B2Element& a, const BurnsideElement& x,
                                      const BurnsideElement& y) const {
  BurnsideElement out = BurnsideElement::zero(x.catalog());
  const BurnsideElement xs[] = {x, y};
  for (const auto& [l, c] : a.terms()) {
    const int sizes[] = {l.p, l.q};
    out = out + c * beta_multi_virtual((*pair(l.p, l.q))[l.index].rep, sizes, xs, cfg_);
  }
  return out;
}

// ---------------------------------------------------------------- text

ClassRef BRing::parse_class(std::string_view text) const {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  if (head.size() < 2 || head[0] != 'S')
    throw std::invalid_argument("bad class name: " + std::string(text));
  for (char ch : head.substr(1))
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad class name: " + std::string(text));
  const int n = std::stoi(std::string(head.substr(1)));
  auto cat = sym(n);
  if (colon == std::string_view::npos) return {n, cat->full_class()};
  auto idx = cat->find(text.substr(colon + 1));
  if (!idx) throw std::invalid_argument("unknown class: " + std::string(text));
  return {n, *idx};
}

BElement BRing::parse(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty element");
  BElement out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("expected + or - in: " + s);
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw std::invalid_argument("empty term in: " + s);
    Int coeff = 1;
    std::string cls = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = Int(term.substr(0, star));
      cls = term.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      coeff = Int(term);
      cls = "S0";
    }
    out.add(parse_class(cls), sign * coeff);
    i = j;
  }
  return out;
}

std::string BRing::label(ClassRef c) const {
  return "S" + std::to_string(c.degree) + ":" + info(c).label;
}

std::string BRing::label(Class2Ref c) const {
  auto cat = pair(c.p, c.q);
  return cat->ambient().name() + ":" + (*cat)[c.index].label;
}

namespace {

template <class Map, class Label>
std::string format_terms(const Map& terms, Label label, auto is_constant) {
  std::string out;
  for (const auto& [c, v] : terms) {
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    Int a = abs(v);
    if (is_constant(c)) {
      out += betaring::to_string(a);
      continue;
    }
    if (a != 1) out += betaring::to_string(a) + "*";
    out += label(c);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string BRing::to_string(const BElement& a) const {
  return format_terms(
      a.terms(), [&](ClassRef c) { return label(c); },
      [](ClassRef c) { return c.degree == 0; });
}

std::string BRing::to_string(const B2Element& a) const {
  return format_terms(
      a.terms(), [&](Class2Ref c) { return label(c); },
      [](Class2Ref c) { return c.p == 0 && c.q == 0; });
}

}  // namespace betaring
