#include "betaring/json_io.hpp"

#include <stdexcept>

namespace betaring::json_io {

json from_int(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int to_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::runtime_error("expected an integer, got " + j.dump());
}

json from_rat(const Rat& v) {
  if (is_integral(v)) return from_int(v.get_num());
  return v.get_str();
}

Rat to_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw std::runtime_error("expected a rational, got " + j.dump());
}

json element(const BRing& ring, const BElement& a) {
  json out = json::object();
  for (const auto& [c, v] : a.terms()) out[ring.label(c)] = from_int(v);
  return out;
}

BElement element(const BRing& ring, const json& j) {
  BElement a;
  for (const auto& [k, v] : j.items()) a.add(ring.parse_class(k), to_int(v));
  return a;
}

json element2(const BRing& ring, const B2Element& a) {
  json out = json::object();
  for (const auto& [c, v] : a.terms()) out[ring.label(c)] = from_int(v);
  return out;
}

json adams_table(const BRing& ring, const AdamsTable& t) {
  json entries = json::array();
  for (std::size_t k = 0; k < t.psi.size(); ++k)
    entries.push_back({{"K_label", ring.label(ClassRef{t.n, k})},
                       {"beta_coeffs", element(ring, t.psi[k])}});
  return {{"n", t.n}, {"entries", entries}};
}

AdamsTable adams_table(const BRing& ring, const json& j) {
  AdamsTable t;
  t.n = j.at("n").get<int>();
  const auto& entries = j.at("entries");
  t.psi.resize(entries.size());
  for (const auto& e : entries) {
    const ClassRef k = ring.parse_class(e.at("K_label").get<std::string>());
    if (k.degree != t.n || k.index >= t.psi.size())
      throw std::runtime_error("Adams table entry out of range: " + e.dump());
    t.psi[k.index] = element(ring, e.at("beta_coeffs"));
  }
  return t;
}

json report(const Report& r) {
  json out = json::array();
  for (const auto& i : r)
    out.push_back({{"identity", i.identity}, {"status", status_name(i.status)}, {"witness", i.witness}});
  return out;
}

Report report(const json& j) {
  Report r;
  for (const auto& i : j) {
    const std::string s = i.at("status").get<std::string>();
    Status st = s == "pass" ? Status::Pass : s == "fail" ? Status::Fail : Status::Info;
    r.push_back({i.at("identity").get<std::string>(), st, i.at("witness").get<std::string>()});
  }
  return r;
}

json witt(const WittVector& w) {
  json coeffs = json::array();
  for (const auto& c : w.coeffs()) coeffs.push_back(from_rat(c));
  return {{"precision", w.precision()}, {"coeffs", coeffs}};
}

WittVector witt(const json& j) {
  std::vector<Rat> c;
  for (const auto& x : j.at("coeffs")) c.push_back(to_rat(x));
  if (static_cast<int>(c.size()) != j.at("precision").get<int>())
    throw std::runtime_error("Witt vector precision does not match its coefficients");
  return WittVector(std::move(c));
}

json symfunc(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [l, c] : f.terms()) terms.push_back({{"partition", l.parts()}, {"coeff", from_rat(c)}});
  return {{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc(const json& j) {
  SymFunc f(parse_basis(j.at("basis").get<std::string>().at(0)));
  for (const auto& t : j.at("terms"))
    f.add(Partition(t.at("partition").get<std::vector<int>>()), to_rat(t.at("coeff")));
  return f;
}

json symtensor(const SymTensor& t) {
  json terms = json::array();
  for (const auto& [key, c] : t.terms()) {
    json parts = json::array();
    for (const auto& l : key) parts.push_back(l.parts());
    terms.push_back({{"partitions", parts}, {"coeff", from_rat(c)}});
  }
  return {{"basis", std::string(1, basis_letter(t.basis()))}, {"arity", t.arity()}, {"terms", terms}};
}

json burnside(const BurnsideElement& x) {
  json coords = json::object();
  const auto& cat = *x.catalog();
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    if (x.coords()[i] != 0) coords[cat[i].label] = from_int(x.coords()[i]);
  return {{"group", cat.ambient().name()}, {"coords", coords}};
}

json catalog(const Catalog& c) { return json::parse(c.to_json_string()); }

json error(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace betaring::json_io
