#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "betaring/adams.hpp"
#include "betaring/error.hpp"
#include "betaring/json_io.hpp"
#include "betaring/suites.hpp"
#include "betaring/symfunc.hpp"
#include "betaring/witt.hpp"

namespace betaring::cli {

namespace {

using json = nlohmann::json;

// Bad input that got past the flag parser: exits 2 like a parse error.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && sp(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && sp(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

/// "2*e - C3 + 1" in A(G); a bare integer counts copies of the point.
BurnsideElement parse_burnside(std::shared_ptr<const Catalog> cat, const std::string& text) {
  BurnsideElement x = BurnsideElement::zero(cat);
  std::size_t i = 0;
  int sign = 1;
  bool expect_term = true;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -sign : sign;
      ++i;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw UsageError("missing operator in " + text);
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string term = trim(text.substr(i, j - i));
    Int coeff = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = Int(trim(term.substr(0, star)));
      term = trim(term.substr(star + 1));
    } else if (std::all_of(term.begin(), term.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      coeff = Int(term);
      term = "#" + std::to_string(cat->full_class());
    }
    if (term.size() >= 2 && term.front() == '[' && term.back() == ']') term = term.substr(1, term.size() - 2);
    auto k = cat->find(term);
    if (!k) throw UsageError("no class '" + term + "' in A(" + cat->ambient().name() + ")");
    x = x + (Int(sign) * coeff) * BurnsideElement::basis(cat, *k);
    sign = 1;
    expect_term = false;
    i = j;
  }
  if (expect_term) throw UsageError("incomplete expression: " + text);
  return x;
}

WittVector parse_witt(const std::string& text, int precision) {
  std::vector<Rat> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      Rat r(item);
      r.canonicalize();
      c.push_back(r);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad Witt coefficient: " + item);
    }
  }
  if (precision > 0) {
    if (static_cast<int>(c.size()) > precision) throw UsageError("more coefficients than the precision");
    c.resize(static_cast<std::size_t>(precision), Rat(0));
  }
  return WittVector(std::move(c));
}

Ambient ambient_of(int n, const std::string& name) {
  if (!name.empty()) return Ambient::parse(name);
  if (n < 0) throw UsageError("give --n or --ambient");
  return Ambient::sym(n);
}

std::string generators_string(const PermGroup& g) {
  std::string out;
  for (const auto& s : g.generators()) {
    if (!out.empty()) out += ", ";
    out += s.to_cycle_string();
  }
  return out.empty() ? "()" : out;
}

void print_report(std::ostream& out, const Report& r) {
  std::size_t pass = 0, fail = 0;
  for (const auto& i : r) {
    out << status_name(i.status) << "  " << i.identity;
    if (!i.witness.empty()) out << "  [" << i.witness << "]";
    out << "\n";
    if (i.status == Status::Pass) ++pass;
    if (i.status == Status::Fail) ++fail;
  }
  out << pass << " passed, " << fail << " failed\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burnside and lambda-ring operations on symmetric groups", "betaring"};
  app.require_subcommand(1);

  Config cfg = Config::from_environment();
  bool as_json = false;
  app.add_option("--max-degree", cfg.max_degree, "largest degree n of Sym(n) used")
      ->check(CLI::Range(0, Config::kHardMaxDegree));
  app.add_option("--catalog-dir", cfg.catalog_dir, "directory for the catalog cache")
      ->envname("BETARING_CATALOG_DIR");
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--long", cfg.long_running, "enable the slow degree-6 checks");

  int n = -1;
  std::string ambient, cls, a_text, b_text, group = "C3", x_text = "e", partition_text, basis = "p";
  std::string op = "mul";
  int k = 0, precision = 0;
  long r = 0;
  std::uint64_t seed = 20260415;
  std::vector<std::string> suites;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* c_catalog = sub("catalog", "subgroup classes of Sym(n) or a Young subgroup");
  c_catalog->add_option("--n", n, "degree")->check(CLI::NonNegativeNumber);
  c_catalog->add_option("--ambient", ambient, "S4, S2xS2, ...");
  auto* c_marks = sub("marks", "table of marks");
  c_marks->add_option("--n", n, "degree")->check(CLI::NonNegativeNumber);
  c_marks->add_option("--ambient", ambient, "S4, S2xS2, ...");
  auto* c_diag = sub("diag", "the diagonal of an element of B");
  c_diag->add_option("--class", cls, "element, e.g. \"S3:e + 2*S2\"")->required();
  auto* c_prod = sub("prod", "product in B");
  c_prod->add_option("--a", a_text)->required();
  c_prod->add_option("--b", b_text)->required();
  auto* c_star = sub("star", "composition a * b in B");
  c_star->add_option("--a", a_text)->required();
  c_star->add_option("--b", b_text)->required();
  auto* c_psi = sub("psi", "Adams operation Psi^k or Psi_pi in B");
  auto* o_k = c_psi->add_option("--k", k, "index")->check(CLI::NonNegativeNumber);
  auto* o_pi = c_psi->add_option("--partition", partition_text, "e.g. 2,1");
  o_k->excludes(o_pi);
  auto* c_psik = sub("psiK", "the Psi_K solution in degree n");
  c_psik->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  auto* c_lin = sub("lin", "cycle index of an element of B");
  c_lin->add_option("--class", cls)->required();
  c_lin->add_option("--basis", basis, "p, h or e")->check(CLI::IsMember({"p", "h", "e"}));
  auto* c_evalz = sub("evalz", "value on the integer r");
  c_evalz->add_option("--class", cls)->required();
  c_evalz->add_option("--r", r)->required();
  auto* c_evalg = sub("evalg", "action on A(G)");
  c_evalg->add_option("--class", cls)->required();
  c_evalg->add_option("--group", group, "1, C<n>, S<n> or C2xC2");
  c_evalg->add_option("--x", x_text, "element of A(G), e.g. \"2*e - C3\"");
  auto* c_witt = sub("witt", "big Witt vector arithmetic");
  c_witt->add_option("--op", op)->check(CLI::IsMember({"add", "mul", "neg", "ghost", "delta"}));
  c_witt->add_option("--a", a_text, "coefficients a_1,...,a_N");
  c_witt->add_option("--b", b_text, "coefficients b_1,...,b_N");
  c_witt->add_option("--precision", precision, "pad to N coefficients")->check(CLI::Range(0, 64));
  c_witt->add_option("--n", n, "degree for --op delta")->check(CLI::Range(0, 8));
  auto* c_check = sub("check", "run verification suites");
  c_check->add_option("suites", suites, "suite names, or all")->required();
  c_check->add_option("--n", n, "largest degree");
  c_check->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    cfg.validate();
    const BRing ring(cfg);
    auto emit = [&](const json& j, const std::string& text) {
      if (as_json) out << j.dump(2) << "\n";
      else out << text << "\n";
    };

    if (c_catalog->parsed()) {
      auto cat = CatalogRegistry::global().get(ambient_of(n, ambient), cfg);
      if (as_json) {
        out << json_io::catalog(*cat).dump(2) << "\n";
      } else {
        out << cat->ambient().name() << ": " << cat->size() << " classes\n";
        for (const auto& c : cat->classes())
          out << "#" << c.index << "  " << c.label << "  order " << c.order << "  normalizer "
              << c.norm_order << "  type " << c.ptype.to_string() << "  <" << generators_string(c.rep)
              << ">\n";
      }
    } else if (c_marks->parsed()) {
      auto cat = CatalogRegistry::global().get(ambient_of(n, ambient), cfg);
      const TableOfMarks t = cat->table_of_marks();
      if (as_json) {
        out << json{{"ambient", t.ambient}, {"labels", t.labels}, {"marks", t.m}}.dump(2) << "\n";
      } else {
        std::size_t w = 4;
        for (const auto& l : t.labels) w = std::max(w, l.size() + 1);
        out << std::setw(static_cast<int>(w)) << "";
        for (const auto& l : t.labels) out << std::setw(static_cast<int>(w)) << l;
        out << "\n";
        for (std::size_t h = 0; h < t.m.size(); ++h) {
          out << std::setw(static_cast<int>(w)) << t.labels[h];
          for (auto v : t.m[h]) out << std::setw(static_cast<int>(w)) << v;
          out << "\n";
        }
      }
    } else if (c_diag->parsed()) {
      const B2Element d = ring.diagonal(ring.parse(cls));
      emit(json_io::element2(ring, d), ring.to_string(d));
    } else if (c_prod->parsed()) {
      const BElement p = ring.product(ring.parse(a_text), ring.parse(b_text));
      emit(json_io::element(ring, p), ring.to_string(p));
    } else if (c_star->parsed()) {
      const BElement p = ring.star(ring.parse(a_text), ring.parse(b_text));
      emit(json_io::element(ring, p), ring.to_string(p));
    } else if (c_psi->parsed()) {
      BElement p;
      std::string name;
      if (!partition_text.empty()) {
        const Partition pi = Partition::parse(partition_text);
        p = psi_partition(ring, pi);
        name = "Psi_" + pi.to_string();
      } else {
        p = psi_upper(ring, k);
        name = "Psi^" + std::to_string(k);
      }
      const SymFunc l = lin(ring, p);
      emit({{"operation", name}, {"element", json_io::element(ring, p)}, {"lin", json_io::symfunc(l)}},
           name + " = " + ring.to_string(p) + "\nlin: " + l.to_string());
    } else if (c_psik->parsed()) {
      const AdamsTable t = solve_psi_K(ring, n);
      if (as_json) {
        out << json_io::adams_table(ring, t).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < t.psi.size(); ++i)
          out << "Psi_" << ring.label(ClassRef{n, i}) << " = " << ring.to_string(t.psi[i]) << "\n";
      }
      const Report check = check_adams_table(ring, t);
      if (!passed(check)) {
        if (!as_json) print_report(out, check);
        return 1;
      }
    } else if (c_lin->parsed()) {
      const SymFunc l = convert(lin(ring, ring.parse(cls)), parse_basis(basis.at(0)));
      emit(json_io::symfunc(l), l.to_string());
    } else if (c_evalz->parsed()) {
      const Int v = ring.eval_z(ring.parse(cls), Int(r));
      emit({{"value", json_io::from_int(v)}}, to_string(v));
    } else if (c_evalg->parsed()) {
      auto cat = burnside_catalog(group, named_group(group), cfg);
      const BurnsideElement x = parse_burnside(cat, x_text);
      const BurnsideElement y = ring.eval_burnside(ring.parse(cls), x);
      emit(json_io::burnside(y), y.to_string());
    } else if (c_witt->parsed()) {
      if (op == "delta") {
        if (n < 0) throw UsageError("--op delta needs --n");
        const SymTensor d = delta_m_generator(n, DeltaRoute::Counting);
        const bool agree = d == delta_m_generator(n, DeltaRoute::PowerSum);
        emit({{"n", n}, {"delta", json_io::symtensor(d)}, {"routes_agree", agree}},
             "Delta^m e" + std::to_string(n) + " = " + d.to_string() +
                 (agree ? "\nboth routes agree" : "\nROUTES DISAGREE"));
        if (!agree) return 1;
      } else {
        if (a_text.empty()) throw UsageError("--a is required");
        const WittVector a = parse_witt(a_text, precision);
        if (op == "ghost") {
          json g = json::array();
          std::string text;
          for (const auto& v : a.ghost()) {
            g.push_back(json_io::from_rat(v));
            text += (text.empty() ? "" : ", ") + to_string(v);
          }
          emit({{"ghost", g}}, "(" + text + ")");
        } else if (op == "neg") {
          const WittVector y = -a;
          emit(json_io::witt(y), y.to_string());
        } else {
          if (b_text.empty()) throw UsageError("--b is required for --op " + op);
          const WittVector b = parse_witt(b_text, precision ? precision : a.precision());
          const WittVector y = op == "add" ? a + b : a * b;
          emit(json_io::witt(y), y.to_string());
        }
      }
    } else if (c_check->parsed()) {
      const auto names = suite_names();
      for (const auto& s : suites)
        if (s != "all" && std::find(names.begin(), names.end(), s) == names.end())
          throw UsageError("unknown suite '" + s + "'");
      SuiteOptions opt;
      opt.n = n;
      opt.seed = seed;
      Report all;
      for (const auto& s : suites) append(all, run_suite(ring, s, opt));
      if (as_json) out << json{{"suites", suites}, {"passed", passed(all)}, {"report", json_io::report(all)}}.dump(2) << "\n";
      else print_report(out, all);
      return passed(all) ? 0 : 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (as_json) out << json_io::error(e.kind(), e.what()).dump(2) << "\n";
    else err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    // malformed class names, partitions and group names
    if (as_json) out << json_io::error("InvalidArgument", e.what()).dump(2) << "\n";
    else err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (as_json) out << json_io::error("Failure", e.what()).dump(2) << "\n";
    else err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace betaring::cli
