#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfkit/frob.hpp"
#include "hopfkit/io.hpp"

using namespace hopfkit;
using nlohmann::json;

namespace {

struct Options {
  std::string file;
  std::string out;
  std::string side = "both";
  std::string field = "Q";
  std::string name;
  std::string format = "text";
  bool left = false;
  bool unchecked = false;
};

struct Output {
  bool as_json = false;
  json doc = json::object();
  std::string text;

  void line(const std::string& s) { text += s + '\n'; }
  void emit() const {
    if (as_json)
      std::cout << doc.dump(2) << '\n';
    else
      std::cout << text;
  }
};

json scalars(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(scalars(m.row_vector(r)));
  return rows;
}

std::string element(const Vector& v, const std::vector<std::string>& labels) { return element_str(v, labels); }

std::vector<std::string> tensor_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& a : labels)
    for (const auto& b : labels) out.push_back(a + "(x)" + b);
  return out;
}

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& a : labels) out.push_back(a + "^*");
  return out;
}

void render_report(const Report& r, Output& o, const std::string& key) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) {
      j["tuple"] = c.tuple;
      j["lhs"] = scalars(c.lhs);
      j["rhs"] = scalars(c.rhs);
      j["detail"] = c.detail;
    }
    checks.push_back(j);
  }
  o.doc[key] = checks;
  o.text += r.str();
}

int cmd_validate(const Bialgebra& b, Output& o) {
  const Report r = check_bialgebra_axioms(b);
  o.doc["axioms"] = r.ok();
  o.line(std::string("axioms: ") + (r.ok() ? "pass" : "FAIL"));
  render_report(r, o, "checks");
  return r.ok() ? 0 : 1;
}

int cmd_antipode(const Bialgebra& b, const Options& opt, Output& o) {
  const Side side = opt.side == "left" ? Side::left : opt.side == "right" ? Side::right : Side::both;
  const auto s = solve_antipode(b, side);
  o.doc["side"] = side_name(side);
  if (!s) {
    const std::string which = side == Side::both ? "" : std::string(side_name(side)) + " ";
    const std::string msg = "no " + which + "antipode: inconsistent system";
    o.doc["antipode"] = nullptr;
    o.doc["message"] = msg;
    o.line(msg);
    return 1;
  }
  o.doc["solution_space_dim"] = s->solution_space_dim;
  o.doc["antipode"] = matrix_json(s->s);
  o.line(std::string(side_name(side)) + " antipode, solution space dim " + std::to_string(s->solution_space_dim));
  for (std::size_t i = 0; i < b.dim(); ++i) o.line("  S(" + b.labels()[i] + ") = " + element(s->s.column(i), b.labels()));
  return 0;
}

int cmd_sigma(const Bialgebra& b, const Options& opt, Output& o) {
  const HopfVerdict v = opt.left ? decide_left_hopf(b) : decide_right_hopf(b);
  const SigmaData& sd = v.sigma;
  const std::string name = opt.left ? "varsigma" : "sigma";
  o.doc["map"] = name;
  o.doc["coinvariant_dim"] = sd.coinv.dim();
  o.doc["bar_dim"] = sd.bar.dim();
  o.doc["rank"] = rank(sd.sigma);
  o.doc["invertible"] = sd.invertible;
  o.doc["decomposition"] = sd.decomposition;
  o.doc["hopf"] = v.hopf;
  o.doc["matrix"] = matrix_json(sd.sigma);
  o.line(name + " on " + (opt.left ? "Bcheck" : "Bhat") + ": coinvariants dim " + std::to_string(sd.coinv.dim()) +
         ", quotient dim " + std::to_string(sd.bar.dim()) + ", rank " + std::to_string(rank(sd.sigma)));
  o.line(std::string("invertible: ") + (sd.invertible ? "yes" : "no"));
  o.line(std::string(opt.left ? "left" : "right") + " Hopf: " + (v.hopf ? "yes" : "no"));
  return sd.invertible ? 0 : 1;
}

int cmd_integrals(const Bialgebra& b, Output& o) {
  const IntegralSpaces s = integral_spaces(b);
  const auto dl = dual_labels(b.labels());
  const std::vector<std::pair<std::string, const Subspace*>> rows = {
      {"left_in_B", &s.left_in_b}, {"right_in_B", &s.right_in_b}, {"left_on_B", &s.left_on_b}, {"right_on_B", &s.right_on_b}};
  for (const auto& [key, space] : rows) {
    const bool functional = key.find("on_B") != std::string::npos;
    json basis = json::array();
    std::string text;
    for (std::size_t i = 0; i < space->dim(); ++i) {
      basis.push_back(scalars(space->basis_vector(i)));
      text += (i ? ", " : "") + element(space->basis_vector(i), functional ? dl : b.labels());
    }
    o.doc[key] = {{"dim", space->dim()}, {"basis", basis}};
    o.line(key + ": dim " + std::to_string(space->dim()) + " span{" + text + "}");
  }
  return 0;
}

int fh_failure(const FhResult& fh, Output& o) {
  o.doc["fh"] = false;
  o.doc["failure"] = fh.failure;
  o.doc["integral_dim"] = fh.integral_dim;
  o.line("not FH: " + fh.failure);
  o.line("dim int_r B* = " + std::to_string(fh.integral_dim));
  if (fh.form) {
    o.doc["form"] = matrix_json(*fh.form);
    o.line("form psi(b_i b_j), rank " + std::to_string(rank(*fh.form)) + ":");
    o.text += fh.form->str();
  }
  return 1;
}

int cmd_frobenius(const Bialgebra& b, Output& o) {
  const FhResult fh = fh_system(b);
  if (!fh) return fh_failure(fh, o);
  const FrobeniusSystem& sys = *fh.system;
  o.doc["form"] = matrix_json(sys.form);
  o.line("form psi(b_i b_j):");
  o.text += sys.form.str();
  const Report r = casimir_report(b, sys);
  o.doc["frobenius"] = r.ok();
  render_report(r, o, "checks");
  return r.ok() ? 0 : 1;
}

int cmd_fh(const Bialgebra& b, Output& o) {
  const FhResult fh = fh_system(b);
  if (!fh) return fh_failure(fh, o);
  const FrobeniusSystem& sys = *fh.system;
  const FhAntipode s = antipode_from_fh(b, sys);
  o.doc["fh"] = true;
  o.doc["psi"] = scalars(sys.psi);
  o.doc["T"] = scalars(sys.big_t);
  o.doc["t"] = scalars(sys.small_t);
  o.doc["e"] = scalars(sys.e);
  o.doc["antipode"] = matrix_json(s.s);
  o.line("psi = " + element(sys.psi, dual_labels(b.labels())));
  o.line("T = " + element(sys.big_t, b.labels()));
  o.line("t = " + element(sys.small_t, b.labels()));
  o.line("e = " + element(sys.e, tensor_labels(b.labels())));
  for (std::size_t i = 0; i < b.dim(); ++i) o.line("S(" + b.labels()[i] + ") = " + element(s.s.column(i), b.labels()));
  return 0;
}

int cmd_galois(const Bialgebra& b, Output& o) {
  const GaloisData g = hopf_galois(b);
  o.doc["rank"] = g.rank;
  o.doc["dim"] = b.dim() * b.dim();
  o.doc["bijective"] = g.bijective;
  o.line("beta: rank " + std::to_string(g.rank) + " of " + std::to_string(b.dim() * b.dim()));
  o.line(std::string("bijective: ") + (g.bijective ? "yes" : "no"));
  return g.bijective ? 0 : 1;
}

int cmd_report(const Bialgebra& b, Output& o) {
  const SummingUpPanel p = summingup_report(b);
  json rows = json::array();
  for (const auto& r : p.rows) {
    rows.push_back({{"item", r.item}, {"statement", r.statement}, {"verdict", r.verdict}, {"witness", r.witness}});
    o.line("(" + std::to_string(r.item) + ") " + (r.verdict ? "YES" : "NO ") + "  " + r.statement);
    o.line("      " + r.witness);
  }
  o.doc["panel"] = rows;
  o.doc["verdict"] = p.verdict;
  o.doc["consistent"] = true;
  o.line(std::string("all conditions agree: ") + (p.verdict ? "YES" : "NO"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfkit: exact checks for finite-dimensional bialgebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--unchecked", opt.unchecked, "Skip the bialgebra axiom check on input");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", opt.file, "Bialgebra file")->required();
    return c;
  };
  file_cmd("validate", "Check the bialgebra axioms");
  CLI::App* antipode = file_cmd("antipode", "Solve for an antipode");
  antipode->add_option("--side", opt.side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  CLI::App* sig = file_cmd("sigma", "The canonical map on Bhat");
  sig->add_flag("--left", opt.left, "Use varsigma on Bcheck");
  file_cmd("integrals", "The four integral spaces");
  file_cmd("frobenius", "The form psi(ab) and the Frobenius-system checks");
  file_cmd("fh", "psi, T, t and the Casimir element");
  file_cmd("galois", "Rank of the Hopf-Galois map");
  file_cmd("report", "The eight equivalent conditions");
  CLI::App* dual = file_cmd("dual", "Write the dual bialgebra");
  dual->add_option("-o", opt.out, "Output file")->required();
  CLI::App* gen = app.add_subcommand("gen", "Write a zoo member");
  gen->add_option("name", opt.name, "One of: " + [] {
    std::string s;
    for (const auto& n : zoo::names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();
  CLI::Option* field_opt = gen->add_option("--field", opt.field, "Q or Fp:p (divided_power:P defaults to Fp:P)");
  gen->add_option("-o", opt.out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const bool field_given = field_opt->count() > 0;
  Output o;
  o.as_json = opt.format == "json";
  o.doc["command"] = cmd;
  try {
    if (cmd == "gen") {
      Field field = parse_field(opt.field);
      if (!field_given && opt.name.rfind("divided_power:", 0) == 0) field = parse_field("Fp:" + opt.name.substr(14));
      const Bialgebra b = zoo::by_name(opt.name, field);
      write_bialgebra(b, opt.out);
      o.doc["written"] = opt.out;
      o.line("wrote " + opt.out);
      o.emit();
      return 0;
    }
    const Bialgebra b = read_bialgebra(opt.file, !opt.unchecked && cmd != "validate");
    o.doc["dim"] = b.dim();
    o.doc["field"] = field_json(b.field());
    int code = 0;
    if (cmd == "validate")
      code = cmd_validate(b, o);
    else if (cmd == "antipode")
      code = cmd_antipode(b, opt, o);
    else if (cmd == "sigma")
      code = cmd_sigma(b, opt, o);
    else if (cmd == "integrals")
      code = cmd_integrals(b, o);
    else if (cmd == "frobenius")
      code = cmd_frobenius(b, o);
    else if (cmd == "fh")
      code = cmd_fh(b, o);
    else if (cmd == "galois")
      code = cmd_galois(b, o);
    else if (cmd == "report")
      code = cmd_report(b, o);
    else if (cmd == "dual") {
      write_bialgebra(dual_bialgebra(b), opt.out);
      o.doc["written"] = opt.out;
      o.line("wrote " + opt.out);
    }
    o.emit();
    return code;
  } catch (const AxiomError& e) {
    std::cerr << "error: bialgebra axioms fail\n" << e.report().str();
    return 2;
  } catch (const TheoremViolation& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
