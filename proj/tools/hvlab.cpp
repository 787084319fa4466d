// hvlab: command-line front end for the hv library.
//
// Every subcommand computes a JSON result object with a "status" field and
// renders it either as that object (wrapped in the report envelope) or as a
// few lines of text. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hv/bialgebra.hpp"
#include "hv/derivation.hpp"
#include "hv/errors.hpp"
#include "hv/expr.hpp"
#include "hv/format.hpp"
#include "hv/run_config.hpp"
#include "hv/serialize.hpp"
#include "hv/version.hpp"

using namespace hv;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string config_file;
  std::optional<std::string> variant, mixed_cocycle, generators, format;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
};

RunConfig resolve(const Globals& g) {
  RunConfig rc = g.config_file.empty() ? RunConfig{} : RunConfig::load(g.config_file);
  if (g.generators) rc.set("generators", *g.generators);
  if (g.variant) rc.set("variant", *g.variant);
  if (g.mixed_cocycle) rc.set("mixed_cocycle", *g.mixed_cocycle);
  if (g.format) rc.set("format", *g.format);
  if (g.seed) rc.seed = *g.seed;
  if (g.jobs) rc.jobs = *g.jobs;
  return rc;
}

json run_config_json(const RunConfig& rc) {
  json j = config_json(*rc.algebra());
  j["radius"] = rc.radius;
  j["seed"] = rc.seed;
  j["format"] = rc.format;
  j["jobs"] = rc.jobs;
  return j;
}

const char* status(bool ok) { return ok ? "pass" : "fail"; }

void print_check_text(const json& r, std::ostream& out) {
  out << r.at("check").get<std::string>() << ": " << r.at("status").get<std::string>();
  if (r.contains("cases")) out << " (" << r.at("cases") << " cases, window " << r.at("window") << ", " << r.at("variant").get<std::string>() << ")";
  out << "\n";
  if (r.contains("witness")) {
    out << "  witness: " << r.at("witness").get<std::string>() << "\n";
    out << "  lhs: " << r.at("lhs").get<std::string>() << "\n";
    out << "  rhs: " << r.at("rhs").get<std::string>() << "\n";
  }
}

void print_certificate_text(const json& c, std::ostream& out) {
  out << "  infeasible at equation " << c.at("equation").get<std::string>() << "\n";
  out << "  residual: 0 = " << c.at("residual").get<std::string>() << "\n";
  out << "  " << c.at("support").get<std::string>() << "\n";
  for (const auto& row : c.at("combination"))
    out << "    " << row.at("multiplier").get<std::string>() << " * [" << row.at("equation").get<std::string>() << "]\n";
}

// Text rendering of a result object. Results with nested reports or
// certificates get their own layout; everything else prints key: value.
void print_text(const std::string& command, const json& r, std::ostream& out) {
  if (r.contains("check") && r.contains("cases")) {
    print_check_text(r, out);
    return;
  }
  if (r.contains("axioms")) {
    out << command << ": " << r.at("status").get<std::string>() << "\n";
    for (const auto& a : r.at("axioms")) {
      out << "  ";
      print_check_text(a, out);
    }
    return;
  }
  out << command << ": " << r.value("status", "pass") << "\n";
  for (const auto& [k, v] : r.items()) {
    if (k == "status" || k == "certificate" || k == "representatives") continue;
    out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  if (r.contains("certificate")) print_certificate_text(r.at("certificate"), out);
  if (r.contains("representatives"))
    for (const auto& rep : r.at("representatives")) out << "  representative: " << rep.at("label").get<std::string>() << "\n";
}

Rational parse_rational_arg(const std::string& s, const char* what) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be a rational like -3/2, got '" + s + "'");
  }
}

// "λ,C" with C a central symbol.
std::pair<Rational, Element> parse_sigma_arg(const std::string& s, const ConfigPtr& cfg) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--sigma expects 'lambda,C', e.g. '1,C_I'");
  return {parse_rational_arg(s.substr(0, comma), "sigma lambda"), parse_algebra_element(s.substr(comma + 1), cfg)};
}

json sigma_json(const std::vector<SigmaTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"central", to_string(t.central)}, {"lambda", t.lambda.str()}, {"eta", t.eta.str()}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in generalized Heisenberg-Virasoro algebras and their Lie bialgebra structures",
               "hvlab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_file, "key=value config file")->check(CLI::ExistingFile);
  app.add_option("--variant", g.variant, "full | centerless");
  app.add_option("--mixed-cocycle", g.mixed_cocycle, "paper | standard | cubic");
  app.add_option("--generators", g.generators, "group generators, e.g. \"1/2, 1/3\"");
  app.add_option("--seed", g.seed, "random seed (recorded in reports)");
  app.add_option("--format", g.format, "text | json");
  app.add_option("--jobs", g.jobs, "worker threads for window scans");

  std::optional<std::size_t> radius, probes;
  std::size_t support = 2;
  std::string r_text, x_text, a_text, b_text, sigma_text, table_file, degree_text, e1, e2;

  auto* verify = app.add_subcommand("verify-axioms", "skew-symmetry and Jacobi on a window");
  verify->add_option("--radius", radius);

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two elements");
  bracket_cmd->add_option("e1", e1)->required();
  bracket_cmd->add_option("e2", e2)->required();

  auto* cybe = app.add_subcommand("cybe", "classical Yang-Baxter defect c(r)");
  cybe->add_option("--r", r_text)->required();

  auto* mybe = app.add_subcommand("mybe", "x.c(r) = 0 on probes of a window");
  mybe->add_option("--r", r_text)->required();
  mybe->add_option("--probes", probes);

  auto* bialg = app.add_subcommand("bialgebra", "Lie bialgebra axioms of a cobracket");
  auto* opt_r = bialg->add_option("--r", r_text);
  auto* opt_sigma = bialg->add_option("--sigma", sigma_text, "lambda,C");
  auto* opt_table = bialg->add_option("--table", table_file)->check(CLI::ExistingFile);
  opt_r->excludes(opt_sigma)->excludes(opt_table);
  opt_sigma->excludes(opt_table);
  bialg->add_option("--radius", radius);

  auto* drinfeld = app.add_subcommand("drinfeld", "(1+xi+xi^2)(1@D_r)D_r(x) against x.c(r)");
  drinfeld->add_option("--r", r_text)->required();
  drinfeld->add_option("--x", x_text)->required();

  auto* triangular = app.add_subcommand("triangular", "r = a wedge b for [a,b] = b");
  triangular->add_option("--a", a_text)->required();
  triangular->add_option("--b", b_text)->required();

  auto* decompose = app.add_subcommand("decompose", "solve D = D_r + sigma for a cobracket table");
  decompose->add_option("--table", table_file)->required()->check(CLI::ExistingFile);
  decompose->add_option("--support", support);

  auto* dcheck = app.add_subcommand("derivation-check", "derivation identity for a table");
  dcheck->add_option("--table", table_file)->required()->check(CLI::ExistingFile);
  dcheck->add_option("--radius", radius);

  auto* inner = app.add_subcommand("solve-inner", "look for u with D(x) = x.u");
  inner->add_option("--table", table_file)->required()->check(CLI::ExistingFile);
  inner->add_option("--support", support);
  inner->add_option("--probes", probes);

  auto* h1 = app.add_subcommand("h1", "window statistics for H^1(L, L@L) in one degree");
  h1->add_option("--degree", degree_text)->required();
  h1->add_option("--radius", radius);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  bool json_out = g.format && *g.format == "json";
  RunConfig rc;
  json result;
  try {
    rc = resolve(g);
    json_out = rc.format == "json";
    const ConfigPtr cfg = rc.algebra();
    const std::size_t rad = radius.value_or(rc.radius);

    if (command == "verify-axioms") {
      result = report_json(verify_algebra_axioms(cfg, rad, rc.jobs));
    } else if (command == "bracket") {
      const Element v = bracket(parse_algebra_element(e1, cfg), parse_algebra_element(e2, cfg));
      result = {{"status", "pass"}, {"value", format(v)}};
    } else if (command == "cybe") {
      const auto defect = cybe_defect(parse_tensor2(r_text, cfg));
      result = {{"status", status(defect.vanishes())}, {"defect", format(defect.value)}};
    } else if (command == "mybe") {
      result = report_json(mybe_check(parse_tensor2(r_text, cfg), probes.value_or(rad)));
    } else if (command == "bialgebra") {
      CobracketTable table;
      if (!r_text.empty()) table = from_r(parse_tensor2(r_text, cfg), rad + 1);
      else if (!sigma_text.empty()) {
        const auto [lambda, c] = parse_sigma_arg(sigma_text, cfg);
        table = sigma_cobracket(lambda, c, rad + 1);
      } else if (!table_file.empty()) table = read_cobracket_table(table_file, cfg);
      else throw UsageError("bialgebra needs one of --r, --sigma, --table");
      result = report_json(bialgebra_axiom_check(table, rad));
    } else if (command == "drinfeld") {
      const auto d = drinfeld_identity_check(parse_tensor2(r_text, cfg), parse_algebra_element(x_text, cfg));
      result = {{"status", status(d.equal)}, {"lhs", format(d.lhs)}, {"rhs", format(d.rhs)}};
    } else if (command == "triangular") {
      const Tensor2 r = triangular_pair(parse_algebra_element(a_text, cfg), parse_algebra_element(b_text, cfg));
      const auto defect = cybe_defect(r);
      result = {{"status", status(defect.vanishes())}, {"r", format(r)}, {"defect", format(defect.value)}};
    } else if (command == "decompose") {
      const auto d = cobracket_decompose(read_cobracket_table(table_file, cfg), support);
      result = {{"status", status(d.feasible)}, {"unknowns", d.unknowns}, {"equations", d.equations}};
      if (d.feasible) {
        result["r"] = format(d.r);
        result["sigma"] = sigma_json(d.sigma);
      } else {
        result["certificate"] = report_json(*d.certificate);
      }
    } else if (command == "derivation-check") {
      result = report_json(derivation_check(read_derivation_table(table_file, cfg), rad));
    } else if (command == "solve-inner") {
      const auto s = solve_inner(read_derivation_table(table_file, cfg), support, probes);
      result = {{"status", status(s.feasible)}, {"unknowns", s.unknowns}, {"equations", s.equations}};
      if (s.feasible) result["u"] = format(s.u);
      else result["certificate"] = report_json(*s.certificate);
    } else if (command == "h1") {
      result = report_json(h1_probe(cfg, rad, parse_rational_arg(degree_text, "--degree")));
      result["status"] = "pass";
    }
  } catch (const PreconditionError& e) {
    result = {{"status", "fail"}, {"error", e.what()}};
  } catch (const ParseError& e) {
    result = {{"status", "error"}, {"error", e.what()}, {"offset", e.offset()}};
  } catch (const std::exception& e) {
    result = {{"status", "error"}, {"error", e.what()}};
  }

  const std::string st = result.value("status", "error");
  if (st == "error") std::cerr << "hvlab " << command << ": " << result.at("error").get<std::string>() << "\n";
  if (json_out) {
    json envelope = {{"tool_version", kVersion}, {"command", command}, {"result", result}};
    try {
      envelope["config"] = run_config_json(rc);
    } catch (const std::exception&) {
      envelope["config"] = nullptr;
    }
    std::cout << envelope.dump(2) << "\n";
  } else if (st != "error") {
    print_text(command, result, std::cout);
  }
  return st == "pass" ? kPass : st == "fail" ? kFail : kUsage;
}
