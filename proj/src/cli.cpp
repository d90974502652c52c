#include "charbound/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "charbound/bounds.hpp"
#include "charbound/chern.hpp"
#include "charbound/errors.hpp"
#include "charbound/oracle.hpp"
#include "charbound/report_io.hpp"
#include "charbound/schubert.hpp"

namespace charbound {

namespace {

// Raised for bad flags or unreadable input; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct VarietyArgs {
  std::string path;
  int ambient_dim = 0;
  std::string multidegree;

  void attach(CLI::App* cmd) {
    cmd->add_option("--variety", path, "JSON file: {\"ambient_dim\": m, \"multidegree\": [...]} or a list of them");
    cmd->add_option("-m,--ambient-dim", ambient_dim, "Ambient projective dimension m");
    cmd->add_option("--multidegree", multidegree, "Comma-separated degrees, e.g. 2,2");
  }

  bool given() const { return !path.empty() || ambient_dim != 0; }

  std::vector<CompleteIntersection> resolve() const {
    std::vector<CompleteIntersection> out;
    if (!path.empty()) {
      const nlohmann::json j = read_json(path);
      if (j.is_array()) {
        for (const auto& v : j) out.push_back(variety_from_json(v));
      } else {
        out.push_back(variety_from_json(j));
      }
      return out;
    }
    if (ambient_dim == 0) throw UsageError("a variety is required (--variety or --ambient-dim/--multidegree)");
    out.emplace_back(ambient_dim, parse_int_list(multidegree));
    return out;
  }

  static nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
      return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
};

Integer parse_integer(const std::string& text, const char* what) {
  try {
    return Integer(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  if (!file) throw UsageError("write failed: " + path);
}

std::string render(std::span<const BoundReport> reports, const std::string& format) {
  if (format == "json") return reports_to_json(reports);
  if (format == "csv") return reports_to_csv(reports);
  if (format == "markdown") return reports_to_markdown(reports);
  throw UsageError("unknown format '" + format + "'");
}

std::string join(const std::vector<Integer>& values) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? "," : "") << values[i];
  s << ")";
  return s.str();
}

// ---- bound ---------------------------------------------------------------

struct BoundArgs {
  bool betti = false;
  bool pontryagin = false;
  bool ci = false;
  bool cin = false;
  bool recursive = false;
  int n = 0;
  std::string d;
  std::string index;
  VarietyArgs variety;
};

int cmd_bound(const BoundArgs& a, std::ostream& out, std::ostream& err) {
  const int chosen = int(a.betti) + int(a.pontryagin) + int(a.ci) + int(a.cin) + int(a.recursive);
  if (chosen != 1) {
    throw UsageError("choose exactly one of --betti, --pontryagin, --ci, --cin, --betti-recursive");
  }
  if (a.recursive) {
    for (const auto& ci : a.variety.resolve()) out << betti_bound_recursive(ci) << "\n";
    return kExitOk;
  }
  if (a.n < 1 || a.d.empty()) throw UsageError("bound needs -n >= 1 and -d");
  const Integer d = parse_integer(a.d, "-d");
  if (d < 1) throw UsageError("-d must be >= 1");
  if ((a.ci || a.cin) && a.index.empty()) throw UsageError("--ci/--cin need -I");
  const MultiIndex index(parse_int_list(a.index));
  if (index.weight() > a.n) throw UsageError("|I| exceeds n");

  Integer value;
  if (a.betti) value = betti_bound(a.n, d);
  if (a.pontryagin) value = pontryagin_bound(a.n, d);
  if (a.ci) value = cI_bound(a.n, d, index);
  if (a.cin) value = cIn_bound(a.n, d, index);
  if (is_degenerate(a.n, d) && !a.betti) err << "note: degenerate case d + n - 2 = 0\n";
  out << value << "\n";
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string grid_path;
  std::optional<int> max_ambient_dim;
  std::optional<int> max_degree;
  std::optional<int> min_degree;
  std::optional<int> max_codim;
  std::optional<std::size_t> max_cases;
  std::string checks;
  std::string format = "json";
  bool markdown = false;
  std::string out_path;
  bool signature = false;
  std::string sigma;
  std::string c2_squared;
  VarietyArgs variety;
};

GridSpec build_grid(const VerifyArgs& a) {
  GridSpec spec;
  if (!a.grid_path.empty()) {
    try {
      spec = grid_from_json(VarietyArgs::read_json(a.grid_path));
    } catch (const StructuralError& e) {
      throw UsageError(a.grid_path + ": " + e.what());
    }
  }
  if (a.max_ambient_dim) spec.max_ambient_dim = *a.max_ambient_dim;
  if (a.max_degree) spec.max_degree_per_factor = *a.max_degree;
  if (a.min_degree) spec.min_degree_per_factor = *a.min_degree;
  if (a.max_codim) spec.max_codim = *a.max_codim;
  if (a.max_cases) spec.max_cases = *a.max_cases;
  if (!a.checks.empty()) {
    spec.checks.clear();
    std::istringstream in(a.checks);
    std::string name;
    while (std::getline(in, name, ',')) {
      try {
        spec.checks.push_back(parse_check(name));
      } catch (const StructuralError& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (a.variety.given()) spec.varieties = a.variety.resolve();
  if (const char* env = std::getenv("CHARBOUND_MAX_CASES"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long cap = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      spec.max_cases = static_cast<std::size_t>(cap);
    } catch (const std::exception&) {
      throw UsageError(std::string("CHARBOUND_MAX_CASES is not a count: '") + env + "'");
    }
  }
  return spec;
}

int finish_reports(std::span<const BoundReport> reports, const VerifyArgs& a, std::ostream& out,
                   std::ostream& err) {
  const std::string format = a.markdown ? "markdown" : a.format;
  write_output(render(reports, format), a.out_path, out);
  int code = kExitOk;
  for (const auto& r : reports) {
    if (!r.satisfied) {
      err << witness(r) << "\n";
      code = kExitViolation;
    }
  }
  return code;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.signature) {
    if (a.sigma.empty()) throw UsageError("--signature needs --sigma");
    const Integer sigma = parse_integer(a.sigma, "--sigma");
    std::vector<BoundReport> reports;
    if (!a.c2_squared.empty()) {
      reports.push_back(signature_check(parse_integer(a.c2_squared, "--c2-squared"), sigma));
    } else {
      for (const auto& ci : a.variety.resolve()) reports.push_back(signature_check(ci, sigma));
    }
    return finish_reports(reports, a, out, err);
  }
  const GridSpec spec = build_grid(a);
  const GridResult result = verify_grid(spec);
  if (result.truncated) {
    err << "note: grid truncated to " << result.varieties_evaluated << " of "
        << result.varieties_total << " varieties\n";
  }
  return finish_reports(result.reports, a, out, err);
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
  VarietyArgs variety;
  std::string quantities = "chi,betti,hl,chern,bounds";
  std::string format = "text";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  std::vector<std::string> wanted;
  {
    std::istringstream in(a.quantities);
    std::string q;
    while (std::getline(in, q, ',')) {
      if (q != "chi" && q != "betti" && q != "hl" && q != "chern" && q != "bounds") {
        throw UsageError("unknown quantity '" + q + "'");
      }
      wanted.push_back(q);
    }
  }
  if (a.format != "text" && a.format != "json") throw UsageError("table format must be text or json");

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& ci : a.variety.resolve()) {
    const int n = ci.dimension();
    const Integer d = ci.degree();
    nlohmann::ordered_json row;
    row["variety"] = ci.label();
    row["n"] = n;
    row["d"] = d.str();
    for (const auto& q : wanted) {
      if (q == "chi") row["chi"] = euler_characteristic(ci).str();
      if (q == "betti") row["b"] = join(exact_betti(ci));
      if (q == "hl") row["hL"] = join(hL_sequence(ci));
      if (q == "chern") {
        const ChernVector omega = cotangent_chern(ci);
        for (const auto& index : multi_indices_up_to(n)) {
          if (index.weight() != n) continue;
          row["c" + index.to_string() + "(Omega)"] = chern_number(ci, omega, index).str();
        }
      }
      if (q == "bounds") {
        row["betti_bound"] = betti_bound(n, d).str();
        row["betti_bound_recursive"] = betti_bound_recursive(ci).str();
        row["pontryagin_bound"] = pontryagin_bound(n, d).str();
      }
    }
    rows.push_back(std::move(row));
  }

  if (a.format == "json") {
    out << rows.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      if (!first) out << "  ";
      first = false;
      if (key == "variety") {
        out << value.get<std::string>();
      } else {
        out << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
      }
    }
    out << "\n";
  }
  return kExitOk;
}

// ---- schubert ------------------------------------------------------------

struct SchubertArgs {
  int q = 0;
  int N = 0;
  std::string power;
  std::string product;
  std::string giambelli;
  bool degree = false;
  bool expand = false;
};

// "sigma1^4" or "1^4" -> (1, 4).
std::pair<int, int> parse_power(const std::string& text) {
  std::string s = text;
  if (s.rfind("sigma", 0) == 0) s = s.substr(5);
  const auto caret = s.find('^');
  try {
    if (caret == std::string::npos) return {std::stoi(s), 1};
    return {std::stoi(s.substr(0, caret)), std::stoi(s.substr(caret + 1))};
  } catch (const std::exception&) {
    throw UsageError("cannot parse power '" + text + "' (expected e.g. sigma1^4)");
  }
}

int cmd_schubert(const SchubertArgs& a, std::ostream& out, std::ostream& err) {
  const int chosen = int(!a.power.empty()) + int(!a.product.empty()) + int(!a.giambelli.empty()) +
                     int(a.degree);
  if (chosen != 1) throw UsageError("choose exactly one of --power, --product, --giambelli, --degree");
  Grassmannian g{};
  try {
    g = make_grassmannian(a.q, a.N);
  } catch (const StructuralError& e) {
    throw UsageError(e.what());
  }

  if (a.degree) {
    out << grassmannian_degree(g.q, g.N) << "\n";
    return kExitOk;
  }
  if (!a.giambelli.empty()) {
    const Partition lambda(parse_int_list(a.giambelli));
    out << giambelli_expand(lambda, g).to_string() << "\n";
    return kExitOk;
  }

  std::vector<SchubertClass> factors;
  if (!a.power.empty()) {
    const auto [k, p] = parse_power(a.power);
    if (k < 0 || k > g.cols() || p < 0) throw UsageError("power out of range for this Grassmannian");
    for (int i = 0; i < p; ++i) factors.push_back(SchubertClass::basis(g, Partition({k})));
  } else {
    std::istringstream in(a.product);
    std::string item;
    while (std::getline(in, item, '*')) {
      factors.push_back(SchubertClass::basis(g, Partition(parse_int_list(item))));
    }
  }
  if (a.expand) {
    SchubertClass product = SchubertClass::unit(g);
    for (const auto& f : factors) product = multiply(product, f);
    out << product.to_string() << "\n";
    return kExitOk;
  }
  try {
    out << intersection_number(factors) << "\n";
  } catch (const DegreeError& e) {
    err << "degree mismatch: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic-class bounds for complete intersections", "charbound"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form bound");
  bound_cmd->add_flag("--betti", bound.betti, "2^{n^2+2} d^{n+1}");
  bound_cmd->add_flag("--pontryagin", bound.pontryagin, "2^{n^2+3n} d (d+n-2)^n");
  bound_cmd->add_flag("--ci", bound.ci, "d (d+n-2)^{|I|}");
  bound_cmd->add_flag("--cin", bound.cin, "2^{n^2} d (d+n-2)^{|I|}");
  bound_cmd->add_flag("--betti-recursive", bound.recursive, "Hyperplane recursion for a variety");
  bound_cmd->add_option("-n", bound.n, "Complex dimension");
  bound_cmd->add_option("-d", bound.d, "Degree");
  bound_cmd->add_option("-I", bound.index, "Multi-index, e.g. 1,1");
  bound.variety.attach(bound_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the bounds over a grid of complete intersections");
  verify_cmd->add_option("--grid", verify.grid_path, "Grid spec JSON file");
  verify_cmd->add_option("--max-ambient-dim", verify.max_ambient_dim);
  verify_cmd->add_option("--max-degree", verify.max_degree, "Largest degree per factor");
  verify_cmd->add_option("--min-degree", verify.min_degree, "Smallest degree per factor (default 2)");
  verify_cmd->add_option("--max-codim", verify.max_codim);
  verify_cmd->add_option("--max-cases", verify.max_cases);
  verify_cmd->add_option("--checks", verify.checks, "Comma-separated check names");
  verify_cmd->add_option("--format", verify.format, "json|csv|markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  verify_cmd->add_flag("--markdown", verify.markdown, "Same as --format markdown");
  verify_cmd->add_option("--out", verify.out_path, "Output file (default stdout)");
  verify_cmd->add_flag("--signature", verify.signature, "Check |3 sigma| <= c2^2 for supplied sigma");
  verify_cmd->add_option("--sigma", verify.sigma, "Signature of the real 4-manifold");
  verify_cmd->add_option("--c2-squared", verify.c2_squared, "Supplied c2^2 instead of a variety");
  verify.variety.attach(verify_cmd);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Invariants and bounds of complete intersections");
  table.variety.attach(table_cmd);
  table_cmd->add_option("--quantities", table.quantities, "Subset of chi,betti,hl,chern,bounds");
  table_cmd->add_option("--format", table.format, "text|json");

  SchubertArgs schubert;
  auto* schubert_cmd = app.add_subcommand("schubert", "Schubert calculus on G_q(C^N)");
  schubert_cmd->add_option("-q", schubert.q, "Subspace dimension")->required();
  schubert_cmd->add_option("-N", schubert.N, "Ambient dimension")->required();
  schubert_cmd->add_option("--power", schubert.power, "sigmaK^P, e.g. sigma1^4");
  schubert_cmd->add_option("--product", schubert.product, "Partitions joined by '*', e.g. 2,1*1*1");
  schubert_cmd->add_option("--giambelli", schubert.giambelli, "Expand sigma_lambda, e.g. 1,1");
  schubert_cmd->add_flag("--degree", schubert.degree, "Degree of the Grassmannian");
  schubert_cmd->add_flag("--expand", schubert.expand, "Print the product class instead of a number");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*bound_cmd) return cmd_bound(bound, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*table_cmd) return cmd_table(table, out);
    if (*schubert_cmd) return cmd_schubert(schubert, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegreeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace charbound
