// bianchi: command-line front end.
//
// Exit codes: 0 success, 1 invalid input (parse or domain error),
// 2 structure is not Lie, 3 incompatible deformation direction,
// 4 recomputed tables differ from the published ones, 5 a selftest property failed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bianchi.hpp"

namespace fs = std::filesystem;
using namespace bianchi;
using io::json;

namespace {

enum Exit { kOk = 0, kParse = 1, kNotLie = 2, kIncompatible = 3, kTablesDiffer = 4, kSelftestFailed = 5 };

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(in), {}};
}

io::StructureDocument load(const std::string& path) {
  const std::string name = path == "-" ? "<stdin>" : path;
  return io::parse_document(io::parse_text(read_source(path), name), name);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Rational> parse_ts(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw ParseError("--ts: empty list");
  return out;
}

std::vector<double> parse_doubles(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError(flag + ": '" + item + "' is not a number");
    }
  }
  return out;
}

int cmd_classify(const std::string& path) {
  const io::StructureDocument doc = load(path);
  const json rep = io::classification_report(doc);
  emit(rep);
  return rep["type"].is_null() ? kNotLie : kOk;
}

int cmd_cohomology(const std::string& path) {
  const StructureTensor q = load(path).tensor();
  if (!is_lie(q)) {
    std::cerr << "error: structure does not satisfy the Jacobi identity\n";
    return kNotLie;
  }
  emit({{"q", io::to_json(q.q())},
        {"type", io::to_json(classify(q))},
        {"sym_dim", sym_algebra_dim(q)},
        {"cohomology", io::to_json(cohomology_report(q), true)}});
  return kOk;
}

int cmd_compatible(const std::string& a, const std::string& b) {
  const StructureTensor q1 = load(a).tensor(), q2 = load(b).tensor();
  if (!is_lie(q1) || !is_lie(q2)) {
    std::cerr << "error: " << (is_lie(q1) ? "second" : "first") << " structure is not Lie\n";
    return kNotLie;
  }
  const Vec3 w = compat_pairing(q1, q2);
  emit({{"compatible", is_zero(w)},
        {"pairing", io::to_json(w)},
        {"sum_type", is_zero(w) ? io::to_json(classify(q1 + q2)) : json(nullptr)}});
  return kOk;
}

int cmd_strata(const std::string& path) {
  const StructureTensor q = load(path).tensor();
  if (!is_lie(q)) {
    std::cerr << "error: structure does not satisfy the Jacobi identity\n";
    return kNotLie;
  }
  emit(io::to_json(strat_report(q)));
  return kOk;
}

int cmd_deform(const std::string& c0_path, const std::string& d_path, const std::string& ts_text) {
  const StructureTensor c0 = load(c0_path).tensor(), d = load(d_path).tensor();
  const std::vector<Rational> ts = parse_ts(ts_text);
  DeformationPath path;
  try {
    path = deform(c0, d, ts);
  } catch (const IncompatibleDirection& e) {
    std::cerr << "error: " << e.what() << "; compat pairing = " << io::to_json(e.pairing).dump() << '\n';
    emit({{"error", "incompatible direction"}, {"pairing", io::to_json(e.pairing)}});
    return kIncompatible;
  } catch (const NotLie& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotLie;
  }
  json out{{"path", io::to_json(path)}};
  std::size_t nonzero = 0;
  bool has_zero = false;
  for (const auto& s : path.samples) {
    if (s.t.is_zero()) has_zero = true;
    else ++nonzero;
  }
  out["verdict"] = has_zero && nonzero >= 2 ? json(to_string(contraction_verdict(path))) : json("undetermined");
  emit(out);
  return kOk;
}

struct LeavesOptions {
  std::string family = "B1";
  std::string param = "0";
  std::string starts = "hexagon";
  double dt = 0.01;
  double t_end = 3.0;
  std::string out = "leaves";
  std::string method = "auto";
  bool full = false;
};

int cmd_leaves(LeavesOptions o) {
  if (o.method == "auto") o.method = o.family == "phi" ? "rk4" : "closed";
  std::vector<std::array<double, 2>> starts;
  if (o.starts == "hexagon") {
    starts = hexagon_starts();
  } else {
    std::stringstream ss(o.starts);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
      const auto v = parse_doubles(pair, "--starts");
      if (v.size() != 2) throw ParseError("--starts: expected 'x1,x2;x1,x2;...', got '" + pair + "'");
      starts.push_back({v[0], v[1]});
    }
    if (starts.empty()) throw ParseError("--starts: no start points");
  }

  Mat2d j{};
  std::optional<Family> family;
  double param = 0;
  json params;
  if (o.family == "phi") {
    const auto v = parse_doubles(o.param, "--param");
    if (v.size() != 4) throw ParseError("--param: phi needs four entries 'p11,p12,p21,p22'");
    if (o.method == "closed") throw DomainError("--method closed is only available for the named families");
    j = transpose(Mat2d{{{v[0], v[1]}, {v[2], v[3]}}});
    params = {{"phi", {{v[0], v[1]}, {v[2], v[3]}}}};
  } else {
    if (o.family == "B1") family = Family::B1;
    else if (o.family == "B2plus") family = Family::B2plus;
    else if (o.family == "B2minus") family = Family::B2minus;
    else throw ParseError("--family: expected B1, B2plus, B2minus or phi, got '" + o.family + "'");
    const auto v = parse_doubles(o.param, "--param");
    if (v.size() != 1) throw ParseError("--param: expected one number for " + o.family);
    if (*family != Family::B1 && !(v[0] > 0)) throw DomainError("--param: " + o.family + " needs mu > 0");
    param = v[0];
    j = transpose(family_phi(*family, param));
    params = {{*family == Family::B1 ? "lambda" : "mu", v[0]}};
  }

  fs::create_directories(o.out);
  json files = json::array(), start_list = json::array();
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const Trajectory t = o.method == "closed"
                             ? closed_form_trajectory(*family, param, starts[k], uniform_times(o.t_end, o.dt))
                             : integrate_trajectory(j, starts[k], o.t_end, o.dt);
    const std::string name = o.family + "_" + std::to_string(k) + ".csv";
    std::ofstream csv(fs::path(o.out) / name);
    write_csv(csv, t, o.full);
    files.push_back(name);
    start_list.push_back({starts[k][0], starts[k][1]});
  }
  json manifest{{"family", o.family}, {"params", params}, {"method", o.method}, {"dt", o.dt},
                {"t_end", o.t_end},   {"full", o.full},   {"starts", start_list}, {"files", files}};
  std::ofstream(fs::path(o.out) / "manifest.json") << manifest.dump(2) << '\n';
  emit(manifest);
  return kOk;
}

int cmd_tables(bool as_json) {
  const Tables computed = compute_tables();
  const auto diff = diff_tables(expected_tables(), computed);
  if (as_json) {
    json u = json::array(), n = json::array();
    for (const auto& r : computed.unimodular) u.push_back({{"type", r.type}, {"values", r.values}});
    for (const auto& r : computed.non_unimodular) n.push_back({{"type", r.type}, {"values", r.values}});
    emit({{"unimodular", u}, {"non_unimodular", n}, {"matches", diff.empty()}});
  } else {
    std::cout << render_tables(computed);
  }
  for (const auto& d : diff) std::cerr << "mismatch: " << d << '\n';
  return diff.empty() ? kOk : kTablesDiffer;
}

int cmd_selftest() {
  std::uint64_t seed = 42;
  if (const char* env = std::getenv("BIANCHI_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::logic_error&) {
      throw ParseError(std::string("BIANCHI_SEED: '") + env + "' is not an integer");
    }
  }
  std::cout << "seed " << seed << '\n';
  bool ok = true;
  for (const auto& r : checks::run_all(seed)) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.pass;
  }
  return ok ? kOk : kSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bianchi classification, cohomology and leaves of 3-dimensional Lie structures"};
  app.require_subcommand(1);

  std::string input = "-", second, ts = "0,1/4,1/2,3/4";
  bool tables_json = false;
  LeavesOptions lo;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a structure and report its invariants");
  classify_cmd->add_option("input", input, "JSON document, '-' for stdin");
  auto* cohomology_cmd = app.add_subcommand("cohomology", "Z^2, B^2 and H^2 with bases");
  cohomology_cmd->add_option("input", input, "JSON document, '-' for stdin");
  auto* compatible_cmd = app.add_subcommand("compatible", "Mixed bracket of two structures");
  compatible_cmd->add_option("first", input)->required();
  compatible_cmd->add_option("second", second)->required();
  auto* strata_cmd = app.add_subcommand("strata", "Fibers of the compatibility variety over named strata");
  strata_cmd->add_option("input", input, "JSON document, '-' for stdin");
  auto* deform_cmd = app.add_subcommand("deform", "Linear deformation (1-t) c0 + t d");
  deform_cmd->add_option("c0", input)->required();
  deform_cmd->add_option("d", second)->required();
  deform_cmd->add_option("--ts", ts, "comma-separated rational samples");
  auto* tables_cmd = app.add_subcommand("tables", "Recompute both dimension tables");
  tables_cmd->add_flag("--json", tables_json);
  auto* leaves_cmd = app.add_subcommand("leaves", "Export leaf projections as CSV");
  leaves_cmd->add_option("--family", lo.family, "B1, B2plus, B2minus or phi")->capture_default_str();
  leaves_cmd->add_option("--param", lo.param, "lambda (B1), mu (B2plus/B2minus) or p11,p12,p21,p22 (phi)")
      ->capture_default_str();
  leaves_cmd->add_option("--starts", lo.starts, "'hexagon' or 'x1,x2;x1,x2;...'")->capture_default_str();
  leaves_cmd->add_option("--dt", lo.dt)->check(CLI::PositiveNumber)->capture_default_str();
  leaves_cmd->add_option("--t-end", lo.t_end)->check(CLI::PositiveNumber)->capture_default_str();
  leaves_cmd->add_option("--out", lo.out, "output directory")->capture_default_str();
  leaves_cmd->add_option("--method", lo.method, "closed for B1/B2plus/B2minus and rk4 for phi unless given")
      ->check(CLI::IsMember({"auto", "closed", "rk4"}))
      ->capture_default_str();
  leaves_cmd->add_flag("--full", lo.full, "add the x3 column");
  auto* selftest_cmd = app.add_subcommand("selftest", "Seeded property checks (BIANCHI_SEED, default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(input);
    if (*cohomology_cmd) return cmd_cohomology(input);
    if (*compatible_cmd) return cmd_compatible(input, second);
    if (*strata_cmd) return cmd_strata(input);
    if (*deform_cmd) return cmd_deform(input, second, ts);
    if (*tables_cmd) return cmd_tables(tables_json);
    if (*leaves_cmd) return cmd_leaves(lo);
    if (*selftest_cmd) return cmd_selftest();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NotLie& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotLie;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
