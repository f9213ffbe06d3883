#include "nestedrisk/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nestedrisk/json_io.hpp"

namespace nestedrisk::cli {

namespace {

constexpr const char* kToolVersion = "0.1.0";

[[noreturn]] void input_error(const std::string& msg) {
  throw std::invalid_argument(msg);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    input_error("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

// FNV-1a over the concatenated bytes of the input files, in flag order.
std::string digest_files(const std::vector<std::string>& paths) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    char c;
    while (in.get(c)) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::size_t enum_cap() {
  if (const char* env = std::getenv("NESTEDRISK_ENUM_CAP")) {
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }
  return kDefaultEnumCap;
}

struct ReportContext {
  std::string check_name;
  std::vector<std::string> input_files;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json wrap(json verdict) const {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return json{{"tool_version", kToolVersion},
                {"check_name", check_name},
                {"verdict", std::move(verdict)},
                {"inputs_digest", digest_files(input_files)},
                {"timing_ms", elapsed}};
  }
};

int emit(const ReportContext& ctx, const json& verdict, const std::string& report_format,
         const std::string& text_summary) {
  if (report_format == "json") {
    std::cout << ctx.wrap(verdict).dump(2) << "\n";
  } else {
    std::cout << text_summary << "\n";
  }
  return verdict.at("outcome") == "pass" ? 0 : 1;
}

std::pair<int, int> parse_window_spec(const std::string& spec) {
  auto pos = spec.find("..");
  if (pos == std::string::npos) input_error("window must look like \"-2..2\"");
  try {
    int lo = std::stoi(spec.substr(0, pos));
    int hi = std::stoi(spec.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    input_error("window bounds must be integers");
  }
}

GroupTIMapping builtin_mapping(const std::string& name, const Partition& partition,
                               std::size_t dim) {
  if (name == "global_max") return GroupTIMapping::global_max_on(dim);
  if (name == "identity") return GroupTIMapping::identity_on(dim);
  if (name == "conditional_max") return GroupTIMapping::conditional_max_on(partition);
  if (name == "conditional_min") return GroupTIMapping::conditional_min_on(partition);
  input_error("unknown mapping '" + name +
              "' (want global_max, identity, conditional_max, conditional_min)");
}

// ---- properties: mapping registry -----------------------------------------
//
// A properties spec file names a builtin evaluator plus its parameters:
//   {"mapping": "avar", "space": {...}, "beta": 0.5, "box": [lo, hi]}
//   {"mapping": "h_plus_ln_f", "box": [[-5,5],[0.1,10]]}
// "box" is either one [lo,hi] used for every coordinate or a per-coordinate
// list. See README for the registry.

std::vector<std::pair<double, double>> box_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.empty()) input_error("'box' must be a nonempty array");
  std::vector<std::pair<double, double>> box;
  if (j[0].is_number()) {
    if (j.size() != 2) input_error("'box' shorthand must be [lo, hi]");
    box.assign(dim, {j[0].get<double>(), j[1].get<double>()});
  } else {
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2) input_error("'box' entries must be [lo, hi]");
      box.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    if (box.size() != dim) input_error("'box' must cover every coordinate");
  }
  return box;
}

CallableMapping callable_from_json(const json& j) {
  if (!j.contains("mapping")) input_error("properties spec needs a 'mapping' name");
  const std::string name = j.at("mapping").get<std::string>();
  CallableMapping m;

  auto scalar_dims = [&](std::size_t n_args) {
    m.arg_dims.assign(n_args, 1);
  };

  if (name == "avar" || name == "avar_sum") {
    FiniteProbSpace space = j.contains("space") ? space_from_json(j.at("space"))
                                                : FiniteProbSpace::uniform(
                                                      j.value("dim", std::size_t{4}));
    double beta = j.value("beta", 0.5);
    std::size_t n = space.size();
    if (name == "avar") {
      m.arg_dims = {n};
      m.eval = [space, beta](const std::vector<std::vector<double>>& args) {
        return std::vector<double>{avar(space, beta, RandomVariable(args[0]))};
      };
    } else {
      m.arg_dims = {n, n};
      m.eval = [space, beta](const std::vector<std::vector<double>>& args) {
        std::vector<double> sum(args[0]);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += args[1][i];
        return std::vector<double>{avar(space, beta, RandomVariable(std::move(sum)))};
      };
    }
  } else if (name == "identity") {
    std::size_t n = j.value("dim", std::size_t{1});
    m.arg_dims = {n};
    m.eval = [](const std::vector<std::vector<double>>& args) { return args[0]; };
  } else if (name == "sum") {
    std::size_t n = j.value("dim", std::size_t{1});
    m.arg_dims = {n, n};
    m.eval = [](const std::vector<std::vector<double>>& args) {
      std::vector<double> out(args[0]);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += args[1][i];
      return out;
    };
  } else if (name == "neg_first") {
    scalar_dims(2);
    m.eval = [](const std::vector<std::vector<double>>& args) {
      return std::vector<double>{-args[0][0]};
    };
  } else if (name == "h_plus_ln_f") {
    scalar_dims(2);
    m.eval = [](const std::vector<std::vector<double>>& args) {
      return std::vector<double>{args[0][0] + std::log(args[1][0])};
    };
  } else if (name == "affine") {
    scalar_dims(2);
    double a = j.value("a", 1.0), b = j.value("b", 1.0), c = j.value("c", 0.0);
    m.eval = [a, b, c](const std::vector<std::vector<double>>& args) {
      return std::vector<double>{a * args[0][0] + b * args[1][0] + c};
    };
  } else if (name == "square") {
    scalar_dims(1);
    m.eval = [](const std::vector<std::vector<double>>& args) {
      return std::vector<double>{args[0][0] * args[0][0]};
    };
  } else {
    input_error("unknown mapping '" + name + "' in properties spec");
  }

  if (!j.contains("box")) input_error("properties spec needs a 'box'");
  m.box = box_from_json(j.at("box"), m.total_dim());
  m.validate();
  return m;
}

// ---- subcommands ----------------------------------------------------------

int run_tc_check(const std::string& pair_path, const std::string& mode, double tol,
                 const std::string& report_format) {
  ReportContext ctx{"tc-check", {pair_path}};
  AggregatorFactorPair pair = pair_from_json(load_json(pair_path));
  Verdict verdict;
  if (mode == "wtc") {
    verdict = check_wtc(pair, tol);
  } else if (mode == "utc") {
    verdict = check_utc(pair, componentwise_order(), componentwise_order(), tol);
  } else if (mode == "stc") {
    verdict = check_stc(pair, componentwise_order(), componentwise_order(),
                        componentwise_order(), tol);
  } else {
    input_error("unknown mode '" + mode + "' (want wtc, utc, or stc)");
  }
  std::string text = (verdict.pass ? "PASS: " : "FAIL: ") + verdict.detail;
  return emit(ctx, verdict_to_json(verdict, pair), report_format, text);
}

int run_avar(const std::string& space_path, double beta, const std::string& rv_path,
             const std::string& partition_path, const std::string& report_format) {
  ReportContext ctx{"avar", {space_path, rv_path}};
  FiniteProbSpace space = space_from_json(load_json(space_path));
  RandomVariable x = rv_from_json(load_json(rv_path));
  json result;
  if (partition_path.empty()) {
    result = avar(space, beta, x);
  } else {
    ctx.input_files.push_back(partition_path);
    Partition p = partition_from_json(load_json(partition_path), space.size());
    result = conditional_avar(space, beta, p, x).block_values;
  }
  if (report_format == "json") {
    json verdict{{"outcome", "pass"}, {"value", result}};
    std::cout << ctx.wrap(verdict).dump(2) << "\n";
  } else {
    std::ostringstream os;
    if (result.is_number()) {
      os << result.get<double>();
    } else {
      os << json(result).dump();
    }
    std::cout << os.str() << "\n";
  }
  return 0;
}

int run_properties(const std::string& check, const std::string& spec_path,
                   std::uint64_t samples, std::uint64_t seed, double tol,
                   const std::string& report_format) {
  ReportContext ctx{"properties", {spec_path}};
  json spec = load_json(spec_path);
  PropertyVerdict verdict;
  if (check == "monotone") {
    verdict = check_monotone_first_arg(callable_from_json(spec), samples, seed, tol);
  } else if (check == "homogeneous") {
    if (!spec.contains("aggregator") || !spec.contains("factor") ||
        !spec.contains("subaggregator")) {
      input_error("homogeneous check needs 'aggregator', 'factor' and 'subaggregator' specs");
    }
    std::vector<double> lambdas = spec.value("lambdas", std::vector<double>{0.5, 2.0});
    verdict = check_positive_homogeneity(
        callable_from_json(spec.at("aggregator")), callable_from_json(spec.at("factor")),
        callable_from_json(spec.at("subaggregator")), lambdas, samples, seed, tol);
  } else if (check == "translation") {
    CallableMapping m = callable_from_json(spec);
    std::vector<std::vector<double>> invariants;
    if (spec.contains("invariants")) {
      invariants = spec.at("invariants").get<std::vector<std::vector<double>>>();
    } else if (spec.contains("constant_invariants")) {
      for (double c : spec.at("constant_invariants").get<std::vector<double>>()) {
        invariants.emplace_back(m.arg_dims[0], c);
      }
    } else {
      input_error("translation check needs 'invariants' or 'constant_invariants'");
    }
    verdict = check_translation_invariance(m, invariants, samples, seed, tol);
  } else if (check == "convex") {
    verdict = check_midpoint_convexity(callable_from_json(spec), samples, seed, tol);
  } else {
    input_error("unknown check '" + check +
                "' (want monotone, homogeneous, translation, or convex)");
  }
  std::string text = (verdict.pass ? "PASS: " : "FAIL: ") + verdict.detail;
  return emit(ctx, property_verdict_to_json(verdict), report_format, text);
}

int run_acceptance_check(const std::string& rho_name, const std::string& factor_name,
                         const std::string& partition_path, const std::string& window_spec,
                         const std::string& head_window_spec, bool cross_utc,
                         const std::string& report_format) {
  ReportContext ctx{"acceptance-check", {partition_path}};
  json pj = load_json(partition_path);
  // The partition fixes the dimension: its blocks cover all atoms.
  Partition probe = partition_from_json(pj, [&] {
    std::size_t n = 0;
    for (const auto& b : pj.value("blocks", std::vector<std::vector<std::size_t>>{})) {
      n += b.size();
    }
    if (n == 0 && pj.contains("sets")) {
      for (const auto& s : pj.at("sets").get<std::vector<std::vector<std::size_t>>>()) {
        for (std::size_t i : s) n = std::max(n, i + 1);
      }
    }
    if (n == 0) input_error("cannot infer dimension from partition file");
    return n;
  }());
  std::size_t dim = 0;
  for (const auto& b : probe.blocks) dim += b.size();

  auto [lo, hi] = parse_window_spec(window_spec);
  LatticeWindow window = LatticeWindow::cube(dim, lo, hi);
  GroupTIMapping rho = builtin_mapping(rho_name, probe, dim);
  GroupTIMapping factor = builtin_mapping(factor_name, probe, dim);

  AcceptanceVerdict verdict = check_acceptance_identity(rho, factor, window, enum_cap());
  json jv = acceptance_verdict_to_json(verdict);

  if (cross_utc) {
    auto [hlo, hhi] = parse_window_spec(
        head_window_spec.empty() ? window_spec : head_window_spec);
    AggregatorFactorPair pair = aggregator_from_rho(
        rho, factor, LatticeWindow::cube(dim, hlo, hhi), window, enum_cap());
    Verdict utc = check_utc(pair, componentwise_order(), componentwise_order());
    jv["utc_cross_check"] = verdict_to_json(utc, pair);
    jv["utc_agrees"] = utc.pass == verdict.pass;
  }
  std::string text = (verdict.pass ? "PASS: " : "FAIL: ") + verdict.detail +
                     " (guarded fraction " + std::to_string(verdict.guarded_fraction) + ")";
  return emit(ctx, jv, report_format, text);
}

int run_conjugate_check(const std::string& system_path, const std::string& g_path,
                        bool exploratory, const std::string& report_format) {
  ReportContext ctx{"conjugate-check", {system_path, g_path}};
  DecomposableSystem sys = system_from_json(load_json(system_path));
  ExtFn g = extfn_from_json(load_json(g_path));
  ConjugacyVerdict verdict = check_nested_conjugate(sys, g, exploratory);
  std::string text = (verdict.pass ? "PASS: " : "FAIL: ") + verdict.detail;
  return emit(ctx, conjugacy_verdict_to_json(verdict), report_format, text);
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Verification toolkit for time consistency of risk assessments "
               "on finite spaces"};
  app.require_subcommand(1);
  std::string report_format = "text";
  app.add_option("--report", report_format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // tc-check
  auto* tc = app.add_subcommand("tc-check", "Decide WTC/UTC/STC of a tabulated pair");
  std::string pair_path, mode = "wtc";
  double tol = 1e-9;
  tc->add_option("--pair", pair_path, "Pair JSON file")->required();
  tc->add_option("--mode", mode, "wtc, utc, or stc");
  tc->add_option("--tol", tol, "Equality tolerance for real-vector values");

  // avar
  auto* av = app.add_subcommand("avar", "Evaluate (conditional) Average Value-at-Risk");
  std::string space_path, rv_path, partition_path;
  double beta = 0.5;
  av->add_option("--space", space_path, "Probability space JSON file")->required();
  av->add_option("--beta", beta, "Risk level in [0,1]")->required();
  av->add_option("--rv", rv_path, "Random variable JSON file")->required();
  av->add_option("--partition", partition_path, "Partition JSON file (conditional)");

  // properties
  auto* pr = app.add_subcommand("properties", "Sampled analytic property checks");
  std::string check, spec_path;
  std::uint64_t samples = 10000, seed = 0;
  double ptol = 1e-7;
  pr->add_option("--check", check, "monotone, homogeneous, translation, or convex")
      ->required();
  pr->add_option("--spec", spec_path, "Mapping spec JSON file")->required();
  pr->add_option("--samples", samples, "Number of samples");
  pr->add_option("--seed", seed, "Sampler seed");
  pr->add_option("--tol", ptol, "Violation tolerance");

  // acceptance-check
  auto* ac = app.add_subcommand("acceptance-check",
                                "Acceptance-set identity on an integer lattice window");
  std::string rho_name, factor_name, acc_partition, window_spec, head_window_spec;
  bool cross_utc = false;
  ac->add_option("--rho", rho_name, "Initial assessment (e.g. global_max)")->required();
  ac->add_option("--factor", factor_name, "Factor mapping (e.g. conditional_max)")
      ->required();
  ac->add_option("--partition", acc_partition, "Partition JSON file")->required();
  ac->add_option("--window", window_spec, "Lattice window, e.g. \"-2..2\"")->required();
  ac->add_option("--head-window", head_window_spec, "Head window for the UTC cross-check");
  ac->add_flag("--cross-utc", cross_utc, "Also run check_utc on the induced pair");

  // conjugate-check
  auto* cj = app.add_subcommand("conjugate-check",
                                "Nested formula between Fenchel-Moreau conjugates");
  std::string system_path, g_path;
  bool exploratory = false;
  cj->add_option("--system", system_path, "Decomposable system JSON file")->required();
  cj->add_option("--g", g_path, "Function g JSON file")->required();
  cj->add_flag("--exploratory", exploratory,
               "Run the comparison even if the coupling is not decomposable");

  // Let --report appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit with 0
  }

  try {
    if (tc->parsed()) return run_tc_check(pair_path, mode, tol, report_format);
    if (av->parsed()) return run_avar(space_path, beta, rv_path, partition_path, report_format);
    if (pr->parsed()) return run_properties(check, spec_path, samples, seed, ptol, report_format);
    if (ac->parsed()) {
      return run_acceptance_check(rho_name, factor_name, acc_partition, window_spec,
                                  head_window_spec, cross_utc, report_format);
    }
    if (cj->parsed()) {
      return run_conjugate_check(system_path, g_path, exploratory, report_format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace nestedrisk::cli
