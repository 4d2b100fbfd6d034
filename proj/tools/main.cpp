#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oplus/json_io.hpp"

namespace {

using nlohmann::json;
using namespace oplus;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("WORKBENCH_LOG");
    if (!env) return 0;
    const std::string v = env;
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return j;
}

// A table argument is either a JSON file path or a builder spec such as
// cyclic:6, left-zero:4, right-zero:3, tmon:2, semilattice:2.
FiniteSemigroup load_table(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos && spec.find('.') == std::string::npos &&
      spec.find('/') == std::string::npos) {
    const std::string name = spec.substr(0, colon);
    int arg = 0;
    try {
      arg = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad builder argument in " + spec);
    }
    if (name == "cyclic") return cyclic_mod(arg);
    if (name == "left-zero") return left_zero(arg);
    if (name == "right-zero") return right_zero(arg);
    if (name == "tmon") return transformation_monoid(arg);
    if (name == "semilattice" && arg == 2) return meet_semilattice2();
    throw UsageError("unknown builder " + spec);
  }
  return semigroup_from_json(load_json_file(spec));
}

WindowSet load_window(const std::string& spec) {
  std::string path = spec;
  if (!path.empty() && path.front() == '@') path = path.substr(1);
  return window_from_json(load_json_file(path));
}

// Filter file: {"semigroup": <table path or inline table>, "support": [...]}.
// A path is resolved relative to the filter file's directory.
PFilter load_filter(const std::string& path) {
  const json j = load_json_file(path);
  if (!j.is_object() || !j.contains("semigroup") || !j.contains("support"))
    throw UsageError(path + ": filter JSON needs semigroup and support fields");
  FiniteSemigroup ground = [&] {
    const json& ref = j.at("semigroup");
    if (ref.is_string()) {
      std::filesystem::path table = ref.get<std::string>();
      if (table.is_relative())
        table = std::filesystem::path(path).parent_path() / table;
      return load_table(table.string());
    }
    return semigroup_from_json(ref);
  }();
  const ElementSet support(ground, j.at("support").get<std::vector<int>>());
  return PFilter(std::move(ground), support);
}

struct GlobalOptions {
  std::string format = "json";
  bool timing = false;
  std::uint64_t seed = 0x5eed;
  int workers = 1;
  std::uint64_t budget = 1'000'000'000;
};

class Emitter {
 public:
  Emitter(std::string command, const GlobalOptions& opts)
      : command_(std::move(command)), opts_(opts),
        start_(std::chrono::steady_clock::now()) {}

  void emit(const json& result, const std::string& text_summary) const {
    std::int64_t elapsed = 0;
    if (opts_.timing)
      elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
    if (opts_.format == "text") {
      std::cout << text_summary << "\n";
      return;
    }
    const json envelope{{"command", command_},
                        {"elapsed_ms", elapsed},
                        {"result", result},
                        {"version", kVersion}};
    std::cout << envelope.dump(2) << "\n";
  }

 private:
  std::string command_;
  const GlobalOptions& opts_;
  std::chrono::steady_clock::time_point start_;
};

Chooser chooser_by_name(const std::string& name) {
  if (name == "min") return min_element_chooser;
  if (name == "max") return max_element_chooser;
  throw UsageError("unknown chooser " + name);
}

int run(int argc, char** argv) {
  CLI::App app{"Filter algebra on finite semigroups and finite-sums search kernels"};
  app.require_subcommand(1);
  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opts.timing, "Fill elapsed_ms with wall time");
  app.add_option("--seed", opts.seed, "Seed for sampling probes");
  app.add_option("--workers", opts.workers, "Worker count for search kernels")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", opts.budget, "Node budget for searches");

  // semigroup
  auto* sg = app.add_subcommand("semigroup", "Operate on a finite semigroup");
  std::string table_spec;
  std::string filter_spec;
  std::vector<int> support;
  std::string chooser_name = "min";
  auto* sg_idem = sg->add_subcommand("idempotents", "List idempotent elements");
  sg_idem->add_option("--table", table_spec, "Cayley table file or builder")->required();
  auto* sg_ext = sg->add_subcommand("extend", "Extract an idempotent from an additive filter");
  sg_ext->add_option("--table", table_spec, "Cayley table file or builder");
  sg_ext->add_option("--support", support, "Filter support")->delimiter(',');
  sg_ext->add_option("--filter", filter_spec, "Filter file (semigroup ref + support)");
  sg_ext->add_option("--chooser", chooser_name, "Chooser: min or max");
  auto* sg_chk = sg->add_subcommand("check-additive", "Test filter additivity");
  sg_chk->add_option("--table", table_spec, "Cayley table file or builder");
  sg_chk->add_option("--support", support, "Filter support")->delimiter(',');
  sg_chk->add_option("--filter", filter_spec, "Filter file (semigroup ref + support)");

  // hindman
  auto* hm = app.add_subcommand("hindman", "Finite-sums extraction");
  std::vector<std::int64_t> gens;
  int k = 3;
  std::int64_t horizon = 0;
  std::int64_t principal_m = 0;
  std::string target_spec;
  auto* hm_ext = hm->add_subcommand("extract", "Iterated shift-intersection extraction");
  hm_ext->add_option("--gens", gens, "Generator elements")->delimiter(',')->required();
  hm_ext->add_option("--k", k, "Witness size")->required();
  hm_ext->add_option("--horizon", horizon, "Window horizon (default: sum of generators)");
  hm_ext->add_option("--target", target_spec, "Target window JSON (default: FS of generators)");
  auto* hm_weak = hm->add_subcommand("weak", "Extraction along an oracle chain");
  hm_weak->add_option("--gens", gens, "Generator elements")->delimiter(',');
  hm_weak->add_option("--principal", principal_m, "Use the point oracle at m");
  hm_weak->add_option("--k", k, "Witness size")->required();
  hm_weak->add_option("--horizon", horizon, "Window horizon");
  hm_weak->add_option("--target", target_spec, "Target window JSON");

  // folkman
  auto* fk = app.add_subcommand("folkman", "Two-sided interval certificates");
  int fk_n = 2, fk_r = 2;
  std::int64_t fk_max = 30;
  fk->add_option("--n", fk_n, "Witness size")->required();
  fk->add_option("--r", fk_r, "Number of colors")->required();
  fk->add_option("--max", fk_max, "Largest interval length to try")->required();

  // example33
  auto* ex = app.add_subcommand("example33", "The additive-but-not-idempotent gallery");
  std::int64_t ex_horizon = 1 << 16;
  int f0_count = 3;
  auto* ex_build = ex->add_subcommand("build", "Enumerate the gallery set");
  ex_build->add_option("--horizon", ex_horizon, "Window horizon")->required();
  auto* ex_verify = ex->add_subcommand("verify", "Scan for sum triples and shift witnesses");
  ex_verify->add_option("--horizon", ex_horizon, "Window horizon")->required();
  ex_verify->add_option("--f0-count", f0_count, "How many smallest F0 sets to check");

  // fal
  auto* fal = app.add_subcommand("fal", "Finite-sums witness search in a window set");
  std::string set_spec;
  std::vector<std::int64_t> fs_of;
  fal->add_option("--set", set_spec, "Window set JSON (path or @path)");
  fal->add_option("--fs-of", fs_of, "Generator shorthand")->delimiter(',');
  fal->add_option("--horizon", horizon, "Horizon for --fs-of");
  fal->add_option("--k", k, "Witness size")->required();

  // probe
  auto* pr = app.add_subcommand("probe", "Partition-regularity spot check");
  int pr_r = 2, pr_k = 2;
  std::int64_t pr_trials = 20;
  pr->add_option("--set", set_spec, "Window set JSON (path or @path)")->required();
  pr->add_option("--r", pr_r, "Number of pieces")->required();
  pr->add_option("--k", pr_k, "Witness level")->required();
  pr->add_option("--trials", pr_trials, "Sampled partitions");

  // Global flags remain usable after a subcommand name.
  for (auto* sub : {sg, sg_idem, sg_ext, sg_chk, hm, hm_ext, hm_weak, fk, ex, ex_build,
                    ex_verify, fal, pr})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (sg_idem->parsed()) {
    Emitter out("semigroup idempotents", opts);
    const FiniteSemigroup s = load_table(table_spec);
    const auto idem = idempotents(s).members();
    json result{{"idempotents", idem}};
    if (!s.label().empty()) result["label"] = s.label();
    std::string text = "idempotents:";
    for (int e : idem) text += " " + std::to_string(e);
    out.emit(result, text);
    return 0;
  }
  auto parse_filter_args = [&]() -> PFilter {
    if (!filter_spec.empty()) return load_filter(filter_spec);
    if (table_spec.empty() || support.empty())
      throw UsageError("need --filter, or --table together with --support");
    const FiniteSemigroup s = load_table(table_spec);
    return PFilter(s, ElementSet(s, support));
  };
  if (sg_ext->parsed()) {
    Emitter out("semigroup extend", opts);
    const PFilter f = parse_filter_args();
    const ThetaResult theta = theta_extend(f, chooser_by_name(chooser_name));
    log_info("extension converged after " + std::to_string(theta.outer_steps) +
             " outer step(s)");
    out.emit(json{{"idempotent", theta.idempotent},
                  {"outer_steps", theta.outer_steps},
                  {"trace", trace_to_json(theta.trace)}},
             "idempotent: " + std::to_string(theta.idempotent) + " (" +
                 std::to_string(theta.trace.size()) + " trace steps)");
    return 0;
  }
  if (sg_chk->parsed()) {
    Emitter out("semigroup check-additive", opts);
    const PFilter f = parse_filter_args();
    const bool additive = is_additive(f);
    out.emit(json{{"additive", additive}, {"support", f.support().members()}},
             additive ? "additive: true" : "additive: false");
    return 0;
  }
  if (hm_ext->parsed() || hm_weak->parsed()) {
    const bool weak = hm_weak->parsed();
    Emitter out(weak ? "hindman weak" : "hindman extract", opts);
    std::optional<WindowSet> target;
    UltrafilterOracle oracle;
    std::vector<UltrafilterOracle> powers;
    if (weak && principal_m > 0) {
      if (horizon == 0) horizon = principal_m * (k * (k + 1) / 2);
      oracle = principal_oracle(principal_m);
      for (int j = 2; j < k; ++j) powers.push_back(principal_oracle(principal_m * j));
      if (target_spec.empty()) {
        WindowSet w(horizon);
        for (std::int64_t m = principal_m; m <= horizon; m += principal_m) w.insert(m);
        target = w;
      }
    } else {
      if (gens.empty()) throw UsageError("--gens (or --principal for weak) is required");
      FSGenerator gen(gens);
      if (horizon == 0) horizon = gen.sum();
      oracle = fs_oracle(gen);
      // The tail-sums filter behaves idempotently, so the chain is constant.
      for (int j = 2; j < k; ++j) powers.push_back(fs_oracle(gen));
      if (target_spec.empty()) target = fs_set(gen, horizon);
    }
    if (!target) target = load_window(target_spec);
    const ExtractResult res =
        weak ? weak_extract(*target, oracle, powers, k) : galvin_extract(*target, oracle, k);
    json trace = json::array();
    for (std::size_t i = 0; i < res.witness.elements().size(); ++i)
      trace.push_back(json{{"step", i + 1},
                           {"pick", res.witness.elements()[i]},
                           {"candidates", res.pick_sets[i].count()}});
    std::string text = "witness:";
    for (std::int64_t x : res.witness.elements()) text += " " + std::to_string(x);
    out.emit(json{{"witness", witness_to_json(res.witness)}, {"trace", trace}}, text);
    return 0;
  }
  if (fk->parsed()) {
    Emitter out("folkman", opts);
    SearchOptions sopts;
    sopts.node_budget = opts.budget;
    sopts.workers = opts.workers;
    const FolkmanNumber fn = folkman_number(fk_n, fk_r, fk_max, sopts);
    if (fn.at_value)
      log_info("explored " + std::to_string(fn.at_value->nodes) +
               " nodes at the bound");
    json result;
    std::string text;
    int code = 0;
    if (fn.budget_hit) {
      result = json{{"N", nullptr}, {"reason", "budget"}};
      text = "budget exhausted";
      code = 4;
    } else if (!fn.value) {
      result = json{{"N", nullptr}, {"reason", "not found up to max"}};
      text = "no bound found up to " + std::to_string(fk_max);
    } else {
      result = json{{"N", *fn.value}, {"certificate", certificate_to_json(*fn.at_value)}};
      if (fn.below) result["below"] = certificate_to_json(*fn.below);
      text = "N = " + std::to_string(*fn.value);
    }
    out.emit(result, text);
    return code;
  }
  if (ex_build->parsed()) {
    Emitter out("example33 build", opts);
    const WindowSet x = build_gallery_set(ex_horizon);
    const auto ms = x.members();
    json stats{{"count", x.count()}};
    if (!ms.empty()) {
      stats["min"] = ms.front();
      stats["max"] = ms.back();
    }
    out.emit(json{{"set", window_to_json(x)}, {"stats", stats}},
             "gallery set has " + std::to_string(ms.size()) + " members");
    return 0;
  }
  if (ex_verify->parsed()) {
    Emitter out("example33 verify", opts);
    const WindowSet x = build_gallery_set(ex_horizon);
    const TripleScan scan = verify_no_sum_triple(x);
    json shift_witnesses = json::array();
    // The f0_count smallest nonempty F0 by code: subsets of class-0 evens in
    // mask order over the first few members.
    const auto class0 = even_class_members(0, 8);
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> f0s;
    for (std::uint64_t mask = 1; mask < (1u << class0.size()); ++mask) {
      std::vector<std::int64_t> f0;
      std::int64_t code = 0;
      for (std::size_t i = 0; i < class0.size(); ++i)
        if ((mask >> i) & 1u) {
          f0.push_back(class0[i]);
          code += std::int64_t{1} << class0[i];
        }
      f0s.emplace_back(code, std::move(f0));
    }
    std::sort(f0s.begin(), f0s.end());
    bool all_hold = true;
    for (int i = 0; i < f0_count && i < static_cast<int>(f0s.size()); ++i) {
      const auto report = verify_shift_witness(f0s[static_cast<std::size_t>(i)].second,
                                               ex_horizon);
      all_hold = all_hold && report.holds;
      json entry = shift_witness_to_json(report);
      entry["f0"] = f0s[static_cast<std::size_t>(i)].second;
      shift_witnesses.push_back(std::move(entry));
    }
    json result = triple_scan_to_json(scan);
    result["shift_witnesses"] = std::move(shift_witnesses);
    result["count"] = x.count();
    out.emit(result, std::string("no_triple: ") + (scan.no_triple ? "true" : "false") +
                         ", shift witnesses " + (all_hold ? "hold" : "FAIL"));
    return 0;
  }
  if (fal->parsed()) {
    Emitter out("fal", opts);
    std::optional<WindowSet> a;
    if (!set_spec.empty()) a = load_window(set_spec);
    else if (!fs_of.empty() && horizon > 0) a = fs_set(FSGenerator(fs_of), horizon);
    else throw UsageError("fal needs --set or --fs-of with --horizon");
    const auto witness = fal_level(*a, k);
    json result{{"witness", witness ? witness_to_json(*witness) : json(nullptr)}};
    out.emit(result, witness ? "witness found" : "no witness");
    return 0;
  }
  if (pr->parsed()) {
    Emitter out("probe", opts);
    const WindowSet a = load_window(set_spec);
    const ProbeReport report =
        fal_partition_regularity_probe(a, pr_r, pr_k, pr_trials, opts.seed);
    out.emit(probe_to_json(report),
             "violations: " + std::to_string(report.violations) + " / " +
                 std::to_string(report.trials));
    return 0;
  }
  throw UsageError("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 4;
  } catch (const oplus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
