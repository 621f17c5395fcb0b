#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wzk/json_io.hpp"
#include "wzk/root_data.hpp"

namespace {

using nlohmann::json;
using namespace wzk;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

constexpr std::uint64_t kVerifySeed = 0x20260817ULL;

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

// Domain errors keep stdout machine-readable regardless of --json.
int domain_error(bool json_mode, const std::string& msg, const char* key = "error") {
  json j{{"schema", 1}, {key, msg}};
  if (key != std::string("error")) j["two_factor"] = false;
  print_json(j);
  if (!json_mode) std::cerr << "error: " << msg << "\n";
  return kExitDomain;
}

struct ModuleArgs {
  std::string type_token;
  std::string weight_csv;
  long long p = 0;
  bool json = false;

  LieType type() const { return parse_lie_type(type_token); }
  Weight weight() const { return parse_weight(type(), weight_csv); }
};

void add_module_options(CLI::App* cmd, ModuleArgs& args, bool need_p) {
  cmd->add_option("type", args.type_token, "type as FAMILY:RANK, e.g. C:3")->required();
  auto* p = cmd->add_option("--p", args.p, "characteristic, a prime");
  if (need_p) p->required();
  cmd->add_option("--weight", args.weight_csv,
                  "weight as comma-separated fundamental coefficients")
      ->required();
  cmd->add_flag("--json", args.json, "emit JSON");
}

int run_decide(const ModuleArgs& args) {
  LieType t{};
  Weight w{};
  try {
    t = args.type();
    w = args.weight();
    if (!is_prime(args.p)) return usage_error("--p must be prime");
    if (!is_dominant(w)) return usage_error("weight must be dominant");
  } catch (const std::invalid_argument& ex) {
    return usage_error(ex.what());
  }
  try {
    const ClassifyResult cls = classify_two_factor(t, args.p, w);
    if (!cls) return domain_error(args.json, cls.reason, "reason");
    const Decision d = decide_two_factor(*cls.shape);
    if (args.json) {
      json j = decision_json(d);
      j["schema"] = 1;
      j["shape"] = shape_json(*cls.shape);
      print_json(j);
    } else {
      for (const auto& [fact, value] : d.trace) std::cout << fact << ": " << value << "\n";
      std::cout << "case: " << d.case_label << "\n";
      std::cout << "has zero weight: " << (d.has_zero_weight ? "yes" : "no") << "\n";
    }
    return d.has_zero_weight ? kExitYes : kExitNo;
  } catch (const NotTwoFactorError& ex) {
    return domain_error(args.json, ex.what(), "reason");
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

int run_classify(const ModuleArgs& args) {
  LieType t{};
  Weight w{};
  try {
    t = args.type();
    w = args.weight();
    if (!is_prime(args.p)) return usage_error("--p must be prime");
    if (!is_dominant(w)) return usage_error("weight must be dominant");
  } catch (const std::invalid_argument& ex) {
    return usage_error(ex.what());
  }
  try {
    const ClassifyResult cls = classify_two_factor(t, args.p, w);
    if (!cls) return domain_error(args.json, cls.reason, "reason");
    const TensorShape& s = *cls.shape;
    if (args.json) {
      json j = shape_json(s);
      j["schema"] = 1;
      j["two_factor"] = true;
      print_json(j);
    } else {
      std::cout << "case: " << to_string(s.shape) << "\n"
                << "k: " << s.k << "\n"
                << "i: " << s.i << "\n"
                << "lambda0: " << coeffs_to_string(s.lambda0) << "\n"
                << "lambda1: " << coeffs_to_string(s.lambda1) << "\n";
    }
    return kExitYes;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

int run_oracle(const ModuleArgs& args) {
  LieType t{};
  Weight w{};
  try {
    t = args.type();
    w = args.weight();
    if (!is_prime(args.p)) return usage_error("--p must be prime");
    if (!is_dominant(w)) return usage_error("weight must be dominant");
  } catch (const std::invalid_argument& ex) {
    return usage_error(ex.what());
  }
  try {
    const DominantWeightSet s = module_dominant_weights(t, args.p, w);
    if (args.json) {
      json j = weight_set_json(s);
      j["schema"] = 1;
      print_json(j);
    } else {
      for (const Weight& mu : s.weights) std::cout << coeffs_to_string(mu) << "\n";
      for (const std::string& note : s.notes) std::cout << "note: " << note << "\n";
    }
    return kExitYes;
  } catch (const std::invalid_argument& ex) {
    return domain_error(args.json, ex.what());
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

int run_tables(const ModuleArgs& args, long long max_i) {
  LieType t{};
  Weight w{};
  std::vector<long long> primes{2, 3, 5};
  try {
    t = args.type();
    w = args.weight();
    if (args.p != 0) {
      if (!is_prime(args.p)) return usage_error("--p must be prime");
      primes = {args.p};
    }
    if (max_i < 1) return usage_error("--max-i must be at least 1");
  } catch (const std::invalid_argument& ex) {
    return usage_error(ex.what());
  }
  try {
    const bool by_table = is_radical_by_table(w);
    const bool by_coords = is_radical(w);
    json rows = json::array();
    for (int j : root_data(t).miniscule)
      for (long long p : primes)
        for (long long i = 1; i <= max_i; ++i)
          rows.push_back(json{{"node", j},
                              {"p", p},
                              {"i", i},
                              {"holds", miniscule_inequality(t, w, j, p, i)}});
    if (args.json) {
      print_json(json{{"schema", 1},
                      {"type", to_string(t)},
                      {"weight", w.coeffs},
                      {"radical_by_congruence", by_table},
                      {"radical_by_coordinates", by_coords},
                      {"rows", std::move(rows)}});
    } else {
      std::cout << "radical by congruence table: " << (by_table ? "true" : "false") << "\n";
      std::cout << "radical by root coordinates: " << (by_coords ? "true" : "false") << "\n";
      for (const auto& row : rows)
        std::cout << "row node=" << row["node"] << " p=" << row["p"] << " i=" << row["i"]
                  << ": " << (row["holds"].get<bool>() ? "holds" : "fails") << "\n";
    }
    return kExitYes;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

int run_an5(int max_rank, bool json_mode) {
  if (max_rank < 1) return usage_error("--max-rank must be positive");
  const CheckReport rep = check_minor_inequalities(max_rank);
  if (json_mode) {
    json j = check_report_json(rep);
    j["schema"] = 1;
    print_json(j);
  } else {
    std::cout << (rep.pass ? "PASS" : "FAIL") << " " << rep.name << ": " << rep.checked
              << " types checked (" << rep.seconds << " s)\n";
    for (const std::string& f : rep.failures) std::cout << "  " << f << "\n";
  }
  return rep.pass ? kExitYes : kExitNo;
}

void print_check_human(const CheckReport& rep) {
  std::cout << (rep.pass ? "PASS" : "FAIL") << " " << rep.name << ": " << rep.checked
            << " checked";
  if (rep.failed > 0) std::cout << ", " << rep.failed << " failed";
  std::cout << " (" << rep.seconds << " s)\n";
  for (const std::string& f : rep.failures) std::cout << "  " << f << "\n";
  const auto shown = static_cast<long long>(rep.failures.size());
  if (rep.failed > shown) std::cout << "  ... and " << (rep.failed - shown) << " more\n";
}

int run_verify(const std::vector<std::string>& type_tokens,
               const std::vector<long long>& primes, long long max_i, int workers,
               bool json_mode) {
  SweepConfig config;
  try {
    for (const std::string& token : type_tokens) config.types.push_back(parse_lie_type(token));
    config.primes = primes;
    config.max_i = max_i;
    config.worker_count = workers;
    if (workers < 1) return usage_error("--workers must be positive");
    (void)config.pairs();
  } catch (const std::invalid_argument& ex) {
    return usage_error(ex.what());
  }

  try {
    std::vector<CheckReport> checks;
    checks.push_back(check_minor_inequalities(8));
    checks.push_back(check_radicality_equivalence(kVerifySeed));
    checks.push_back(check_multiple_fundamental_equivalence());
    checks.push_back(check_miniscule_inequality_forms());
    checks.push_back(check_frobenius_invariance(kVerifySeed, 500));
    checks.push_back(check_minimal_weight_consistency());
    const std::vector<SweepReport> sweeps = run_verify_sweep(config);

    bool pass = true;
    long long instances = 0;
    long long disagreements = 0;
    for (const CheckReport& c : checks) pass = pass && c.pass;
    for (const SweepReport& s : sweeps) {
      pass = pass && s.pass();
      instances += s.instances;
      disagreements += s.shape_mismatches + s.oracle_mismatches + s.direct_mismatches;
    }

    if (json_mode) {
      json jchecks = json::array();
      for (const CheckReport& c : checks) jchecks.push_back(check_report_json(c));
      json jsweeps = json::array();
      for (const SweepReport& s : sweeps) jsweeps.push_back(sweep_report_json(s));
      print_json(json{{"schema", 1},
                      {"checks", std::move(jchecks)},
                      {"sweeps", std::move(jsweeps)},
                      {"instances", instances},
                      {"disagreements", disagreements},
                      {"pass", pass}});
    } else {
      for (const CheckReport& c : checks) print_check_human(c);
      for (const SweepReport& s : sweeps) {
        std::cout << "sweep " << to_string(s.type) << " p=" << s.p << ": " << s.instances
                  << " instances, " << s.zero_weight_count << " with zero weight, "
                  << (s.shape_mismatches + s.oracle_mismatches + s.direct_mismatches)
                  << " disagreements (" << s.seconds << " s)\n";
        for (const std::string& ex : s.examples) std::cout << "  " << ex << "\n";
      }
      std::cout << "total: " << instances << " instances, " << disagreements
                << " disagreements\n";
      std::cout << "verify: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitYes : kExitNo;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("WZK_MAX_RANK")) {
    try {
      const int value = std::stoi(cap);
      if (value < 1) throw std::invalid_argument("non-positive");
      set_max_rank(value);
    } catch (const std::exception&) {
      return usage_error("WZK_MAX_RANK must be a positive integer");
    }
  }

  CLI::App app{"zero-weight decisions for irreducible modules of simple algebraic groups"};
  app.require_subcommand(1);

  ModuleArgs decide_args, classify_args, oracle_args, tables_args;
  long long tables_max_i = 3;

  auto* decide_cmd =
      app.add_subcommand("decide", "decide whether a two-factor module has the zero weight");
  add_module_options(decide_cmd, decide_args, true);

  auto* classify_cmd =
      app.add_subcommand("classify", "classify a weight into its two-factor shape");
  add_module_options(classify_cmd, classify_args, true);

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "enumerate the dominant weights of a tensor-indecomposable module");
  add_module_options(oracle_cmd, oracle_args, true);

  auto* tables_cmd = app.add_subcommand(
      "tables", "evaluate the congruence table and the closed-form inequality rows");
  add_module_options(tables_cmd, tables_args, false);
  tables_cmd->add_option("--max-i", tables_max_i, "largest twist exponent to tabulate");

  int an5_max_rank = 8;
  bool an5_json = false;
  auto* an5_cmd = app.add_subcommand(
      "an5", "check the 2x2-minor inequalities over all types up to a rank bound");
  an5_cmd->add_option("--max-rank", an5_max_rank, "largest rank to check");
  an5_cmd->add_flag("--json", an5_json, "emit JSON");

  std::vector<std::string> verify_types;
  std::vector<long long> verify_primes;
  long long verify_max_i = 2;
  int verify_workers = 1;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the property checks and the criterion-versus-oracle sweep");
  verify_cmd->add_option("--types", verify_types, "types to sweep (default: standard list)")
      ->delimiter(',');
  verify_cmd->add_option("--primes", verify_primes, "primes to sweep (default: 2 3 5)")
      ->delimiter(',');
  verify_cmd->add_option("--max-i", verify_max_i, "largest twist exponent");
  verify_cmd->add_option("--workers", verify_workers, "worker thread count");
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (app.got_subcommand(decide_cmd)) return run_decide(decide_args);
  if (app.got_subcommand(classify_cmd)) return run_classify(classify_args);
  if (app.got_subcommand(oracle_cmd)) return run_oracle(oracle_args);
  if (app.got_subcommand(tables_cmd)) return run_tables(tables_args, tables_max_i);
  if (app.got_subcommand(an5_cmd)) return run_an5(an5_max_rank, an5_json);
  if (app.got_subcommand(verify_cmd))
    return run_verify(verify_types, verify_primes, verify_max_i, verify_workers, verify_json);
  return kExitUsage;
}
