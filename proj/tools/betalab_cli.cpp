// Command-line front door: instance validation, set computations, scale
// sweeps and the full verification suite, with machine-readable JSON output.
//
// Exit codes: 0 = every check PASS or VACUOUS, 1 = some check FAIL,
// 2 = usage or instance error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "betalab/instance_io.hpp"
#include "betalab/suite.hpp"
#include "betalab/sweep.hpp"

using namespace betalab;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ScaleFlags {
  std::string epsilon = "1";
  std::string delta = "0";
  int radius = 1;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  int count = 100;
};

void add_scale_flags(CLI::App* cmd, ScaleFlags& flags, bool with_delta = true) {
  cmd->add_option("--epsilon", flags.epsilon, "shadowing radius, p/q");
  if (with_delta) {
    cmd->add_option("--delta", flags.delta, "perturbation radius, p/q");
  }
  cmd->add_option("--radius", flags.radius, "word-length truncation radius");
  cmd->add_option("--mode", flags.mode, "exhaustive|sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  cmd->add_option("--seed", flags.seed, "sampling seed");
  cmd->add_option("--count", flags.count, "sample count");
}

Provenance provenance_of(const ScaleFlags& flags) {
  if (flags.mode == "sample") {
    return Provenance::sampled(flags.seed, flags.count);
  }
  return Provenance::exhaustive();
}

std::vector<Rational> parse_grid(const std::string& csv) {
  std::vector<Rational> out;
  std::size_t begin = 0;
  while (begin <= csv.size()) {
    const std::size_t comma = csv.find(',', begin);
    const std::string item =
        csv.substr(begin, comma == std::string::npos ? comma : comma - begin);
    if (!item.empty()) out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (out.empty()) throw ArgumentError("empty grid: '" + csv + "'");
  return out;
}

std::vector<int> parse_int_grid(const std::string& csv) {
  std::vector<int> out;
  for (const Rational& r : parse_grid(csv)) {
    if (denominator(r) != 1) {
      throw ArgumentError("radius grid entries must be integers");
    }
    out.push_back(static_cast<int>(numerator(r)));
  }
  return out;
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
  if (out_path.has_value()) {
    write_text_file(*out_path, text);
  } else {
    std::cout << text;
  }
}

// Perturbed partner action for the single-psi subcommands.
Action resolve_psi(const Instance& instance,
                   const std::optional<std::string>& psi_path,
                   const std::optional<std::pair<int, int>>& psi_swap) {
  if (psi_path.has_value() && psi_swap.has_value()) {
    throw ArgumentError("give either --psi or --psi-swap, not both");
  }
  if (psi_path.has_value()) {
    Instance other = load_instance(*psi_path);
    if (!(*other.space == *instance.space)) {
      throw ArgumentError("--psi instance lives on a different space");
    }
    if (!(other.group == instance.group)) {
      throw ArgumentError("--psi instance has a different group");
    }
    return Action(instance.space, instance.group,
                  other.action.generator_maps());
  }
  if (psi_swap.has_value()) {
    auto [a, b] = *psi_swap;
    const int n = instance.space->size();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ArgumentError("--psi-swap points out of range");
    }
    std::vector<Permutation> maps = instance.action.generator_maps();
    Permutation swapped = identity_permutation(n);
    std::swap(swapped[a], swapped[b]);
    maps[0] = swapped;
    return Action(instance.space, instance.group, std::move(maps));
  }
  return instance.action;
}

int run(int argc, char** argv) {
  CLI::App app{
      "betalab — exact computations of shadowing sets, persistent points, "
      "stable points and persistent measures for group actions on finite "
      "rational metric spaces"};
  app.require_subcommand(1);

  std::string input;
  std::optional<std::string> out_path;
  ScaleFlags flags;
  bool timings = false;

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check all instance invariants");
  cmd_validate->add_option("--input", input)->required();

  // gamma / bset
  std::optional<std::string> psi_path;
  std::optional<std::pair<int, int>> psi_swap;
  int point_x = 0;
  auto add_psi_flags = [&](CLI::App* cmd) {
    cmd->add_option("--psi", psi_path, "instance file providing the perturbed action");
    cmd->add_option("--psi-swap", psi_swap,
                    "perturb the first generator into the transposition (a b)");
  };
  auto* cmd_gamma = app.add_subcommand("gamma", "shadowing set of one point against one perturbation");
  cmd_gamma->add_option("--input", input)->required();
  cmd_gamma->add_option("--x", point_x)->required();
  add_scale_flags(cmd_gamma, flags, false);
  add_psi_flags(cmd_gamma);

  auto* cmd_bset = app.add_subcommand("bset", "points with nonempty shadowing set against one perturbation");
  cmd_bset->add_option("--input", input)->required();
  add_scale_flags(cmd_bset, flags, false);
  add_psi_flags(cmd_bset);

  auto* cmd_cset = app.add_subcommand("cset", "points refused by some perturbation in the family");
  cmd_cset->add_option("--input", input)->required();
  add_scale_flags(cmd_cset, flags);

  auto* cmd_persist = app.add_subcommand("persist", "persistent points at one scale");
  cmd_persist->add_option("--input", input)->required();
  add_scale_flags(cmd_persist, flags);

  auto* cmd_stable = app.add_subcommand("stable", "topologically stable points at one scale");
  cmd_stable->add_option("--input", input)->required();
  add_scale_flags(cmd_stable, flags);

  bool pointwise = false;
  auto* cmd_modulus = app.add_subcommand("modulus", "equicontinuity modulus at one epsilon");
  cmd_modulus->add_option("--input", input)->required();
  cmd_modulus->add_option("--epsilon", flags.epsilon);
  cmd_modulus->add_option("--radius", flags.radius);
  cmd_modulus->add_option("--x", point_x);
  cmd_modulus->add_flag("--pointwise", pointwise, "per-point modulus at --x");

  std::string measure_literal;
  auto* cmd_measures = app.add_subcommand("measures", "persistence checks for one measure");
  cmd_measures->add_option("--input", input)->required();
  cmd_measures->add_option("--measure", measure_literal,
                           "measure literal {\"<point>\": \"p/q\", ...}")
      ->required();
  add_scale_flags(cmd_measures, flags);

  int trials = 50;
  int bijections = 3;
  std::string bijection_literal;
  auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
  cmd_verify->add_option("--input", input)->required();
  add_scale_flags(cmd_verify, flags);
  cmd_verify->add_option("--trials", trials, "measure trial budget");
  cmd_verify->add_option("--bijections", bijections, "seeded transport bijections");
  cmd_verify->add_option("--bijection", bijection_literal,
                         "explicit transport bijection as a 0-indexed image "
                         "array, e.g. 2,1,0 (replaces the seeded ones)");
  cmd_verify->add_option("--out", out_path, "write the JSON report here");
  cmd_verify->add_flag("--timings", timings, "include wall times (breaks byte determinism)");

  int comb_t = 2;
  int comb_k = 3;
  auto* cmd_example = app.add_subcommand("example318", "build the comb-space instance, self-check, save");
  cmd_example->add_option("--t", comb_t, "period of the core cycle")->required();
  cmd_example->add_option("--K", comb_k, "cluster depth")->required();
  cmd_example->add_option("--out", out_path, "write the instance file here");

  std::string eps_grid = "1/4,1/2,1,2";
  std::string delta_grid = "0,1/2,1";
  std::string radius_grid = "1,2,3";
  auto* cmd_sweep = app.add_subcommand("sweep", "scale-grid sweep with monotonicity audits");
  cmd_sweep->add_option("--input", input)->required();
  cmd_sweep->add_option("--epsilon-grid", eps_grid, "comma-separated p/q list");
  cmd_sweep->add_option("--delta-grid", delta_grid, "comma-separated p/q list");
  cmd_sweep->add_option("--radius-grid", radius_grid, "comma-separated integers");
  cmd_sweep->add_option("--mode", flags.mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  cmd_sweep->add_option("--seed", flags.seed);
  cmd_sweep->add_option("--count", flags.count);
  cmd_sweep->add_option("--out", out_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? kExitPass : kExitUsage;  // --help stays 0
  }

  if (cmd_validate->parsed()) {
    const Instance instance = load_instance(input);  // throws on any violation
    ordered_json doc;
    doc["fingerprint"] = instance_fingerprint(instance);
    doc["points"] = instance.space->size();
    doc["group"] = instance.group.to_string();
    doc["valid"] = true;
    emit(doc.dump(2) + "\n", std::nullopt);
    return kExitPass;
  }

  if (cmd_gamma->parsed() || cmd_bset->parsed()) {
    const Instance instance = load_instance(input);
    const Action psi = resolve_psi(instance, psi_path, psi_swap);
    const Rational eps = parse_rational(flags.epsilon);
    ordered_json doc;
    if (cmd_gamma->parsed()) {
      doc["gamma"] = gamma_set(instance.action, psi, point_x, eps, flags.radius);
    } else {
      doc["bset"] = b_set(instance.action, psi, eps, flags.radius);
    }
    emit(doc.dump(2) + "\n", std::nullopt);
    return kExitPass;
  }

  if (cmd_cset->parsed() || cmd_persist->parsed() || cmd_stable->parsed()) {
    const Instance instance = load_instance(input);
    const Rational eps = parse_rational(flags.epsilon);
    const Rational delta = parse_rational(flags.delta);
    const PerturbationSet family = make_perturbation_set(
        instance.action, delta, flags.radius, provenance_of(flags));
    ordered_json doc;
    doc["provenance"] = family.provenance.to_string();
    doc["family_size"] = family.actions.size();
    if (cmd_cset->parsed()) {
      doc["cset"] = c_set(instance.action, eps, family, flags.radius);
    } else if (cmd_persist->parsed()) {
      doc["persistent"] =
          persistent_points(instance.action, eps, family, flags.radius).members;
    } else {
      doc["stable"] =
          stable_points(instance.action, eps, family, flags.radius).members;
    }
    emit(doc.dump(2) + "\n", std::nullopt);
    return kExitPass;
  }

  if (cmd_modulus->parsed()) {
    const Instance instance = load_instance(input);
    const Rational eps = parse_rational(flags.epsilon);
    ordered_json doc;
    if (pointwise) {
      doc["point"] = point_x;
      doc["modulus"] = format_rational(pointwise_equicontinuity_modulus(
          instance.action, point_x, eps, flags.radius));
    } else {
      doc["modulus"] = format_rational(
          equicontinuity_modulus(instance.action, eps, flags.radius));
    }
    emit(doc.dump(2) + "\n", std::nullopt);
    return kExitPass;
  }

  if (cmd_measures->parsed()) {
    const Instance instance = load_instance(input);
    const Rational eps = parse_rational(flags.epsilon);
    const Rational delta = parse_rational(flags.delta);
    const RationalMeasure mu =
        parse_measure(measure_literal, instance.space->size());
    const PerturbationSet family = make_perturbation_set(
        instance.action, delta, flags.radius, provenance_of(flags));
    const MeasureVerdict verdict =
        is_persistent_measure(mu, instance.action, eps, family, flags.radius);
    const ScaleIndexedPointSet persistent =
        persistent_points(instance.action, eps, family, flags.radius);
    ordered_json doc;
    doc["provenance"] = family.provenance.to_string();
    doc["persistent_measure"] = verdict.persistent;
    if (!verdict.persistent) doc["violating_psi"] = verdict.violator;
    doc["almost_persistent"] = is_almost_persistent(mu, persistent);
    doc["persistent_points"] = persistent.members;
    emit(doc.dump(2) + "\n", std::nullopt);
    return kExitPass;
  }

  if (cmd_verify->parsed()) {
    const Instance instance = load_instance(input);
    SuiteOptions options;
    options.epsilon = parse_rational(flags.epsilon);
    options.delta = parse_rational(flags.delta);
    options.radius = flags.radius;
    options.request = provenance_of(flags);
    options.trials = trials;
    options.bijections = bijections;
    options.seed = flags.seed;
    if (!bijection_literal.empty()) {
      std::string body = bijection_literal;
      if (body.front() == '[' && body.back() == ']') {
        body = body.substr(1, body.size() - 2);
      }
      std::vector<Point> images;
      for (const Rational& r : parse_grid(body)) {
        if (denominator(r) != 1) {
          throw ArgumentError("bijection entries must be integers");
        }
        images.push_back(static_cast<int>(numerator(r)));
      }
      options.explicit_bijection = std::move(images);
    }
    const Report report = run_verify_suite(instance, options);
    emit(report.to_json_string(timings), out_path);
    for (const auto& record : report.records) {
      std::cerr << verdict_name(record.verdict) << " " << record.name << " "
                << record.scale.to_string() << " [" << record.provenance.to_string()
                << "]\n";
    }
    return report.any_failed() ? kExitFail : kExitPass;
  }

  if (cmd_example->parsed()) {
    CombSpaceConfig config{comb_t, comb_k, std::nullopt};
    const Instance instance = build_comb_space(config);
    const SelfCheckResult checks = run_comb_space_checks(instance);
    ordered_json doc;
    doc["points"] = instance.space->size();
    doc["fingerprint"] = instance_fingerprint(instance);
    doc["self_checks"] = checks.ok ? "PASS" : "FAIL";
    if (!checks.ok) doc["failures"] = checks.failures;
    if (out_path.has_value()) {
      save_instance(instance, *out_path);
      doc["saved"] = *out_path;
    }
    std::cout << doc.dump(2) + "\n";
    return checks.ok ? kExitPass : kExitFail;
  }

  if (cmd_sweep->parsed()) {
    const Instance instance = load_instance(input);
    SweepOptions options;
    options.epsilon_grid = parse_grid(eps_grid);
    options.delta_grid = parse_grid(delta_grid);
    options.radius_grid = parse_int_grid(radius_grid);
    options.request = provenance_of(flags);
    const SweepResult result = run_sweep(instance, options);
    emit(result.to_json_string(), out_path);
    std::cerr << (result.ok() ? "PASS" : "FAIL") << " sweep: "
              << result.cells.size() << " cells, " << result.violations.size()
              << " violations, " << result.diagnostics.size()
              << " diagnostics\n";
    return result.ok() ? kExitPass : kExitFail;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "unexpected error: " << err.what() << "\n";
    return kExitUsage;
  }
}
