// Command-line front end for hybrid polyharmonic cubature on the disc.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycub/bench.hpp"
#include "polycub/cubature.hpp"
#include "polycub/errors.hpp"
#include "polycub/rule_io.hpp"

namespace {

using namespace polycub;

struct WeightChoice {
  std::string id = "w1";
  std::string file;
  int k_trunc = -1;

  WeightFourier build(double radius, int k) const {
    if (!file.empty()) return load_weight_file(file);
    const auto builtin = parse_builtin_weight(id);
    int trunc = k_trunc >= 0 ? k_trunc : std::max(k, default_truncation(builtin));
    if (builtin == BuiltinWeight::kW2) trunc -= trunc % 2;
    return builtin_weight(builtin, radius, std::max(trunc, builtin == BuiltinWeight::kW1 ? 1 : 0));
  }
};

void add_weight_options(CLI::App* cmd, WeightChoice& choice) {
  cmd->add_option("--weight", choice.id, "built-in weight: w1 | w2");
  cmd->add_option("--weight-file", choice.file, "JSON weight description (overrides --weight)");
  cmd->add_option("--K-trunc", choice.k_trunc, "harmonic truncation of built-in w2");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid polyharmonic cubature on the disc"};
  app.require_subcommand(1);

  // rule
  WeightChoice rule_weight;
  int rule_n = 10, rule_m = 9, rule_k = -1, rule_n1 = 0;
  double rule_r = 1.0;
  std::string rule_format = "csv", rule_out, rule_center = "rings";
  bool rule_strict = false;
  auto* rule_cmd = app.add_subcommand("rule", "assemble a hybrid rule and export it");
  add_weight_options(rule_cmd, rule_weight);
  rule_cmd->add_option("--N", rule_n, "Gauss points per harmonic");
  rule_cmd->add_option("--M", rule_m, "angles per ring (odd)");
  rule_cmd->add_option("--K", rule_k, "harmonic truncation");
  rule_cmd->add_option("--N1", rule_n1, "number of rings (default N)");
  rule_cmd->add_option("--R", rule_r, "disc radius");
  rule_cmd->add_option("--format", rule_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  rule_cmd->add_option("--out", rule_out, "output path (default stdout)");
  rule_cmd->add_option("--center", rule_center, "rings | center")->check(CLI::IsMember({"rings", "center"}));
  rule_cmd->add_flag("--strict", rule_strict, "reject K >= M");

  // integrate
  std::string int_rule, int_fn, int_samples;
  auto* int_cmd = app.add_subcommand("integrate", "apply an exported rule");
  int_cmd->add_option("--rule", int_rule, "rule file (.csv or .json)")->required();
  auto* fn_opt = int_cmd->add_option("--fn", int_fn, "built-in test function f0..f4");
  auto* samples_opt = int_cmd->add_option("--samples", int_samples, "samples CSV m,s,value");
  fn_opt->excludes(samples_opt);

  // samples
  std::string smp_rule, smp_fn = "f0", smp_out;
  auto* smp_cmd = app.add_subcommand("samples", "sample a built-in test function on a rule grid");
  smp_cmd->add_option("--rule", smp_rule, "rule file (.csv or .json)")->required();
  smp_cmd->add_option("--fn", smp_fn, "f0..f4");
  smp_cmd->add_option("--out", smp_out, "output path (default stdout)");

  // bench
  BenchmarkConfig bench;
  std::string bench_weight, bench_fn = "f0", bench_format = "md", bench_out,
              bench_center = "rings";
  auto* bench_cmd = app.add_subcommand("bench", "tabulate cubature values and errors");
  bench_cmd->add_option("--weight", bench_weight, "w1 | w2 (default: the weight of --fn)");
  bench_cmd->add_option("--fn", bench_fn, "f0..f4");
  bench_cmd->add_option("--N", bench.ns, "comma-separated N list")->delimiter(',');
  bench_cmd->add_option("--M", bench.ms, "comma-separated M list")->delimiter(',');
  bench_cmd->add_option("--K", bench.k, "harmonic truncation (default 1 for w1, 22 for w2)");
  bench_cmd->add_option("--N1", bench.n1, "fixed ring count (default N1 = N)");
  bench_cmd->add_option("--format", bench_format, "md | csv | json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  bench_cmd->add_option("--out", bench_out, "output path (default stdout)");
  bench_cmd->add_option("--center", bench_center, "rings | center")
      ->check(CLI::IsMember({"rings", "center"}));
  bench_cmd->add_flag("--oracle", bench.use_oracle,
                      "use a 2000x2000 polar Gauss-Legendre integral as the reference");

  // gauss
  WeightChoice gauss_weight;
  int gauss_k = 0, gauss_ell = 1, gauss_n = 10;
  double gauss_r = 1.0;
  std::string gauss_backend = "auto";
  auto* gauss_cmd = app.add_subcommand("gauss", "radial Gauss rule of one weight harmonic");
  add_weight_options(gauss_cmd, gauss_weight);
  gauss_cmd->add_option("--k", gauss_k, "harmonic degree");
  gauss_cmd->add_option("--ell", gauss_ell, "harmonic branch");
  gauss_cmd->add_option("--N", gauss_n, "number of nodes");
  gauss_cmd->add_option("--R", gauss_r, "disc radius");
  gauss_cmd->add_option("--backend", gauss_backend, "auto | jacobi | stieltjes")
      ->check(CLI::IsMember({"auto", "jacobi", "stieltjes"}));

  // check
  WeightChoice check_weight;
  int check_n = 10, check_m = 9, check_k = -1;
  auto* check_cmd = app.add_subcommand("check", "coefficient stability inequality");
  add_weight_options(check_cmd, check_weight);
  check_cmd->add_option("--N", check_n, "Gauss points per harmonic");
  check_cmd->add_option("--M", check_m, "angles per ring (odd)");
  check_cmd->add_option("--K", check_k, "harmonic truncation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rule_cmd->parsed()) {
      const int k = rule_k >= 0 ? rule_k
                                : (rule_weight.file.empty()
                                       ? default_truncation(parse_builtin_weight(rule_weight.id))
                                       : 1);
      const auto weight = rule_weight.build(rule_r, k);
      HybridOptions options;
      options.center = parse_center_policy(rule_center);
      options.reject_aliasing = rule_strict;
      const auto knots = RadialKnots::uniform(weight.radius(), rule_n1 > 0 ? rule_n1 : rule_n);
      const auto rule = assemble_hybrid_rule(weight, rule_n, rule_m, k, knots, options);
      std::ofstream file;
      auto& out = open_output(rule_out, file);
      if (rule_format == "json") {
        write_rule_json(rule, out);
      } else {
        write_rule_csv(rule, out);
      }
    } else if (int_cmd->parsed()) {
      double value = 0.0;
      if (!int_samples.empty()) {
        value = integrate_from_samples(int_rule, int_samples);
      } else if (!int_fn.empty()) {
        const auto rule = load_rule(int_rule);
        value = integrate_hybrid(rule, sample_function(rule, test_function(parse_test_function(int_fn)).eval));
      } else {
        throw InputError("integrate needs --fn or --samples");
      }
      std::cout << format17(value) << '\n';
    } else if (smp_cmd->parsed()) {
      const auto rule = load_rule(smp_rule);
      const auto grid = sample_function(rule, test_function(parse_test_function(smp_fn)).eval);
      std::ofstream file;
      write_samples_csv(grid, open_output(smp_out, file));
    } else if (bench_cmd->parsed()) {
      if (!bench_weight.empty()) bench.weight = parse_builtin_weight(bench_weight);
      bench.function = parse_test_function(bench_fn);
      bench.options.center = parse_center_policy(bench_center);
      const auto table = run_benchmark(bench);
      std::ofstream file;
      auto& out = open_output(bench_out, file);
      out << format_table(table, parse_table_format(bench_format));
    } else if (gauss_cmd->parsed()) {
      const auto weight = gauss_weight.build(gauss_r, gauss_k);
      const HarmonicIndex idx{gauss_k, gauss_ell};
      validate(idx);
      const auto it = weight.terms().find(idx);
      if (it == weight.terms().end()) {
        throw DomainError("weight has no harmonic (" + std::to_string(gauss_k) + "," +
                          std::to_string(gauss_ell) + ")");
      }
      const GaussBackend backend = gauss_backend == "jacobi"      ? GaussBackend::kJacobi
                                   : gauss_backend == "stieltjes" ? GaussBackend::kStieltjes
                                                                  : GaussBackend::kAuto;
      write_gauss_csv(build_gauss_rule(idx, it->second, weight.radius(), gauss_n, backend), std::cout);
    } else if (check_cmd->parsed()) {
      const int k = check_k >= 0 ? check_k
                                 : (check_weight.file.empty()
                                        ? default_truncation(parse_builtin_weight(check_weight.id))
                                        : 1);
      const auto weight = check_weight.build(1.0, k);
      const auto result = remarkable_inequality_check(weight, check_n, check_m, k);
      std::cout << "lhs,rhs,slack\n"
                << format17(result.lhs) << ',' << format17(result.rhs) << ','
                << format17(result.slack) << '\n';
    }
  } catch (const polycub::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
