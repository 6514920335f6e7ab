// wnc: simulate, verify and tabulate the grid network code.
//
//   wnc theta    --dim 3
//   wnc simulate --dim 2 --k 3 --slots 20 [--payload bits|coeffs] [--seed 0] [--permissive]
//   wnc counts   --dim 3 --k 4
//   wnc benefit  --dim 2 [--k 100] [--model fixed|optimized --alpha 2]
//   wnc sweep    --dim 2 --k-min 2 --k-max 1000 [--k-step 1] [--out sweep.csv]

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "wnc/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Grid network-coding simulator and energy-benefit calculator"};
  app.require_subcommand(1);

  wnc::RunSpec spec;
  int k = 0;
  std::string payload = "coeffs";
  std::string model = "fixed";
  double alpha = 0;
  bool permissive = false;

  auto add_dim = [&](CLI::App* cmd) { cmd->add_option("--dim", spec.d, "grid dimension d")->required(); };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", spec.out, "output file (default: stdout)"); };

  auto* theta = app.add_subcommand("theta", "print the delay-offset sets as JSON");
  add_dim(theta);
  add_out(theta);

  auto* simulate = app.add_subcommand("simulate", "run the slot engine and verify decoding");
  add_dim(simulate);
  simulate->add_option("--k", k, "grid side K")->required();
  simulate->add_option("--slots", spec.slots, "number of slots")->required();
  simulate->add_option("--payload", payload, "bits or coeffs")->check(CLI::IsMember({"bits", "coeffs"}));
  simulate->add_option("--seed", spec.seed, "source stream seed");
  simulate->add_flag("--permissive", permissive, "log violations instead of aborting");
  add_out(simulate);

  auto* counts = app.add_subcommand("counts", "closed-form and BFS-checked transmission counts");
  add_dim(counts);
  counts->add_option("--k", k, "grid side K")->required();
  add_out(counts);

  auto* benefit = app.add_subcommand("benefit", "energy benefit under a range model");
  add_dim(benefit);
  auto* benefit_k = benefit->add_option("--k", k, "grid side K (omit for the K -> infinity limit)");
  benefit->add_option("--model", model, "fixed or optimized")->check(CLI::IsMember({"fixed", "optimized"}));
  auto* benefit_alpha = benefit->add_option("--alpha", alpha, "path-loss exponent");
  add_out(benefit);

  auto* sweep = app.add_subcommand("sweep", "benefit ratio over a range of K as CSV");
  add_dim(sweep);
  sweep->add_option("--k-min", spec.k_min)->required();
  sweep->add_option("--k-max", spec.k_max)->required();
  sweep->add_option("--k-step", spec.k_step);
  add_out(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wnc::exit_usage;
  }

  if (*theta) spec.command = wnc::Command::theta;
  if (*simulate) spec.command = wnc::Command::simulate;
  if (*counts) spec.command = wnc::Command::counts;
  if (*benefit) spec.command = wnc::Command::benefit;
  if (*sweep) spec.command = wnc::Command::sweep;

  if (*simulate || *counts || (*benefit && benefit_k->count() > 0)) spec.K = k;
  if (benefit_alpha->count() > 0) spec.alpha = alpha;
  spec.payload = payload == "bits" ? wnc::PayloadMode::bit : wnc::PayloadMode::coeff;
  spec.model = model == "optimized" ? wnc::RangeModel::optimized_range : wnc::RangeModel::fixed_range;
  spec.strict = !permissive;

  return wnc::execute(spec, std::cout, std::cerr);
}
