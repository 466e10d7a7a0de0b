#include "relhom/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace relhom;

int main(int argc, char** argv) {
  CLI::App app{"relhom: relative homological invariants of modules over Z/n and Z"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string ring, cls, module, target, format, expect, config;
  std::optional<std::size_t> n, length, bound;
  std::optional<std::uint64_t> seed;
  bool strict = false;
  app.add_option("--ring", ring, "Z or Z/n (default Z/4)");
  app.add_option("--class", cls, "class descriptor, e.g. \"add([2])\"");
  app.add_option("--module", module, "module M, e.g. \"[4,2]\" or \"rank1+[2]\"");
  app.add_option("--target", target, "coefficient module A for ext");
  app.add_option("--n", n, "degree");
  app.add_option("--length", length, "resolution length");
  app.add_option("--bound", bound, "universe bound on total multiplicity");
  app.add_option("--format", format, "table or records")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--expect", expect, "exit 1 unless the verdict matches")->check(CLI::IsMember({"yes", "no"}));
  app.add_flag("--strict", strict, "exit 3 on Unknown verdicts");
  app.add_option("--seed", seed, "seed for sampled cross-checks");
  app.add_option("--config", config, "scenario file");

  ScenarioConfig cfg;
  auto* resolve = app.add_subcommand("resolve", "build and certify a resolution of M");
  auto* ext = app.add_subcommand("ext", "relative Ext^n(M, A)");
  auto* schanuel = app.add_subcommand("schanuel", "iterate kernels of covers n times");
  auto* check = app.add_subcommand("check", "decide E, R or S for M at degree n");
  check->add_option("which", cfg.argument, "E, R or S")->required()->check(CLI::IsMember({"E", "R", "S"}));
  auto* suite = app.add_subcommand("suite", "run a verification suite over a universe");
  suite->add_option("id", cfg.argument, "suite id")->required();
  auto* reproduce = app.add_subcommand("reproduce", "reproduce a worked example");
  reproduce->add_option("id", cfg.argument, "example id")->required();
  auto* list = app.add_subcommand("list", "list suite or example ids");
  list->add_option("topic", cfg.argument, "suites or examples")->required()->check(CLI::IsMember({"suites", "examples"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  if (*resolve) cfg.command = Command::Resolve;
  if (*ext) cfg.command = Command::Ext;
  if (*schanuel) cfg.command = Command::Schanuel;
  if (*check) cfg.command = Command::Check;
  if (*suite) cfg.command = Command::Suite;
  if (*reproduce) cfg.command = Command::Reproduce;
  if (*list) cfg.command = Command::List;

  try {
    if (!ring.empty()) cfg.ring = parse_ring(ring);
    if (!cls.empty()) cfg.class_text = cls;
    if (!module.empty()) cfg.modules["M"] = module;
    if (!target.empty()) cfg.modules["A"] = target;
    cfg.n = n;
    cfg.length = length;
    cfg.bound = bound;
    if (!format.empty()) cfg.format = format == "records" ? Format::Records : Format::Table;
    if (!expect.empty()) cfg.expect = expect == "yes";
    cfg.strict = strict;
    cfg.seed = seed;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw Error("cannot read config file " + config);
      std::ostringstream text;
      text << in.rdbuf();
      cfg.merge_defaults(parse_config(text.str()));
    }
  } catch (const Error& e) {
    std::cerr << "relhom: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    const auto result = run_scenario(cfg);
    const bool invalid = result.exit_code == kExitInvalid;
    if (!invalid || cfg.format == Format::Records) std::cout << result.output;
    if (invalid) std::cerr << "relhom: " << result.records.front().value("message", "") << "\n";
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "relhom: internal error: " << e.what() << "\n";
    return kExitViolated;
  }
}
