#include "doctest.h"
#include "relhom/algebra.hpp"
#include "relhom/scenario.hpp"

#include <random>
#include <sstream>

using namespace relhom;

namespace {

const RingSpec z4 = RingSpec::modular(4);

ScenarioConfig scenario(Command c, std::string arg, std::string cls, std::string m, std::size_t n = 0) {
  ScenarioConfig cfg;
  cfg.ring = z4;
  cfg.command = c;
  cfg.argument = std::move(arg);
  if (!cls.empty()) cfg.class_text = std::move(cls);
  if (!m.empty()) cfg.modules["M"] = std::move(m);
  cfg.n = n;
  cfg.format = Format::Records;
  return cfg;
}

std::vector<Json> reparse(const std::string& output) {
  std::vector<Json> out;
  std::istringstream in(output);
  std::string line;
  while (std::getline(in, line)) out.push_back(Json::parse(line));
  return out;
}

// Rebuild every witness in a record stream and re-verify it through the
// public entry points. Returns the number of objects verified.
int reverify(const std::vector<Json>& records, const std::optional<PrecoverClass>& cls) {
  int verified = 0;
  for (const auto& rec : records) {
    if (!rec.contains("witness") || rec["witness"].is_null()) continue;
    const RingSpec ring = parse_ring(rec.at("ring").get<std::string>());
    const Witness w = witness_from_json(ring, rec["witness"]);
    CHECK(to_json(w) == rec["witness"]);
    for (const auto& [name, f] : w.morphisms) {
      CHECK(morphism_from_json(ring, to_json(f)) == f);
      if (cls && (name == "cover" || name == "precover" || name.rfind("cover_", 0) == 0)) {
        CHECK(verify_precover(*cls, f).ok);
        ++verified;
      }
    }
    if (w.resolution && cls) {
      CHECK(recheck_resolution(*cls, *w.resolution));
      ++verified;
    }
    if (w.equivalence && cls && w.modules.size() >= 2) {
      CHECK(verify_equivalence(*cls, w.modules[0].second, w.modules[1].second, *w.equivalence));
      ++verified;
    }
  }
  return verified;
}

}  // namespace

TEST_CASE("parse_ring and parse_module") {
  CHECK(parse_ring("Z") == RingSpec::integers());
  CHECK(parse_ring(" Z/4 ") == z4);
  CHECK_THROWS_AS(parse_ring("Z/1"), ParseError);
  CHECK_THROWS_AS(parse_ring("Q"), ParseError);
  CHECK(parse_module(z4, "[4,2]") == ModuleObject(z4, 0, {4, 2}));
  CHECK(parse_module(z4, "[2,4]") == ModuleObject(z4, 0, {4, 2}));
  CHECK(parse_module(z4, "0").is_zero());
  CHECK(parse_module(z4, "[]").is_zero());
  const auto zz = RingSpec::integers();
  CHECK(parse_module(zz, "rank1") == ModuleObject(zz, 1, {}));
  CHECK(parse_module(zz, "rank2+[6]") == ModuleObject(zz, 2, {3, 2}));
  CHECK_THROWS_WITH_AS(parse_module(z4, "[3]"), "order 3 does not divide 4", ParseError);
  CHECK_THROWS_AS(parse_module(z4, "rank1"), ParseError);
  CHECK_THROWS_AS(parse_module(z4, "[4,x]"), ParseError);
  CHECK_THROWS_AS(parse_module(z4, "4,2"), ParseError);
}

TEST_CASE("parse_class forms") {
  CHECK(parse_class(z4, "add(D) D=[2]").to_string() == "add([2])");
  CHECK(parse_class(z4, "add([2])").to_string() == "add([2])");
  CHECK(parse_class(z4, "pow(D) D=[4,2]").to_string() == "pow([4,2])");
  const auto c = parse_class(z4, "constrained support=[4,2] allowed[2]={0,2+}");
  CHECK(c.kind() == PrecoverClass::Kind::MultiplicityConstrained);
  CHECK(c.to_string() == "constrained support=[4,2] allowed[2]={0,2+}");
  CHECK(parse_class(RingSpec::integers(), "torsionZ").kind() == PrecoverClass::Kind::TorsionOverZ);
  CHECK_THROWS_AS(parse_class(z4, "torsionZ"), ParseError);
  CHECK_THROWS_AS(parse_class(z4, "proj([2])"), ParseError);
  CHECK_THROWS_AS(parse_class(z4, "constrained support=[4,2] allowed[2]={0,3,5}"), ParseError);
  CHECK_THROWS_AS(parse_class(z4, "constrained support=[4,2] allowed[2]={0,3,7+}"), Error);
  CHECK_THROWS_AS(parse_class(z4, "constrained support=[4,2] bogus=1"), ParseError);
  CHECK(parse_allowed_set("{0+}").is_all());
  CHECK(parse_allowed_set("{0,2+}").to_string() == "{0,2+}");
}

TEST_CASE("property: module and class text round trips") {
  std::mt19937_64 rng(11);
  const std::vector<Integer> divisors{1, 2, 3, 4, 6, 8, 12, 24};
  const auto z24 = RingSpec::modular(24);
  const auto zz = RingSpec::integers();
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Integer> orders;
    for (std::size_t i = rng() % 5; i > 0; --i) orders.push_back(divisors[rng() % divisors.size()]);
    const ModuleObject m(z24, 0, orders);
    CHECK(parse_module(z24, m.to_string()) == m);
    const ModuleObject mz(zz, rng() % 3, orders);
    CHECK(parse_module(zz, mz.to_string()) == mz);
    if (!m.is_zero()) {
      for (const auto& cls : {PrecoverClass::add_closure(m), PrecoverClass::powers(m)})
        CHECK(parse_class(z24, cls.to_string()).to_string() == cls.to_string());
    }
  }
}

TEST_CASE("parse_config examples") {
  const auto a = parse_config("ring Z/4\nclass add(D) D=[2]\nmodule M=[4]\ncheck S n=0");
  CHECK(a.ring == z4);
  CHECK(*a.class_text == "add(D) D=[2]");
  CHECK(a.modules.at("M") == "[4]");
  CHECK(a.command == Command::Check);
  CHECK(a.argument == "S");
  CHECK(*a.n == 0);

  const auto b = parse_config("ring Z\nclass torsionZ\nmodule M=rank1\ncheck R n=0");
  CHECK(b.ring == RingSpec::integers());
  CHECK(b.argument == "R");
  const auto rb = run_scenario(b);
  CHECK(rb.exit_code == kExitOk);
  CHECK(rb.records.at(0).at("status") == "Yes");

  CHECK_THROWS_WITH_AS(parse_config("ring Z/4\nmodule M=[3]"), "line 2 (module): order 3 does not divide 4", ParseError);
}

TEST_CASE("parse_config rejects bad input") {
  CHECK_THROWS_AS(parse_config("ring Z/4\ncolour red"), ParseError);
  CHECK_THROWS_AS(parse_config("module M=[2]"), ParseError);
  CHECK_THROWS_AS(parse_config("ring Z/4\ncheck Q n=0"), ParseError);
  CHECK_THROWS_AS(parse_config("ring Z/4\ncheck E k=0"), ParseError);
  CHECK_THROWS_AS(parse_config("ring Z/4\ncheck E\nresolve"), ParseError);
  CHECK_THROWS_AS(parse_config("ring Z/4\nring Z/4"), ParseError);
  CHECK_THROWS_AS(parse_config("ring Z/1"), ParseError);
  const auto ok = parse_config("# comment\n\nring Z/4   # trailing\nformat records\nexpect no\nstrict\nseed 9\nlist suites\n");
  CHECK(ok.format == Format::Records);
  CHECK(ok.expect == false);
  CHECK(ok.strict);
  CHECK(*ok.seed == 9);
}

TEST_CASE("merge_defaults keeps explicit fields") {
  ScenarioConfig flags;
  flags.n = 2;
  flags.modules["M"] = "[2]";
  auto file = parse_config("ring Z/4\nclass add([2])\nmodule M=[4]\nmodule A=[2]\next n=1");
  flags.merge_defaults(file);
  CHECK(*flags.n == 2);
  CHECK(flags.modules.at("M") == "[2]");
  CHECK(flags.modules.at("A") == "[2]");
  CHECK(flags.command == Command::Ext);
}

TEST_CASE("run_scenario exit codes") {
  auto e = scenario(Command::Check, "E", "add([2])", "[4]");
  CHECK(run_scenario(e).exit_code == kExitOk);
  e.expect = true;
  CHECK(run_scenario(e).exit_code == kExitOk);
  e.expect = false;
  CHECK(run_scenario(e).exit_code == kExitViolated);

  auto s = scenario(Command::Check, "S", "add([2])", "[4]");
  s.expect = true;
  CHECK(run_scenario(s).exit_code == kExitViolated);

  auto bad = scenario(Command::Check, "E", "add([2])", "[3]");
  const auto rb = run_scenario(bad);
  CHECK(rb.exit_code == kExitInvalid);
  CHECK(rb.records.at(0).at("kind") == "error");
  CHECK(run_scenario(scenario(Command::Check, "E", "", "[4]")).exit_code == kExitInvalid);
  CHECK(run_scenario(scenario(Command::Suite, "thm-0", "add([2])", "")).exit_code == kExitInvalid);
  CHECK(run_scenario(scenario(Command::Reproduce, "nope", "", "")).exit_code == kExitInvalid);
  CHECK(run_scenario(scenario(Command::None, "", "", "")).exit_code == kExitInvalid);

  // A greedy resolution that does not settle n = 1 is Unknown.
  bool found_unknown = false;
  for (const char* m : {"[2]", "[4,2]", "[2,2]", "[4]", "[4,2,2]"}) {
    auto r = scenario(Command::Check, "R", "pow([4,2])", m, 1);
    const auto plain = run_scenario(r);
    if (plain.records.at(0).at("status") != "Unknown") continue;
    found_unknown = true;
    CHECK(plain.exit_code == kExitOk);
    r.strict = true;
    CHECK(run_scenario(r).exit_code == kExitUnknown);
  }
  CHECK(found_unknown);
}

TEST_CASE("records re-parse and their witnesses re-verify") {
  const auto add_k = parse_class(z4, "add([2])");
  std::vector<std::pair<ScenarioConfig, std::optional<PrecoverClass>>> runs;
  for (const char* m : {"[4]", "[4,2]", "[4,4,2]", "[2]"})
    for (const char* which : {"E", "R", "S"})
      for (std::size_t n = 0; n <= 1; ++n) runs.emplace_back(scenario(Command::Check, which, "add([2])", m, n), add_k);
  runs.emplace_back(scenario(Command::Resolve, "", "add([2])", "[4,4,2]"), add_k);
  auto ext = scenario(Command::Ext, "", "add([4])", "[2]", 1);
  ext.modules["A"] = "[2]";
  runs.emplace_back(ext, parse_class(z4, "add([4])"));
  runs.emplace_back(scenario(Command::Schanuel, "", "add([2])", "[4,4,2]", 2), add_k);
  runs.emplace_back(scenario(Command::Suite, "thm-3.8", "add([2])", ""), add_k);
  runs.emplace_back(scenario(Command::Suite, "schanuel-well-defined", "pow([4,2])", ""), parse_class(z4, "pow([4,2])"));
  runs.emplace_back(scenario(Command::Reproduce, "prop-2.9", "", ""), add_k);
  runs.emplace_back(scenario(Command::Reproduce, "example-3.7b", "", ""), PrecoverClass::torsion_over_z());
  int verified = 0;
  for (auto& [cfg, cls] : runs) {
    if (cfg.command == Command::Suite) cfg.bound = 2;
    const auto r = run_scenario(cfg);
    INFO(r.output);
    CHECK(r.exit_code != kExitInvalid);
    const auto records = reparse(r.output);
    REQUIRE(records.size() == r.records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(records[i] == r.records[i]);
      CHECK(records[i].contains("kind"));
      CHECK(records[i].dump() == r.records[i].dump());
    }
    verified += reverify(records, cls);
    CHECK(run_scenario(cfg).output == r.output);
  }
  CHECK(verified > 20);
}

TEST_CASE("seeded cross-checks never change verdicts") {
  auto r = scenario(Command::Check, "R", "add([2])", "[4,2]", 0);
  const auto plain = run_scenario(r);
  r.seed = 5;
  const auto seeded = run_scenario(r);
  CHECK(seeded.records.at(0) == plain.records.at(0));
  REQUIRE(seeded.records.size() == 2);
  CHECK(seeded.records[1].at("kind") == "crosscheck");
  CHECK(seeded.records[1].at("status") == "pass");
  auto res = scenario(Command::Resolve, "", "pow([4,2])", "[4,2,2]");
  res.seed = 17;
  const auto rr = run_scenario(res);
  CHECK(rr.records.back().at("status") == "pass");
  CHECK(rr.exit_code == kExitOk);
}
