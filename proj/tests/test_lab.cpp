#include "doctest.h"
#include "relhom/lab.hpp"

#include <chrono>
#include <iostream>

using namespace relhom;

namespace {

const RingSpec z4 = RingSpec::modular(4);

ModuleObject mod(const RingSpec& r, std::vector<Integer> orders, std::size_t rank = 0) {
  return ModuleObject(r, rank, std::move(orders));
}

std::vector<std::string> names(const std::vector<ModuleObject>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

UniverseSpec universe(std::size_t bound) {
  UniverseSpec u;
  u.max_total_multiplicity = bound;
  return u;
}

std::string describe(const SuiteReport& r) {
  std::string out = r.suite_id + ": " + std::to_string(r.instances_checked) + " checked";
  for (const auto& f : r.failures) out += "\n  " + f.instance + ": expected " + f.expected + ", got " + f.got;
  return out;
}

PrecoverClass constrained_k() {
  return PrecoverClass::constrained(z4, {4, 2}, {{Integer(2), AllowedSet({0}, 2)}});
}

}  // namespace

TEST_CASE("enumerate_modules examples") {
  CHECK(names(enumerate_modules(universe(1))) == std::vector<std::string>{"0", "[2]", "[4]"});
  CHECK(names(enumerate_modules(universe(2))) ==
        std::vector<std::string>{"0", "[2]", "[4]", "[2,2]", "[4,2]", "[4,4]"});
  UniverseSpec u6;
  u6.ring = RingSpec::modular(6);
  u6.max_total_multiplicity = 1;
  CHECK(names(enumerate_modules(u6)) == std::vector<std::string>{"0", "[2]", "[3]"});
}

TEST_CASE("enumerate_modules counts and shape") {
  // Vectors with sum <= b over c coordinates: C(b + c, c).
  auto binom = [](std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (std::size_t b = 0; b <= 5; ++b) CHECK(enumerate_modules(universe(b)).size() == binom(b + 2, 2));
  UniverseSpec u8;
  u8.ring = RingSpec::modular(8);
  u8.max_total_multiplicity = 3;
  const auto ms = enumerate_modules(u8);
  CHECK(ms.size() == binom(6, 3));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK_FALSE(ms[i] == ms[j]);

  UniverseSpec uz;
  uz.ring = RingSpec::integers();
  uz.support = {0, 2};
  uz.max_total_multiplicity = 2;
  CHECK(names(enumerate_modules(uz)) == std::vector<std::string>{"0", "[2]", "rank1", "[2,2]", "rank1+[2]"});
  CHECK(enumerate_modules(uz) == enumerate_modules(uz));
}

TEST_CASE("unknown ids and ring mismatch are rejected") {
  const auto cls = PrecoverClass::add_closure(mod(z4, {2}));
  CHECK_THROWS_AS(run_suite("thm-9.9", cls, universe(1)), Error);
  CHECK_THROWS_AS(reproduce("example-9"), Error);
  UniverseSpec u;
  u.ring = RingSpec::modular(8);
  CHECK_THROWS_AS(run_suite("prop-2.1", cls, u), RingMismatch);
}

TEST_CASE("reproductions pass") {
  for (const auto& id : example_ids()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = reproduce(id);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    INFO(describe(r));
    CHECK(r.pass());
    CHECK(r.instances_checked > 0);
    MESSAGE(id << " " << s << "s");
  }
}

TEST_CASE("prop-2.9 report content") {
  const auto r = reproduce("prop-2.9");
  REQUIRE(r.pass());
  bool phi1 = false;
  for (const auto& e : r.entries)
    if (e.instance == "phi_1 almost-epi") {
      phi1 = true;
      CHECK(e.got == "Yes");
      REQUIRE(e.witness);
      CHECK(e.witness->morphisms.at(0).second.matrix() == IntMatrix{{2}});
    }
  CHECK(phi1);
}

TEST_CASE("suite examples") {
  const auto add_k = PrecoverClass::add_closure(mod(z4, {2}));
  const auto p21 = run_suite("prop-2.1", add_k, universe(3));
  CHECK(p21.pass());
  CHECK(p21.instances_checked == 30);

  const auto t38 = run_suite("thm-3.8", add_k, universe(3));
  INFO(describe(t38));
  CHECK(t38.pass());
  bool exhibited = false;
  for (const auto& e : t38.entries)
    if (e.instance == "M=[4] n=0 S") exhibited = e.got == "No";
  CHECK(exhibited);

  const auto t34 = run_suite("thm-3.4", constrained_k(), universe(4));
  INFO(describe(t34));
  CHECK(t34.pass());
  bool weak = false, witness = false;
  for (const auto& e : t34.entries) {
    if (e.instance == "weakly closed under summands") weak = e.got == "No";
    if (e.instance == "M=[2] n=0 R") witness = e.got == "No";
  }
  CHECK(weak);
  CHECK(witness);
}

TEST_CASE("every suite passes on the default universe") {
  const std::vector<PrecoverClass> classes{
      PrecoverClass::add_closure(mod(z4, {2})),    PrecoverClass::add_closure(mod(z4, {4})),
      PrecoverClass::add_closure(mod(z4, {4, 2})), PrecoverClass::powers(mod(z4, {4, 2})),
      PrecoverClass::powers(mod(z4, {2})),         constrained_k(),
  };
  for (const auto& cls : classes)
    for (const auto& id : suite_ids()) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = run_suite(id, cls, universe(4));
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      INFO(cls.to_string() << " " << describe(r));
      CHECK(r.pass());
      MESSAGE(cls.to_string() << " " << id << " " << r.instances_checked << " " << s << "s");
    }
}

TEST_CASE("reports are deterministic") {
  const auto cls = PrecoverClass::powers(mod(z4, {4, 2}));
  const auto a = run_suite("thm-2.10", cls, universe(2));
  const auto b = run_suite("thm-2.10", cls, universe(2));
  CHECK(describe(a) == describe(b));
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].instance == b.entries[i].instance);
}
