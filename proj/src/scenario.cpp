#include "relhom/scenario.hpp"

#include "relhom/algebra.hpp"

#include <random>
#include <sstream>

namespace relhom {

namespace {

struct Invalid : Error {
  using Error::Error;
};

struct Context {
  RingSpec ring;
  std::optional<PrecoverClass> cls;
  Json base;  // ring, class and command fields shared by every record
};

const PrecoverClass& need_class(const Context& ctx) {
  if (!ctx.cls) throw Invalid("missing class (use --class or a 'class' line)");
  return *ctx.cls;
}

ModuleObject need_module(const ScenarioConfig& cfg, const Context& ctx, const std::string& name) {
  auto it = cfg.modules.find(name);
  if (it == cfg.modules.end()) throw Invalid("missing module " + name);
  return parse_module(ctx.ring, it->second);
}

int verdict_exit(const ScenarioConfig& cfg, Status s) {
  if (s == Status::Unknown) return cfg.strict ? kExitUnknown : kExitOk;
  if (cfg.expect && *cfg.expect != (s == Status::Yes)) return kExitViolated;
  return kExitOk;
}

// Sampled re-verification: random maps I -> M factor through d_0, and
// d_(i-1) d_i h = 0 for random h : I -> F_i.
Json crosscheck(const PrecoverClass& cls, const ResolutionComplex& res, std::uint64_t seed, bool& ok) {
  std::mt19937_64 rng(seed);
  std::size_t samples = 0;
  ok = true;
  auto random_map = [&](const ModuleObject& i, const ModuleObject& x) {
    const HomGroup h(i, x);
    std::vector<Integer> c;
    for (const auto& o : h.coordinate_orders()) {
      if (o == 0) {
        c.push_back(Integer(static_cast<long long>(rng() % 11) - 5));
      } else {
        const auto bound = o.convert_to<std::uint64_t>();
        c.push_back(Integer(rng() % bound));
      }
    }
    return h.element(c);
  };
  std::vector<ModuleObject> ms{res.target};
  ms.insert(ms.end(), res.terms.begin(), res.terms.end());
  const auto tests = test_family(cls, ms);
  for (const auto& t : tests)
    for (int k = 0; k < 8; ++k) {
      if (!res.differentials.empty()) {
        const auto h = random_map(t, res.target);
        ok = ok && solve_factorization(h, res.differentials[0]).has_value();
        ++samples;
      }
      for (std::size_t i = 1; i < res.differentials.size(); ++i) {
        const auto h = random_map(t, res.terms[i]);
        ok = ok && compose(res.differentials[i - 1], compose(res.differentials[i], h)).is_zero();
        ++samples;
      }
    }
  return {{"kind", "crosscheck"}, {"seed", seed}, {"samples", samples}, {"status", ok ? "pass" : "fail"}};
}

std::string header(const Json& base) {
  std::string out;
  for (const auto& [k, v] : base.items()) {
    if (!out.empty()) out += "  ";
    out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out + "\n";
}

void run_check(const ScenarioConfig& cfg, Context& ctx, ScenarioResult& out) {
  const auto& cls = need_class(ctx);
  const auto m = need_module(cfg, ctx, "M");
  const std::size_t n = cfg.n.value_or(0);
  Verdict v;
  if (cfg.argument == "E")
    v = check_E(cls, m, n);
  else if (cfg.argument == "R")
    v = check_R(cls, m, n);
  else if (cfg.argument == "S")
    v = check_S(cls, m, n);
  else
    throw Invalid("check needs E, R or S, got '" + cfg.argument + "'");
  Json rec = ctx.base;
  rec.update(to_json(v));
  rec["kind"] = "verdict";
  rec["module"] = m.to_string();
  rec["n"] = n;
  out.records.push_back(rec);
  std::ostringstream os;
  os << header(ctx.base) << "M=" << m.to_string() << "  n=" << n << "\n" << to_string(v.status) << "\n";
  os << "reason: " << v.reason << "\n";
  if (v.witness) os << "witness:\n" << render_witness(*v.witness, 2);
  out.exit_code = verdict_exit(cfg, v.status);
  if (cfg.seed && v.witness && v.witness->resolution) {
    bool ok = true;
    out.records.push_back(crosscheck(cls, *v.witness->resolution, *cfg.seed, ok));
    os << "sampled cross-check (seed " << *cfg.seed << "): " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) out.exit_code = kExitViolated;
  }
  out.table = os.str();
}

void run_resolve(const ScenarioConfig& cfg, Context& ctx, ScenarioResult& out) {
  const auto& cls = need_class(ctx);
  const auto m = need_module(cfg, ctx, "M");
  const std::size_t length = cfg.length.value_or(2);
  const auto res = build_resolution(cls, m, length);
  const bool rechecked = recheck_resolution(cls, res);
  Json rec = ctx.base;
  rec["kind"] = "resolution";
  rec["module"] = m.to_string();
  rec["status"] = to_string(res.exact() ? Status::Yes : Status::No);
  rec["rechecked"] = rechecked;
  Witness w;
  w.resolution = res;
  rec["witness"] = to_json(w);
  out.records.push_back(rec);
  std::ostringstream os;
  os << header(ctx.base) << "M=" << m.to_string() << "\n" << render_witness(w, 0);
  os << "re-verified: " << (rechecked ? "yes" : "NO") << "\n";
  out.exit_code = rechecked ? verdict_exit(cfg, res.exact() ? Status::Yes : Status::No) : kExitViolated;
  if (cfg.seed) {
    bool ok = true;
    out.records.push_back(crosscheck(cls, res, *cfg.seed, ok));
    os << "sampled cross-check (seed " << *cfg.seed << "): " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) out.exit_code = kExitViolated;
  }
  out.table = os.str();
}

void run_ext(const ScenarioConfig& cfg, Context& ctx, ScenarioResult& out) {
  const auto& cls = need_class(ctx);
  const auto m = need_module(cfg, ctx, "M");
  const auto a = need_module(cfg, ctx, "A");
  const std::size_t n = cfg.n.value_or(0);
  const auto res = build_resolution(cls, m, n + 1);
  const auto g = ext_from_resolution(res, a, n);
  Json rec = ctx.base;
  rec["kind"] = "group";
  rec["name"] = "Ext^" + std::to_string(n) + "(M,A)";
  rec["module"] = m.to_string();
  rec["target"] = a.to_string();
  rec["n"] = n;
  rec["value"] = to_json(g);
  Witness w;
  w.resolution = res;
  rec["witness"] = to_json(w);
  out.records.push_back(rec);
  out.table = header(ctx.base) + "Ext^" + std::to_string(n) + "(" + m.to_string() + ", " + a.to_string() +
              ") = " + g.to_string() + "\n";
}

void run_schanuel(const ScenarioConfig& cfg, Context& ctx, ScenarioResult& out) {
  const auto& cls = need_class(ctx);
  auto m = need_module(cfg, ctx, "M");
  const std::size_t n = cfg.n.value_or(1);
  std::ostringstream os;
  os << header(ctx.base) << "S^0 = " << m.to_string() << "\n";
  Witness w;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto cover = build_cover(cls, m).precover;
    m = kernel(cover).module;
    w.morphisms.emplace_back("cover_" + std::to_string(i - 1), cover);
    w.modules.emplace_back("S^" + std::to_string(i), m);
    os << "S^" << i << " = " << m.to_string() << "   (kernel of cover " << cover.domain().to_string() << " -> "
       << cover.codomain().to_string() << "  " << cover.matrix().to_string() << ")\n";
  }
  Json rec = ctx.base;
  rec["kind"] = "module";
  rec["name"] = "S^" + std::to_string(n) + "(M)";
  rec["module"] = need_module(cfg, ctx, "M").to_string();
  rec["value"] = m.to_string();
  rec["n"] = n;
  rec["witness"] = to_json(w);
  out.records.push_back(rec);
  out.table = os.str();
}

void emit_report(const SuiteReport& r, const Json& base, ScenarioResult& out) {
  Json head = base;
  head["kind"] = "suite";
  head["suite"] = r.suite_id;
  head["status"] = r.pass() ? "pass" : "fail";
  head["instances"] = r.instances_checked;
  head["failures"] = r.failures.size();
  out.records.push_back(head);
  for (const auto& e : r.entries) {
    Json rec = to_json(e);
    rec["kind"] = "entry";
    rec["suite"] = r.suite_id;
    rec["ring"] = base.value("ring", "");
    out.records.push_back(rec);
  }
  for (const auto& f : r.failures) {
    Json rec = to_json(f);
    rec["kind"] = "failure";
    rec["suite"] = r.suite_id;
    rec["ring"] = base.value("ring", "");
    out.records.push_back(rec);
  }
  out.table = render_report(r);
  out.exit_code = r.pass() ? kExitOk : kExitViolated;
}

void run_suite_command(const ScenarioConfig& cfg, Context& ctx, ScenarioResult& out) {
  const auto& cls = need_class(ctx);
  if (std::find(suite_ids().begin(), suite_ids().end(), cfg.argument) == suite_ids().end())
    throw Invalid("unknown suite id '" + cfg.argument + "'");
  UniverseSpec u;
  u.ring = ctx.ring;
  u.max_total_multiplicity = cfg.bound.value_or(4);
  const std::size_t max_n = cfg.n.value_or(2);
  const auto r = run_suite(cfg.argument, cls, u, max_n);
  Json base = ctx.base;
  base["bound"] = u.max_total_multiplicity;
  base["n"] = max_n;
  emit_report(r, base, out);
}

void run_reproduce(const ScenarioConfig& cfg, ScenarioResult& out) {
  if (std::find(example_ids().begin(), example_ids().end(), cfg.argument) == example_ids().end())
    throw Invalid("unknown example id '" + cfg.argument + "'");
  const auto r = reproduce(cfg.argument);
  const RingSpec ring = cfg.argument == "example-2.7" || cfg.argument == "example-3.7b" ? RingSpec::integers()
                                                                                        : RingSpec::modular(4);
  emit_report(r, Json{{"ring", ring.to_string()}}, out);
}

void run_list(const ScenarioConfig& cfg, ScenarioResult& out) {
  const std::vector<std::string>* ids = nullptr;
  if (cfg.argument == "suites") ids = &suite_ids();
  if (cfg.argument == "examples") ids = &example_ids();
  if (!ids) throw Invalid("list needs 'suites' or 'examples', got '" + cfg.argument + "'");
  for (const auto& id : *ids) {
    out.records.push_back({{"kind", "id"}, {"topic", cfg.argument}, {"id", id}});
    out.table += id + "\n";
  }
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  ScenarioResult out;
  try {
    Context ctx{cfg.ring.value_or(RingSpec::modular(4)), std::nullopt, Json::object()};
    ctx.base["ring"] = ctx.ring.to_string();
    if (cfg.class_text) {
      ctx.cls = parse_class(ctx.ring, *cfg.class_text);
      ctx.base["class"] = ctx.cls->to_string();
    }
    switch (cfg.command) {
      case Command::None: throw Invalid("no command given");
      case Command::Check:
        ctx.base["check"] = cfg.argument;
        run_check(cfg, ctx, out);
        break;
      case Command::Resolve: run_resolve(cfg, ctx, out); break;
      case Command::Ext: run_ext(cfg, ctx, out); break;
      case Command::Schanuel: run_schanuel(cfg, ctx, out); break;
      case Command::Suite: run_suite_command(cfg, ctx, out); break;
      case Command::Reproduce: run_reproduce(cfg, out); break;
      case Command::List: run_list(cfg, out); break;
    }
  } catch (const Error& e) {
    out = ScenarioResult{};
    out.exit_code = kExitInvalid;
    out.records.push_back({{"kind", "error"}, {"message", e.what()}});
    out.table = std::string("error: ") + e.what() + "\n";
  }
  out.output = cfg.format.value_or(Format::Table) == Format::Records ? emit_records(out.records) : out.table;
  return out;
}

}  // namespace relhom
