#include "relhom/lab.hpp"

#include "relhom/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace relhom {

// ---- universe --------------------------------------------------------------

std::vector<Integer> UniverseSpec::effective_support() const {
  std::vector<Integer> out = support;
  if (out.empty()) {
    if (ring.is_integers()) {
      out = {2, 4, 3, 0};
    } else {
      for (const auto& pp : factorize(ring.modulus())) {
        Integer q = 1;
        for (unsigned j = 1; j <= pp.exponent; ++j) out.push_back(q *= pp.prime);
      }
    }
  }
  for (const auto& t : out) {
    if (t == 0 ? !ring.is_integers() : !is_prime_power(t))
      throw Error("universe type " + relhom::to_string(t) + " is not indecomposable over " + ring.to_string());
    if (t != 0 && ring.is_modular() && ring.modulus() % t != 0)
      throw Error("order " + relhom::to_string(t) + " does not divide " + relhom::to_string(ring.modulus()));
  }
  std::sort(out.begin(), out.end(), [](const Integer& a, const Integer& b) {
    if ((a == 0) != (b == 0)) return b == 0;
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ModuleObject> enumerate_modules(const UniverseSpec& u) {
  const auto types = u.effective_support();
  std::vector<ModuleObject> out;
  std::vector<std::size_t> mult(types.size(), 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == types.size()) {
      if (types[pos] == 0 && left > u.max_free_rank) return;
      mult[pos] = left;
      Multiplicities m;
      for (std::size_t i = 0; i < types.size(); ++i)
        if (mult[i]) m[types[i]] = mult[i];
      out.push_back(ModuleObject::from_multiplicities(u.ring, m));
      return;
    }
    std::size_t top = left;
    if (types[pos] == 0) top = std::min(top, u.max_free_rank);
    for (std::size_t c = top + 1; c-- > 0;) {
      mult[pos] = c;
      fill(pos + 1, left - c);
    }
  };
  if (types.empty()) return {ModuleObject::zero(u.ring)};
  for (std::size_t total = 0; total <= u.max_total_multiplicity; ++total) fill(0, total);
  return out;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"prop-2.1",
                                            "lemma-2.5",
                                            "lemma-2.8",
                                            "thm-2.10",
                                            "thm-3.4",
                                            "lemma-3.6",
                                            "thm-3.8",
                                            "schanuel-well-defined",
                                            "ext-resolution-independence",
                                            "dimension-shifting"};
  return ids;
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids{"prop-2.9", "example-2.2-finite", "lemma-2.4-witness", "example-2.7",
                                            "example-3.7b"};
  return ids;
}

namespace {

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

std::string at(const ModuleObject& m, std::size_t n) { return "M=" + m.to_string() + " n=" + std::to_string(n); }

Witness module_witness(const std::string& name, const ModuleObject& m) {
  Witness w;
  w.modules.emplace_back(name, m);
  return w;
}

Witness morphism_witness(const std::string& name, const Morphism& f) {
  Witness w;
  w.morphisms.emplace_back(name, f);
  return w;
}

class Run {
 public:
  Run(std::string id, const PrecoverClass& cls) : cls_(cls) { report_.suite_id = std::move(id); }

  void expect(const std::string& instance, const std::string& expected, const std::string& got,
              std::optional<Witness> w = std::nullopt) {
    ++report_.instances_checked;
    if (expected != got) report_.failures.push_back({instance, expected, got, std::move(w)});
  }
  void expect(const std::string& instance, bool ok, const std::string& claim, std::optional<Witness> w = std::nullopt) {
    expect(instance, claim, ok ? claim : "not " + claim, std::move(w));
  }
  void note(const std::string& instance, const std::string& expected, const std::string& got,
            std::optional<Witness> w = std::nullopt) {
    report_.entries.push_back({instance, expected, got, std::move(w)});
  }
  // A checked fact that also belongs in the report body.
  void show(const std::string& instance, const std::string& expected, const std::string& got,
            std::optional<Witness> w = std::nullopt) {
    expect(instance, expected, got, w);
    note(instance, expected, got, std::move(w));
  }

  const Verdict& E(const ModuleObject& m, std::size_t n) { return memo(e_, m, n, check_E); }
  const Verdict& S(const ModuleObject& m, std::size_t n) { return memo(s_, m, n, check_S); }
  const Verdict& R(const ModuleObject& m, std::size_t n) {
    const Verdict& r = memo(r_, m, n, check_R);
    // (R) implies (E) everywhere, whatever the suite.
    if (r.is_yes()) {
      const Verdict& e = E(m, n);
      if (e.is_no()) report_.failures.push_back({at(m, n) + " R=>E", "E Yes", "E No", e.witness});
    }
    return r;
  }

  const PrecoverClass& cls() const { return cls_; }
  SuiteReport take() { return std::move(report_); }

 private:
  using Memo = std::map<std::pair<std::string, std::size_t>, Verdict>;
  const Verdict& memo(Memo& table, const ModuleObject& m, std::size_t n,
                      Verdict (*fn)(const PrecoverClass&, const ModuleObject&, std::size_t)) {
    const auto key = std::make_pair(m.serialize(), n);
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, fn(cls_, m, n)).first;
    return it->second;
  }

  const PrecoverClass& cls_;
  SuiteReport report_;
  Memo e_, r_, s_;
};

// Calls visit(g) for every endomorphism g of codomain(phi) with g phi = phi.
// Returns false without visiting when there are more than cap of them.
bool for_each_fixing(const Morphism& phi, long long cap, const std::function<bool(const Morphism&)>& visit) {
  const ModuleObject& m = phi.codomain();
  const HomGroup end(m, m);
  const GroupKernel k = group_kernel(induced_pre(phi, m));
  if (k.group.free_rank() > 0 || *k.group.cardinality() > cap) return false;
  const auto id = end.coordinates(Morphism::identity(m));
  const auto coord_orders = end.coordinate_orders();
  const auto orders = k.group.generator_orders();
  std::vector<Integer> c(orders.size(), 0);
  for (;;) {
    std::vector<Integer> x = id;
    for (std::size_t r = 0; r < x.size(); ++r)
      for (std::size_t j = 0; j < c.size(); ++j) x[r] += k.embedding(r, j) * c[j];
    if (!visit(end.element(reduce_vector(std::move(x), coord_orders)))) return true;
    std::size_t j = 0;
    while (j < c.size() && ++c[j] == orders[j]) c[j++] = 0;
    if (j == c.size()) return true;
  }
}

bool has_left_inverse(const Morphism& g) {
  const HomGroup end(g.domain(), g.domain());
  return solve(induced_pre(g, g.domain()), end.coordinates(Morphism::identity(g.domain()))).has_value();
}

// ---- suites ----------------------------------------------------------------

void prop_2_1(Run& run, const std::vector<ModuleObject>& u, std::size_t max_n) {
  for (const auto& m : u)
    for (std::size_t n = 0; n <= max_n; ++n) {
      const Verdict& r = run.R(m, n);
      const Verdict& e = run.E(m, n);
      const bool ok = !r.is_yes() || e.is_yes();
      run.expect(at(m, n), ok, "R implies E", ok ? std::nullopt : e.witness);
    }
}

void lemma_2_5(Run& run, const std::vector<ModuleObject>& u) {
  constexpr long long kCap = 1 << 12;
  std::size_t skipped = 0;
  for (const auto& m : u) {
    const auto cover = build_cover(run.cls(), m).precover;
    const std::vector<std::pair<std::string, Morphism>> maps{
        {"cover", cover}, {"zero", Morphism::zero(ModuleObject::zero(m.ring()), m)}, {"identity", Morphism::identity(m)}};
    for (const auto& [name, phi] : maps) {
      bool all_auto = true, all_left = true;
      std::optional<Morphism> split;
      const bool done = for_each_fixing(phi, kCap, [&](const Morphism& g) {
        const bool a = is_iso(g), b = has_left_inverse(g);
        all_auto = all_auto && a;
        all_left = all_left && b;
        if (a != b && !split) split = g;
        return true;
      });
      if (!done) {
        ++skipped;
        continue;
      }
      const std::string inst = "M=" + m.to_string() + " phi=" + name;
      run.expect(inst, all_auto == all_left, "(a) iff (b)", morphism_witness("phi", phi));
      run.expect(inst + " g", !split.has_value(), "each solution: automorphism iff left invertible",
                 split ? std::optional(morphism_witness("g", *split)) : std::nullopt);
      const Verdict v = is_almost_epi(phi);
      run.expect(inst + " is_almost_epi", yes_no(all_auto), to_string(v.status), v.witness);
    }
  }
  if (skipped) run.note("solution cosets above " + std::to_string(kCap), "enumerated", std::to_string(skipped) + " skipped");
}

void lemma_2_8(Run& run, const std::vector<ModuleObject>& u) {
  for (const auto& m : u) {
    const auto cover = build_cover(run.cls(), m).precover;
    const auto eval = build_precover(run.cls(), m).precover;
    const auto pad = padded_precover(run.cls(), cover);
    const std::vector<std::pair<std::string, Morphism>> precovers{{"cover", cover}, {"evaluation", eval}, {"padded", pad}};
    std::vector<Status> st;
    for (const auto& [name, phi] : precovers) st.push_back(is_almost_epi(phi).status);
    if (contains(run.cls(), m)) st.push_back(is_almost_epi(Morphism::identity(m)).status);  // id is always almost epi
    const bool some = std::find(st.begin(), st.end(), Status::Yes) != st.end();
    for (std::size_t i = 0; i < precovers.size(); ++i) {
      const std::string got = to_string(st[i]);
      run.expect("M=" + m.to_string() + " " + precovers[i].first, !some || got == "Yes", "almost epi when any is",
                 morphism_witness(precovers[i].first, precovers[i].second));
    }
  }
}

void thm_2_10(Run& run, const std::vector<ModuleObject>& u, std::size_t max_n) {
  const Verdict closed = class_closed_under_summands(run.cls());
  run.note("closed under summands", "", to_string(closed.status), closed.witness);
  bool almost = true;
  for (const auto& m : u) {
    const auto cover = build_cover(run.cls(), m).precover;
    const Verdict v = is_almost_epi(cover);
    if (!v.is_yes()) {
      almost = false;
      Witness w = morphism_witness("cover", cover);
      if (v.witness)
        for (const auto& g : v.witness->morphisms) w.morphisms.push_back(g);
      run.note("precovering by almost epis", "Yes", to_string(v.status) + " at M=" + m.to_string(), w);
      break;
    }
  }
  const bool hypothesis = closed.is_yes() && almost;
  if (almost) run.note("precovering by almost epis", "", "Yes");
  for (const auto& m : u)
    for (std::size_t n = 0; n <= max_n; ++n) {
      const Verdict& e = run.E(m, n);
      const Verdict& r = run.R(m, n);
      if (hypothesis) {
        run.expect(at(m, n), to_string(e.status), to_string(r.status), r.witness);
      } else if (e.is_yes() && r.is_no()) {
        run.note(at(m, n), "E Yes", "R No", r.witness);
      }
    }
}

void thm_3_4(Run& run, const std::vector<ModuleObject>& u, std::size_t max_n) {
  const Verdict weak = class_weakly_closed(run.cls());
  run.note("weakly closed under summands", "", to_string(weak.status), weak.witness);
  if (weak.is_yes()) {
    for (const auto& m : u)
      for (std::size_t n = 0; n <= max_n; ++n) {
        const Verdict& s = run.S(m, n);
        if (!s.is_yes()) continue;
        const Verdict& r = run.R(m, n);
        run.expect(at(m, n) + " S=>R", "Yes", to_string(r.status), s.witness);
      }
    return;
  }
  if (!weak.is_no() || !weak.witness) return;
  // M (+) F/M = F: M is S-equivalent to 0 but has no length-0 resolution.
  const auto& m = weak.witness->modules.front().second;
  const Verdict& s = run.S(m, 0);
  const Verdict& r = run.R(m, 0);
  run.show(at(m, 0) + " S", "Yes", to_string(s.status), s.witness);
  run.show(at(m, 0) + " R", "No", to_string(r.status), r.witness);
}

void lemma_3_6(Run& run, const std::vector<ModuleObject>& u) {
  const Verdict mono = mono_precovers_are_iso(run.cls(), u);
  const Verdict sep = is_separating(run.cls(), u);
  run.note("mono precovers are isomorphisms", "", to_string(mono.status), mono.witness);
  run.note("separating", "", to_string(sep.status), sep.witness);
  if (mono.is_yes()) run.expect("(a)", "Yes", to_string(sep.status), sep.witness);
  if (!sep.is_yes()) return;
  // (b) on every map between small universe modules.
  constexpr long long kCap = 1 << 12;
  std::vector<ModuleObject> small;
  for (const auto& m : u)
    if (m.generator_count() <= 2) small.push_back(m);
  for (const auto& a : small)
    for (const auto& b : small) {
      const HomGroup h(a, b);
      const auto size = h.cardinality();
      if (!size || *size > kCap) continue;
      const std::vector<ModuleObject> pair{a, b};
      const auto tests = test_family(run.cls(), pair);
      const auto orders = h.coordinate_orders();
      std::vector<Integer> c(orders.size(), 0);
      for (;;) {
        const Morphism d = h.element(c);
        bool hom_mono = true;
        for (const auto& t : tests) hom_mono = hom_mono && kernel_value(induced_post(t, d)).is_zero();
        if (hom_mono) run.expect("d: " + a.to_string() + " -> " + b.to_string(), is_mono(d), "mono", morphism_witness("d", d));
        std::size_t j = 0;
        while (j < c.size() && ++c[j] == orders[j]) c[j++] = 0;
        if (j == c.size()) break;
      }
    }
}

void thm_3_8(Run& run, const std::vector<ModuleObject>& u, std::size_t max_n) {
  const Verdict mono = mono_precovers_are_iso(run.cls(), u);
  run.note("mono precovers are isomorphisms", "", to_string(mono.status), mono.witness);
  if (mono.is_yes()) {
    for (const auto& m : u)
      for (std::size_t n = 0; n <= max_n; ++n) {
        const Verdict& r = run.R(m, n);
        if (!r.is_yes()) continue;
        const Verdict& s = run.S(m, n);
        run.expect(at(m, n) + " R=>S", "Yes", to_string(s.status), r.witness);
      }
    return;
  }
  if (!mono.is_no() || !mono.witness) return;
  // 0 -> F -> M -> 0 resolves M, yet M is not equivalent to 0.
  const auto& m = mono.witness->modules.front().second;
  const Verdict& r = run.R(m, 0);
  const Verdict& s = run.S(m, 0);
  run.show(at(m, 0) + " R", "Yes", to_string(r.status), r.witness);
  run.show(at(m, 0) + " S", "No", to_string(s.status), s.witness);
}

void schanuel_well_defined(Run& run, const std::vector<ModuleObject>& u) {
  for (const auto& m : u) {
    const auto cover = build_cover(run.cls(), m).precover;
    const std::vector<std::pair<std::string, Morphism>> precovers{
        {"cover", cover},
        {"evaluation", build_precover(run.cls(), m).precover},
        {"padded", padded_precover(run.cls(), cover)}};
    const auto base = kernel(cover).module;
    for (std::size_t i = 1; i < precovers.size(); ++i) {
      const auto other = kernel(precovers[i].second).module;
      const auto w = equivalent(run.cls(), base, other);
      Witness wit;
      wit.modules = {{"K", base}, {"K'", other}};
      wit.equivalence = w;
      run.expect("M=" + m.to_string() + " cover vs " + precovers[i].first,
                 w && verify_equivalence(run.cls(), base, other, *w), "equivalent kernels", wit);
    }
  }
}

std::vector<ModuleObject> coefficient_modules(const std::vector<ModuleObject>& u) {
  std::vector<ModuleObject> out;
  for (const auto& a : u)
    if (!a.is_zero() && a.generator_count() <= 2) out.push_back(a);
  return out;
}

void ext_independence(Run& run, const std::vector<ModuleObject>& u, std::size_t max_n) {
  const auto coeffs = coefficient_modules(u);
  for (const auto& m : u) {
    const auto cover = build_resolution(run.cls(), m, max_n + 1, ResolutionStrategy::Cover);
    const auto pad = build_resolution(run.cls(), m, max_n + 1, ResolutionStrategy::Padded);
    const auto eval = build_resolution(run.cls(), m, 1, ResolutionStrategy::Evaluation);
    run.expect("M=" + m.to_string() + " resolutions", recheck_resolution(run.cls(), cover) &&
                                                           recheck_resolution(run.cls(), pad) &&
                                                           recheck_resolution(run.cls(), eval),
               "re-verified");
    for (const auto& a : coeffs)
      for (std::size_t n = 0; n <= max_n; ++n) {
        const auto base = ext_from_resolution(cover, a, n);
        const std::string inst = "M=" + m.to_string() + " A=" + a.to_string() + " n=" + std::to_string(n);
        run.expect(inst + " padded", base.to_string(), ext_from_resolution(pad, a, n).to_string());
        if (n == 0) run.expect(inst + " evaluation", base.to_string(), ext_from_resolution(eval, a, 0).to_string());
      }
  }
}

void dimension_shifting(Run& run, const std::vector<ModuleObject>& u, std::size_t max_n) {
  const auto coeffs = coefficient_modules(u);
  for (const auto& m : u) {
    const auto k = schanuel_step(run.cls(), m);
    const auto res_m = build_resolution(run.cls(), m, max_n + 1);
    const auto res_k = build_resolution(run.cls(), k, max_n);
    for (const auto& a : coeffs)
      for (std::size_t n = 1; n < max_n; ++n)
        run.expect("M=" + m.to_string() + " A=" + a.to_string() + " n=" + std::to_string(n),
                   ext_from_resolution(res_m, a, n + 1).to_string(), ext_from_resolution(res_k, a, n).to_string());
  }
}

// ---- reproductions -------------------------------------------------------

const RingSpec z4 = RingSpec::modular(4);

ModuleObject z4_module(std::size_t i, std::size_t j) {
  return ModuleObject::from_multiplicities(z4, {{Integer(2), i}, {Integer(4), j}});
}

SuiteReport prop_2_9() {
  const auto k = z4_module(1, 0), r = z4_module(0, 1);
  const auto cls = PrecoverClass::add_closure(k);
  Run run("prop-2.9", cls);

  const Morphism phi1(k, r, IntMatrix{{2}});
  const auto check = verify_precover(cls, phi1);
  Witness w = morphism_witness("phi_1", phi1);
  run.show("phi_1 precover", "Yes", yes_no(check.ok), w);
  run.show("phi_1 mono", "Yes", yes_no(is_mono(phi1)), w);
  run.show("phi_1 epi", "No", yes_no(is_epi(phi1)), w);
  const Verdict ae = is_almost_epi(phi1);
  run.show("phi_1 almost-epi", "Yes", to_string(ae.status), w);
  auto lower = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  run.note("phi_1", "mono: yes, epi: no, almost-epi: yes",
           "mono: " + lower(is_mono(phi1)) + ", epi: " + lower(is_epi(phi1)) + ", almost-epi: " + lower(ae.is_yes()), w);
  run.show("R has an epi precover", "No", yes_no(has_epi_precover(cls, r)), module_witness("M", r));

  // Every quotient of R^3 by a cyclic subgroup is again k^a (+) R^b.
  {
    bool ok = true;
    std::vector<Integer> v(3, 0);
    for (int code = 0; code < 64; ++code) {
      for (int t = 0, c = code; t < 3; ++t, c /= 4) v[t] = c % 4;
      IntMatrix rel(1, 3);
      for (std::size_t t = 0; t < 3; ++t) rel(0, t) = v[t];
      const auto q = decompose(z4, rel, 3);
      for (const auto& [t, n] : q.multiplicities()) ok = ok && (t == 2 || t == 4);
      Integer g = 4;
      for (const auto& x : v) g = gcd(g, x);
      ok = ok && *q.cardinality() * (4 / g) == 64;
    }
    run.show("cyclic quotients of R^3 decompose into k and R", "Yes", yes_no(ok));
  }

  for (std::size_t total = 0; total <= 3; ++total)
    for (std::size_t j = 0; j <= total; ++j) {
      const std::size_t i = total - j;
      const auto m = z4_module(i, j);
      const auto f = z4_module(i + j, 0);
      // Codomain generators: R^j first, then k^i. Domain columns 0..j-1 go
      // to R through phi_1, the rest are the identity on k^i.
      IntMatrix a(i + j, i + j);
      for (std::size_t c = 0; c < j; ++c) a(c, c) = 2;
      for (std::size_t c = j; c < i + j; ++c) a(c, c) = 1;
      const Morphism phi(f, m, a);
      const std::string inst = "k^" + std::to_string(i) + "+R^" + std::to_string(j);
      const Witness pw = morphism_witness("phi", phi);
      run.expect(inst + " block precover", verify_precover(cls, phi).ok, "precover", pw);

      std::size_t count = 0;
      std::optional<Morphism> bad, bad_block;
      for_each_fixing(phi, 1 << 20, [&](const Morphism& g) {
        ++count;
        if (!is_iso(g) && !bad) bad = g;
        IntMatrix g22(j, j), sq(j, j);
        bool shape = true;
        for (std::size_t x = 0; x < i + j; ++x)
          for (std::size_t y = 0; y < i + j; ++y) {
            const Integer& e = g.matrix()(x, y);
            if (x >= j && y >= j) shape = shape && e == (x == y ? 1 : 0);  // g_11 = id
            if (x < j && y >= j) shape = shape && e == 0;                  // g_21 = 0
            if (x < j && y < j) g22(x, y) = e;
          }
        for (std::size_t x = 0; x < j; ++x)
          for (std::size_t y = 0; y < j; ++y) {
            Integer s = 0;
            for (std::size_t t = 0; t < j; ++t) s += g22(x, t) * g22(t, y);
            shape = shape && reduce(s, 4) == (x == y ? 1 : 0);
          }
        if (!shape && !bad_block) bad_block = g;
        return true;
      });
      const std::size_t expected = std::size_t{1} << (i * j + j * j);
      run.show(inst + " solutions of g phi = phi", std::to_string(expected), std::to_string(count), pw);
      run.expect(inst + " almost epi", !bad, "every solution an automorphism",
                 bad ? std::optional(morphism_witness("g", *bad)) : std::nullopt);
      run.expect(inst + " block form", !bad_block, "g_11 = id, g_21 = 0, g_22 g_22 = id",
                 bad_block ? std::optional(morphism_witness("g", *bad_block)) : std::nullopt);
    }
  return run.take();
}

SuiteReport example_2_2() {
  const auto d = z4_module(1, 1);
  const auto cls = PrecoverClass::powers(d);
  Run run("example-2.2-finite", cls);
  const Verdict closed = class_closed_under_summands(cls);
  run.show("closed under summands", "No", to_string(closed.status), closed.witness);
  UniverseSpec u;
  u.max_total_multiplicity = 3;
  bool all = true;
  for (const auto& m : enumerate_modules(u)) {
    const auto cover = build_cover(cls, m).precover;
    const bool ok = contains(cls, cover.domain()) && verify_precover(cls, cover).ok;
    all = all && ok;
    run.expect("M=" + m.to_string() + " cover", ok, "verified precover", morphism_witness("cover", cover));
  }
  run.note("precovering on the Z/4 universe, bound 3", "Yes", yes_no(all));
  return run.take();
}

SuiteReport lemma_2_4() {
  const auto cls = PrecoverClass::powers(z4_module(1, 1));
  Run run("lemma-2.4-witness", cls);
  const auto k = z4_module(1, 0);
  const Verdict& e = run.E(k, 0);
  const Verdict& r = run.R(k, 0);
  run.show(at(k, 0) + " E", "Yes", to_string(e.status), e.witness);
  run.show(at(k, 0) + " R", "No", to_string(r.status), r.witness);
  return run.take();
}

SuiteReport example_2_7() {
  const auto z = ModuleObject(RingSpec::integers(), 1, {});
  const auto cls = PrecoverClass::add_closure(z);
  Run run("example-2.7", cls);
  const Morphism two(z, z, IntMatrix{{2}});
  const Witness w = morphism_witness("2", two);
  const Verdict v = is_almost_epi(two);
  run.show("2: Z -> Z almost epi", "Yes", to_string(v.status), w);
  run.show("2: Z -> Z epi", "No", yes_no(is_epi(two)), w);
  std::size_t count = 0;
  const bool finite = for_each_fixing(two, 16, [&](const Morphism&) {
    ++count;
    return true;
  });
  run.show("solutions of 2g = 2", "1", finite ? std::to_string(count) : "infinite", w);
  return run.take();
}

SuiteReport example_3_7b() {
  const auto cls = PrecoverClass::torsion_over_z();
  Run run("example-3.7b", cls);
  const auto z = ModuleObject(RingSpec::integers(), 1, {});
  const auto cover = build_cover(cls, z).precover;
  const Witness w = morphism_witness("precover", cover);
  run.show("precover domain", "0", cover.domain().to_string(), w);
  run.show("precover mono", "Yes", yes_no(is_mono(cover)), w);
  run.show("precover iso", "No", yes_no(is_iso(cover)), w);
  const Verdict& r = run.R(z, 0);
  run.show(at(z, 0) + " R", "Yes", to_string(r.status), r.witness);
  bool zero_terms = r.witness && r.witness->resolution;
  if (zero_terms)
    for (const auto& t : r.witness->resolution->terms) zero_terms = zero_terms && t.is_zero();
  run.show("resolution terms", "all zero", zero_terms ? "all zero" : "not all zero", r.witness);
  const Verdict& s = run.S(z, 0);
  run.show(at(z, 0) + " S", "No", to_string(s.status), s.witness);
  return run.take();
}

}  // namespace

SuiteReport run_suite(const std::string& suite_id, const PrecoverClass& cls, const UniverseSpec& u, std::size_t max_n) {
  if (std::find(suite_ids().begin(), suite_ids().end(), suite_id) == suite_ids().end())
    throw Error("unknown suite id '" + suite_id + "'");
  if (!(u.ring == cls.ring()))
    throw RingMismatch("run_suite: class over " + cls.ring().to_string() + ", universe over " + u.ring.to_string());
  const auto modules = enumerate_modules(u);
  Run run(suite_id, cls);
  if (suite_id == "prop-2.1") prop_2_1(run, modules, max_n);
  if (suite_id == "lemma-2.5") lemma_2_5(run, modules);
  if (suite_id == "lemma-2.8") lemma_2_8(run, modules);
  if (suite_id == "thm-2.10") thm_2_10(run, modules, max_n);
  if (suite_id == "thm-3.4") thm_3_4(run, modules, max_n);
  if (suite_id == "lemma-3.6") lemma_3_6(run, modules);
  if (suite_id == "thm-3.8") thm_3_8(run, modules, max_n);
  if (suite_id == "schanuel-well-defined") schanuel_well_defined(run, modules);
  if (suite_id == "ext-resolution-independence") ext_independence(run, modules, max_n);
  if (suite_id == "dimension-shifting") dimension_shifting(run, modules, max_n);
  return run.take();
}

SuiteReport reproduce(const std::string& example_id) {
  if (example_id == "prop-2.9") return prop_2_9();
  if (example_id == "example-2.2-finite") return example_2_2();
  if (example_id == "lemma-2.4-witness") return lemma_2_4();
  if (example_id == "example-2.7") return example_2_7();
  if (example_id == "example-3.7b") return example_3_7b();
  throw Error("unknown example id '" + example_id + "'");
}

}  // namespace relhom
