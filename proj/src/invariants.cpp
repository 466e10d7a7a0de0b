#include "relhom/invariants.hpp"

#include "relhom/lattice.hpp"

#include <algorithm>
#include <map>

namespace relhom {

namespace {

Morphism precover_for(const PrecoverClass& cls, const ModuleObject& x, ResolutionStrategy strategy) {
  switch (strategy) {
    case ResolutionStrategy::Cover: return build_cover(cls, x).precover;
    case ResolutionStrategy::Evaluation: return build_precover(cls, x).precover;
    case ResolutionStrategy::Padded: return padded_precover(cls, build_cover(cls, x).precover);
  }
  return build_cover(cls, x).precover;
}

std::vector<ModuleObject> involved(const ResolutionComplex& res) {
  std::vector<ModuleObject> out{res.target};
  out.insert(out.end(), res.terms.begin(), res.terms.end());
  return out;
}

GroupMap empty_incoming(const std::vector<Integer>& target_orders) {
  return GroupMap{{}, target_orders, IntMatrix(target_orders.size(), 0)};
}

}  // namespace

std::vector<ExactnessCertificate> certify(const PrecoverClass& cls, const ResolutionComplex& res) {
  std::vector<ExactnessCertificate> out;
  const auto ms = involved(res);
  const auto& d = res.differentials;
  for (const auto& test : test_family(cls, ms)) {
    ExactnessCertificate c{test, {}, false};
    if (d.empty()) {
      c.homology.push_back(GroupValue::of(ModuleObject::from_generator_orders(
          RingSpec::integers(), hom_group(test, res.target).coordinate_orders())));
      out.push_back(std::move(c));
      continue;
    }
    std::vector<GroupMap> post;
    post.reserve(d.size());
    for (const auto& f : d) post.push_back(induced_post(test, f));
    c.homology.push_back(cokernel_value(post[0]));
    for (std::size_t i = 0; i + 1 < d.size(); ++i) c.homology.push_back(homology(post[i + 1], post[i]));
    c.top_injective = kernel_value(post.back()).is_zero();
    out.push_back(std::move(c));
  }
  return out;
}

ResolutionComplex make_complex(const PrecoverClass& cls, const ModuleObject& m, std::vector<Morphism> differentials) {
  ResolutionComplex res{m, {}, std::move(differentials), {}};
  for (const auto& f : res.differentials) res.terms.push_back(f.domain());
  res.certificates = certify(cls, res);
  return res;
}

ResolutionComplex build_resolution(const PrecoverClass& cls, const ModuleObject& m, std::size_t length,
                                   ResolutionStrategy strategy) {
  std::vector<Morphism> d;
  d.push_back(precover_for(cls, m, strategy));
  for (std::size_t i = 1; i <= length; ++i) {
    auto k = kernel(d.back());
    auto c = precover_for(cls, k.module, strategy);
    d.push_back(compose(k.inclusion, c));
  }
  return make_complex(cls, m, std::move(d));
}

bool recheck_resolution(const PrecoverClass& cls, const ResolutionComplex& res) {
  if (res.terms.size() != res.differentials.size() || res.terms.empty()) return false;
  if (!(res.differentials[0].codomain() == res.target)) return false;
  for (std::size_t i = 0; i < res.terms.size(); ++i) {
    const auto& f = res.differentials[i];
    if (!(f.domain() == res.terms[i]) || !contains(cls, res.terms[i])) return false;
    if (i > 0) {
      if (!(f.codomain() == res.terms[i - 1])) return false;
      if (!compose(res.differentials[i - 1], f).is_zero()) return false;
    }
  }
  const auto fresh = certify(cls, res);
  if (fresh.size() != res.certificates.size()) return false;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const auto& a = fresh[i];
    const auto& b = res.certificates[i];
    if (!(a.test == b.test) || a.homology != b.homology || a.top_injective != b.top_injective) return false;
  }
  return res.exact_below_top();
}

GroupValue ext_from_resolution(const ResolutionComplex& res, const ModuleObject& a, std::size_t n) {
  if (res.differentials.size() < n + 2) throw Error("ext_from_resolution: resolution too short for this degree");
  // Hom(F_n, A) -> Hom(F_{n+1}, A) outgoing; Hom(F_{n-1}, A) -> Hom(F_n, A) incoming.
  const GroupMap out = induced_pre(res.differentials[n + 1], a);
  const GroupMap in = n == 0 ? empty_incoming(out.source_orders) : induced_pre(res.differentials[n], a);
  return homology(in, out);
}

GroupValue relative_ext(const PrecoverClass& cls, const ModuleObject& m, const ModuleObject& a, std::size_t n,
                        ResolutionStrategy strategy) {
  if (!(cls.ring() == a.ring())) throw RingMismatch("relative_ext: A over another ring");
  return ext_from_resolution(build_resolution(cls, m, n + 1, strategy), a, n);
}

std::vector<ModuleObject> ext_test_family(const PrecoverClass& cls, const ResolutionComplex& res) {
  const RingSpec& ring = cls.ring();
  std::vector<ModuleObject> out;
  if (ring.is_modular()) {
    for (const auto& pp : factorize(ring.modulus())) {
      Integer q = 1;
      for (unsigned j = 1; j <= pp.exponent; ++j) {
        q *= pp.prime;
        out.push_back(ModuleObject::from_generator_orders(ring, {q}));
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
  // Over Z: primes away from the torsion of the terms and the invariant
  // factors of the differentials see only ranks, which A = Z already sees.
  out.push_back(ModuleObject::regular(ring));
  std::map<Integer, unsigned> exponent;
  auto note = [&](const Integer& d) {
    if (d == 0 || d == 1) return;
    for (const auto& pp : factorize(d)) exponent[pp.prime] = std::max(exponent[pp.prime], pp.exponent);
  };
  for (const auto& m : involved(res))
    for (const auto& d : m.torsion_orders()) note(d);
  for (const auto& f : res.differentials)
    for (const auto& d : smith_normal_form(f.matrix()).diagonal()) note(d);
  for (const auto& [p, e] : exponent) {
    Integer q = 1;
    for (unsigned j = 1; j <= e + 1; ++j) {
      q *= p;
      out.push_back(ModuleObject::from_generator_orders(ring, {q}));
    }
  }
  return out;
}

ModuleObject schanuel_step(const PrecoverClass& cls, const ModuleObject& m) {
  return kernel(build_cover(cls, m).precover).module;
}

std::optional<EquivalenceWitness> equivalent(const PrecoverClass& cls, const ModuleObject& k, const ModuleObject& k2) {
  if (!(k.ring() == cls.ring()) || !(k2.ring() == cls.ring())) throw RingMismatch("equivalent: modules over another ring");
  const RingSpec& ring = cls.ring();
  const char* note = "K + mult(F') = K' + mult(F)";
  auto support_part = [&](const ModuleObject& x) {
    Multiplicities in;
    for (const auto& [t, n] : x.multiplicities())
      if (std::find(cls.support().begin(), cls.support().end(), t) != cls.support().end()) in[t] = n;
    return ModuleObject::from_multiplicities(ring, in);
  };
  auto outside_equal = [&]() {
    std::set<Integer> types;
    for (const auto& [t, n] : k.multiplicities()) types.insert(t);
    for (const auto& [t, n] : k2.multiplicities()) types.insert(t);
    for (const auto& t : types) {
      if (std::find(cls.support().begin(), cls.support().end(), t) != cls.support().end()) continue;
      if (k.multiplicity(t) != k2.multiplicity(t)) return false;
    }
    return true;
  };

  switch (cls.kind()) {
    case PrecoverClass::Kind::TorsionOverZ: {
      if (k.free_rank() != k2.free_rank()) return std::nullopt;
      return EquivalenceWitness{ModuleObject(ring, 0, k.torsion_orders()), ModuleObject(ring, 0, k2.torsion_orders()),
                                note};
    }
    case PrecoverClass::Kind::AddClosure:
      if (!outside_equal()) return std::nullopt;
      return EquivalenceWitness{support_part(k), support_part(k2), note};
    case PrecoverClass::Kind::Powers: {
      const auto dmult = cls.generator().multiplicities();
      if (!outside_equal()) return std::nullopt;
      if (dmult.empty()) return EquivalenceWitness{ModuleObject::zero(ring), ModuleObject::zero(ring), note};
      // mult(K) - mult(K') = t * mult(D)
      std::optional<long long> t;
      for (const auto& [type, d] : dmult) {
        const long long diff = static_cast<long long>(k.multiplicity(type)) - static_cast<long long>(k2.multiplicity(type));
        if (diff % static_cast<long long>(d) != 0) return std::nullopt;
        const long long q = diff / static_cast<long long>(d);
        if (t && *t != q) return std::nullopt;
        t = q;
      }
      std::vector<ModuleObject> f(static_cast<std::size_t>(std::max(*t, 0LL)), cls.generator());
      std::vector<ModuleObject> fp(static_cast<std::size_t>(std::max(-*t, 0LL)), cls.generator());
      auto sum = [&](const std::vector<ModuleObject>& xs) {
        return xs.empty() ? ModuleObject::zero(ring) : direct_sum(xs);
      };
      return EquivalenceWitness{sum(f), sum(fp), note};
    }
    case PrecoverClass::Kind::MultiplicityConstrained: {
      if (!outside_equal()) return std::nullopt;
      Multiplicities f, fp;
      for (const auto& type : cls.support()) {
        const long long delta = static_cast<long long>(k.multiplicity(type)) - static_cast<long long>(k2.multiplicity(type));
        const auto& s = cls.allowed(type);
        // Smallest f' in S with f' + delta in S; exists because S is cofinite.
        for (long long x = 0;; ++x) {
          if (x + delta < 0 || !s.contains(static_cast<std::size_t>(x)) ||
              !s.contains(static_cast<std::size_t>(x + delta)))
            continue;
          fp[type] = static_cast<std::size_t>(x);
          f[type] = static_cast<std::size_t>(x + delta);
          break;
        }
      }
      return EquivalenceWitness{ModuleObject::from_multiplicities(ring, f), ModuleObject::from_multiplicities(ring, fp),
                                note};
    }
  }
  return std::nullopt;
}

bool verify_equivalence(const PrecoverClass& cls, const ModuleObject& k, const ModuleObject& k2,
                        const EquivalenceWitness& w) {
  if (!contains(cls, w.f) || !contains(cls, w.f_prime)) return false;
  return direct_sum(std::vector<ModuleObject>{k, w.f_prime}) == direct_sum(std::vector<ModuleObject>{k2, w.f});
}

Verdict check_E(const PrecoverClass& cls, const ModuleObject& m, std::size_t n) {
  const auto res = build_resolution(cls, m, n + 2);
  for (const auto& a : ext_test_family(cls, res)) {
    auto e = ext_from_resolution(res, a, n + 1);
    if (!e.is_zero()) {
      Witness w;
      w.modules.emplace_back("A", a);
      w.groups.emplace_back("Ext^" + std::to_string(n + 1), e);
      return Verdict::no("Ext^" + std::to_string(n + 1) + "_F(M, A) = " + e.to_string() + " for A = " + a.to_string(),
                         std::move(w));
    }
  }
  Witness w;
  w.resolution = res;
  return Verdict::yes("Ext^" + std::to_string(n + 1) +
                          "_F(M, A) = 0 for every cyclic test A; Ext commutes with finite sums in A",
                      std::move(w));
}

namespace {

constexpr long long kSearchCap = 1LL << 22;

// Complete n = 0 search: a member F_0 and d : F_0 -> M with every Hom(I, d)
// bijective.
Verdict search_length_zero(const PrecoverClass& cls, const ModuleObject& m) {
  const RingSpec& ring = cls.ring();
  std::vector<ModuleObject> candidates;
  if (cls.kind() == PrecoverClass::Kind::TorsionOverZ) {
    // Hom(Z/p^j, F_0) = Hom(Z/p^j, M) for all p, j pins F_0 down to T(M).
    candidates.push_back(ModuleObject(ring, 0, m.torsion_orders()));
  } else {
    const auto tests = test_family(cls, std::span<const ModuleObject>{});
    std::vector<GroupValue> want;
    std::vector<std::size_t> bound;
    for (const auto& t : tests) {
      auto h = hom_group(t, m).value();
      auto card = h.cardinality();
      if (!card) return Verdict::unknown("length-0 search space is infinite");
      std::size_t b = 0;
      for (Integer c = *card; c > 1; c /= 2) ++b;
      want.push_back(std::move(h));
      bound.push_back(b);
    }
    std::vector<std::size_t> mult(tests.size(), 0);
    for (;;) {
      Multiplicities mm;
      for (std::size_t i = 0; i < tests.size(); ++i)
        if (mult[i]) mm[cls.support()[i]] = mult[i];
      auto f = ModuleObject::from_multiplicities(ring, mm);
      if (contains(cls, f)) {
        bool match = true;
        for (std::size_t i = 0; i < tests.size() && match; ++i) match = hom_group(tests[i], f).value() == want[i];
        if (match) candidates.push_back(std::move(f));
      }
      std::size_t i = 0;
      while (i < mult.size() && ++mult[i] > bound[i]) mult[i++] = 0;
      if (i == mult.size()) break;
    }
  }

  long long tried = 0;
  for (const auto& f : candidates) {
    const HomGroup h(f, m);
    auto card = h.cardinality();
    if (!card) return Verdict::unknown("length-0 search space is infinite");
    if (*card > kSearchCap) return Verdict::unknown("length-0 search exceeds the enumeration cap");
    const auto orders = h.coordinate_orders();
    std::vector<ModuleObject> ms{f, m};
    const auto tests = test_family(cls, ms);
    std::vector<Integer> c(orders.size(), 0);
    for (;;) {
      ++tried;
      const Morphism d = h.element(c);
      bool ok = true;
      for (const auto& t : tests) {
        auto post = induced_post(t, d);
        if (!kernel_value(post).is_zero() || !cokernel_value(post).is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        Witness w;
        w.resolution = make_complex(cls, m, {d});
        return Verdict::yes("length-0 resolution found by exhaustive search", std::move(w));
      }
      std::size_t j = 0;
      while (j < c.size() && ++c[j] == orders[j]) c[j++] = 0;
      if (j == c.size()) break;
    }
  }
  Witness w;
  w.modules.emplace_back("M", m);
  return Verdict::no("no member F_0 and map F_0 -> M is Hom-exact (" + std::to_string(candidates.size()) +
                         " candidate modules, " + std::to_string(tried) + " maps)",
                     std::move(w));
}

}  // namespace

Verdict check_R(const PrecoverClass& cls, const ModuleObject& m, std::size_t n) {
  auto res = build_resolution(cls, m, n);
  if (res.exact()) {
    Witness w;
    w.resolution = std::move(res);
    return Verdict::yes("cover resolution stops: Hom(I, d_" + std::to_string(n) + ") is injective for every test I",
                        std::move(w));
  }
  auto e = check_E(cls, m, n);
  if (e.is_no()) return Verdict::no("(E) fails and (R) implies (E): " + e.reason, std::move(e.witness));
  if (n == 0) return search_length_zero(cls, m);
  return Verdict::unknown("greedy resolution inconclusive");
}

Verdict check_S(const PrecoverClass& cls, const ModuleObject& m, std::size_t n) {
  ModuleObject k = m;
  for (std::size_t i = 0; i < n; ++i) k = schanuel_step(cls, k);
  const auto zero = ModuleObject::zero(cls.ring());
  Witness w;
  w.modules.emplace_back(n == 0 ? "M" : "S^" + std::to_string(n) + "(M)", k);
  if (auto eq = equivalent(cls, k, zero)) {
    w.equivalence = std::move(*eq);
    return Verdict::yes("S^" + std::to_string(n) + "[M] = [0]", std::move(w));
  }
  return Verdict::no("S^" + std::to_string(n) + "[M] is not the class of 0", std::move(w));
}

}  // namespace relhom
