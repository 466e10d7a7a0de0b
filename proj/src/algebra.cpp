#include "relhom/algebra.hpp"

#include "relhom/lattice.hpp"

namespace relhom {

namespace {

void require_same_ring(const RingSpec& a, const RingSpec& b, const char* what) {
  if (!(a == b)) throw RingMismatch(std::string(what) + ": modules over " + a.to_string() + " and " + b.to_string());
}

IntMatrix negate(IntMatrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
  return m;
}

// {x : A x in span(D_target)} as generating columns in source coordinates.
IntMatrix kernel_lattice(const IntMatrix& a, const std::vector<Integer>& target_orders) {
  const std::size_t m = a.cols();
  IntMatrix system = IntMatrix::hconcat(a, negate(lattice::relation_columns(target_orders)));
  if (system.rows() == 0) system = IntMatrix(0, system.cols() == 0 ? m : system.cols());
  IntMatrix k = lattice::integer_kernel(system);
  std::vector<std::size_t> rows(m);
  for (std::size_t i = 0; i < m; ++i) rows[i] = i;
  return k.select_rows(rows);
}

}  // namespace

ModuleObject decompose(const RingSpec& ring, const IntMatrix& relations, std::size_t generators) {
  if (relations.cols() > generators && relations.rows() != 0)
    throw Error("decompose: relation row longer than the generator count");
  IntMatrix rel(generators, relations.rows());
  for (std::size_t r = 0; r < relations.rows(); ++r)
    for (std::size_t c = 0; c < relations.cols(); ++c) rel(c, r) = relations(r, c);
  if (ring.is_modular()) {
    std::vector<Integer> n(generators, ring.modulus());
    rel = IntMatrix::hconcat(rel, lattice::relation_columns(n));
  }
  return lattice::quotient(ring, generators, rel).module;
}

HomGroup::HomGroup(ModuleObject domain, ModuleObject codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  require_same_ring(domain_.ring(), codomain_.ring(), "hom_group");
  for (std::size_t i = 0; i < domain_.generator_count(); ++i) {
    const Integer& d = domain_.generator_order(i);
    for (std::size_t j = 0; j < codomain_.generator_count(); ++j) {
      const Integer& e = codomain_.generator_order(j);
      Integer order = hom_factor_order(d, e);
      if (order == 1) continue;
      factors_.push_back({i, j, std::move(order), hom_factor_step(d, e)});
    }
  }
}

GroupValue HomGroup::value() const { return GroupValue::of(ModuleObject::from_generator_orders(RingSpec::integers(), coordinate_orders())); }

std::vector<Integer> HomGroup::coordinate_orders() const {
  std::vector<Integer> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.order);
  return out;
}

std::optional<Integer> HomGroup::cardinality() const { return value().cardinality(); }

std::vector<Morphism> HomGroup::basis() const {
  std::vector<Morphism> out;
  out.reserve(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    std::vector<Integer> c(factors_.size());
    c[k] = 1;
    out.push_back(element(c));
  }
  return out;
}

Morphism HomGroup::element(const std::vector<Integer>& coordinates) const {
  if (coordinates.size() != factors_.size()) throw Error("HomGroup::element: wrong coordinate count");
  IntMatrix m(codomain_.generator_count(), domain_.generator_count());
  for (std::size_t k = 0; k < factors_.size(); ++k)
    m(factors_[k].target, factors_[k].source) = coordinates[k] * factors_[k].step;
  return Morphism(domain_, codomain_, std::move(m));
}

std::vector<Integer> HomGroup::coordinates(const Morphism& f) const {
  if (!(f.domain() == domain_) || !(f.codomain() == codomain_))
    throw Error("HomGroup::coordinates: morphism has the wrong shape");
  std::vector<Integer> c;
  c.reserve(factors_.size());
  for (const auto& fac : factors_) c.push_back(f.entry(fac.target, fac.source) / fac.step);
  return c;
}

HomGroup hom_group(const ModuleObject& m, const ModuleObject& n) { return HomGroup(m, n); }

KernelResult kernel(const Morphism& f) {
  const ModuleObject& dom = f.domain();
  const RingSpec& ring = dom.ring();
  if (dom.is_zero() || f.is_zero()) return {dom, Morphism::identity(dom)};
  IntMatrix top = kernel_lattice(f.matrix(), f.codomain().generator_orders());
  auto sq = lattice::subquotient(ring, top, lattice::relation_columns(dom.generator_orders()));
  return {sq.module, Morphism(sq.module, dom, std::move(sq.embedding))};
}

ImageCokernel image_cokernel(const Morphism& f) {
  const ModuleObject& cod = f.codomain();
  const RingSpec& ring = cod.ring();
  const IntMatrix rel = lattice::relation_columns(cod.generator_orders());
  IntMatrix top = IntMatrix::hconcat(f.matrix(), rel);
  if (top.rows() != cod.generator_count()) top = IntMatrix(cod.generator_count(), 0);
  auto im = lattice::subquotient(ring, top, rel);
  auto co = lattice::quotient(ring, cod.generator_count(), top);
  Morphism incl(im.module, cod, std::move(im.embedding));
  Morphism proj(cod, co.module, std::move(co.projection));
  return {im.module, std::move(incl), co.module, std::move(proj)};
}

bool is_mono(const Morphism& f) { return kernel(f).module.is_zero(); }
bool is_epi(const Morphism& f) { return image_cokernel(f).cokernel.is_zero(); }
bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

ModuleObject direct_sum(std::span<const ModuleObject> modules) {
  if (modules.empty()) throw Error("direct_sum: empty list (ring unknown)");
  std::vector<Integer> orders;
  for (const auto& m : modules) {
    require_same_ring(modules.front().ring(), m.ring(), "direct_sum");
    auto g = m.generator_orders();
    orders.insert(orders.end(), g.begin(), g.end());
  }
  return ModuleObject::from_generator_orders(modules.front().ring(), orders);
}

Morphism direct_sum(std::span<const Morphism> maps) {
  if (maps.empty()) throw Error("direct_sum: empty list (ring unknown)");
  std::vector<Integer> dom_orders, cod_orders;
  for (const auto& f : maps) {
    require_same_ring(maps.front().domain().ring(), f.domain().ring(), "direct_sum");
    auto d = f.domain().generator_orders();
    auto c = f.codomain().generator_orders();
    dom_orders.insert(dom_orders.end(), d.begin(), d.end());
    cod_orders.insert(cod_orders.end(), c.begin(), c.end());
  }
  IntMatrix block(cod_orders.size(), dom_orders.size());
  std::size_t r0 = 0, c0 = 0;
  for (const auto& f : maps) {
    for (std::size_t r = 0; r < f.matrix().rows(); ++r)
      for (std::size_t c = 0; c < f.matrix().cols(); ++c) block(r0 + r, c0 + c) = f.matrix()(r, c);
    r0 += f.matrix().rows();
    c0 += f.matrix().cols();
  }
  const auto pd = lattice::canonical_permutation(dom_orders);
  const auto pc = lattice::canonical_permutation(cod_orders);
  IntMatrix m = block.select_rows(pc).select_cols(pd);
  const RingSpec& ring = maps.front().domain().ring();
  return Morphism(ModuleObject::from_generator_orders(ring, dom_orders),
                  ModuleObject::from_generator_orders(ring, cod_orders), std::move(m));
}

std::optional<Morphism> solve_factorization(const Morphism& f, const Morphism& phi) {
  if (!(f.codomain() == phi.codomain())) throw Error("solve_factorization: maps have different codomains");
  const ModuleObject& x = f.domain();
  const ModuleObject& fm = phi.domain();
  const auto target_rel = lattice::relation_columns(f.codomain().generator_orders());
  IntMatrix psi(fm.generator_count(), x.generator_count());
  for (std::size_t i = 0; i < x.generator_count(); ++i) {
    // psi column i must satisfy x_i * p_k == 0 mod o_k: p = W q.
    std::vector<Integer> steps(fm.generator_count());
    for (std::size_t k = 0; k < steps.size(); ++k)
      steps[k] = hom_factor_step(x.generator_order(i), fm.generator_order(k));
    IntMatrix scaled = phi.matrix() * IntMatrix::diagonal(steps);
    IntMatrix system = IntMatrix::hconcat(scaled, target_rel);
    if (system.rows() == 0) continue;  // codomain is zero: psi = 0 works
    auto sol = lattice::solve_integer(system, f.matrix().col(i));
    if (!sol) return std::nullopt;
    for (std::size_t k = 0; k < steps.size(); ++k) psi(k, i) = (*sol)[k] * steps[k];
  }
  return Morphism(x, fm, std::move(psi));
}

KernelResult torsion_submodule(const ModuleObject& m) {
  if (!m.ring().is_integers()) throw Error("torsion_submodule: only defined for modules over Z");
  ModuleObject t(m.ring(), 0, m.torsion_orders());
  IntMatrix incl(m.generator_count(), t.generator_count());
  for (std::size_t k = 0; k < t.generator_count(); ++k) incl(m.free_rank() + k, k) = 1;
  return {t, Morphism(t, m, std::move(incl))};
}

Morphism morphism_from_columns(const RingSpec& ring, const std::vector<Integer>& source_orders,
                               const IntMatrix& columns, const ModuleObject& codomain) {
  const auto perm = lattice::canonical_permutation(source_orders);
  IntMatrix m = columns.rows() == 0 ? IntMatrix(codomain.generator_count(), source_orders.size())
                                    : columns.select_cols(perm);
  return Morphism(ModuleObject::from_generator_orders(ring, source_orders), codomain, std::move(m));
}

GroupMap induced_post(const ModuleObject& test, const Morphism& f) {
  HomGroup src(test, f.domain());
  HomGroup dst(test, f.codomain());
  GroupMap out{src.coordinate_orders(), dst.coordinate_orders(),
               IntMatrix(dst.factors().size(), src.factors().size())};
  auto basis = src.basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto c = dst.coordinates(compose(f, basis[k]));
    for (std::size_t r = 0; r < c.size(); ++r) out.matrix(r, k) = c[r];
  }
  return out;
}

GroupMap induced_pre(const Morphism& f, const ModuleObject& target) {
  HomGroup src(f.codomain(), target);
  HomGroup dst(f.domain(), target);
  GroupMap out{src.coordinate_orders(), dst.coordinate_orders(),
               IntMatrix(dst.factors().size(), src.factors().size())};
  auto basis = src.basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto c = dst.coordinates(compose(basis[k], f));
    for (std::size_t r = 0; r < c.size(); ++r) out.matrix(r, k) = c[r];
  }
  return out;
}

GroupKernel group_kernel(const GroupMap& map) {
  const auto z = RingSpec::integers();
  if (map.source_orders.empty()) return {ModuleObject::zero(z), IntMatrix(0, 0)};
  IntMatrix top = kernel_lattice(map.matrix, map.target_orders);
  auto sq = lattice::subquotient(z, top, lattice::relation_columns(map.source_orders));
  return {sq.module, std::move(sq.embedding)};
}

GroupValue homology(const GroupMap& incoming, const GroupMap& outgoing) {
  const auto z = RingSpec::integers();
  const auto& orders = outgoing.source_orders;
  if (orders.empty()) return {};
  IntMatrix top = kernel_lattice(outgoing.matrix, outgoing.target_orders);
  IntMatrix bottom = lattice::relation_columns(orders);
  if (incoming.matrix.cols() != 0) {
    if (incoming.matrix.rows() != orders.size()) throw Error("homology: maps are not composable");
    bottom = IntMatrix::hconcat(incoming.matrix, bottom);
  }
  return GroupValue::of(lattice::subquotient(z, top, bottom).module);
}

GroupValue kernel_value(const GroupMap& map) {
  return homology(GroupMap{{}, map.source_orders, IntMatrix(map.source_orders.size(), 0)}, map);
}

GroupValue cokernel_value(const GroupMap& map) {
  const std::size_t n = map.target_orders.size();
  IntMatrix rel = IntMatrix::hconcat(map.matrix, lattice::relation_columns(map.target_orders));
  if (rel.rows() != n) rel = IntMatrix(n, 0);
  return GroupValue::of(lattice::quotient(RingSpec::integers(), n, rel).module);
}

std::optional<std::vector<Integer>> solve(const GroupMap& map, const std::vector<Integer>& target) {
  const std::size_t m = map.source_orders.size();
  if (map.target_orders.empty()) return std::vector<Integer>(m);
  IntMatrix system = IntMatrix::hconcat(map.matrix, lattice::relation_columns(map.target_orders));
  if (system.rows() != map.target_orders.size()) system = IntMatrix(map.target_orders.size(), 0);
  auto sol = lattice::solve_integer(system, target);
  if (!sol) return std::nullopt;
  sol->resize(m);
  return reduce_vector(std::move(*sol), map.source_orders);
}

}  // namespace relhom
