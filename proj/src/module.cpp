#include "relhom/module.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace relhom {

RingSpec RingSpec::modular(const Integer& n) {
  if (n < 2) throw Error("modulus must be at least 2, got " + relhom::to_string(n));
  return RingSpec(n);
}

std::string RingSpec::to_string() const {
  return is_integers() ? std::string("Z") : "Z/" + relhom::to_string(modulus_);
}

ModuleObject::ModuleObject(RingSpec ring, std::size_t free_rank, std::vector<Integer> cyclic_orders)
    : ring_(std::move(ring)), free_rank_(free_rank) {
  if (ring_.is_modular() && free_rank_ != 0)
    throw Error("free rank must be 0 over " + ring_.to_string());
  for (const Integer& d : cyclic_orders) {
    if (d < 1) throw Error("cyclic order must be positive, got " + relhom::to_string(d));
    if (d == 1) continue;
    if (ring_.is_modular() && ring_.modulus() % d != 0)
      throw Error("order " + relhom::to_string(d) + " does not divide " + relhom::to_string(ring_.modulus()));
    for (const auto& pp : factorize(d)) torsion_.push_back(pp.value);
  }
  std::sort(torsion_.begin(), torsion_.end(), std::greater<>());
}

ModuleObject ModuleObject::from_generator_orders(const RingSpec& ring,
                                                 const std::vector<Integer>& orders) {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  for (const Integer& d : orders) {
    if (d == 0)
      ++rank;
    else
      torsion.push_back(d);
  }
  return ModuleObject(ring, rank, std::move(torsion));
}

ModuleObject ModuleObject::from_multiplicities(const RingSpec& ring, const Multiplicities& mult) {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  for (const auto& [order, count] : mult) {
    if (order == 0)
      rank += count;
    else
      torsion.insert(torsion.end(), count, order);
  }
  return ModuleObject(ring, rank, std::move(torsion));
}

ModuleObject ModuleObject::regular(const RingSpec& ring) {
  if (ring.is_integers()) return ModuleObject(ring, 1, {});
  return ModuleObject(ring, 0, {ring.modulus()});
}

std::vector<Integer> ModuleObject::generator_orders() const {
  std::vector<Integer> out(free_rank_, Integer(0));
  out.insert(out.end(), torsion_.begin(), torsion_.end());
  return out;
}

const Integer& ModuleObject::generator_order(std::size_t i) const {
  static const Integer kFree = 0;
  if (i < free_rank_) return kFree;
  return torsion_.at(i - free_rank_);
}

std::optional<Integer> ModuleObject::cardinality() const {
  if (free_rank_ != 0) return std::nullopt;
  Integer n = 1;
  for (const Integer& d : torsion_) n *= d;
  return n;
}

Multiplicities ModuleObject::multiplicities() const {
  Multiplicities m;
  if (free_rank_ != 0) m[0] = free_rank_;
  for (const Integer& d : torsion_) ++m[d];
  return m;
}

std::size_t ModuleObject::multiplicity(const Integer& type_order) const {
  if (type_order == 0) return free_rank_;
  return static_cast<std::size_t>(std::count(torsion_.begin(), torsion_.end(), type_order));
}

std::vector<Integer> ModuleObject::indecomposable_types() const {
  std::vector<Integer> out;
  if (free_rank_ != 0) out.emplace_back(0);
  for (const Integer& d : torsion_)
    if (out.empty() || out.back() != d) out.push_back(d);
  return out;
}

std::string ModuleObject::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (free_rank_ != 0) {
    os << "rank" << free_rank_;
    if (!torsion_.empty()) os << '+';
  }
  if (!torsion_.empty()) {
    os << '[';
    for (std::size_t i = 0; i < torsion_.size(); ++i) os << (i ? "," : "") << torsion_[i];
    os << ']';
  }
  return os.str();
}

std::string ModuleObject::serialize() const {
  std::ostringstream os;
  os << "ring=" << ring_.to_string() << "; rank=" << free_rank_ << "; orders=[";
  for (std::size_t i = 0; i < torsion_.size(); ++i) os << (i ? "," : "") << torsion_[i];
  os << ']';
  return os.str();
}

GroupValue::GroupValue(std::size_t free_rank, std::vector<Integer> cyclic_orders) {
  ModuleObject m(RingSpec::integers(), free_rank, std::move(cyclic_orders));
  free_rank_ = m.free_rank();
  torsion_ = m.torsion_orders();
}

GroupValue GroupValue::of(const ModuleObject& m) { return GroupValue(m.free_rank(), m.torsion_orders()); }

std::optional<Integer> GroupValue::cardinality() const { return as_module().cardinality(); }

ModuleObject GroupValue::as_module() const {
  return ModuleObject(RingSpec::integers(), free_rank_, torsion_);
}

std::string GroupValue::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ != 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const Integer& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

Integer hom_factor_order(const Integer& d, const Integer& e) {
  if (d == 0) return e;
  if (e == 0) return 1;
  return gcd(d, e);
}

Integer hom_factor_step(const Integer& d, const Integer& e) {
  if (e == 0) return d == 0 ? 1 : 0;
  return e / gcd(d, e);
}

std::vector<Integer> reduce_vector(std::vector<Integer> x, const std::vector<Integer>& orders) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = reduce(x[i], orders[i]);
  return x;
}

Morphism::Morphism(ModuleObject domain, ModuleObject codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (!(domain_.ring() == codomain_.ring())) throw RingMismatch("morphism between modules over different rings");
  if (matrix_.rows() != codomain_.generator_count() || matrix_.cols() != domain_.generator_count())
    throw Error("morphism matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                std::to_string(matrix_.cols()) + ", expected " +
                std::to_string(codomain_.generator_count()) + "x" +
                std::to_string(domain_.generator_count()));
  for (std::size_t j = 0; j < matrix_.rows(); ++j) {
    const Integer& e = codomain_.generator_order(j);
    for (std::size_t i = 0; i < matrix_.cols(); ++i) {
      Integer& a = matrix_(j, i);
      a = reduce(a, e);
      if (reduce(domain_.generator_order(i) * a, e) != 0)
        throw Error("morphism not well defined at entry (" + std::to_string(j) + "," +
                    std::to_string(i) + ")");
    }
  }
}

Morphism Morphism::zero(const ModuleObject& domain, const ModuleObject& codomain) {
  return Morphism(domain, codomain, IntMatrix(codomain.generator_count(), domain.generator_count()));
}

Morphism Morphism::identity(const ModuleObject& m) {
  return Morphism(m, m, IntMatrix::identity(m.generator_count()));
}

std::vector<Integer> Morphism::apply(const std::vector<Integer>& x) const {
  return reduce_vector(matrix_ * std::span<const Integer>(x), codomain_.generator_orders());
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.codomain() == g.domain())) throw Error("compose: codomain/domain mismatch");
  return Morphism(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw Error("add: morphisms have different shapes");
  IntMatrix m = f.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += g.matrix()(r, c);
  return Morphism(f.domain(), f.codomain(), std::move(m));
}

Morphism scale(const Integer& c, const Morphism& f) {
  IntMatrix m = f.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= c;
  return Morphism(f.domain(), f.codomain(), std::move(m));
}

}  // namespace relhom
