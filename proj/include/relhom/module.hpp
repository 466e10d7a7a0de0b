#pragma once

#include "relhom/integer.hpp"
#include "relhom/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must live over the same ring do not.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Z/nZ (n >= 2) or Z.
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(0); }
  static RingSpec modular(const Integer& n);

  bool is_integers() const { return modulus_ == 0; }
  bool is_modular() const { return modulus_ != 0; }
  /// n for Z/nZ, 0 for Z.
  const Integer& modulus() const { return modulus_; }

  std::string to_string() const;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  explicit RingSpec(Integer modulus) : modulus_(std::move(modulus)) {}
  Integer modulus_;
};

/// Multiplicity of each indecomposable type, keyed by its generator order
/// (0 stands for the free module of rank one).
using Multiplicities = std::map<Integer, std::size_t>;

/// A finitely generated module over Z/nZ or Z in canonical primary form:
/// a free rank plus a multiset of prime-power cyclic orders. Equality is
/// isomorphism.
///
/// Generators are ordered free first, then torsion by descending order;
/// every morphism matrix indexes generators in this order.
class ModuleObject {
 public:
  /// Accepts arbitrary cyclic orders >= 1; composite orders are split into
  /// their primary parts and order-1 factors are dropped.
  ModuleObject(RingSpec ring, std::size_t free_rank, std::vector<Integer> cyclic_orders);

  static ModuleObject zero(const RingSpec& ring) { return ModuleObject(ring, 0, {}); }
  /// Direct sum of cyclic modules; order 0 contributes a free summand.
  static ModuleObject from_generator_orders(const RingSpec& ring, const std::vector<Integer>& orders);
  static ModuleObject from_multiplicities(const RingSpec& ring, const Multiplicities& mult);
  /// The ring as a module over itself.
  static ModuleObject regular(const RingSpec& ring);

  const RingSpec& ring() const { return ring_; }
  std::size_t free_rank() const { return free_rank_; }
  /// Canonical (descending) torsion multiset.
  const std::vector<Integer>& torsion_orders() const { return torsion_; }

  /// Generator orders in canonical order, 0 for free generators.
  std::vector<Integer> generator_orders() const;
  std::size_t generator_count() const { return free_rank_ + torsion_.size(); }
  const Integer& generator_order(std::size_t i) const;

  bool is_zero() const { return generator_count() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  /// Cardinality; nullopt when infinite.
  std::optional<Integer> cardinality() const;

  Multiplicities multiplicities() const;
  std::size_t multiplicity(const Integer& type_order) const;

  /// Distinct indecomposable types, as generator orders (canonical order).
  std::vector<Integer> indecomposable_types() const;

  /// Short bracket form: "[4,2]", "rank1+[2]", "0".
  std::string to_string() const;
  /// Serialized form: "ring=Z/4; rank=0; orders=[4,2]".
  std::string serialize() const;

  friend bool operator==(const ModuleObject&, const ModuleObject&) = default;

 private:
  RingSpec ring_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Canonical value of a finitely generated abelian group (result type of
/// Hom and Ext computations).
class GroupValue {
 public:
  GroupValue() = default;
  GroupValue(std::size_t free_rank, std::vector<Integer> cyclic_orders);
  static GroupValue of(const ModuleObject& m);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion_orders() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  std::optional<Integer> cardinality() const;
  ModuleObject as_module() const;

  /// "0", "Z/2", "Z^2 + Z/4 + Z/2".
  std::string to_string() const;
  friend bool operator==(const GroupValue&, const GroupValue&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Order of Hom(cyclic of order d, cyclic of order e) with 0 meaning free:
/// Hom(Z, Z) = Z -> 0, Hom(Z, Z/e) -> e, Hom(Z/d, Z) -> 1, else gcd(d, e).
Integer hom_factor_order(const Integer& d, const Integer& e);

/// Smallest entry a with d * a == 0 mod e (the generator of that Hom factor).
Integer hom_factor_step(const Integer& d, const Integer& e);

/// Homomorphism of finitely generated modules, given by its matrix on the
/// canonical generators: entry (j, i) is the image of domain generator i in
/// codomain coordinate j.
class Morphism {
 public:
  /// Validates the well-definedness congruences and reduces entries.
  Morphism(ModuleObject domain, ModuleObject codomain, IntMatrix matrix);

  static Morphism zero(const ModuleObject& domain, const ModuleObject& codomain);
  static Morphism identity(const ModuleObject& m);

  const ModuleObject& domain() const { return domain_; }
  const ModuleObject& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }
  const Integer& entry(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  bool is_zero() const { return matrix_.is_zero(); }
  /// Image of an element given in domain coordinates, reduced.
  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  ModuleObject domain_;
  ModuleObject codomain_;
  IntMatrix matrix_;
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Integer& c, const Morphism& f);

/// Reduce each coordinate of x modulo the corresponding order.
std::vector<Integer> reduce_vector(std::vector<Integer> x, const std::vector<Integer>& orders);

}  // namespace relhom
