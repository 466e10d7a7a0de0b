#pragma once

#include "relhom/algebra.hpp"
#include "relhom/verdict.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace relhom {

/// A cofinite subset of N: the listed members below the conductor plus
/// every integer >= conductor. Written "{0,2+}".
class AllowedSet {
 public:
  AllowedSet() = default;  // all of N
  AllowedSet(std::set<std::size_t> below, std::size_t conductor);

  static AllowedSet all() { return AllowedSet(); }

  bool contains(std::size_t m) const { return m >= conductor_ || below_.count(m) != 0; }
  bool is_all() const { return conductor_ == 0; }
  std::size_t conductor() const { return conductor_; }
  const std::set<std::size_t>& below() const { return below_; }

  /// Closed under addition (checked below the conductor; the tail is
  /// automatic).
  bool is_submonoid() const;
  std::optional<std::size_t> smallest_missing() const;
  /// Smallest member m with m >= at_least.
  std::size_t next_member(std::size_t at_least) const;

  std::string to_string() const;
  friend bool operator==(const AllowedSet&, const AllowedSet&) = default;

 private:
  std::set<std::size_t> below_;
  std::size_t conductor_ = 0;
};

/// Descriptor of a precovering class.
class PrecoverClass {
 public:
  enum class Kind { AddClosure, Powers, MultiplicityConstrained, TorsionOverZ };

  /// All finite sums of indecomposable summands of d.
  static PrecoverClass add_closure(ModuleObject d);
  /// Exactly the powers d^m, m >= 0.
  static PrecoverClass powers(ModuleObject d);
  /// Sums of the support indecomposables (given by generator order) with
  /// multiplicities in the allowed sets; missing entries default to N.
  static PrecoverClass constrained(RingSpec ring, std::vector<Integer> support,
                                   std::map<Integer, AllowedSet> allowed);
  static PrecoverClass torsion_over_z();

  Kind kind() const { return kind_; }
  const RingSpec& ring() const { return ring_; }
  /// D for AddClosure and Powers.
  const ModuleObject& generator() const { return d_; }
  /// Indecomposable types spanning the class (generator orders), empty for
  /// TorsionOverZ.
  const std::vector<Integer>& support() const { return support_; }
  const AllowedSet& allowed(const Integer& type) const;

  /// "add([2])", "pow([4,2])", "constrained support=[4,2] allowed[2]={0,2+}", "torsionZ".
  std::string to_string() const;

 private:
  PrecoverClass(Kind kind, RingSpec ring, ModuleObject d);

  Kind kind_;
  RingSpec ring_;
  ModuleObject d_;
  std::vector<Integer> support_;
  std::map<Integer, AllowedSet> allowed_;
};

bool contains(const PrecoverClass& cls, const ModuleObject& m);

/// Indecomposables I whose Hom(I, -) detects precovers and Hom-exactness
/// for the given modules. For TorsionOverZ these are Z/p^j with p and j
/// bounded by the torsion of the modules.
std::vector<ModuleObject> test_family(const PrecoverClass& cls, std::span<const ModuleObject> modules);

struct TestMap {
  Morphism generator;      // I -> M
  Morphism factorization;  // I -> F with precover o factorization == generator
};

struct PrecoverCertificate {
  Morphism precover;  // F -> M
  std::vector<TestMap> test_maps;
};

/// Evaluation precover of M.
PrecoverCertificate build_precover(const PrecoverClass& cls, const ModuleObject& m);

struct PrecoverCheck {
  bool ok = false;
  std::optional<PrecoverCertificate> certificate;
  std::optional<Morphism> failing;  // a generator map I -> M that does not factor
};

/// Throws when the domain of phi is not a class member.
PrecoverCheck verify_precover(const PrecoverClass& cls, const Morphism& phi);
/// Same test without building the certificate.
bool is_precover(const PrecoverClass& cls, const Morphism& phi);

/// Greedy deletion of domain summands while the map stays a precover and
/// the domain stays a class member.
PrecoverCertificate minimize_to_cover(const PrecoverClass& cls, const PrecoverCertificate& cert);
PrecoverCertificate build_cover(const PrecoverClass& cls, const ModuleObject& m);

/// Deletable summand sets for the domain of phi that keep it a member,
/// as sorted column index lists.
std::vector<std::vector<std::size_t>> deletion_candidates(const PrecoverClass& cls, const Morphism& phi);
/// phi with the given domain columns removed.
Morphism delete_columns(const Morphism& phi, const std::vector<std::size_t>& columns);

/// phi extended by a zero-mapped nonzero class member.
Morphism padded_precover(const PrecoverClass& cls, const Morphism& phi);
/// Smallest nonzero class member.
ModuleObject smallest_member(const PrecoverClass& cls);

/// Every endomorphism g of M with g o phi == phi is an automorphism.
Verdict is_almost_epi(const Morphism& phi);

bool has_epi_precover(const PrecoverClass& cls, const ModuleObject& m);

Verdict class_closed_under_summands(const PrecoverClass& cls);
Verdict class_weakly_closed(const PrecoverClass& cls);
Verdict is_separating(const PrecoverClass& cls, std::span<const ModuleObject> universe);
Verdict mono_precovers_are_iso(const PrecoverClass& cls, std::span<const ModuleObject> universe);

}  // namespace relhom
