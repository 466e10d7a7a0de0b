#pragma once

#include "relhom/matrix.hpp"
#include "relhom/module.hpp"

#include <optional>
#include <span>
#include <vector>

namespace relhom {

/// Canonical module presented by `generators` generators subject to the
/// given relation rows (rows shorter than `generators` are zero-padded).
/// Over Z/nZ the relations n * e_i are implied.
ModuleObject decompose(const RingSpec& ring, const IntMatrix& relations, std::size_t generators);

/// Hom(M, N) as a direct sum of cyclic factors, one per pair
/// (domain generator i, codomain generator j) with a nontrivial factor.
/// Coordinates of a morphism are its entries divided by the factor step.
class HomGroup {
 public:
  struct Factor {
    std::size_t source = 0;  // domain generator i
    std::size_t target = 0;  // codomain generator j
    Integer order;           // 0 when the factor is Z
    Integer step;            // minimal well-defined entry
  };

  HomGroup(ModuleObject domain, ModuleObject codomain);

  const ModuleObject& domain() const { return domain_; }
  const ModuleObject& codomain() const { return codomain_; }
  const std::vector<Factor>& factors() const { return factors_; }

  GroupValue value() const;
  std::vector<Integer> coordinate_orders() const;
  std::optional<Integer> cardinality() const;

  /// One generating morphism per nontrivial cyclic factor.
  std::vector<Morphism> basis() const;
  Morphism element(const std::vector<Integer>& coordinates) const;
  std::vector<Integer> coordinates(const Morphism& f) const;

 private:
  ModuleObject domain_;
  ModuleObject codomain_;
  std::vector<Factor> factors_;
};

HomGroup hom_group(const ModuleObject& m, const ModuleObject& n);

struct KernelResult {
  ModuleObject module;
  Morphism inclusion;
};

/// Ker f with its inclusion into domain(f).
KernelResult kernel(const Morphism& f);

struct ImageCokernel {
  ModuleObject image;
  Morphism image_inclusion;  // Im f -> codomain(f)
  ModuleObject cokernel;
  Morphism projection;  // codomain(f) -> Coker f
};
ImageCokernel image_cokernel(const Morphism& f);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

ModuleObject direct_sum(std::span<const ModuleObject> modules);
/// Block-diagonal sum, rows and columns permuted into canonical generator
/// order.
Morphism direct_sum(std::span<const Morphism> maps);

/// Some psi : X -> F with phi o psi == f, or nullopt when none exists.
std::optional<Morphism> solve_factorization(const Morphism& f, const Morphism& phi);

/// Torsion submodule of a module over Z with its inclusion.
KernelResult torsion_submodule(const ModuleObject& m);

/// Assemble a morphism whose domain is the direct sum of cyclic modules of
/// the given orders, generator i mapping to column i (in codomain
/// coordinates). Columns are permuted into canonical order.
Morphism morphism_from_columns(const RingSpec& ring, const std::vector<Integer>& source_orders,
                               const IntMatrix& columns, const ModuleObject& codomain);

/// Homomorphism of abelian groups written in cyclic coordinates.
struct GroupMap {
  std::vector<Integer> source_orders;
  std::vector<Integer> target_orders;
  IntMatrix matrix;  // target x source
};

/// Hom(I, f) : Hom(I, X) -> Hom(I, Y), h |-> f o h, in HomGroup coordinates.
GroupMap induced_post(const ModuleObject& test, const Morphism& f);
/// Hom(f, A) : Hom(Y, A) -> Hom(X, A), h |-> h o f, in HomGroup coordinates.
GroupMap induced_pre(const Morphism& f, const ModuleObject& target);

/// ker(outgoing) / im(incoming) for composable maps in cyclic coordinates
/// (incoming may have no source coordinates).
GroupValue homology(const GroupMap& incoming, const GroupMap& outgoing);
GroupValue kernel_value(const GroupMap& map);
GroupValue cokernel_value(const GroupMap& map);

/// Kernel subgroup as a canonical group together with embedding columns in
/// source coordinates.
struct GroupKernel {
  ModuleObject group;  // over Z
  IntMatrix embedding;
};
GroupKernel group_kernel(const GroupMap& map);

/// Some x with map(x) == target in the target group, or nullopt.
std::optional<std::vector<Integer>> solve(const GroupMap& map, const std::vector<Integer>& target);

}  // namespace relhom
