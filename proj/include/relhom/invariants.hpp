#pragma once

#include "relhom/precover.hpp"

#include <optional>

namespace relhom {

enum class ResolutionStrategy {
  Cover,       // minimized precovers
  Evaluation,  // unminimized evaluation precovers
  Padded,      // covers plus a zero-mapped class member in every degree
};

/// F_0 .. F_L over M: d_0 is a precover of M and d_i is the inclusion of
/// Ker d_{i-1} after a precover of that kernel.
ResolutionComplex build_resolution(const PrecoverClass& cls, const ModuleObject& m, std::size_t length,
                                   ResolutionStrategy strategy = ResolutionStrategy::Cover);

/// Assemble a complex from its differentials and compute its Hom(I, -)
/// exactness certificates.
ResolutionComplex make_complex(const PrecoverClass& cls, const ModuleObject& m, std::vector<Morphism> differentials);
std::vector<ExactnessCertificate> certify(const PrecoverClass& cls, const ResolutionComplex& res);

/// Re-verify from scratch: shapes, d d = 0, membership, and that the
/// stored certificates match recomputation and show exactness below the top.
bool recheck_resolution(const PrecoverClass& cls, const ResolutionComplex& res);

/// Degree-n cohomology of Hom(F_., A); needs length >= n + 1.
GroupValue ext_from_resolution(const ResolutionComplex& res, const ModuleObject& a, std::size_t n);
GroupValue relative_ext(const PrecoverClass& cls, const ModuleObject& m, const ModuleObject& a, std::size_t n,
                        ResolutionStrategy strategy = ResolutionStrategy::Cover);

/// Cyclic modules A for which vanishing of Ext(M, A) implies vanishing for
/// every finitely generated A.
std::vector<ModuleObject> ext_test_family(const PrecoverClass& cls, const ResolutionComplex& res);

ModuleObject schanuel_step(const PrecoverClass& cls, const ModuleObject& m);

std::optional<EquivalenceWitness> equivalent(const PrecoverClass& cls, const ModuleObject& k, const ModuleObject& k2);
bool verify_equivalence(const PrecoverClass& cls, const ModuleObject& k, const ModuleObject& k2,
                        const EquivalenceWitness& w);

Verdict check_E(const PrecoverClass& cls, const ModuleObject& m, std::size_t n);
Verdict check_R(const PrecoverClass& cls, const ModuleObject& m, std::size_t n);
Verdict check_S(const PrecoverClass& cls, const ModuleObject& m, std::size_t n);

}  // namespace relhom
