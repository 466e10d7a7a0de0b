#pragma once

#include "relhom/module.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relhom {

/// Hom(I, -) exactness data for one test indecomposable I along a complex
/// F_L -> ... -> F_0 -> M -> 0.
struct ExactnessCertificate {
  ModuleObject test;
  /// homology[0] is the cokernel of Hom(I, d_0); homology[i + 1] the
  /// homology at F_i for i < L.
  std::vector<GroupValue> homology;
  /// Hom(I, d_L) is injective, i.e. the complex stopped at F_L is exact there.
  bool top_injective = false;
};

struct ResolutionComplex {
  ModuleObject target;
  std::vector<ModuleObject> terms;      // F_0 .. F_L
  std::vector<Morphism> differentials;  // d_0 : F_0 -> M, d_i : F_i -> F_{i-1}
  std::vector<ExactnessCertificate> certificates;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  /// Every certified degree below the top has zero homology.
  bool exact_below_top() const;
  /// Exact everywhere including injectivity at F_L.
  bool exact() const;
};

/// K (+) F' and K' (+) F agree as multisets of indecomposables.
struct EquivalenceWitness {
  ModuleObject f;
  ModuleObject f_prime;
  std::string note;
};

struct Witness {
  std::vector<std::pair<std::string, ModuleObject>> modules;
  std::vector<std::pair<std::string, Morphism>> morphisms;
  std::vector<std::pair<std::string, GroupValue>> groups;
  std::optional<ResolutionComplex> resolution;
  std::optional<EquivalenceWitness> equivalence;
};

enum class Status { Yes, No, Unknown };

std::string to_string(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::string reason;
  std::optional<Witness> witness;

  static Verdict yes(std::string reason, std::optional<Witness> w = std::nullopt) {
    return {Status::Yes, std::move(reason), std::move(w)};
  }
  static Verdict no(std::string reason, std::optional<Witness> w = std::nullopt) {
    return {Status::No, std::move(reason), std::move(w)};
  }
  static Verdict unknown(std::string reason) { return {Status::Unknown, std::move(reason), std::nullopt}; }

  bool is_yes() const { return status == Status::Yes; }
  bool is_no() const { return status == Status::No; }
  bool is_unknown() const { return status == Status::Unknown; }
};

}  // namespace relhom
