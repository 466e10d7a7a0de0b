#pragma once

#include "relhom/invariants.hpp"

#include <string>
#include <vector>

namespace relhom {

/// Finite universe of modules: every multiplicity vector over the support
/// with total at most the bound.
struct UniverseSpec {
  RingSpec ring = RingSpec::modular(4);
  std::size_t max_total_multiplicity = 4;
  /// Indecomposable types (0 for Z). Empty means the default: every
  /// prime-power divisor of the modulus, or Z, Z/2, Z/4, Z/3 over Z.
  std::vector<Integer> support;
  /// Cap on the multiplicity of Z.
  std::size_t max_free_rank = 1;

  std::vector<Integer> effective_support() const;
};

/// Graded by total multiplicity; within a grade, descending lexicographic
/// on multiplicity vectors with types in ascending order (Z last).
std::vector<ModuleObject> enumerate_modules(const UniverseSpec& u);

struct Finding {
  std::string instance;
  std::string expected;
  std::string got;
  std::optional<Witness> witness;
};

struct SuiteReport {
  std::string suite_id;
  std::size_t instances_checked = 0;
  std::vector<Finding> failures;
  /// Checked facts worth showing: hypotheses, exhibited witnesses.
  std::vector<Finding> entries;
  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& suite_ids();
const std::vector<std::string>& example_ids();

SuiteReport run_suite(const std::string& suite_id, const PrecoverClass& cls, const UniverseSpec& u,
                      std::size_t max_n = 2);
SuiteReport reproduce(const std::string& example_id);

}  // namespace relhom
