#pragma once

#include "relhom/precover.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace relhom {

/// Malformed or semantically invalid input text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// "Z" or "Z/n" with n >= 2.
RingSpec parse_ring(std::string_view text);
/// "0", "[4,2]", "rank1" or "rank1+[2]" (free rank only over Z).
ModuleObject parse_module(const RingSpec& ring, std::string_view text);
/// "{0,2+}"; "{0+}" is all of N.
AllowedSet parse_allowed_set(std::string_view text);
/// "add(D) D=[2]", "add([2])", "pow(D) D=[4,2]", "pow([4,2])",
/// "constrained support=[4,2] allowed[2]={0,2+}", "torsionZ".
PrecoverClass parse_class(const RingSpec& ring, std::string_view text);

enum class Command { None, Resolve, Ext, Schanuel, Check, Suite, Reproduce, List };
std::string to_string(Command c);

enum class Format { Table, Records };

struct ScenarioConfig {
  std::optional<RingSpec> ring;
  std::optional<std::string> class_text;
  /// Named module expressions: M is the module under study, A the Ext
  /// coefficient.
  std::map<std::string, std::string> modules;
  Command command = Command::None;
  std::string argument;  // E/R/S, suite or example id, list topic
  std::optional<std::size_t> n;
  std::optional<std::size_t> length;
  std::optional<std::size_t> bound;
  std::optional<Format> format;
  std::optional<bool> expect;
  bool strict = false;
  std::optional<std::uint64_t> seed;

  /// Fill unset fields from other.
  void merge_defaults(const ScenarioConfig& other);
};

/// Line-oriented scenario grammar:
///   ring Z/4
///   class add(D) D=[2]
///   module M=[4]
///   check S n=0
/// plus option lines "format records", "expect yes", "strict", "seed 7".
/// Errors name the line and field.
ScenarioConfig parse_config(std::string_view text);

}  // namespace relhom
