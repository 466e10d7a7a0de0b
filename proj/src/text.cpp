#include "relhom/text.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace relhom {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

Integer integer(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a nonnegative integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return parse_integer(std::string(s));
}

std::size_t small(std::string_view s, std::string_view what) {
  const Integer v = integer(s, what);
  if (v > 1000000) throw ParseError(std::string(what) + " is too large: " + std::string(s));
  return v.convert_to<std::size_t>();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

// Whitespace-separated tokens, keeping bracketed groups together.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    const std::size_t start = i;
    int depth = 0;
    while (i < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[i])))) {
      if (s[i] == '[' || s[i] == '{' || s[i] == '(') ++depth;
      if (s[i] == ']' || s[i] == '}' || s[i] == ')') --depth;
      ++i;
    }
    out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<Integer> order_list(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected a bracketed order list like [4,2], got '" + std::string(s) + "'");
  const auto body = trim(s.substr(1, s.size() - 2));
  std::vector<Integer> out;
  if (body.empty()) return out;
  for (auto part : split(body, ',')) out.push_back(integer(part, "order"));
  return out;
}

}  // namespace

RingSpec parse_ring(std::string_view text) {
  const auto s = trim(text);
  if (s == "Z") return RingSpec::integers();
  if (!starts_with(s, "Z/")) throw ParseError("expected ring 'Z' or 'Z/n', got '" + std::string(s) + "'");
  const Integer n = integer(s.substr(2), "modulus");
  if (n < 2) throw ParseError("modulus must be at least 2, got " + relhom::to_string(n));
  return RingSpec::modular(n);
}

ModuleObject parse_module(const RingSpec& ring, std::string_view text) {
  auto s = trim(text);
  if (s == "0") return ModuleObject::zero(ring);
  std::size_t rank = 0;
  if (starts_with(s, "rank")) {
    const auto plus = s.find('+');
    rank = small(s.substr(4, plus == std::string_view::npos ? s.npos : plus - 4), "free rank");
    if (rank != 0 && ring.is_modular()) throw ParseError("free rank must be 0 over " + ring.to_string());
    if (plus == std::string_view::npos) return ModuleObject(ring, rank, {});
    s = s.substr(plus + 1);
  }
  auto orders = order_list(s);
  for (const auto& d : orders) {
    if (d == 0) throw ParseError("cyclic order must be positive");
    if (ring.is_modular() && ring.modulus() % d != 0)
      throw ParseError("order " + relhom::to_string(d) + " does not divide " + relhom::to_string(ring.modulus()));
  }
  return ModuleObject(ring, rank, std::move(orders));
}

AllowedSet parse_allowed_set(std::string_view text) {
  const auto s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("expected an allowed set like {0,2+}, got '" + std::string(s) + "'");
  std::set<std::size_t> below;
  std::optional<std::size_t> conductor;
  for (auto part : split(s.substr(1, s.size() - 2), ',')) {
    if (!part.empty() && part.back() == '+') {
      if (conductor) throw ParseError("allowed set has two 'c+' members: " + std::string(s));
      conductor = small(part.substr(0, part.size() - 1), "conductor");
    } else {
      below.insert(small(part, "allowed multiplicity"));
    }
  }
  if (!conductor) throw ParseError("allowed set needs a final 'c+' member: " + std::string(s));
  for (std::size_t m : below)
    if (m >= *conductor) throw ParseError("allowed set lists " + std::to_string(m) + " past its conductor");
  return AllowedSet(std::move(below), *conductor);
}

PrecoverClass parse_class(const RingSpec& ring, std::string_view text) {
  const auto s = trim(text);
  const auto toks = tokens(s);
  if (toks.empty()) throw ParseError("empty class descriptor");
  const auto head = toks.front();
  if (head == "torsionZ") {
    if (toks.size() != 1) throw ParseError("torsionZ takes no arguments");
    if (!ring.is_integers()) throw ParseError("torsionZ needs ring Z, not " + ring.to_string());
    return PrecoverClass::torsion_over_z();
  }
  if (starts_with(head, "add(") || starts_with(head, "pow(")) {
    if (head.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(head) + "'");
    auto inner = trim(head.substr(4, head.size() - 5));
    std::string_view d;
    if (inner == "D") {
      if (toks.size() != 2 || !starts_with(toks[1], "D="))
        throw ParseError("expected 'D=<module>' after " + std::string(head));
      d = toks[1].substr(2);
    } else {
      if (toks.size() != 1) throw ParseError("unexpected text after " + std::string(head));
      d = inner;
    }
    auto m = parse_module(ring, d);
    return starts_with(head, "add(") ? PrecoverClass::add_closure(std::move(m)) : PrecoverClass::powers(std::move(m));
  }
  if (head == "constrained") {
    std::optional<ModuleObject> support;
    std::map<Integer, AllowedSet> allowed;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto t = toks[i];
      const auto eq = t.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value, got '" + std::string(t) + "'");
      const auto key = t.substr(0, eq);
      const auto value = t.substr(eq + 1);
      if (key == "support") {
        support = parse_module(ring, value);
      } else if (starts_with(key, "allowed[") && key.back() == ']') {
        const Integer type = integer(key.substr(8, key.size() - 9), "allowed type");
        if (!allowed.emplace(type, parse_allowed_set(value)).second)
          throw ParseError("allowed set for " + relhom::to_string(type) + " given twice");
      } else {
        throw ParseError("unknown key '" + std::string(key) + "' in constrained class");
      }
    }
    if (!support) throw ParseError("constrained class needs support=[...]");
    const auto types = support->indecomposable_types();
    if (types.size() != support->generator_count())
      throw ParseError("support types must be distinct: " + std::string(s));
    return PrecoverClass::constrained(ring, types, std::move(allowed));
  }
  throw ParseError("unknown class '" + std::string(head) + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::None: return "none";
    case Command::Resolve: return "resolve";
    case Command::Ext: return "ext";
    case Command::Schanuel: return "schanuel";
    case Command::Check: return "check";
    case Command::Suite: return "suite";
    case Command::Reproduce: return "reproduce";
    case Command::List: return "list";
  }
  return "none";
}

void ScenarioConfig::merge_defaults(const ScenarioConfig& other) {
  if (!ring) ring = other.ring;
  if (!class_text) class_text = other.class_text;
  for (const auto& [name, text] : other.modules) modules.emplace(name, text);
  if (command == Command::None) {
    command = other.command;
    argument = other.argument;
  }
  if (!n) n = other.n;
  if (!length) length = other.length;
  if (!bound) bound = other.bound;
  if (!format) format = other.format;
  if (!expect) expect = other.expect;
  strict = strict || other.strict;
  if (!seed) seed = other.seed;
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto toks = tokens(line);
    const std::string key(toks.front());
    const auto rest = trim(line.substr(toks.front().size()));
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + " (" + key + "): " + msg);
    };
    auto need_ring = [&]() -> const RingSpec& {
      if (!cfg.ring) throw fail("no ring given yet");
      return *cfg.ring;
    };
    auto params = [&](std::size_t from, std::initializer_list<std::string_view> allowed) {
      for (std::size_t i = from; i < toks.size(); ++i) {
        const auto t = toks[i];
        const auto eq = t.find('=');
        const auto k = t.substr(0, eq);
        if (eq == std::string_view::npos || std::find(allowed.begin(), allowed.end(), k) == allowed.end())
          throw fail("unknown parameter '" + std::string(t) + "'");
        const auto v = t.substr(eq + 1);
        if (k == "n") cfg.n = small(v, "n");
        if (k == "length") cfg.length = small(v, "length");
        if (k == "bound") cfg.bound = small(v, "bound");
      }
    };
    auto set_command = [&](Command c) {
      if (cfg.command != Command::None) throw fail("a second command; one per scenario");
      cfg.command = c;
    };
    try {
      if (key == "ring") {
        if (cfg.ring) throw fail("ring given twice");
        cfg.ring = parse_ring(rest);
      } else if (key == "class") {
        if (cfg.class_text) throw fail("class given twice");
        parse_class(need_ring(), rest);
        cfg.class_text = std::string(rest);
      } else if (key == "module") {
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos) throw fail("expected 'module NAME=<module>'");
        const std::string name(trim(rest.substr(0, eq)));
        if (name.empty()) throw fail("empty module name");
        const auto expr = trim(rest.substr(eq + 1));
        parse_module(need_ring(), expr);
        if (!cfg.modules.emplace(name, std::string(expr)).second) throw fail("module " + name + " given twice");
      } else if (key == "resolve") {
        set_command(Command::Resolve);
        params(1, {"length"});
      } else if (key == "ext") {
        set_command(Command::Ext);
        params(1, {"n"});
      } else if (key == "schanuel") {
        set_command(Command::Schanuel);
        params(1, {"n"});
      } else if (key == "check") {
        set_command(Command::Check);
        if (toks.size() < 2 || (toks[1] != "E" && toks[1] != "R" && toks[1] != "S"))
          throw fail("expected 'check E|R|S'");
        cfg.argument = std::string(toks[1]);
        params(2, {"n"});
      } else if (key == "suite" || key == "reproduce" || key == "list") {
        set_command(key == "suite" ? Command::Suite : key == "reproduce" ? Command::Reproduce : Command::List);
        if (toks.size() < 2) throw fail("missing id");
        cfg.argument = std::string(toks[1]);
        if (key == "suite")
          params(2, {"bound", "n"});
        else
          params(2, {});
      } else if (key == "format") {
        if (rest == "table")
          cfg.format = Format::Table;
        else if (rest == "records")
          cfg.format = Format::Records;
        else
          throw fail("expected 'table' or 'records'");
      } else if (key == "expect") {
        if (rest != "yes" && rest != "no") throw fail("expected 'yes' or 'no'");
        cfg.expect = rest == "yes";
      } else if (key == "strict") {
        if (!rest.empty()) throw fail("takes no value");
        cfg.strict = true;
      } else if (key == "seed") {
        cfg.seed = integer(rest, "seed").convert_to<std::uint64_t>();
      } else {
        throw fail("unknown key");
      }
    } catch (const ParseError& e) {
      if (starts_with(e.what(), "line ")) throw;
      throw fail(e.what());
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  return cfg;
}

}  // namespace relhom
