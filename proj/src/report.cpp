#include "relhom/report.hpp"

#include "relhom/text.hpp"

#include <limits>
#include <sstream>

namespace relhom {

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return relhom::to_string(v);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const GroupValue& g) {
  Json orders = Json::array();
  for (const auto& d : g.torsion_orders()) orders.push_back(to_json(d));
  return {{"free_rank", g.free_rank()}, {"orders", orders}, {"text", g.to_string()}};
}

GroupValue group_from_json(const Json& j) {
  std::vector<Integer> orders;
  for (const auto& d : j.at("orders")) orders.push_back(integer_from_json(d));
  return GroupValue(j.at("free_rank").get<std::size_t>(), std::move(orders));
}

Json to_json(const Morphism& f) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < f.matrix().rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < f.matrix().cols(); ++c) row.push_back(to_json(f.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"domain", f.domain().to_string()}, {"codomain", f.codomain().to_string()}, {"matrix", rows}};
}

Morphism morphism_from_json(const RingSpec& ring, const Json& j) {
  auto dom = parse_module(ring, j.at("domain").get<std::string>());
  auto cod = parse_module(ring, j.at("codomain").get<std::string>());
  const auto& rows = j.at("matrix");
  if (rows.size() != cod.generator_count()) throw ParseError("matrix row count does not match the codomain");
  IntMatrix a(cod.generator_count(), dom.generator_count());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dom.generator_count()) throw ParseError("matrix column count does not match the domain");
    for (std::size_t c = 0; c < rows[r].size(); ++c) a(r, c) = integer_from_json(rows[r][c]);
  }
  return Morphism(std::move(dom), std::move(cod), std::move(a));
}

Json to_json(const ResolutionComplex& res) {
  Json terms = Json::array(), diffs = Json::array(), certs = Json::array();
  for (const auto& t : res.terms) terms.push_back(t.to_string());
  for (const auto& d : res.differentials) diffs.push_back(to_json(d));
  for (const auto& c : res.certificates) {
    Json h = Json::array();
    for (const auto& g : c.homology) h.push_back(to_json(g));
    certs.push_back({{"test", c.test.to_string()}, {"homology", h}, {"top_injective", c.top_injective}});
  }
  return {{"target", res.target.to_string()},
          {"terms", terms},
          {"differentials", diffs},
          {"certificates", certs},
          {"length", res.length()},
          {"exact", res.exact()}};
}

ResolutionComplex resolution_from_json(const RingSpec& ring, const Json& j) {
  ResolutionComplex res{parse_module(ring, j.at("target").get<std::string>()), {}, {}, {}};
  for (const auto& t : j.at("terms")) res.terms.push_back(parse_module(ring, t.get<std::string>()));
  for (const auto& d : j.at("differentials")) res.differentials.push_back(morphism_from_json(ring, d));
  for (const auto& c : j.at("certificates")) {
    ExactnessCertificate cert{parse_module(ring, c.at("test").get<std::string>()), {}, false};
    for (const auto& g : c.at("homology")) cert.homology.push_back(group_from_json(g));
    cert.top_injective = c.at("top_injective").get<bool>();
    res.certificates.push_back(std::move(cert));
  }
  return res;
}

Json to_json(const Witness& w) {
  Json out = Json::object();
  if (!w.modules.empty()) {
    Json ms = Json::array();
    for (const auto& [name, m] : w.modules) ms.push_back({{"name", name}, {"module", m.to_string()}});
    out["modules"] = ms;
  }
  if (!w.morphisms.empty()) {
    Json fs = Json::array();
    for (const auto& [name, f] : w.morphisms) {
      Json e = to_json(f);
      e["name"] = name;
      fs.push_back(std::move(e));
    }
    out["morphisms"] = fs;
  }
  if (!w.groups.empty()) {
    Json gs = Json::array();
    for (const auto& [name, g] : w.groups) gs.push_back({{"name", name}, {"value", to_json(g)}});
    out["groups"] = gs;
  }
  if (w.resolution) out["resolution"] = to_json(*w.resolution);
  if (w.equivalence)
    out["equivalence"] = {
        {"f", w.equivalence->f.to_string()}, {"f_prime", w.equivalence->f_prime.to_string()}, {"note", w.equivalence->note}};
  return out;
}

Witness witness_from_json(const RingSpec& ring, const Json& j) {
  Witness w;
  if (j.contains("modules"))
    for (const auto& m : j["modules"])
      w.modules.emplace_back(m.at("name").get<std::string>(), parse_module(ring, m.at("module").get<std::string>()));
  if (j.contains("morphisms"))
    for (const auto& f : j["morphisms"]) w.morphisms.emplace_back(f.at("name").get<std::string>(), morphism_from_json(ring, f));
  if (j.contains("groups"))
    for (const auto& g : j["groups"]) w.groups.emplace_back(g.at("name").get<std::string>(), group_from_json(g.at("value")));
  if (j.contains("resolution")) w.resolution = resolution_from_json(ring, j["resolution"]);
  if (j.contains("equivalence")) {
    const auto& e = j["equivalence"];
    w.equivalence = EquivalenceWitness{parse_module(ring, e.at("f").get<std::string>()),
                                       parse_module(ring, e.at("f_prime").get<std::string>()),
                                       e.at("note").get<std::string>()};
  }
  return w;
}

Json to_json(const Verdict& v) {
  Json out = {{"status", to_string(v.status)}, {"reason", v.reason}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

Json to_json(const Finding& f) {
  Json out = {{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}};
  out["witness"] = f.witness ? to_json(*f.witness) : Json(nullptr);
  return out;
}

std::string emit_records(const std::vector<Json>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

namespace {

std::string pad(std::size_t n) { return std::string(n, ' '); }

std::string render_morphism(const std::string& name, const Morphism& f) {
  return name + ": " + f.domain().to_string() + " -> " + f.codomain().to_string() + "  " + f.matrix().to_string();
}

}  // namespace

std::string render_witness(const Witness& w, std::size_t indent) {
  std::ostringstream os;
  for (const auto& [name, m] : w.modules) os << pad(indent) << name << " = " << m.to_string() << '\n';
  for (const auto& [name, f] : w.morphisms) os << pad(indent) << render_morphism(name, f) << '\n';
  for (const auto& [name, g] : w.groups) os << pad(indent) << name << " = " << g.to_string() << '\n';
  if (w.resolution) {
    const auto& r = *w.resolution;
    os << pad(indent) << "resolution of " << r.target.to_string() << ", length " << r.length()
       << (r.exact() ? ", exact" : ", not exact at the top") << '\n';
    os << pad(indent + 2) << "0";
    for (std::size_t i = r.terms.size(); i-- > 0;) os << " -> " << r.terms[i].to_string();
    os << " -> " << r.target.to_string() << " -> 0\n";
    for (std::size_t i = 0; i < r.differentials.size(); ++i)
      os << pad(indent + 2) << render_morphism("d_" + std::to_string(i), r.differentials[i]) << '\n';
    for (const auto& c : r.certificates) {
      os << pad(indent + 2) << "Hom(" << c.test.to_string() << ", -) homology:";
      for (const auto& g : c.homology) os << ' ' << g.to_string();
      os << (c.top_injective ? ", injective at the top" : ", not injective at the top") << '\n';
    }
  }
  if (w.equivalence)
    os << pad(indent) << "K + " << w.equivalence->f_prime.to_string() << " = K' + " << w.equivalence->f.to_string()
       << " (" << w.equivalence->note << ")\n";
  return os.str();
}

std::string render_report(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite_id << ": " << (r.pass() ? "pass" : "FAIL") << ", " << r.instances_checked << " checks, "
     << r.failures.size() << " failures\n";
  for (const auto& e : r.entries) {
    os << "  " << e.instance << ": " << e.got;
    if (!e.expected.empty() && e.expected != e.got) os << " (expected " << e.expected << ")";
    os << '\n';
    if (e.witness) os << render_witness(*e.witness, 4);
  }
  for (const auto& f : r.failures) {
    os << "  FAILED " << f.instance << ": expected " << f.expected << ", got " << f.got << '\n';
    if (f.witness) os << render_witness(*f.witness, 4);
  }
  return os.str();
}

}  // namespace relhom
