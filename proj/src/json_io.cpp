#include "kbracket/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "kbracket/error.hpp"

namespace kbracket {

using json = nlohmann::ordered_json;

std::string web_to_json(const Web& w) {
  json j;
  j["sources"] = w.sources;
  j["sinks"] = w.sinks;
  auto edges = w.edges;
  std::sort(edges.begin(), edges.end());
  j["edges"] = json::array();
  for (const auto& [s, t] : edges) j["edges"].push_back(json::array({s, t}));
  j["circles"] = w.circles;
  return j.dump();
}

Web web_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("web.json", e.what());
  }
  if (!j.is_object()) throw Error("web.json", "expected a JSON object");
  Web w;
  try {
    if (j.contains("sources")) w.sources = j.at("sources").get<std::vector<int>>();
    if (j.contains("sinks")) w.sinks = j.at("sinks").get<std::vector<int>>();
    if (j.contains("circles")) w.circles = j.at("circles").get<int>();
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("web.json", "edges must be [s,t] pairs");
        w.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
  } catch (const json::exception& e) {
    throw Error("web.json", e.what());
  }
  std::sort(w.sources.begin(), w.sources.end());
  std::sort(w.sinks.begin(), w.sinks.end());
  std::sort(w.edges.begin(), w.edges.end());
  require_valid(w);
  return w;
}

namespace {

json element_json(const ModuleElement& e) {
  json terms = json::array();
  for (const auto& [m, coeff] : e.terms()) {
    json factors = json::array();
    for (const auto& f : m.factors) factors.push_back(f.str());
    terms.push_back({{"coefficient", coeff.str()}, {"factors", factors}});
  }
  return {{"terms", terms}, {"text", e.str()}};
}

} // namespace

std::string module_element_to_json(const ModuleElement& e) { return element_json(e).dump(); }

std::string report_to_json(const BracketReport& r) {
  json j;
  j["raw"] = element_json(r.raw);
  j["normalized"] = element_json(r.normalized);
  j["writhe"] = r.writhe;
  j["scalar"] = r.scalar;
  j["free_at_plus1"] = element_json(r.free_at_plus1);
  j["free_at_minus1"] = element_json(r.free_at_minus1);
  json summands = json::array();
  for (const auto& [m, counts] : r.summands) {
    json factors = json::array();
    for (const auto& f : m.factors) factors.push_back(f.str());
    summands.push_back({{"factors", factors}, {"vertex_counts", counts}});
  }
  j["summands"] = summands;
  return j.dump();
}

std::string certificate_to_json(const MinimalityCertificate& cert) {
  json j;
  j["verdict"] = cert.verdict == MinimalityCertificate::Verdict::CertifiedMinimal
                     ? "certified-minimal"
                     : "inconclusive";
  switch (cert.reason) {
    case MinimalityCertificate::Reason::KusIrreducible: j["reason"] = "kus-irreducible"; break;
    case MinimalityCertificate::Reason::GirthAtLeast5: j["reason"] = "girth-at-least-5"; break;
    case MinimalityCertificate::Reason::None: j["reason"] = "none"; break;
  }
  if (cert.kus.vertex_count() > 0)
    j["kus"] = cert.kus.str();
  else
    j["kus"] = nullptr;
  return j.dump();
}

std::string web_to_dot(const Web& w) {
  std::string out = "digraph web {\n";
  out += "  // circles: " + std::to_string(w.circles) + "\n";
  for (int v : w.sources) out += "  v" + std::to_string(v) + " [shape=circle];\n";
  for (int v : w.sinks) out += "  v" + std::to_string(v) + " [shape=doublecircle];\n";
  auto edges = w.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [s, t] : edges)
    out += "  v" + std::to_string(s) + " -> v" + std::to_string(t) + ";\n";
  out += "}\n";
  return out;
}

} // namespace kbracket
