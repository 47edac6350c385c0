#include "keymesh/scheme_io.hpp"

#include <json.hpp>

#include "keymesh/errors.hpp"

namespace keymesh {

using nlohmann::json;

namespace {

json scheme_fields(const IosScheme& scheme) {
  json doc;
  doc["n"] = scheme.graph().vertex_count();
  json edges = json::array();
  json f = json::array();
  for (int i = 0; i < scheme.graph().edge_count(); ++i) {
    const Edge& e = scheme.graph().edge(i);
    edges.push_back({e.u, e.v});
    f.push_back({e.u, e.v, scheme.f_of(i)});
  }
  doc["edges"] = std::move(edges);
  doc["t"] = scheme.t();
  doc["f"] = std::move(f);
  doc["w"] = scheme.w_sets();
  return doc;
}

int require_int(const json& value, const char* where) {
  if (!value.is_number_integer())
    throw ParseError(std::string("scheme document: ") + where + " must be an integer");
  return value.get<int>();
}

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("scheme document: missing field \"") + name + "\"");
  return *it;
}

}  // namespace

std::string write_scheme(const IosScheme& scheme) { return scheme_fields(scheme).dump(2) + "\n"; }

IosScheme read_scheme(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scheme document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scheme document: expected a JSON object");

  int n = require_int(require_field(doc, "n"), "n");
  int t = require_int(require_field(doc, "t"), "t");

  const json& edges_doc = require_field(doc, "edges");
  if (!edges_doc.is_array()) throw ParseError("scheme document: edges must be a list");
  std::vector<Edge> edges;
  for (const json& entry : edges_doc) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("scheme document: each edge must be a pair [u,v]");
    edges.push_back({require_int(entry[0], "edge endpoint"), require_int(entry[1], "edge endpoint")});
  }

  Graph graph;
  try {
    graph = Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("scheme document: ") + e.what());
  }

  const json& f_doc = require_field(doc, "f");
  if (!f_doc.is_array()) throw ParseError("scheme document: f must be a list");
  std::vector<int> f(graph.edge_count(), 0);
  for (const json& entry : f_doc) {
    if (!entry.is_array() || entry.size() != 3)
      throw ParseError("scheme document: each f entry must be a triple [u,v,j]");
    int u = require_int(entry[0], "f endpoint");
    int v = require_int(entry[1], "f endpoint");
    int j = require_int(entry[2], "f value");
    auto index = graph.edge_index(u, v);
    if (!index)
      throw ParseError("scheme document: f names the non-edge {" + std::to_string(u) + "," +
                       std::to_string(v) + "}");
    if (f[*index] != 0)
      throw ParseError("scheme document: f assigns edge {" + std::to_string(u) + "," +
                       std::to_string(v) + "} twice");
    f[*index] = j;
  }
  for (int i = 0; i < graph.edge_count(); ++i)
    if (f[i] == 0)
      throw ParseError("scheme document: f misses edge " + to_string(graph.edge(i)));

  const json& w_doc = require_field(doc, "w");
  if (!w_doc.is_array()) throw ParseError("scheme document: w must be a list of vertex lists");
  std::vector<VertexSet> w_sets;
  for (const json& entry : w_doc) {
    if (!entry.is_array()) throw ParseError("scheme document: each w entry must be a vertex list");
    VertexSet w;
    for (const json& vertex : entry) w.push_back(require_int(vertex, "w vertex"));
    w_sets.push_back(std::move(w));
  }

  try {
    return IosScheme(std::move(graph), t, std::move(f), std::move(w_sets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("scheme document: ") + e.what());
  }
}

std::string write_scheme_with_report(const OptimizationReport& report) {
  json doc = scheme_fields(report.scheme);
  json rep;
  switch (report.objective) {
    case Objective::Total: rep["objective"] = "total"; break;
    case Objective::Max: rep["objective"] = "max"; break;
    case Objective::Euler: rep["objective"] = "euler"; break;
  }
  rep["value"] = report.value;
  json cert;
  if (const auto* total = std::get_if<TotalCertificate>(&report.certificate)) {
    cert["independent_set"] = total->independent_set;
    cert["exact"] = total->exact;
  } else if (const auto* max = std::get_if<MaxCertificate>(&report.certificate)) {
    cert["mmo_g"] = max->mmo_g;
    cert["w"] = max->w;
    cert["mmo_h"] = max->mmo_h;
    cert["branch"] = max->equality ? "mmo" : "mmo_plus_one";
  } else if (const auto* euler = std::get_if<EulerCertificate>(&report.certificate)) {
    cert["max_degree"] = euler->max_degree;
    cert["bound"] = euler->bound;
  }
  rep["certificate"] = std::move(cert);
  doc["report"] = std::move(rep);
  return doc.dump(2) + "\n";
}

std::string write_instance(const SchemeInstance& inst) {
  json doc = scheme_fields(inst.scheme());
  doc["sigma"] = inst.sigma_bits();
  json ids = json::array();
  for (int u = 1; u <= inst.scheme().graph().vertex_count(); ++u) ids.push_back(inst.id(u));
  doc["ids"] = std::move(ids);
  json secrets = json::array();
  for (int j = 1; j <= inst.scheme().t(); ++j) secrets.push_back(to_hex(inst.secret(j)));
  doc["secrets"] = std::move(secrets);
  return doc.dump(2) + "\n";
}

std::string write_keyring(const UserKeyring& ring) {
  json entries = json::array();
  for (const auto& [j, secret] : ring.held_secrets) entries.push_back({"R", j, to_hex(secret)});
  for (const PairwiseKey& key : ring.held_keys)
    entries.push_back({"L", key.edge.u, key.edge.v, to_hex(key.value)});
  json doc;
  doc["user"] = ring.user;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

}  // namespace keymesh
