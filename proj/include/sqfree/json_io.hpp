#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sqfree/complex.hpp"
#include "sqfree/graph.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/ideal.hpp"
#include "sqfree/shelling.hpp"
#include "sqfree/vertex_decomposition.hpp"

// JSON encodings of every value that crosses a file boundary. All vertex and
// variable indices are 1-based on the wire.
namespace sqfree::io {

using json = nlohmann::ordered_json;

inline json labels(VertexSet s) { return bits::to_labels(s); }

inline VertexSet parse_set(const json& j, std::size_t ground_n, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an array of indices");
  std::vector<int> ls;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, std::string(what) + " entries must be integers");
    ls.push_back(x.get<int>());
  }
  std::vector<int> sorted = ls;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidInput, std::string(what) + " repeats an index");
  return bits::from_labels(ls, ground_n);
}

inline std::size_t parse_count(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw Error(ErrorKind::InvalidInput, std::string("expected a nonnegative integer field \"") + key + "\"");
  return j[key].get<std::size_t>();
}

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

// {"n": 8, "edges": [[1,5],[1,6],...]}
inline json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.ground_size()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  const std::size_t n = parse_count(j, "n");
  if (!j.contains("edges") || !j["edges"].is_array()) throw Error(ErrorKind::InvalidInput, "graph needs an \"edges\" array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorKind::InvalidInput, "each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_labeled_edges(n, edges);
}

// {"ground_n": 26, "facets": [[9,11,14,...], ...]}
inline json to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (VertexSet f : c.facets()) facets.push_back(labels(f));
  return {{"ground_n", c.ground_size()}, {"facets", facets}};
}

// Facets exactly as listed in the file, before antichain reduction. Shelling
// certificates index into this list.
inline std::vector<VertexSet> listed_facets(const json& j) {
  const std::size_t n = parse_count(j, "ground_n");
  if (!j.contains("facets") || !j["facets"].is_array())
    throw Error(ErrorKind::InvalidInput, "complex needs a \"facets\" array");
  std::vector<VertexSet> out;
  for (const auto& f : j["facets"]) out.push_back(parse_set(f, n, "facet"));
  return out;
}

inline SimplicialComplex complex_from_json(const json& j) {
  return SimplicialComplex::from_facets(parse_count(j, "ground_n"), listed_facets(j));
}

// {"ring_n": 8, "gens": [[1,5],[1,6],...]}
inline json to_json(const SqFreeIdeal& ideal) {
  json gens = json::array();
  for (VertexSet g : ideal.generators()) gens.push_back(labels(g));
  return {{"ring_n", ideal.ring_size()}, {"gens", gens}};
}

inline SqFreeIdeal ideal_from_json(const json& j) {
  const std::size_t n = parse_count(j, "ring_n");
  if (!j.contains("gens") || !j["gens"].is_array()) throw Error(ErrorKind::InvalidInput, "ideal needs a \"gens\" array");
  std::vector<VertexSet> gens;
  for (const auto& g : j["gens"]) gens.push_back(parse_set(g, n, "generator"));
  return SqFreeIdeal(n, std::move(gens));
}

// {"subject":"quotient","char":2,"entries":[{"i":1,"j":2,"beta":13},...]}
inline json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [ij, b] : t.entries) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
  return {{"subject", to_string(t.subject)}, {"char", t.field.characteristic}, {"entries", entries}};
}

inline BettiTable betti_from_json(const json& j) {
  BettiTable t;
  const std::string subject = j.at("subject").get<std::string>();
  if (subject != "ideal" && subject != "quotient") throw Error(ErrorKind::InvalidInput, "unknown subject " + subject);
  t.subject = subject == "ideal" ? BettiSubject::Ideal : BettiSubject::Quotient;
  t.field = FieldSpec(j.at("char").get<std::uint32_t>());
  for (const auto& e : j.at("entries")) t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("beta").get<std::uint64_t>();
  return t;
}

// Certificates are lists of 0-based positions into a facet list.
inline json certificate_to_json(const ShellingCertificate& order, const std::vector<VertexSet>& facets) {
  json idx = json::array();
  for (VertexSet f : order) {
    auto it = std::find(facets.begin(), facets.end(), f);
    if (it == facets.end()) throw Error(ErrorKind::InvalidInput, "certificate facet " + bits::to_string(f) + " not listed");
    idx.push_back(it - facets.begin());
  }
  return idx;
}

inline ShellingCertificate certificate_from_json(const json& j, const std::vector<VertexSet>& facets,
                                                 std::size_t ground_n) {
  ShellingCertificate order;
  const json& body = j.is_object() && j.contains("order") ? j["order"] : j;
  if (j.is_object() && j.contains("facets") && !j.contains("order")) {
    for (const auto& f : j["facets"]) order.push_back(parse_set(f, ground_n, "facet"));
    return order;
  }
  if (!body.is_array()) throw Error(ErrorKind::InvalidInput, "shelling order must be an array of facet indices");
  for (const auto& x : body) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<std::size_t>() >= facets.size())
      throw Error(ErrorKind::InvalidInput, "facet index out of range in shelling order");
    order.push_back(facets[x.get<std::size_t>()]);
  }
  return order;
}

inline const char* reason_name(VdNode::Reason::Kind k) {
  switch (k) {
    case VdNode::Reason::Kind::NotShedding: return "not_shedding";
    case VdNode::Reason::Kind::LinkNotVd: return "link_not_vd";
    default: return "deletion_not_vd";
  }
}

inline const char* node_kind_name(VdNode::Kind k) {
  switch (k) {
    case VdNode::Kind::Edgeless: return "edgeless";
    case VdNode::Kind::Shed: return "shed";
    default: return "refuted";
  }
}

// {"verdict": "false", "root": [...], "nodes": [{"vertices": [...], "kind": ...}, ...]}
inline json to_json(const VdTrace& t) {
  json nodes = json::array();
  for (const auto& [mask, node] : t.nodes) {
    json n = {{"vertices", labels(mask)}, {"kind", node_kind_name(node.kind)}};
    if (node.kind == VdNode::Kind::Shed) n["vertex"] = node.shedding_vertex + 1;
    if (node.kind == VdNode::Kind::Refuted) {
      json reasons = json::array();
      for (const auto& r : node.reasons) {
        json jr = {{"vertex", r.vertex + 1}, {"reason", reason_name(r.kind)}};
        if (r.kind == VdNode::Reason::Kind::NotShedding) jr["witness"] = labels(r.witness);
        reasons.push_back(jr);
      }
      n["reasons"] = reasons;
    }
    nodes.push_back(n);
  }
  return {{"verdict", to_string(t.verdict)}, {"root", labels(t.root)}, {"nodes", nodes}};
}

inline VdTrace trace_from_json(const json& j, std::size_t ground_n) {
  VdTrace t;
  const std::string v = j.at("verdict").get<std::string>();
  t.verdict = v == "true" ? Verdict::True : v == "false" ? Verdict::False : Verdict::Inconclusive;
  t.root = parse_set(j.at("root"), ground_n, "root");
  for (const auto& jn : j.at("nodes")) {
    VdNode node;
    node.vertices = parse_set(jn.at("vertices"), ground_n, "node");
    const std::string kind = jn.at("kind").get<std::string>();
    if (kind == "edgeless") {
      node.kind = VdNode::Kind::Edgeless;
    } else if (kind == "shed") {
      node.kind = VdNode::Kind::Shed;
      node.shedding_vertex = jn.at("vertex").get<std::size_t>() - 1;
    } else if (kind == "refuted") {
      node.kind = VdNode::Kind::Refuted;
      for (const auto& jr : jn.at("reasons")) {
        VdNode::Reason r;
        r.vertex = jr.at("vertex").get<std::size_t>() - 1;
        const std::string reason = jr.at("reason").get<std::string>();
        if (reason == "not_shedding") {
          r.kind = VdNode::Reason::Kind::NotShedding;
          r.witness = parse_set(jr.at("witness"), ground_n, "witness");
        } else if (reason == "link_not_vd") {
          r.kind = VdNode::Reason::Kind::LinkNotVd;
        } else if (reason == "deletion_not_vd") {
          r.kind = VdNode::Reason::Kind::DeletionNotVd;
        } else {
          throw Error(ErrorKind::InvalidInput, "unknown vd reason " + reason);
        }
        node.reasons.push_back(r);
      }
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown vd node kind " + kind);
    }
    t.nodes.emplace(node.vertices, node);
  }
  return t;
}

}  // namespace sqfree::io
