#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/fixtures.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/ideal.hpp"
#include "sqfree/json_io.hpp"
#include "sqfree/refutation.hpp"
#include "sqfree/shelling.hpp"
#include "sqfree/vertex_decomposition.hpp"

namespace sqfree {

inline constexpr const char* kToolName = "sqfree";
inline constexpr const char* kToolVersion = "0.1.0";

using io::json;

// Named checks (expected vs actual) plus invariants and certificates. The
// status is PASSED only when every check matches exactly.
class Report {
 public:
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void check(const std::string& name, const json& expected, const json& actual) {
    const bool ok = expected == actual;
    checks_.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
    if (!ok) failures_.push_back(name);
  }

  json& invariants() { return invariants_; }
  json& certificates() { return certificates_; }
  void set_timing_ms(double ms) { timing_ms_ = ms; }

  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& subject() const { return subject_; }
  const json& checks() const { return checks_; }

  // Timing is present only when set, so default output is byte-stable.
  json to_json() const {
    json out = {{"tool", kToolName},
                {"version", kToolVersion},
                {"subject", subject_},
                {"status", passed() ? "PASSED" : "FAILED"}};
    json chars = json::array();
    for (const auto& f : default_fields()) chars.push_back(f.characteristic);
    out["characteristics"] = chars;
    if (!failures_.empty()) out["failed_checks"] = failures_;
    out["checks"] = checks_;
    out["invariants"] = invariants_;
    out["certificates"] = certificates_;
    if (timing_ms_) out["timing_ms"] = *timing_ms_;
    return out;
  }

 private:
  std::string subject_;
  json checks_ = json::array();
  json invariants_ = json::object();
  json certificates_ = json::object();
  std::optional<double> timing_ms_;
  std::vector<std::string> failures_;
};

namespace detail {

inline json label_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return bits::to_labels(a) < bits::to_labels(b); });
  json out = json::array();
  for (VertexSet s : sets) out.push_back(io::labels(s));
  return out;
}

inline json label_pairs(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u + 1, v + 1});
  return out;
}

inline VertexSet labels_mask(std::initializer_list<int> ls, std::size_t n) { return bits::from_labels(ls, n); }

inline const char* status_name(ShellingSearchResult::Status s) {
  switch (s) {
    case ShellingSearchResult::Status::Found: return "found";
    case ShellingSearchResult::Status::NotShellable: return "not_shellable";
    default: return "inconclusive";
  }
}

// Positions (into `listed`) of a certificate, or the facets themselves if
// some facet is not listed.
inline json certificate_json(const ShellingCertificate& order, const ShellingCertificate& listed) {
  try {
    return io::certificate_to_json(order, listed);
  } catch (const Error&) {
    json out = json::array();
    for (VertexSet f : order) out.push_back(io::labels(f));
    return out;
  }
}

inline json graph_stats_json(const GraphStats& st) {
  json iso = json::array();
  for (std::size_t v : st.isolated_vertices) iso.push_back(v + 1);
  return {{"independence_number", st.independence_number},
          {"min_vertex_cover_size", st.min_vertex_cover_size},
          {"is_well_covered", st.is_well_covered},
          {"has_degree_one_vertex", st.has_degree_one_vertex},
          {"isolated_vertices", iso}};
}

// Per-characteristic values and whether all characteristics agree.
inline void per_char(json& target, const std::string& name, const json& by_char) {
  bool agree = true;
  const json* first = nullptr;
  for (const auto& [k, v] : by_char.items()) {
    if (first && *first != v) agree = false;
    if (!first) first = &v;
  }
  target[name] = by_char;
  if (!agree) {
    if (!target.contains("characteristic_disagreements")) target["characteristic_disagreements"] = json::array();
    target["characteristic_disagreements"].push_back(name);
  }
}

}  // namespace detail

// The 8-vertex counterexample: sequentially Cohen-Macaulay, height 4, but no
// degree-one vertex and reg(R/I) = 2 while a(G) = 1.
inline Report report_counterexample1() {
  Report rep("leafless8");
  const Graph g = fixtures::leafless8();
  const std::size_t n = g.ground_size();
  const SqFreeIdeal ideal = edge_ideal(g);
  const SqFreeIdeal dual = alexander_dual(ideal);
  const auto fields = default_fields();

  rep.check("vertices", 8, g.order());
  rep.check("edges", 13, g.edge_count());
  rep.check("height", 4, height(ideal));

  using detail::labels_mask;
  const std::vector<VertexSet> expected_primes = {
      labels_mask({5, 6, 7, 8}, n),    labels_mask({1, 2, 3, 4, 7}, n), labels_mask({1, 2, 3, 4, 8}, n),
      labels_mask({1, 2, 3, 6, 8}, n), labels_mask({1, 2, 4, 6, 7}, n), labels_mask({1, 2, 6, 7, 8}, n)};
  const PrimeList primes = minimal_primes(ideal);
  rep.check("minimal_primes", detail::label_sets(expected_primes), detail::label_sets(primes));
  rep.check("dual_generators_are_prime_supports", detail::label_sets(primes), detail::label_sets(dual.generators()));

  json reg_q = json::object(), reg_d = json::object(), cl = json::object(), scm = json::object(),
       scm_full = json::object();
  json tables = json::array();
  for (const auto& f : fields) {
    const std::string p = std::to_string(f.characteristic);
    const BettiTable quotient = betti_table(ideal, BettiSubject::Quotient, f);
    const BettiTable dual_table = betti_table(dual, BettiSubject::Ideal, f);
    tables.push_back(io::to_json(quotient));
    tables.push_back(io::to_json(dual_table));
    reg_q[p] = quotient.regularity();
    reg_d[p] = dual_table.regularity();
    cl[p] = is_componentwise_linear(dual, f);
    scm[p] = is_sequentially_cm(g, f);
    scm_full[p] = is_sequentially_cm(g, f, ComponentwiseMethod::FullScan);
    rep.check("reg_quotient[char " + p + "]", 2, reg_q[p]);
    rep.check("reg_dual[char " + p + "]", 5, reg_d[p]);
    rep.check("dual_componentwise_linear[char " + p + "]", true, cl[p]);
    rep.check("sequentially_cm[char " + p + "]", true, scm[p]);
    rep.check("sequentially_cm_full_scan[char " + p + "]", true, scm_full[p]);
  }

  const InducedMatching matching = maximum_induced_matching(g);
  const GraphStats st = graph_stats(g);
  rep.check("induced_matching_number", 1, matching.size);
  rep.check("has_degree_one_vertex", false, st.has_degree_one_vertex);
  rep.check("isolated_vertices", json::array(), detail::graph_stats_json(st)["isolated_vertices"]);
  rep.check("min_vertex_cover_size", 4, st.min_vertex_cover_size);

  json& inv = rep.invariants();
  inv["graph"] = io::to_json(g);
  inv["edge_ideal"] = io::to_json(ideal);
  inv["height"] = height(ideal);
  inv["minimal_primes"] = detail::label_sets(primes);
  inv["alexander_dual"] = io::to_json(dual);
  detail::per_char(inv, "reg_quotient", reg_q);
  detail::per_char(inv, "reg_dual", reg_d);
  detail::per_char(inv, "dual_componentwise_linear", cl);
  detail::per_char(inv, "sequentially_cm", scm);
  inv["induced_matching_number"] = matching.size;
  inv["graph_stats"] = detail::graph_stats_json(st);
  json statements = json::object();
  for (const auto& f : fields)
    statements[std::to_string(f.characteristic)] = {
        {"degree_one_vertex", st.has_degree_one_vertex},
        {"reg_equals_induced_matching", reg_q[std::to_string(f.characteristic)] == json(matching.size)}};
  inv["question_statements"] = statements;

  rep.certificates()["betti_tables"] = tables;
  rep.certificates()["induced_matching"] = detail::label_pairs(matching.edges);
  return rep;
}

// The 26-vertex counterexample (shellable, height 13, not vertex
// decomposable) together with the circulant C_16(1,4,8) it is built on.
inline Report report_counterexample2(std::size_t vd_budget = 2'000'000) {
  Report rep("joined26");
  const Graph g = fixtures::joined26();
  const SimplicialComplex ind = independence_complex(g);
  const ShellingCertificate listed = fixtures::joined26_listed_order();
  const SqFreeIdeal ideal = edge_ideal(g);
  json& inv = rep.invariants();
  json& cert = rep.certificates();

  // Ind(G26) and its shelling.
  rep.check("vertices", 26, g.order());
  rep.check("edges", 170, g.edge_count());
  ShellingCertificate listed_sorted = listed;
  std::sort(listed_sorted.begin(), listed_sorted.end());
  rep.check("facets_equal_listed", true, ind.facets() == listed_sorted);
  rep.check("facet_count", 81, ind.facet_count());
  const bool permutation = ind.facets() == listed_sorted;
  const std::optional<std::size_t> violation =
      permutation ? first_shelling_violation(ind, listed) : std::optional<std::size_t>{0};
  rep.check("listed_order_is_shelling", true, !violation.has_value());
  if (violation) {
    inv["listed_order_first_violation"] = {{"position", *violation}, {"facet", io::labels(listed[*violation])}};
  }

  ShellingSearchOptions seeded;
  seeded.preferred_order = listed;
  const ShellingSearchResult repaired = find_shelling(ind, seeded);
  const ShellingSearchResult scratch = find_shelling(ind);
  rep.check("find_shelling_seeded_with_listed_order", "found", detail::status_name(repaired.status));
  rep.check("find_shelling_from_scratch", "found", detail::status_name(scratch.status));
  if (repaired.status == ShellingSearchResult::Status::Found) {
    rep.check("seeded_certificate_verifies", true, verify_shelling(ind, repaired.certificate));
    cert["shelling_seeded"] = detail::certificate_json(repaired.certificate, listed);
  }
  if (scratch.status == ShellingSearchResult::Status::Found) {
    rep.check("scratch_certificate_verifies", true, verify_shelling(ind, scratch.certificate));
    cert["shelling_scratch"] = detail::certificate_json(scratch.certificate, listed);
  }
  cert["shelling_positions_refer_to"] = "listed facets F_0..F_80";

  // Primes: the 80 covers of the circulant extended by x_17..x_26, plus the
  // 13 joined circulant vertices.
  const PrimeList primes = minimal_primes(ideal);
  const Graph circ = fixtures::c16();
  std::vector<VertexSet> predicted;
  for (VertexSet p : minimal_primes(edge_ideal(circ))) predicted.push_back(p | (bits::full(26) & ~bits::full(16)));
  VertexSet joined = 0;
  for (int l : fixtures::kJoinedCirculantLabels) joined |= bits::single(static_cast<std::size_t>(l - 1));
  predicted.push_back(joined);
  rep.check("height", 13, height(ideal));
  rep.check("minimal_prime_count", 81, primes.size());
  rep.check("minimal_primes_structure", detail::label_sets(predicted), detail::label_sets(primes));

  // Vertex decomposability: per-vertex refutation and the generic recursion.
  const Joined26Refutation ref = refute_vd_joined26(g);
  rep.check("per_vertex_refutation", "false", to_string(ref.verdict));
  std::size_t case_b_reisner = 0;
  json per_vertex = json::array();
  for (const auto& r : ref.vertices) {
    json jr = {{"vertex", r.vertex + 1}, {"resolved", r.resolved}};
    if (r.kind == VertexRefutation::Case::NewFacet) {
      jr["case"] = "new_facet";
      if (r.new_facet) jr["new_facet"] = io::labels(*r.new_facet);
      jr["justification"] = r.justification;
      if (r.shedding_witness) jr["shedding_witness"] = io::labels(*r.shedding_witness);
      jr["deletion_vertex_decomposable"] = to_string(r.deletion_vd);
    } else {
      jr["case"] = "circulant_not_cohen_macaulay";
      jr["circulant_deletion_pure"] = r.circulant_deletion_pure;
      json rf = json::object();
      bool all = !r.reisner.empty();
      for (const auto& [p, failure] : r.reisner) {
        all = all && failure.has_value();
        if (failure)
          rf[std::to_string(p)] = {{"face", io::labels(failure->face)},
                                   {"degree", failure->degree},
                                   {"rank", failure->rank},
                                   {"link_dimension", failure->link_dimension}};
        else
          rf[std::to_string(p)] = nullptr;
      }
      if (all) ++case_b_reisner;
      jr["reisner_failures"] = rf;
      jr["deletion_shelling_search"] = detail::status_name(r.direct_search);
    }
    per_vertex.push_back(jr);
  }
  rep.check("case_b_reisner_failures", 13, case_b_reisner);
  cert["vd_refutation"] = per_vertex;

  const VdResult vd = is_vertex_decomposable(g, vd_budget);
  rep.check("vertex_decomposable", "false", to_string(vd.verdict));
  inv["vd_states"] = vd.states;

  // C_16(1,4,8): pure, shellable, not vertex decomposable.
  const SimplicialComplex circ_ind = independence_complex(circ);
  const ShellingCertificate circ_listed = fixtures::c16_listed_order();
  rep.check("circulant_facet_count", 80, circ_ind.facet_count());
  rep.check("circulant_pure", true, circ_ind.is_pure());
  rep.check("circulant_dimension", 3, circ_ind.dimension());
  ShellingCertificate circ_sorted = circ_listed;
  std::sort(circ_sorted.begin(), circ_sorted.end());
  const bool circ_perm = circ_sorted == circ_ind.facets();
  const std::optional<std::size_t> circ_violation =
      circ_perm ? first_shelling_violation(circ_ind, circ_listed) : std::optional<std::size_t>{0};
  rep.check("circulant_listed_order_is_shelling", true, !circ_violation.has_value());
  if (circ_violation)
    inv["circulant_listed_order_first_violation"] = {{"position", *circ_violation + 1},
                                                     {"facet", io::labels(circ_listed[*circ_violation])}};
  const ShellingSearchResult circ_found = find_shelling(circ_ind);
  rep.check("circulant_find_shelling", "found", detail::status_name(circ_found.status));
  if (circ_found.status == ShellingSearchResult::Status::Found)
    cert["circulant_shelling"] = detail::certificate_json(circ_found.certificate, circ_listed);
  const VdResult circ_vd = is_vertex_decomposable(circ, vd_budget);
  rep.check("circulant_vertex_decomposable", "false", to_string(circ_vd.verdict));
  Verdict replayed = Verdict::Inconclusive;
  try {
    replayed = replay_vd_trace(circ, circ_vd.trace);
  } catch (const Error&) {
  }
  rep.check("circulant_vd_trace_replays", "false", to_string(replayed));
  inv["circulant_vd_states"] = circ_vd.states;
  inv["circulant_vd_trace_nodes"] = circ_vd.trace.nodes.size();
  cert["circulant_vd_trace"] = io::to_json(circ_vd.trace);

  inv["graph"] = io::to_json(g);
  inv["height"] = height(ideal);
  inv["minimal_prime_count"] = primes.size();
  inv["facet_count"] = ind.facet_count();
  inv["sequentially_cm_via"] = "shellability";
  inv["graph_stats"] = detail::graph_stats_json(graph_stats(g));
  return rep;
}

}  // namespace sqfree
