#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sqfree/graph.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/ideal.hpp"
#include "sqfree/json_io.hpp"
#include "sqfree/report.hpp"
#include "sqfree/vertex_decomposition.hpp"

// Random search for graphs answering the three-statement question negatively:
// on 2h non-isolated vertices with height h and sequentially Cohen-Macaulay,
// must there be (1) a degree-one vertex, (2) vertex decomposability,
// (3) reg(R/I) = a(G)?
namespace sqfree {

struct HuntConfig {
  enum class Model { ErdosRenyi, Tree };
  std::size_t n = 8;  // vertex count, even
  Model model = Model::ErdosRenyi;
  double edge_probability = 0.4;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t budget = 200'000;  // vd state budget per sample
  // Evaluated before the random samples, as samples 0..k-1.
  std::vector<Graph> seed_graphs;
  std::vector<FieldSpec> fields = default_fields();
};

inline void validate(const HuntConfig& cfg) {
  if (cfg.n < 4 || cfg.n % 2 != 0)
    throw Error(ErrorKind::InvalidInput, "hunt needs an even vertex count of at least 4, got " + std::to_string(cfg.n));
  if (cfg.n > 12) throw Error(ErrorKind::SizeLimit, "hunt evaluates every invariant exactly and stops at 12 vertices");
  if (!(cfg.edge_probability >= 0.0 && cfg.edge_probability <= 1.0))
    throw Error(ErrorKind::InvalidInput, "edge probability must lie in [0, 1]");
  if (cfg.fields.empty()) throw Error(ErrorKind::InvalidInput, "hunt needs at least one field");
  for (const Graph& g : cfg.seed_graphs)
    if (g.ground_size() != cfg.n)
      throw Error(ErrorKind::InvalidInput, "seed graph has " + std::to_string(g.ground_size()) + " vertices, expected " +
                                               std::to_string(cfg.n));
}

struct HuntOutcome {
  enum class Kind { Filtered, Satisfies, Violator, Inconclusive };
  std::size_t index = 0;
  Kind kind = Kind::Filtered;
  std::string note;  // why filtered or inconclusive
  std::optional<Report> report;  // for violators
};

struct HuntSummary {
  std::size_t samples = 0, filtered = 0, satisfying = 0, violators = 0, inconclusive = 0;
  std::vector<HuntOutcome> outcomes;  // index order
};

namespace detail {

inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

inline Graph sample_graph(const HuntConfig& cfg, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Edge> edges;
  if (cfg.model == HuntConfig::Model::Tree) {
    for (std::size_t v = 1; v < cfg.n; ++v) edges.emplace_back(uniform_below(rng, v), v);
  } else {
    for (std::size_t u = 0; u < cfg.n; ++u)
      for (std::size_t v = u + 1; v < cfg.n; ++v)
        if (unit_uniform(rng) < cfg.edge_probability) edges.emplace_back(u, v);
  }
  return Graph(cfg.n, edges);
}

inline HuntOutcome evaluate_sample(const HuntConfig& cfg, const Graph& g, std::size_t index) {
  HuntOutcome out;
  out.index = index;
  const GraphStats st = graph_stats(g);
  if (!st.isolated_vertices.empty()) {
    out.note = "isolated vertex";
    return out;
  }
  const SqFreeIdeal ideal = edge_ideal(g);
  const std::size_t h = height(ideal);
  if (2 * h != g.ground_size()) {
    out.note = "height " + std::to_string(h);
    return out;
  }
  json scm = json::object();
  std::size_t scm_true = 0;
  for (const auto& f : cfg.fields) {
    const bool s = is_sequentially_cm(g, f);
    scm[std::to_string(f.characteristic)] = s;
    scm_true += s ? 1 : 0;
  }
  if (scm_true == 0) {
    out.note = "not sequentially Cohen-Macaulay";
    return out;
  }
  if (scm_true != cfg.fields.size()) {
    out.kind = HuntOutcome::Kind::Inconclusive;
    out.note = "sequential Cohen-Macaulayness depends on the characteristic";
    return out;
  }

  const VdResult vd = is_vertex_decomposable(g, cfg.budget);
  if (vd.verdict == Verdict::Inconclusive) {
    out.kind = HuntOutcome::Kind::Inconclusive;
    out.note = "vd state budget exhausted";
    return out;
  }
  const InducedMatching matching = maximum_induced_matching(g);

  Report rep("hunt-sample-" + std::to_string(index));
  rep.check("degree_one_vertex", true, st.has_degree_one_vertex);
  rep.check("vertex_decomposable", "true", to_string(vd.verdict));
  json tables = json::array();
  json regs = json::object();
  for (const auto& f : cfg.fields) {
    const BettiTable t = betti_table(ideal, BettiSubject::Quotient, f);
    const std::string p = std::to_string(f.characteristic);
    regs[p] = t.regularity();
    tables.push_back(io::to_json(t));
    rep.check("reg_equals_induced_matching[char " + p + "]", matching.size, t.regularity());
  }
  if (rep.passed()) {
    out.kind = HuntOutcome::Kind::Satisfies;
    return out;
  }

  json& inv = rep.invariants();
  inv["graph"] = io::to_json(g);
  inv["height"] = h;
  inv["sequentially_cm"] = scm;
  per_char(inv, "reg_quotient", regs);
  inv["induced_matching_number"] = matching.size;
  inv["graph_stats"] = graph_stats_json(st);
  rep.certificates()["betti_tables"] = tables;
  rep.certificates()["induced_matching"] = label_pairs(matching.edges);
  if (vd.verdict == Verdict::False) rep.certificates()["vd_trace"] = io::to_json(vd.trace);
  out.kind = HuntOutcome::Kind::Violator;
  out.report = std::move(rep);
  return out;
}

}  // namespace detail

// Evaluates seed graphs then `samples` random graphs. Samples run in
// parallel; outcomes are kept in index order, so the result depends only on
// the configuration.
inline HuntSummary hunt(const HuntConfig& cfg) {
  validate(cfg);
  HuntSummary summary;
  const std::size_t total = cfg.seed_graphs.size() + cfg.samples;
  summary.samples = total;
  summary.outcomes.resize(total);
  detail::parallel_for(total, [&](std::size_t i) {
    const Graph g = i < cfg.seed_graphs.size() ? cfg.seed_graphs[i]
                                                : detail::sample_graph(cfg, i - cfg.seed_graphs.size());
    summary.outcomes[i] = detail::evaluate_sample(cfg, g, i);
  });
  for (const auto& o : summary.outcomes) {
    switch (o.kind) {
      case HuntOutcome::Kind::Filtered: ++summary.filtered; break;
      case HuntOutcome::Kind::Satisfies: ++summary.satisfying; break;
      case HuntOutcome::Kind::Violator: ++summary.violators; break;
      case HuntOutcome::Kind::Inconclusive: ++summary.inconclusive; break;
    }
  }
  return summary;
}

}  // namespace sqfree
