// Command-line front end. Every subcommand reads JSON files and writes one
// JSON document (or JSON lines, for hunt) to stdout.
//
// Exit codes: 0 verified / true, 1 refuted / false, 2 invalid input,
// 3 inconclusive (budget, cap or size limit reached).

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqfree/cohen_macaulay.hpp"
#include "sqfree/complex.hpp"
#include "sqfree/fixtures.hpp"
#include "sqfree/graph.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/hunt.hpp"
#include "sqfree/ideal.hpp"
#include "sqfree/json_io.hpp"
#include "sqfree/report.hpp"
#include "sqfree/shelling.hpp"
#include "sqfree/vertex_decomposition.hpp"

namespace {

using namespace sqfree;
using io::json;

constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kInvalid = 2;
constexpr int kInconclusive = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<FieldSpec> parse_fields(const std::string& spec) {
  std::vector<FieldSpec> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorKind::InvalidInput, "bad characteristic '" + item + "'");
    out.emplace_back(static_cast<std::uint32_t>(p));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "no characteristic given");
  return out;
}

json field_list(const std::vector<FieldSpec>& fields) {
  json out = json::array();
  for (const auto& f : fields) out.push_back(f.characteristic);
  return out;
}

int analyze_graph(const std::string& path, const std::vector<FieldSpec>& fields, std::size_t budget) {
  const Graph g = io::graph_from_json(io::load_file(path));
  const GraphStats st = graph_stats(g);
  json out = {{"graph", io::to_json(g)}, {"edges", g.edge_count()}, {"characteristics", field_list(fields)}};
  out["graph_stats"] = detail::graph_stats_json(st);
  out["maximal_independent_sets"] = maximal_independent_sets(g).size();
  const InducedMatching m = maximum_induced_matching(g);
  out["induced_matching_number"] = m.size;
  out["induced_matching"] = detail::label_pairs(m.edges);
  const SqFreeIdeal ideal = edge_ideal(g);
  if (!ideal.is_zero()) {
    out["height"] = height(ideal);
    out["minimal_primes"] = detail::label_sets(minimal_primes(ideal));
  }
  if (g.ground_size() <= kMaxHochsterVariables) {
    json reg = json::object(), scm = json::object();
    for (const auto& f : fields) {
      const std::string p = std::to_string(f.characteristic);
      reg[p] = ideal.is_zero() ? 0 : regularity(ideal, BettiSubject::Quotient, f);
      if (!ideal.is_zero()) scm[p] = is_sequentially_cm(g, f);
    }
    detail::per_char(out, "reg_quotient", reg);
    if (!ideal.is_zero()) detail::per_char(out, "sequentially_cm", scm);
  } else {
    out["reg_quotient"] = "skipped: more than 16 vertices";
  }
  const VdResult vd = is_vertex_decomposable(g, budget);
  out["vertex_decomposable"] = to_string(vd.verdict);
  out["vd_states"] = vd.states;
  emit(out);
  return kVerified;
}

int analyze_complex(const std::string& path, const std::vector<FieldSpec>& fields) {
  const SimplicialComplex c = io::complex_from_json(io::load_file(path));
  const ComplexStats st = complex_stats(c);
  json out = {{"complex", io::to_json(c)}, {"characteristics", field_list(fields)}};
  out["dimension"] = c.is_void() ? json("void") : json(st.dimension);
  out["is_pure"] = st.is_pure;
  out["is_simplex"] = st.is_simplex;
  out["facet_count"] = st.facet_count;
  out["f_vector"] = st.f_vector;
  out["stanley_reisner_ideal"] = io::to_json(stanley_reisner_ideal(c));
  if (!c.is_void()) {
    json homology = json::object(), cm = json::object();
    for (const auto& f : fields) {
      const std::string p = std::to_string(f.characteristic);
      json dims = json::object();
      for (auto [d, r] : reduced_homology_dims(c, f)) dims[std::to_string(d)] = r;
      homology[p] = dims;
      if (bits::count(c.vertices()) <= static_cast<int>(kMaxReisnerVertices)) cm[p] = is_cohen_macaulay(c, f);
    }
    detail::per_char(out, "reduced_homology", homology);
    if (!cm.empty()) detail::per_char(out, "cohen_macaulay", cm);
  }
  emit(out);
  return kVerified;
}

int betti(const std::string& path, const std::vector<FieldSpec>& fields, const std::string& subject_name) {
  const SqFreeIdeal ideal = io::ideal_from_json(io::load_file(path));
  const BettiSubject subject = subject_name == "ideal" ? BettiSubject::Ideal : BettiSubject::Quotient;
  json tables = json::array();
  json reg = json::object();
  for (const auto& f : fields) {
    const BettiTable t = betti_table(ideal, subject, f);
    tables.push_back(io::to_json(t));
    reg[std::to_string(f.characteristic)] = t.regularity();
  }
  json out = {{"tables", tables}};
  detail::per_char(out, "regularity", reg);
  emit(out);
  return kVerified;
}

int shelling_verify(const std::string& complex_path, const std::string& order_path) {
  const json cj = io::load_file(complex_path);
  const SimplicialComplex c = io::complex_from_json(cj);
  const auto listed = io::listed_facets(cj);
  const ShellingCertificate order = io::certificate_from_json(io::load_file(order_path), listed, c.ground_size());
  const auto violation = first_shelling_violation(c, order);
  json out = {{"shelling", !violation.has_value()}};
  if (violation) out["first_violation"] = {{"position", *violation}, {"facet", io::labels(order[*violation])}};
  emit(out);
  return violation ? kRefuted : kVerified;
}

int shelling_find(const std::string& complex_path, std::size_t cap, std::size_t budget) {
  const json cj = io::load_file(complex_path);
  const SimplicialComplex c = io::complex_from_json(cj);
  ShellingSearchOptions opts;
  opts.facet_cap = cap;
  opts.node_budget = budget;
  const ShellingSearchResult r = find_shelling(c, opts);
  json out = {{"status", detail::status_name(r.status)}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.status == ShellingSearchResult::Status::Found)
    out["order"] = detail::certificate_json(r.certificate, io::listed_facets(cj));
  emit(out);
  switch (r.status) {
    case ShellingSearchResult::Status::Found: return kVerified;
    case ShellingSearchResult::Status::NotShellable: return kRefuted;
    default: return kInconclusive;
  }
}

int vd(const std::string& path, std::size_t budget, bool with_trace, const std::string& check_trace) {
  const Graph g = io::graph_from_json(io::load_file(path));
  if (!check_trace.empty()) {
    const VdTrace t = io::trace_from_json(io::load_file(check_trace), g.ground_size());
    const Verdict v = replay_vd_trace(g, t);
    emit({{"trace_valid", true}, {"verdict", to_string(v)}});
    return v == Verdict::True ? kVerified : v == Verdict::False ? kRefuted : kInconclusive;
  }
  const VdResult r = is_vertex_decomposable(g, budget);
  json out = {{"verdict", to_string(r.verdict)}, {"states", r.states}};
  if (with_trace && r.verdict != Verdict::Inconclusive) out["trace"] = io::to_json(r.trace);
  emit(out);
  return r.verdict == Verdict::True ? kVerified : r.verdict == Verdict::False ? kRefuted : kInconclusive;
}

int reproduce(const std::string& which, bool timing) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep = which == "ex1" ? report_counterexample1() : report_counterexample2();
  if (timing)
    rep.set_timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  emit(rep.to_json());
  return rep.passed() ? kVerified : kRefuted;
}

int run_hunt(HuntConfig cfg, bool with_example) {
  if (with_example) {
    const Graph ex = fixtures::leafless8();
    if (cfg.n != ex.ground_size()) throw Error(ErrorKind::InvalidInput, "--with-example needs --n 8");
    cfg.seed_graphs.push_back(ex);
  }
  const HuntSummary s = hunt(cfg);
  for (const auto& o : s.outcomes) {
    if (o.kind == HuntOutcome::Kind::Violator) {
      json j = o.report->to_json();
      j["sample"] = o.index;
      std::cout << j.dump() << "\n";
    } else if (o.kind == HuntOutcome::Kind::Inconclusive) {
      std::cerr << "sample " << o.index << " skipped: " << o.note << "\n";
    }
  }
  json summary = {{"summary",
                   {{"samples", s.samples},
                    {"filtered", s.filtered},
                    {"satisfying", s.satisfying},
                    {"violators", s.violators},
                    {"inconclusive", s.inconclusive}}}};
  std::cout << summary.dump() << "\n";
  return kVerified;
}

void write_json(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + p.string());
  out << j.dump(2) << "\n";
}

int fixtures_cmd(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path d(dir);
  const Graph ex23 = fixtures::leafless8();
  const Graph ex25 = fixtures::joined26();
  const Graph c16 = fixtures::c16();
  write_json(d / "leafless8_graph.json", io::to_json(ex23));
  write_json(d / "leafless8_ideal.json", io::to_json(edge_ideal(ex23)));
  write_json(d / "leafless8_dual.json", io::to_json(alexander_dual(edge_ideal(ex23))));
  write_json(d / "c16_graph.json", io::to_json(c16));
  write_json(d / "joined26_graph.json", io::to_json(ex25));

  // Complexes keep the listed facet order so certificates can index into them.
  auto listed_complex = [](std::size_t n, const ShellingCertificate& order) {
    json facets = json::array();
    for (VertexSet f : order) facets.push_back(io::labels(f));
    return json{{"ground_n", n}, {"facets", facets}};
  };
  auto identity = [](std::size_t m) {
    json idx = json::array();
    for (std::size_t i = 0; i < m; ++i) idx.push_back(i);
    return json{{"order", idx}};
  };
  const auto listed26 = fixtures::joined26_listed_order();
  const auto listed16 = fixtures::c16_listed_order();
  write_json(d / "joined26_complex.json", listed_complex(26, listed26));
  write_json(d / "joined26_listed_order.json", identity(listed26.size()));
  write_json(d / "c16_complex.json", listed_complex(16, listed16));
  write_json(d / "c16_listed_order.json", identity(listed16.size()));
  std::cout << "wrote fixtures to " << dir << "\n";
  return kVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of graphs and square-free monomial ideals"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string file, second, chars = "2,32003", subject = "quotient", which, check_trace;
  std::size_t budget = 2'000'000, cap = 100, node_budget = 20'000'000;
  bool with_trace = false, timing = false, with_example = false;
  HuntConfig hunt_cfg;
  std::string model = "er";

  auto* ag = app.add_subcommand("analyze-graph", "Invariants of a graph file");
  ag->add_option("file", file, "graph JSON")->required();
  ag->add_option("--char", chars, "comma-separated characteristics");
  ag->add_option("--budget", budget, "vd state budget");

  auto* ac = app.add_subcommand("analyze-complex", "Invariants of a complex file");
  ac->add_option("file", file, "complex JSON")->required();
  ac->add_option("--char", chars, "comma-separated characteristics");

  auto* bt = app.add_subcommand("betti", "Betti tables via Hochster's formula");
  bt->add_option("file", file, "ideal JSON")->required();
  bt->add_option("--char", chars, "comma-separated characteristics");
  bt->add_option("--subject", subject, "ideal or quotient")->check(CLI::IsMember({"ideal", "quotient"}));

  auto* sh = app.add_subcommand("shelling", "Check or search for shellings");
  sh->require_subcommand(1);
  auto* sv = sh->add_subcommand("verify", "Check a facet order");
  sv->add_option("complex", file, "complex JSON")->required();
  sv->add_option("order", second, "order JSON: facet indices (0-based)")->required();
  auto* sf = sh->add_subcommand("find", "Search for a shelling");
  sf->add_option("complex", file, "complex JSON")->required();
  sf->add_option("--cap", cap, "largest facet count to search");
  sf->add_option("--budget", node_budget, "search node budget");

  auto* vdc = app.add_subcommand("vd", "Vertex decomposability of a graph");
  vdc->add_option("file", file, "graph JSON")->required();
  vdc->add_option("--budget", budget, "state budget");
  vdc->add_flag("--trace", with_trace, "include the decision trace");
  vdc->add_option("--check-trace", check_trace, "replay a trace file instead of searching");

  auto* pp = app.add_subcommand("paper", "Reproduce a counterexample report");
  pp->add_option("which", which, "ex1 or ex2")->required()->check(CLI::IsMember({"ex1", "ex2"}));
  pp->add_flag("--timing", timing, "include wall time (output no longer byte-stable)");

  auto* hu = app.add_subcommand("hunt", "Random search for violators");
  hu->add_option("--n", hunt_cfg.n, "vertex count (even, 4..12)");
  hu->add_option("--samples", hunt_cfg.samples, "random samples");
  hu->add_option("--seed", hunt_cfg.seed, "seed");
  hu->add_option("--p", hunt_cfg.edge_probability, "edge probability");
  hu->add_option("--model", model, "er or tree")->check(CLI::IsMember({"er", "tree"}));
  hu->add_option("--budget", hunt_cfg.budget, "vd state budget per sample");
  hu->add_option("--char", chars, "comma-separated characteristics");
  hu->add_flag("--with-example", with_example, "evaluate the 8-vertex example first");

  auto* fx = app.add_subcommand("fixtures", "Write the example objects as JSON");
  fx->add_option("dir", file, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }

  try {
    if (*ag) return analyze_graph(file, parse_fields(chars), budget);
    if (*ac) return analyze_complex(file, parse_fields(chars));
    if (*bt) return betti(file, parse_fields(chars), subject);
    if (*sv) return shelling_verify(file, second);
    if (*sf) return shelling_find(file, cap, node_budget);
    if (*vdc) return vd(file, budget, with_trace, check_trace);
    if (*pp) return reproduce(which, timing);
    if (*hu) {
      hunt_cfg.model = model == "tree" ? HuntConfig::Model::Tree : HuntConfig::Model::ErdosRenyi;
      hunt_cfg.fields = parse_fields(chars);
      return run_hunt(hunt_cfg, with_example);
    }
    if (*fx) return fixtures_cmd(file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeLimit ? kInconclusive : kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
