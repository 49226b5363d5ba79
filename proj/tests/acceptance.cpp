// Acceptance gate: one PASS/FAIL line per criterion, each with its runtime
// limit. Usage: acceptance [criterion...]; no arguments runs all six.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sqfree/cohen_macaulay.hpp"
#include "sqfree/fixtures.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/json_io.hpp"
#include "sqfree/refutation.hpp"
#include "sqfree/shelling.hpp"
#include "sqfree/vertex_decomposition.hpp"

using namespace sqfree;
using Status = ShellingSearchResult::Status;

namespace {

// Collects sub-check outcomes for one criterion.
class Gate {
 public:
  void expect(bool ok, const std::string& what) {
    std::printf("    [%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    all_ &= ok;
  }
  void note(const std::string& what) { std::printf("    %s\n", what.c_str()); }
  bool ok() const { return all_; }

 private:
  bool all_ = true;
};

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string labels(VertexSet s) { return bits::to_string(s); }

std::map<std::pair<int, int>, std::uint64_t> nonzero(const BettiTable& t) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [ij, b] : t.entries)
    if (b) out[ij] = b;
  return out;
}

void criterion1(Gate& g) {
  const Graph G = fixtures::leafless8();
  const SqFreeIdeal I = edge_ideal(G);
  g.expect(height(I) == 4, "height(I) = 4");
  auto P = [](std::initializer_list<int> l) { return bits::from_labels(l, 8); };
  const PrimeList expected = sorted({P({5, 6, 7, 8}), P({1, 2, 3, 4, 7}), P({1, 2, 3, 4, 8}), P({1, 2, 3, 6, 8}),
                                     P({1, 2, 4, 6, 7}), P({1, 2, 6, 7, 8})});
  g.expect(minimal_primes(I) == expected, "minimal_primes = the six listed primes");
  const SqFreeIdeal dual = alexander_dual(I);
  for (const auto& f : default_fields()) {
    const std::string p = " over F_" + std::to_string(f.characteristic);
    g.expect(regularity(I, BettiSubject::Quotient, f) == 2, "reg(R/I) = 2" + p);
    g.expect(regularity(dual, BettiSubject::Ideal, f) == 5, "reg(I^v) = 5" + p);
    const bool cl = is_componentwise_linear(dual, f);
    g.expect(cl, "I^v componentwise linear" + p);
    g.expect(cl && is_sequentially_cm(G, f), "is_sequentially_cm = true" + p);
    g.expect(is_sequentially_cm(G, f, ComponentwiseMethod::FullScan), "is_sequentially_cm (full scan) = true" + p);
  }
  g.expect(induced_matching_number(G) == 1, "a(G) = 1");
  g.expect(!graph_stats(G).has_degree_one_vertex, "no vertex of degree 1");
}

void criterion2(Gate& g) {
  const Graph C = fixtures::c16();
  const SimplicialComplex ind = independence_complex(C);
  g.expect(ind.facet_count() == 80, "Ind(C_16(1,4,8)) has 80 facets");
  g.expect(ind.is_pure() && ind.dimension() == 3, "pure of dimension 3");

  const ShellingCertificate listed = fixtures::c16_listed_order();
  const bool permutation = sorted(listed) == ind.facets();
  g.expect(permutation, "listed F_1..F_80 is a permutation of the facets");
  const auto violation = permutation ? first_shelling_violation(ind, listed) : std::optional<std::size_t>{0};
  g.expect(!violation, "verify_shelling accepts the listed order F_1..F_80");
  if (violation)
    g.note("first violation at F_" + std::to_string(*violation + 1) + " = " + labels(listed[*violation]));

  const ShellingSearchResult found = find_shelling(ind);
  g.expect(found.status == Status::Found && verify_shelling(ind, found.certificate),
           "find_shelling returns a certificate that verifies");
  ShellingSearchOptions seeded;
  seeded.preferred_order = listed;
  const ShellingSearchResult repaired = find_shelling(ind, seeded);
  g.expect(repaired.status == Status::Found && verify_shelling(ind, repaired.certificate),
           "search seeded with the listed order returns a certificate that verifies");

  const VdResult vd = is_vertex_decomposable(C);
  g.expect(vd.verdict == Verdict::False, "is_vertex_decomposable(C_16(1,4,8)) = false (" +
                                             std::to_string(vd.states) + " states)");
  Verdict replayed = Verdict::Inconclusive;
  try {
    replayed = replay_vd_trace(C, io::trace_from_json(io::json::parse(io::to_json(vd.trace).dump()), 16));
  } catch (const Error& e) {
    g.note(std::string("replay error: ") + e.what());
  }
  g.expect(replayed == Verdict::False, "trace replays (after JSON round trip) to false");
}

void criterion3(Gate& g) {
  const Graph G = fixtures::joined26();
  const SimplicialComplex ind = independence_complex(G);
  const ShellingCertificate listed = fixtures::joined26_listed_order();
  g.expect(ind.facets() == sorted(listed), "facet set of Ind(G26) = {F_0..F_80}");
  const auto violation = first_shelling_violation(ind, listed);
  g.expect(!violation, "verify_shelling accepts F_0,F_1,..,F_80");
  if (violation)
    g.note("first violation at F_" + std::to_string(*violation) + " = " + labels(listed[*violation]));
  ShellingSearchOptions seeded;
  seeded.preferred_order = listed;
  const auto repaired = find_shelling(ind, seeded);
  g.expect(repaired.status == Status::Found && verify_shelling(ind, repaired.certificate),
           "search seeded with the listed order returns a certificate that verifies");

  const SqFreeIdeal I = edge_ideal(G);
  g.expect(height(I) == 13, "height(I) = 13");
  const PrimeList primes = minimal_primes(I);
  std::vector<VertexSet> predicted;
  for (VertexSet p : minimal_primes(edge_ideal(fixtures::c16()))) predicted.push_back(p | (bits::full(26) & ~bits::full(16)));
  predicted.push_back(bits::from_labels({1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 16}, 26));
  g.expect(primes.size() == 81, "81 minimal primes");
  g.expect(primes == sorted(predicted), "primes = (p_i, x_17..x_26) for the 80 circulant primes, plus the joined block");

  const Joined26Refutation r = refute_vd_joined26(G);
  std::size_t reasons = 0, case_b_reisner = 0;
  for (const auto& v : r.vertices) {
    reasons += v.resolved ? 1 : 0;
    if (v.kind == VertexRefutation::Case::CirculantNotCohenMacaulay) {
      bool all = v.circulant_deletion_pure && v.reisner.size() == default_fields().size();
      for (const auto& [p, failure] : v.reisner) all = all && failure.has_value();
      case_b_reisner += all ? 1 : 0;
    }
  }
  g.expect(reasons == 26, "refute_vd_joined26 resolves all 26 vertices (" + std::to_string(reasons) + ")");
  g.expect(case_b_reisner == 13, "Reisner failure over F_2 and F_32003 for all 13 case-B vertices (" +
                                     std::to_string(case_b_reisner) + ")");
  g.expect(r.verdict == Verdict::False, "verdict: not vertex decomposable");
}

void criterion4(Gate& g) {
  oracle::Rng rng(20240401);
  std::size_t mismatches = 0, katzman = 0, equality = 0, trees = 0, chordal = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + oracle::below(rng, 8);
    Graph G;
    const int kind = t % 4;  // random, random, tree, chordal
    if (kind == 2) G = oracle::random_tree(n, rng);
    else if (kind == 3) G = oracle::random_chordal(n, rng);
    else G = oracle::random_graph(n, oracle::uniform(rng), rng);
    const SqFreeIdeal I = edge_ideal(G);
    int reg = 0;
    for (const auto& f : default_fields()) {
      const BettiTable t = betti_table(I, BettiSubject::Quotient, f);
      if (nonzero(t) != oracle::koszul_betti(I, f.characteristic)) ++mismatches;
      reg = t.regularity();
    }
    const int a = static_cast<int>(induced_matching_number(G));
    if (reg < a) ++katzman;
    if (kind >= 2) {
      (kind == 2 ? trees : chordal)++;
      if (reg != a) ++equality;
    }
  }
  g.expect(mismatches == 0, "Hochster tables = Koszul-complex tables on 200 graphs x 2 fields (" +
                                std::to_string(mismatches) + " mismatches)");
  g.expect(katzman == 0, "reg(R/I(G)) >= a(G) on every sample");
  g.expect(equality == 0, "reg = a(G) on " + std::to_string(trees) + " trees and " + std::to_string(chordal) +
                              " chordal graphs");
}

// Every complex on a labeled ground set of size <= 6 (about 7.8M antichains).
void criterion5(Gate& g) {
  std::size_t complexes = 0, vd = 0, vd_not_shellable = 0, inconclusive = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    oracle::for_each_antichain(n, [&](const std::vector<VertexSet>& facets) {
      ++complexes;
      const SimplicialComplex c = SimplicialComplex::from_facets(n, facets);
      const Verdict v = is_vertex_decomposable(c);
      if (v == Verdict::Inconclusive) ++inconclusive;
      if (v != Verdict::True) return;
      ++vd;
      const auto s = find_shelling(c);
      if (s.status != Status::Found || !verify_shelling(c, s.certificate)) ++vd_not_shellable;
    });
  }
  g.expect(inconclusive == 0 && vd_not_shellable == 0,
           "VD => shellable on " + std::to_string(complexes) + " complexes with ground <= 6 (" + std::to_string(vd) +
               " VD, " + std::to_string(vd_not_shellable) + " counterexamples)");

  oracle::Rng rng(20240405);
  std::size_t graphs = 0, disagree = 0, chain = 0, shellable = 0, shellable_not_scm = 0;
  auto check_graph = [&](const Graph& G) {
    ++graphs;
    const SimplicialComplex ind = independence_complex(G);
    const Verdict gv = is_vertex_decomposable(G).verdict;
    const Verdict cv = is_vertex_decomposable(ind);
    if (gv != cv || gv == Verdict::Inconclusive) ++disagree;
    const auto s = find_shelling(ind);
    const bool sh = s.status == Status::Found && verify_shelling(ind, s.certificate);
    if (gv == Verdict::True && !sh) ++chain;
    if (sh && !G.is_edgeless()) {
      ++shellable;
      for (const auto& f : default_fields())
        if (!is_sequentially_cm(G, f)) {
          ++shellable_not_scm;
          break;
        }
    }
  };
  // every labeled graph on up to 5 vertices, then random graphs on 6 and 7
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1U) e.push_back(pairs[k]);
      check_graph(Graph(n, e));
    }
  }
  for (int t = 0; t < 400; ++t) check_graph(oracle::random_graph(6 + t % 2, oracle::uniform(rng), rng));
  g.expect(disagree == 0, "graph-level VD = complex-level VD on Ind(G) for " + std::to_string(graphs) + " graphs");
  g.expect(chain == 0, "VD graph => Ind(G) shellable");
  g.expect(shellable_not_scm == 0, "Ind(G) shellable => sequentially CM over both fields (" +
                                       std::to_string(shellable) + " shellable graphs)");
}

void criterion6(Gate& g) {
  oracle::Rng rng(20240406);
  std::size_t sr = 0, inv = 0, primes = 0, cx = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + oracle::below(rng, 8);
    const SqFreeIdeal I = oracle::random_ideal(n, rng);
    if (stanley_reisner_ideal(complex_of_ideal(I)) != I) ++sr;
    const SimplicialComplex c = oracle::random_complex(n, rng);
    if (complex_of_ideal(stanley_reisner_ideal(c)) != c) ++cx;
    const SqFreeIdeal dual = alexander_dual(I);
    if (alexander_dual(dual) != I) ++inv;
    if (minimal_primes(I) != dual.generators() || dual.generators() != oracle::minimal_transversals(I)) ++primes;
  }
  g.expect(sr == 0 && cx == 0, "Stanley-Reisner round trips are identities on 100 ideals and 100 complexes");
  g.expect(inv == 0, "Alexander duality is an involution on 100 ideals");
  g.expect(primes == 0, "minimal_primes = dual generators = brute-force transversals on 100 ideals");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Gate&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "8-vertex example reproduction", 10, criterion1},
      {2, "C_16(1,4,8): shellable, not vertex decomposable", 300, criterion2},
      {3, "26-vertex example reproduction", 600, criterion3},
      {4, "Hochster vs Koszul oracle; Katzman bound; tree/chordal equality", 300, criterion4},
      {5, "implication chain and graph/complex VD equivalence", 600, criterion5},
      {6, "round trips and duality laws", 60, criterion6},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    std::printf("criterion %d: %s\n", c.id, c.title);
    std::fflush(stdout);
    Gate gate;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(gate);
    } catch (const std::exception& e) {
      gate.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    gate.expect(secs < c.limit_s, "runtime " + std::to_string(secs) + " s < " + std::to_string(c.limit_s) + " s");
    std::printf("criterion %d: %s\n", c.id, gate.ok() ? "PASS" : "FAIL");
    std::fflush(stdout);
    all_ok &= gate.ok();
  }
  return all_ok ? 0 : 1;
}
