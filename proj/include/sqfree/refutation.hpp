#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/cohen_macaulay.hpp"
#include "sqfree/complex.hpp"
#include "sqfree/fixtures.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/shelling.hpp"
#include "sqfree/vertex_decomposition.hpp"

namespace sqfree {

// Why vertex t of the 26-vertex graph cannot open a vertex decomposition of
// its independence complex.
struct VertexRefutation {
  enum class Case { NewFacet, CirculantNotCohenMacaulay };
  std::size_t vertex = 0;  // 0-based
  Case kind = Case::NewFacet;
  bool resolved = false;

  // NewFacet (t in {x_9, x_11, x_14, x_17..x_26}): a facet of del(t) outside
  // F_0..F_80, and which argument closed the case.
  std::optional<VertexSet> new_facet;
  std::string justification;  // "not_shedding", "deletion_not_vd" or "unresolved"
  std::optional<VertexSet> shedding_witness;
  // Budgeted generic recursion on G \ t, run whether or not it was needed.
  Verdict deletion_vd = Verdict::Inconclusive;

  // CirculantNotCohenMacaulay (the other 13 vertices): del of Ind(C_16(1,4,8))
  // at t is pure but fails Reisner's criterion in every tested field, so it is
  // not shellable, hence neither is del of Ind(G) at t.
  bool circulant_deletion_pure = false;
  std::vector<std::pair<std::uint32_t, std::optional<ReisnerFailure>>> reisner;
  ShellingSearchResult::Status direct_search = ShellingSearchResult::Status::Inconclusive;
};

struct Joined26Refutation {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<VertexRefutation> vertices;
};

// Per-vertex refutation of vertex decomposability for the 26-vertex graph,
// following the two-case split: join vertices and x_9, x_11, x_14 fail
// directly, the other circulant vertices fail through non-Cohen-Macaulay
// deletions of Ind(C_16(1,4,8)).
inline Joined26Refutation refute_vd_joined26(const Graph& g26, std::size_t deletion_budget = 200'000,
                                               const std::vector<FieldSpec>& fields = default_fields()) {
  if (independence_complex(g26) != independence_complex(fixtures::joined26()))
    throw Error(ErrorKind::InvalidInput, "input is not the 26-vertex counterexample graph");

  const SimplicialComplex ind = independence_complex(g26);
  const ShellingCertificate listed = fixtures::joined26_listed_order();
  const SimplicialComplex circulant_ind = independence_complex(fixtures::c16());
  VertexSet case_a = 0;
  for (int l : fixtures::kFreeCirculantLabels) case_a |= bits::single(static_cast<std::size_t>(l - 1));
  for (std::size_t v = 16; v < 26; ++v) case_a |= bits::single(v);

  Joined26Refutation out;
  out.vertices.resize(26);
  detail::parallel_for(26, [&](std::size_t t) {
    VertexRefutation& r = out.vertices[t];
    r.vertex = t;
    const SimplicialComplex del = deletion(ind, bits::single(t));
    if (bits::contains(case_a, t)) {
      r.kind = VertexRefutation::Case::NewFacet;
      for (VertexSet f : del.facets())
        if (std::find(listed.begin(), listed.end(), f) == listed.end()) {
          r.new_facet = f;
          break;
        }
      r.deletion_vd = is_vertex_decomposable(g26.without(bits::single(t)), deletion_budget).verdict;
      if (auto w = shedding_obstruction(g26, t)) {
        r.justification = "not_shedding";
        r.shedding_witness = *w;
        r.resolved = true;
      } else if (r.deletion_vd == Verdict::False) {
        r.justification = "deletion_not_vd";
        r.resolved = true;
      } else {
        r.justification = "unresolved";
      }
    } else {
      r.kind = VertexRefutation::Case::CirculantNotCohenMacaulay;
      const SimplicialComplex circ_del = deletion(circulant_ind, bits::single(t));
      r.circulant_deletion_pure = circ_del.is_pure();
      bool all_fail = true;
      for (const FieldSpec& f : fields) {
        auto failure = reisner_failure(circ_del, f);
        all_fail = all_fail && failure.has_value();
        r.reisner.emplace_back(f.characteristic, failure);
      }
      r.direct_search = find_shelling(del).status;
      r.resolved = r.circulant_deletion_pure && all_fail && !fields.empty();
    }
  });

  const bool all = std::all_of(out.vertices.begin(), out.vertices.end(), [](const auto& r) { return r.resolved; });
  out.verdict = all ? Verdict::False : Verdict::Inconclusive;
  return out;
}

}  // namespace sqfree
