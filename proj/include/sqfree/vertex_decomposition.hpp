#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/graph.hpp"
#include "sqfree/vertex_set.hpp"

namespace sqfree {

enum class Verdict { True, False, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "inconclusive";
  }
}

namespace detail {

// First maximal independent set of g accepted by `pred`, if any.
template <typename Pred>
std::optional<VertexSet> find_maximal_independent_set(const Graph& g, Pred&& pred) {
  std::array<VertexSet, kMaxVertices> nonadj{};
  const VertexSet present = g.vertices();
  bits::for_each(present, [&](std::size_t v) { nonadj[v] = present & ~g.neighbors(v) & ~bits::single(v); });
  std::optional<VertexSet> found;
  auto search = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (found) return;
    if (p == 0 && x == 0) {
      if (pred(r)) found = r;
      return;
    }
    int best = -1;
    VertexSet pivot_nbrs = 0;
    bits::for_each(p | x, [&](std::size_t u) {
      int c = bits::count(p & nonadj[u]);
      if (c > best) {
        best = c;
        pivot_nbrs = nonadj[u];
      }
    });
    bits::for_each(p & ~pivot_nbrs, [&](std::size_t v) {
      if (found) return;
      self(self, r | bits::single(v), p & nonadj[v], x & nonadj[v]);
      p &= ~bits::single(v);
      x |= bits::single(v);
    });
  };
  search(search, 0, present, 0);
  return found;
}

}  // namespace detail

// An independent set of G \ N[v] that is maximal in G \ v, i.e. a maximal
// independent set of G \ v missing N(v). Its existence means v does not
// shed.
inline std::optional<VertexSet> shedding_obstruction(const Graph& g, std::size_t v) {
  const VertexSet nbrs = g.neighbors(v);
  const Graph rest = g.without(g.closed_neighborhood(v));
  return detail::find_maximal_independent_set(rest, [&](VertexSet s) {
    bool dominated = true;
    bits::for_each(nbrs, [&](std::size_t u) { dominated = dominated && (g.neighbors(u) & s) != 0; });
    return dominated;
  });
}

// Every maximal independent set of G \ v meets N(v).
inline bool is_shedding_vertex(const Graph& g, std::size_t v) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v + 1) + " not in graph");
  return !shedding_obstruction(g, v).has_value();
}

// Complex form: no face of lk(v) is a facet of del(v).
inline bool is_shedding_vertex(const SimplicialComplex& c, std::size_t v) {
  const SimplicialComplex del = deletion(c, bits::single(v));
  for (VertexSet f : del.facets())
    if (c.contains(f | bits::single(v))) return false;
  return true;
}

// One node of a vertex-decomposition trace, for the induced subgraph on
// `vertices`.
struct VdNode {
  enum class Kind { Edgeless, Shed, Refuted };
  struct Reason {
    enum class Kind { NotShedding, LinkNotVd, DeletionNotVd };
    std::size_t vertex = 0;
    Kind kind = Kind::NotShedding;
    VertexSet witness = 0;  // for NotShedding
  };

  VertexSet vertices = 0;
  Kind kind = Kind::Edgeless;
  std::size_t shedding_vertex = 0;  // for Shed
  std::vector<Reason> reasons;      // for Refuted, one per vertex
};

// Replayable record of a vertex-decomposability decision. Nodes are shared
// between branches and keyed by induced-subgraph vertex set, so the trace is
// a DAG rooted at `root`.
struct VdTrace {
  Verdict verdict = Verdict::Inconclusive;
  VertexSet root = 0;
  std::map<VertexSet, VdNode> nodes;
};

struct VdResult {
  Verdict verdict = Verdict::Inconclusive;
  VdTrace trace;
  std::size_t states = 0;
};

// Woodroofe's recursion: G is vertex decomposable when it has no edges, or
// some vertex v sheds and both G \ v and G \ N[v] are vertex decomposable.
// Memoized on induced-subgraph vertex sets; `state_budget` caps the number
// of distinct subgraphs examined.
inline VdResult is_vertex_decomposable(const Graph& g, std::size_t state_budget = 2'000'000) {
  struct Entry {
    bool decomposable;
    VdNode node;
  };
  std::unordered_map<VertexSet, Entry> memo;
  bool exhausted = false;

  std::function<bool(VertexSet)> decide = [&](VertexSet mask) -> bool {
    if (auto it = memo.find(mask); it != memo.end()) return it->second.decomposable;
    if (exhausted) return false;
    if (memo.size() >= state_budget) {
      exhausted = true;
      return false;
    }
    const Graph h = g.induced(mask);
    VdNode node;
    node.vertices = mask;
    if (h.is_edgeless()) {
      node.kind = VdNode::Kind::Edgeless;
      memo.emplace(mask, Entry{true, node});
      return true;
    }
    node.kind = VdNode::Kind::Refuted;
    bool ok = false;
    bits::for_each(mask, [&](std::size_t v) {
      if (ok || exhausted) return;
      VdNode::Reason reason;
      reason.vertex = v;
      if (auto w = shedding_obstruction(h, v)) {
        reason.kind = VdNode::Reason::Kind::NotShedding;
        reason.witness = *w;
      } else if (!decide(mask & ~h.closed_neighborhood(v))) {
        reason.kind = VdNode::Reason::Kind::LinkNotVd;
      } else if (!decide(mask & ~bits::single(v))) {
        reason.kind = VdNode::Reason::Kind::DeletionNotVd;
      } else {
        ok = true;
        node.kind = VdNode::Kind::Shed;
        node.shedding_vertex = v;
        node.reasons.clear();
        return;
      }
      node.reasons.push_back(reason);
    });
    if (exhausted) return false;
    memo.emplace(mask, Entry{ok, node});
    return ok;
  };

  VdResult result;
  const bool vd = decide(g.vertices());
  result.states = memo.size();
  if (exhausted) return result;
  result.verdict = vd ? Verdict::True : Verdict::False;
  result.trace.verdict = result.verdict;
  result.trace.root = g.vertices();

  // Keep only nodes reachable from the root.
  std::vector<VertexSet> stack{g.vertices()};
  while (!stack.empty()) {
    VertexSet mask = stack.back();
    stack.pop_back();
    if (result.trace.nodes.count(mask)) continue;
    const VdNode& node = memo.at(mask).node;
    result.trace.nodes.emplace(mask, node);
    const Graph h = g.induced(mask);
    if (node.kind == VdNode::Kind::Shed) {
      stack.push_back(mask & ~bits::single(node.shedding_vertex));
      stack.push_back(mask & ~h.closed_neighborhood(node.shedding_vertex));
    } else if (node.kind == VdNode::Kind::Refuted) {
      for (const auto& r : node.reasons) {
        if (r.kind == VdNode::Reason::Kind::LinkNotVd) stack.push_back(mask & ~h.closed_neighborhood(r.vertex));
        if (r.kind == VdNode::Reason::Kind::DeletionNotVd) stack.push_back(mask & ~bits::single(r.vertex));
      }
    }
  }
  return result;
}

// Re-check every claim in a trace against the graph and return the verdict
// it certifies. Throws InvalidInput when any claim does not hold.
inline Verdict replay_vd_trace(const Graph& g, const VdTrace& trace) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidInput, "invalid vd trace: " + what); };
  if (trace.verdict == Verdict::Inconclusive) return Verdict::Inconclusive;
  if (trace.root != g.vertices()) fail("root is not the vertex set of the graph");
  std::map<VertexSet, bool> checked;

  std::function<bool(VertexSet)> check = [&](VertexSet mask) -> bool {
    if (auto it = checked.find(mask); it != checked.end()) return it->second;
    auto it = trace.nodes.find(mask);
    if (it == trace.nodes.end()) fail("missing node " + bits::to_string(mask));
    const VdNode& node = it->second;
    const Graph h = g.induced(mask);
    bool verdict = false;
    switch (node.kind) {
      case VdNode::Kind::Edgeless:
        if (!h.is_edgeless()) fail("node " + bits::to_string(mask) + " claims no edges");
        verdict = true;
        break;
      case VdNode::Kind::Shed: {
        const std::size_t v = node.shedding_vertex;
        if (!h.has_vertex(v)) fail("shedding vertex outside node");
        if (!is_shedding_vertex(h, v)) fail("vertex " + std::to_string(v + 1) + " does not shed");
        if (!check(mask & ~bits::single(v)) || !check(mask & ~h.closed_neighborhood(v)))
          fail("shed node with a non-decomposable child");
        verdict = true;
        break;
      }
      case VdNode::Kind::Refuted: {
        if (h.is_edgeless()) fail("refuted node without edges");
        VertexSet covered = 0;
        for (const auto& r : node.reasons) {
          if (!h.has_vertex(r.vertex)) fail("reason for a vertex outside node");
          covered |= bits::single(r.vertex);
          switch (r.kind) {
            case VdNode::Reason::Kind::NotShedding: {
              const VertexSet w = r.witness;
              const VertexSet rest = mask & ~bits::single(r.vertex);
              bool maximal = h.is_independent(w) && (w & h.closed_neighborhood(r.vertex)) == 0;
              bits::for_each(rest & ~w, [&](std::size_t u) { maximal = maximal && (h.neighbors(u) & w) != 0; });
              if (!maximal) fail("shedding witness for vertex " + std::to_string(r.vertex + 1) + " is not valid");
              break;
            }
            case VdNode::Reason::Kind::LinkNotVd:
              if (check(mask & ~h.closed_neighborhood(r.vertex))) fail("link claimed non-decomposable");
              break;
            case VdNode::Reason::Kind::DeletionNotVd:
              if (check(mask & ~bits::single(r.vertex))) fail("deletion claimed non-decomposable");
              break;
          }
        }
        if (covered != mask) fail("refuted node does not cover every vertex");
        verdict = false;
        break;
      }
    }
    checked.emplace(mask, verdict);
    return verdict;
  };

  const Verdict replayed = check(trace.root) ? Verdict::True : Verdict::False;
  if (replayed != trace.verdict) fail("recorded verdict differs from replayed verdict");
  return replayed;
}

// Vertex decomposability of a complex: a simplex, or a shedding vertex v
// with lk(v) and del(v) both vertex decomposable.
inline Verdict is_vertex_decomposable(const SimplicialComplex& c, std::size_t state_budget = 2'000'000) {
  struct Hash {
    std::size_t operator()(const std::vector<VertexSet>& k) const {
      std::size_t h = 0x9e3779b97f4a7c15ULL;
      for (auto w : k) h = (h ^ w) * 0x100000001b3ULL + (h >> 31);
      return h;
    }
  };
  std::unordered_map<std::vector<VertexSet>, bool, Hash> memo;
  bool exhausted = false;
  std::function<bool(const SimplicialComplex&)> decide = [&](const SimplicialComplex& d) -> bool {
    if (d.facet_count() <= 1) return !d.is_void();
    if (auto it = memo.find(d.facets()); it != memo.end()) return it->second;
    if (exhausted) return false;
    if (memo.size() >= state_budget) {
      exhausted = true;
      return false;
    }
    bool ok = false;
    bits::for_each(d.vertices(), [&](std::size_t v) {
      if (ok || exhausted) return;
      if (!is_shedding_vertex(d, v)) return;
      ok = decide(link(d, bits::single(v))) && decide(deletion(d, bits::single(v)));
    });
    if (!exhausted) memo.emplace(d.facets(), ok);
    return ok;
  };
  const bool vd = decide(c);
  if (exhausted) return Verdict::Inconclusive;
  return vd ? Verdict::True : Verdict::False;
}

}  // namespace sqfree
