#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/vertex_set.hpp"

namespace sqfree {

// An edge as a pair of 0-based vertex indices with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

struct EdgePair {
  Edge e1;
  Edge e2;
};

// Finite simple graph on at most 64 vertices.
//
// A graph lives on a ground set {0, ..., n-1} and keeps a mask of the vertices
// that are still present, so that induced subgraphs such as G \ v and
// G \ N[v] share the indexing of the graph they came from.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), present_(bits::full(n)) {
    if (n > kMaxVertices)
      throw Error(ErrorKind::SizeLimit, "graphs are limited to 64 vertices, got " + std::to_string(n));
    adj_.fill(0);
  }

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  // Edges given with 1-based endpoints. Duplicates (in either orientation)
  // and loops are rejected.
  static Graph from_labeled_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n)
        throw Error(ErrorKind::InvalidInput,
                    "edge [" + std::to_string(a) + "," + std::to_string(b) + "] outside 1.." + std::to_string(n));
      auto u = static_cast<std::size_t>(a - 1), v = static_cast<std::size_t>(b - 1);
      if (u != v && g.has_edge(u, v))
        throw Error(ErrorKind::InvalidInput,
                    "duplicate edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
      g.add_edge(u, v);
    }
    return g;
  }

  std::size_t ground_size() const { return n_; }
  VertexSet vertices() const { return present_; }
  std::size_t order() const { return static_cast<std::size_t>(bits::count(present_)); }

  bool has_vertex(std::size_t v) const { return v < n_ && bits::contains(present_, v); }

  bool has_edge(std::size_t u, std::size_t v) const { return has_vertex(u) && bits::contains(adj_[u], v); }

  VertexSet neighbors(std::size_t v) const {
    check_vertex(v);
    return adj_[v];
  }

  VertexSet closed_neighborhood(std::size_t v) const { return neighbors(v) | bits::single(v); }

  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(bits::count(neighbors(v))); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    bits::for_each(present_, [&](std::size_t u) {
      bits::for_each(adj_[u] & ~bits::full(u + 1), [&](std::size_t v) { out.emplace_back(u, v); });
    });
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    bits::for_each(present_, [&](std::size_t u) { twice += static_cast<std::size_t>(bits::count(adj_[u])); });
    return twice / 2;
  }

  bool is_edgeless() const {
    bool any = false;
    bits::for_each(present_, [&](std::size_t u) { any = any || adj_[u] != 0; });
    return !any;
  }

  bool is_independent(VertexSet s) const {
    bool ok = bits::subset(s, present_);
    bits::for_each(s, [&](std::size_t u) { ok = ok && (adj_[u] & s) == 0; });
    return ok;
  }

  // Induced subgraph on present vertices minus `gone`.
  Graph without(VertexSet gone) const {
    Graph g = *this;
    g.present_ &= ~gone;
    for (std::size_t v = 0; v < n_; ++v) g.adj_[v] = bits::contains(g.present_, v) ? adj_[v] & g.present_ : 0;
    return g;
  }

  Graph induced(VertexSet keep) const { return without(~keep); }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.present_ == b.present_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(std::size_t v) const {
    if (!has_vertex(v)) throw Error(ErrorKind::InvalidInput, "vertex index " + std::to_string(v) + " not in graph");
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidInput, "loops are not allowed (vertex " + std::to_string(u + 1) + ")");
    adj_[u] |= bits::single(v);
    adj_[v] |= bits::single(u);
  }

  std::size_t n_ = 0;
  VertexSet present_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::vector<std::string> labels_;
};

// C_n(S): vertices 0..n-1, u ~ v when the cyclic distance min(|u-v|, n-|u-v|)
// lies in S.
inline Graph circulant(std::size_t n, const std::set<std::size_t>& jumps) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "circulant graph needs n >= 1");
  for (std::size_t s : jumps)
    if (s == 0 || s > n / 2)
      throw Error(ErrorKind::InvalidInput,
                  "circulant jump " + std::to_string(s) + " outside 1.." + std::to_string(n / 2));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (jumps.count(std::min(j - i, n - (j - i)))) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline VertexSet closed_neighborhood(const Graph& g, std::size_t v) { return g.closed_neighborhood(v); }

// Whether the induced subgraph on the four endpoints is disconnected. Since
// both pairs are edges, that happens exactly when no edge joins them.
inline bool is_three_disjoint(const Graph& g, const EdgePair& p) {
  auto [a, b] = p.e1;
  auto [c, d] = p.e2;
  if (!g.has_edge(a, b) || !g.has_edge(c, d)) throw Error(ErrorKind::InvalidInput, "3-disjointness needs two edges");
  VertexSet first = bits::single(a) | bits::single(b);
  VertexSet second = bits::single(c) | bits::single(d);
  if (first & second) throw Error(ErrorKind::InvalidInput, "edges share an endpoint");
  return ((g.neighbors(a) | g.neighbors(b)) & second) == 0;
}

namespace detail {

// Bron-Kerbosch with Tomita pivoting on the complement graph, all in
// machine words. `nonadj[v]` is the complement neighborhood of v.
template <typename Emit>
void bron_kerbosch(const std::array<VertexSet, kMaxVertices>& nonadj, VertexSet r, VertexSet p, VertexSet x,
                   Emit& emit) {
  if (p == 0 && x == 0) {
    emit(r);
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
  VertexSet candidates = p & ~pivot_nbrs;
  bits::for_each(candidates, [&](std::size_t v) {
    bron_kerbosch(nonadj, r | bits::single(v), p & nonadj[v], x & nonadj[v], emit);
    p &= ~bits::single(v);
    x |= bits::single(v);
  });
}

}  // namespace detail

// Every inclusion-maximal independent set, sorted by bitmask. A graph with
// no vertices has the single maximal independent set {}.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::array<VertexSet, kMaxVertices> nonadj{};
  VertexSet present = g.vertices();
  bits::for_each(present, [&](std::size_t v) { nonadj[v] = present & ~g.neighbors(v) & ~bits::single(v); });
  std::vector<VertexSet> out;
  auto emit = [&](VertexSet s) { out.push_back(s); };
  detail::bron_kerbosch(nonadj, 0, present, 0, emit);
  std::sort(out.begin(), out.end());
  return out;
}

struct InducedMatching {
  std::size_t size = 0;
  std::vector<Edge> edges;
};

// Largest pairwise 3-disjoint edge set, by exact branch and bound over a
// compatibility relation between edges.
inline InducedMatching maximum_induced_matching(const Graph& g) {
  const std::vector<Edge> es = g.edges();
  const std::size_t m = es.size();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> compatible(m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      VertexSet a = bits::single(es[i].first) | bits::single(es[i].second);
      VertexSet b = bits::single(es[j].first) | bits::single(es[j].second);
      if ((a & b) == 0 && is_three_disjoint(g, {es[i], es[j]})) {
        compatible[i][j / 64] |= std::uint64_t{1} << (j % 64);
        compatible[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }

  InducedMatching best;
  std::vector<std::size_t> chosen;
  auto popcount = [](const std::vector<std::uint64_t>& v) {
    std::size_t c = 0;
    for (auto w : v) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  };
  auto search = [&](auto&& self, std::vector<std::uint64_t> candidates) -> void {
    if (chosen.size() > best.size) {
      best.size = chosen.size();
      best.edges.clear();
      for (auto i : chosen) best.edges.push_back(es[i]);
    }
    if (chosen.size() + popcount(candidates) <= best.size) return;
    for (std::size_t w = 0; w < words; ++w) {
      while (candidates[w] != 0) {
        if (chosen.size() + popcount(candidates) <= best.size) return;
        std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
        candidates[w] &= candidates[w] - 1;
        std::vector<std::uint64_t> next(words);
        for (std::size_t k = 0; k < words; ++k) next[k] = candidates[k] & compatible[i][k];
        chosen.push_back(i);
        self(self, std::move(next));
        chosen.pop_back();
      }
    }
  };
  std::vector<std::uint64_t> all(words, 0);
  for (std::size_t i = 0; i < m; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
  search(search, all);
  return best;
}

inline std::size_t induced_matching_number(const Graph& g) { return maximum_induced_matching(g).size; }

struct GraphStats {
  std::size_t independence_number = 0;
  std::size_t min_vertex_cover_size = 0;
  bool is_well_covered = true;
  bool has_degree_one_vertex = false;
  std::vector<std::size_t> isolated_vertices;  // 0-based
};

inline GraphStats graph_stats(const Graph& g) {
  GraphStats st;
  auto mis = maximal_independent_sets(g);
  std::optional<int> common;
  for (VertexSet s : mis) {
    int c = bits::count(s);
    st.independence_number = std::max(st.independence_number, static_cast<std::size_t>(c));
    if (!common) common = c;
    if (*common != c) st.is_well_covered = false;
  }
  st.min_vertex_cover_size = g.order() - st.independence_number;
  bits::for_each(g.vertices(), [&](std::size_t v) {
    std::size_t d = g.degree(v);
    if (d == 1) st.has_degree_one_vertex = true;
    if (d == 0) st.isolated_vertices.push_back(v);
  });
  return st;
}

}  // namespace sqfree
