#pragma once

// Slow reference implementations and random generators for the test suites.
// Nothing here calls into the library's algorithms; each oracle works from
// the textbook definition by brute force.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/graph.hpp"
#include "sqfree/ideal.hpp"

namespace oracle {

using sqfree::Graph;
using sqfree::SimplicialComplex;
using sqfree::SqFreeIdeal;
using sqfree::VertexSet;
using Rng = std::mt19937_64;

inline bool sub(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline int pop(VertexSet s) { return __builtin_popcountll(s); }
inline VertexSet bit(std::size_t i) { return VertexSet{1} << i; }
inline VertexSet all(std::size_t n) { return n == 64 ? ~VertexSet{0} : bit(n) - 1; }

inline double uniform(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }
inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// ---- generators -----------------------------------------------------------

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<sqfree::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (uniform(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<sqfree::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(below(rng, v), v);
  return Graph(n, edges);
}

// Each new vertex attaches to a clique of earlier vertices, so the reverse
// insertion order is a perfect elimination order.
inline Graph random_chordal(std::size_t n, Rng& rng) {
  std::vector<VertexSet> adj(n, 0);
  std::vector<sqfree::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::vector<std::size_t> earlier(v);
    for (std::size_t u = 0; u < v; ++u) earlier[u] = u;
    std::shuffle(earlier.begin(), earlier.end(), rng);
    VertexSet clique = 0;
    for (std::size_t u : earlier)
      if (sub(clique, adj[u]) && uniform(rng) < 0.5) clique |= bit(u);
    for (std::size_t u = 0; u < v; ++u)
      if (clique & bit(u)) {
        edges.emplace_back(u, v);
        adj[u] |= bit(v);
        adj[v] |= bit(u);
      }
  }
  return Graph(n, edges);
}

// Random square-free ideal: a handful of supports of size 1..4, minimalized
// by the constructor.
inline SqFreeIdeal random_ideal(std::size_t n, Rng& rng) {
  std::vector<VertexSet> gens;
  const std::size_t count = 1 + below(rng, 6);
  for (std::size_t k = 0; k < count; ++k) {
    VertexSet s = 0;
    const std::size_t size = 1 + below(rng, std::min<std::size_t>(4, n));
    while (static_cast<std::size_t>(pop(s)) < size) s |= bit(below(rng, n));
    gens.push_back(s);
  }
  return SqFreeIdeal(n, gens);
}

inline SimplicialComplex random_complex(std::size_t n, Rng& rng) {
  std::vector<VertexSet> faces;
  const std::size_t count = 1 + below(rng, 6);
  for (std::size_t k = 0; k < count; ++k) faces.push_back(static_cast<VertexSet>(rng()) & all(n));
  return SimplicialComplex::from_facets(n, faces);
}

// Every antichain of subsets of {0..n-1} (n <= 6), the void one included.
template <typename Visit>
void for_each_antichain(std::size_t n, Visit&& visit) {
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::uint64_t> comparable(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (sub(a, b) || sub(b, a)) comparable[a] |= std::uint64_t{1} << b;
  std::vector<VertexSet> chosen;
  auto rec = [&](auto&& self, std::size_t next, std::uint64_t blocked) -> void {
    visit(static_cast<const std::vector<VertexSet>&>(chosen));
    for (std::size_t s = next; s < m; ++s) {
      if (blocked >> s & 1U) continue;
      chosen.push_back(s);
      self(self, s + 1, blocked | comparable[s]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
}

// ---- graphs ---------------------------------------------------------------

inline bool independent(const Graph& g, VertexSet s) {
  for (auto [u, v] : g.edges())
    if ((s & bit(u)) && (s & bit(v))) return false;
  return true;
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  const VertexSet v = g.vertices();
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s <= all(g.ground_size()); ++s) {
    if (!sub(s, v) || !independent(g, s)) continue;
    bool maximal = true;
    for (std::size_t x = 0; x < g.ground_size() && maximal; ++x)
      if ((v & bit(x)) && !(s & bit(x)) && independent(g, s | bit(x))) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

// Connectivity of the induced subgraph on the four endpoints, by flood fill.
inline bool three_disjoint(const Graph& g, sqfree::Edge a, sqfree::Edge b) {
  const std::vector<std::size_t> pts = {a.first, a.second, b.first, b.second};
  std::set<std::size_t> seen = {pts[0]};
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t x : pts)
      for (std::size_t y : pts)
        if (seen.count(x) && !seen.count(y) && g.has_edge(x, y)) {
          seen.insert(y);
          grew = true;
        }
  }
  return seen.size() < 4;
}

inline std::size_t induced_matching_number(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = 0;
  std::vector<sqfree::Edge> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < edges.size(); ++i) {
      const auto e = edges[i];
      bool ok = true;
      for (const auto& c : chosen) {
        const bool share = c.first == e.first || c.first == e.second || c.second == e.first || c.second == e.second;
        if (share || !three_disjoint(g, c, e)) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(e);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// ---- complexes ------------------------------------------------------------

inline std::set<VertexSet> faces(const SimplicialComplex& c) {
  std::set<VertexSet> out;
  for (VertexSet s = 0; s <= all(c.ground_size()); ++s)
    for (VertexSet f : c.facets())
      if (sub(s, f)) {
        out.insert(s);
        break;
      }
  return out;
}

inline std::vector<VertexSet> maximal(const std::set<VertexSet>& fs) {
  std::vector<VertexSet> out;
  for (VertexSet a : fs) {
    bool top = true;
    for (VertexSet b : fs)
      if (a != b && sub(a, b)) top = false;
    if (top) out.push_back(a);
  }
  return out;
}

inline std::vector<VertexSet> link_facets(const SimplicialComplex& c, VertexSet f) {
  const auto fs = faces(c);
  std::set<VertexSet> lk;
  for (VertexSet a : fs)
    if ((a & f) == 0 && fs.count(a | f)) lk.insert(a);
  return maximal(lk);
}

inline std::vector<VertexSet> deletion_facets(const SimplicialComplex& c, VertexSet f) {
  std::set<VertexSet> del;
  for (VertexSet a : faces(c))
    if ((a & f) == 0) del.insert(a);
  return maximal(del);
}

// Minimal non-faces, scanning every subset.
inline std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c) {
  const auto fs = faces(c);
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s <= all(c.ground_size()); ++s) {
    if (fs.count(s)) continue;
    bool minimal = true;
    for (std::size_t x = 0; x < c.ground_size(); ++x)
      if ((s & bit(x)) && !fs.count(s & ~bit(x))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

// Minimal sets meeting every generator support, scanning every subset.
inline std::vector<VertexSet> minimal_transversals(const SqFreeIdeal& ideal) {
  auto meets_all = [&](VertexSet t) {
    for (VertexSet g : ideal.generators())
      if ((g & t) == 0) return false;
    return true;
  };
  std::vector<VertexSet> out;
  for (VertexSet t = 0; t <= all(ideal.ring_size()); ++t) {
    if (!meets_all(t)) continue;
    bool minimal = true;
    for (std::size_t x = 0; x < ideal.ring_size(); ++x)
      if ((t & bit(x)) && meets_all(t & ~bit(x))) minimal = false;
    if (minimal) out.push_back(t);
  }
  return out;
}

// ---- Betti numbers from the Koszul complex --------------------------------

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = inverse_mod(m[rank][c], p);
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c] != 0) {
        const std::uint64_t f = m[r][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[rank][k]) % p;
      }
    ++rank;
  }
  return rank;
}

// beta_{i,j}(R/I) over F_p as the homology of the Koszul complex K(x; R/I) in
// each square-free multidegree s. In degree s the basis of K_i is
// e_t (x) x^(s\t) for |t| = i with s\t not in I, and
// d(e_t) = sum_k (-1)^pos(k in t) x_k e_(t\k).
inline std::map<std::pair<int, int>, std::uint64_t> koszul_betti(const SqFreeIdeal& ideal, std::uint64_t p) {
  const std::size_t n = ideal.ring_size();
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (VertexSet s = 0; s <= all(n); ++s) {
    std::vector<std::vector<VertexSet>> basis(static_cast<std::size_t>(pop(s)) + 2);
    for (VertexSet t = s;; t = (t - 1) & s) {
      if (!ideal.contains(s & ~t)) basis[static_cast<std::size_t>(pop(t))].push_back(t);
      if (t == 0) break;
    }
    // rank of d_i : K_i -> K_{i-1}
    std::vector<std::size_t> rk(basis.size() + 1, 0);
    for (std::size_t i = 1; i < basis.size(); ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      std::vector<std::vector<std::uint64_t>> m(basis[i].size(), std::vector<std::uint64_t>(basis[i - 1].size(), 0));
      for (std::size_t r = 0; r < basis[i].size(); ++r) {
        const VertexSet t = basis[i][r];
        int pos = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (!(t & bit(k))) continue;
          const VertexSet target = t & ~bit(k);
          auto it = std::find(basis[i - 1].begin(), basis[i - 1].end(), target);
          if (it != basis[i - 1].end()) m[r][static_cast<std::size_t>(it - basis[i - 1].begin())] = pos % 2 ? p - 1 : 1;
          ++pos;
        }
      }
      rk[i] = rank_mod(m, p);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::size_t h = basis[i].size() - rk[i] - rk[i + 1];
      if (h) out[{static_cast<int>(i), pop(s)}] += h;
    }
  }
  return out;
}

inline int regularity(const std::map<std::pair<int, int>, std::uint64_t>& table) {
  int r = 0;
  for (const auto& [ij, b] : table)
    if (b) r = std::max(r, ij.second - ij.first);
  return r;
}

// ---- shellability by trying every order -----------------------------------

inline bool shelling_condition(const std::vector<VertexSet>& order) {
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      bool found = false;
      for (std::size_t k = 0; k < j && !found; ++k) {
        const VertexSet d = order[j] & ~order[k];
        if (pop(d) == 1 && (d & order[j] & ~order[i])) found = true;
      }
      if (!found) return false;
    }
  return true;
}

inline bool shellable_by_permutations(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end());
  do {
    if (shelling_condition(facets)) return true;
  } while (std::next_permutation(facets.begin(), facets.end()));
  return false;
}

// ---- vertex decomposability straight from the definition ------------------

inline bool vertex_decomposable(const std::vector<VertexSet>& facets) {
  if (facets.size() <= 1) return !facets.empty();
  VertexSet verts = 0;
  for (VertexSet f : facets) verts |= f;
  std::set<VertexSet> fs;
  for (VertexSet f : facets)
    for (VertexSet s = f;; s = (s - 1) & f) {
      fs.insert(s);
      if (s == 0) break;
    }
  for (std::size_t v = 0; v < 64; ++v) {
    if (!(verts & bit(v))) continue;
    std::set<VertexSet> lk, del;
    for (VertexSet a : fs) {
      if (a & bit(v)) continue;
      del.insert(a);
      if (fs.count(a | bit(v))) lk.insert(a);
    }
    const auto lkf = maximal(lk), delf = maximal(del);
    bool shedding = true;
    for (VertexSet a : lkf)
      if (std::find(delf.begin(), delf.end(), a) != delf.end()) shedding = false;
    if (shedding && vertex_decomposable(lkf) && vertex_decomposable(delf)) return true;
  }
  return false;
}

}  // namespace oracle
