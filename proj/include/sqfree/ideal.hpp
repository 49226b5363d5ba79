#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/graph.hpp"
#include "sqfree/vertex_set.hpp"

namespace sqfree {

// Square-free monomial ideal in K[x_1..x_n], stored by the supports of its
// minimal generators (sorted by bitmask).
//
// The zero ideal has no generators. The unit ideal is the one whose minimal
// generating set is the single empty support.
class SqFreeIdeal {
 public:
  SqFreeIdeal() = default;

  SqFreeIdeal(std::size_t ring_n, std::vector<VertexSet> gens) : ring_n_(ring_n) {
    if (ring_n > kMaxVertices)
      throw Error(ErrorKind::SizeLimit, "rings are limited to 64 variables, got " + std::to_string(ring_n));
    for (VertexSet g : gens)
      if (!bits::subset(g, bits::full(ring_n)))
        throw Error(ErrorKind::InvalidInput,
                    "generator " + bits::to_string(g) + " uses a variable outside x_1..x_" + std::to_string(ring_n));
    gens_ = minimal_members(std::move(gens));
  }

  std::size_t ring_size() const { return ring_n_; }
  const std::vector<VertexSet>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front() == 0; }

  bool contains(VertexSet monomial) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](VertexSet g) { return bits::subset(g, monomial); });
  }

  std::vector<int> generator_degrees() const {
    std::set<int> ds;
    for (VertexSet g : gens_) ds.insert(bits::count(g));
    return {ds.begin(), ds.end()};
  }

  friend bool operator==(const SqFreeIdeal&, const SqFreeIdeal&) = default;

 private:
  std::size_t ring_n_ = 0;
  std::vector<VertexSet> gens_;
};

// A list of monomial primes, each given by its variable set.
using PrimeList = std::vector<VertexSet>;

inline SqFreeIdeal edge_ideal(const Graph& g) {
  std::vector<VertexSet> gens;
  for (auto [u, v] : g.edges()) gens.push_back(bits::single(u) | bits::single(v));
  return SqFreeIdeal(g.ground_size(), std::move(gens));
}

// All inclusion-minimal sets meeting every member of `family`, sorted.
//
// Branches on an uncovered member with the fewest free elements; elements
// tried earlier in the same member are forbidden in later branches so each
// transversal is reached once. A branch dies as soon as a chosen element has
// no private member left, since adding elements can only take privates away.
inline std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& family) {
  std::vector<VertexSet> out;
  for (VertexSet f : family)
    if (f == 0) return out;  // nothing meets the empty set

  auto has_privates = [&](VertexSet chosen) {
    VertexSet witnessed = 0;
    for (VertexSet f : family) {
      VertexSet hit = f & chosen;
      if (hit != 0 && (hit & (hit - 1)) == 0) witnessed |= hit;
    }
    return witnessed == chosen;
  };

  auto search = [&](auto&& self, VertexSet chosen, VertexSet forbidden, std::vector<VertexSet> uncovered) -> void {
    if (uncovered.empty()) {
      out.push_back(chosen);
      return;
    }
    std::size_t pick = 0;
    int fewest = 65;
    for (std::size_t i = 0; i < uncovered.size(); ++i) {
      int free = bits::count(uncovered[i] & ~forbidden);
      if (free < fewest) {
        fewest = free;
        pick = i;
      }
    }
    VertexSet options = uncovered[pick] & ~forbidden;
    bits::for_each(options, [&](std::size_t x) {
      VertexSet next = chosen | bits::single(x);
      if (has_privates(next)) {
        std::vector<VertexSet> rest;
        rest.reserve(uncovered.size());
        for (VertexSet f : uncovered)
          if (!bits::contains(f, x)) rest.push_back(f);
        self(self, next, forbidden, std::move(rest));
      }
      forbidden |= bits::single(x);
    });
  };
  search(search, 0, 0, family);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Generated by the minimal non-faces. A set is a non-face exactly when it
// meets the complement of every facet.
inline SqFreeIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
  const VertexSet ground = bits::full(c.ground_size());
  std::vector<VertexSet> complements;
  complements.reserve(c.facet_count());
  for (VertexSet f : c.facets()) complements.push_back(ground & ~f);
  return SqFreeIdeal(c.ground_size(), minimal_transversals(complements));
}

// The unique complex whose Stanley-Reisner ideal is I: faces are the sets
// containing no generator support. Facets are found by a depth-first sweep
// over the variables (independent sets of the generator hypergraph).
inline SimplicialComplex complex_of_ideal(const SqFreeIdeal& ideal) {
  if (ideal.is_unit()) throw Error(ErrorKind::InvalidInput, "the unit ideal has no Stanley-Reisner complex");
  const std::size_t n = ideal.ring_size();
  const auto& gens = ideal.generators();
  std::vector<std::vector<VertexSet>> gens_with(n);
  for (VertexSet g : gens) bits::for_each(g, [&](std::size_t v) { gens_with[v].push_back(g); });

  auto addable = [&](VertexSet face, std::size_t v) {
    for (VertexSet g : gens_with[v])
      if (bits::subset(g, face | bits::single(v))) return false;
    return true;
  };

  std::vector<VertexSet> facets;
  auto sweep = [&](auto&& self, std::size_t v, VertexSet face, VertexSet skipped) -> void {
    if (v == n) {
      bool maximal = true;
      bits::for_each(skipped, [&](std::size_t u) { maximal = maximal && !addable(face, u); });
      if (maximal) facets.push_back(face);
      return;
    }
    if (addable(face, v)) self(self, v + 1, face | bits::single(v), skipped);
    // Skipping v only makes sense if something can still block it.
    bool blockable = false;
    for (VertexSet g : gens_with[v]) {
      VertexSet others = g & ~bits::single(v);
      if (bits::subset(others & bits::full(v), face) && (others & skipped) == 0) {
        blockable = true;
        break;
      }
    }
    if (blockable) self(self, v + 1, face, skipped | bits::single(v));
  };
  sweep(sweep, 0, 0, 0);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

// I^v = intersection of the primes generated by each generator support, whose
// minimal generators are the minimal transversals of those supports.
inline SqFreeIdeal alexander_dual(const SqFreeIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::NotApplicable, "the zero ideal has no Alexander dual");
  return SqFreeIdeal(ideal.ring_size(), minimal_transversals(ideal.generators()));
}

// Minimal primes, read off as complements of the facets of the
// Stanley-Reisner complex. For an edge ideal these are the minimal vertex
// covers.
inline PrimeList minimal_primes(const SqFreeIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::NotApplicable, "the zero ideal has no minimal primes");
  if (ideal.is_unit()) throw Error(ErrorKind::NotApplicable, "the unit ideal has no minimal primes");
  const VertexSet ground = bits::full(ideal.ring_size());
  PrimeList primes;
  const SimplicialComplex delta = complex_of_ideal(ideal);
  for (VertexSet f : delta.facets()) primes.push_back(ground & ~f);
  std::sort(primes.begin(), primes.end());
  return primes;
}

inline std::size_t height(const SqFreeIdeal& ideal) {
  std::size_t h = kMaxVertices + 1;
  for (VertexSet p : minimal_primes(ideal)) h = std::min(h, static_cast<std::size_t>(bits::count(p)));
  return h;
}

// I_[d]: all square-free monomials of degree d lying in I.
inline SqFreeIdeal squarefree_component(const SqFreeIdeal& ideal, std::size_t degree) {
  if (degree < 1) throw Error(ErrorKind::InvalidInput, "degree components start at 1");
  const std::size_t n = ideal.ring_size();
  std::set<VertexSet> found;
  for (VertexSet g : ideal.generators()) {
    auto dg = static_cast<std::size_t>(bits::count(g));
    if (dg > degree) continue;
    // Extend g by (degree - dg) variables chosen in increasing order.
    auto extend = [&](auto&& self, VertexSet m, std::size_t from, std::size_t need) -> void {
      if (need == 0) {
        found.insert(m);
        return;
      }
      for (std::size_t v = from; v + need <= n; ++v)
        if (!bits::contains(m, v)) self(self, m | bits::single(v), v + 1, need - 1);
    };
    extend(extend, g, 0, degree - dg);
  }
  return SqFreeIdeal(n, {found.begin(), found.end()});
}

}  // namespace sqfree
