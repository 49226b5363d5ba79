#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <unordered_set>
#include <vector>

#include "sqfree/graph.hpp"
#include "sqfree/vertex_set.hpp"

namespace sqfree {

// Dimension reported for the void complex, which has no faces at all.
inline constexpr int kVoidDimension = INT_MIN;

// A simplicial complex stored by its facets.
//
// The facet list is always an antichain, deduplicated and sorted by bitmask.
// The void complex (no faces) has no facets; the irrelevant complex {{}} has
// exactly one facet, the empty set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(std::size_t ground_n, std::vector<VertexSet> faces) {
    if (ground_n > kMaxVertices)
      throw Error(ErrorKind::SizeLimit, "complexes are limited to 64 vertices, got " + std::to_string(ground_n));
    for (VertexSet f : faces)
      if (!bits::subset(f, bits::full(ground_n)))
        throw Error(ErrorKind::InvalidInput,
                    "face " + bits::to_string(f) + " outside ground set of size " + std::to_string(ground_n));
    SimplicialComplex c;
    c.ground_n_ = ground_n;
    c.facets_ = maximal_members(std::move(faces));
    return c;
  }

  static SimplicialComplex void_complex(std::size_t ground_n) { return from_facets(ground_n, {}); }
  static SimplicialComplex irrelevant(std::size_t ground_n) { return from_facets(ground_n, {VertexSet{0}}); }
  static SimplicialComplex simplex(std::size_t ground_n, VertexSet vertices) { return from_facets(ground_n, {vertices}); }

  std::size_t ground_size() const { return ground_n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }

  VertexSet vertices() const {
    VertexSet v = 0;
    for (VertexSet f : facets_) v |= f;
    return v;
  }

  bool contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return bits::subset(face, f); });
  }

  bool is_facet(VertexSet face) const { return std::binary_search(facets_.begin(), facets_.end(), face); }

  int dimension() const {
    if (is_void()) return kVoidDimension;
    int d = 0;
    for (VertexSet f : facets_) d = std::max(d, bits::count(f));
    return d - 1;
  }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return bits::count(f) == bits::count(facets_.front()); });
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t ground_n_ = 0;
  std::vector<VertexSet> facets_;
};

inline SimplicialComplex from_facets(std::size_t ground_n, std::vector<VertexSet> faces) {
  return SimplicialComplex::from_facets(ground_n, std::move(faces));
}

inline SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex::from_facets(g.ground_size(), maximal_independent_sets(g));
}

// lk(F) = {A : A and F disjoint, A u F a face}.
inline SimplicialComplex link(const SimplicialComplex& c, VertexSet face) {
  if (!c.contains(face)) throw Error(ErrorKind::InvalidInput, "link of " + bits::to_string(face) + ", which is not a face");
  std::vector<VertexSet> out;
  for (VertexSet f : c.facets())
    if (bits::subset(face, f)) out.push_back(f & ~face);
  return SimplicialComplex::from_facets(c.ground_size(), std::move(out));
}

// del(F) = {A : A and F disjoint}. Deleting a non-face is allowed.
inline SimplicialComplex deletion(const SimplicialComplex& c, VertexSet face) {
  std::vector<VertexSet> out;
  out.reserve(c.facet_count());
  for (VertexSet f : c.facets()) out.push_back(f & ~face);
  return SimplicialComplex::from_facets(c.ground_size(), std::move(out));
}

// Induced subcomplex on `keep`, i.e. deletion of everything else.
inline SimplicialComplex restriction(const SimplicialComplex& c, VertexSet keep) { return deletion(c, ~keep); }

// Every face, deduplicated, sorted by bitmask. Empty for the void complex.
inline std::vector<VertexSet> all_faces(const SimplicialComplex& c) {
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : c.facets()) {
    VertexSet sub = f;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct ComplexStats {
  int dimension = kVoidDimension;
  bool is_pure = true;
  bool is_simplex = false;
  std::size_t facet_count = 0;
  // f_vector[k] counts faces with k vertices, so f_vector[0] = 1 for any
  // non-void complex (the empty face).
  std::vector<std::size_t> f_vector;
};

inline ComplexStats complex_stats(const SimplicialComplex& c) {
  ComplexStats st;
  st.dimension = c.dimension();
  st.is_pure = c.is_pure();
  st.is_simplex = c.facet_count() == 1;
  st.facet_count = c.facet_count();
  if (!c.is_void()) {
    st.f_vector.assign(static_cast<std::size_t>(st.dimension + 2), 0);
    for (VertexSet f : all_faces(c)) ++st.f_vector[static_cast<std::size_t>(bits::count(f))];
  }
  return st;
}

}  // namespace sqfree
