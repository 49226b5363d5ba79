#pragma once

#include <cstddef>
#include <optional>

#include "sqfree/complex.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/vertex_set.hpp"

namespace sqfree {

inline constexpr std::size_t kMaxReisnerVertices = 24;

// A face whose link has nonvanishing homology below its top dimension.
struct ReisnerFailure {
  VertexSet face = 0;
  int degree = 0;          // homological degree of the offending class
  std::size_t rank = 0;    // dim H~_degree(lk face)
  int link_dimension = 0;
};

// Reisner's criterion, face by face (the empty face included). Returns the
// first failure in bitmask order, or nullopt when the complex is
// Cohen-Macaulay over the field.
inline std::optional<ReisnerFailure> reisner_failure(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw Error(ErrorKind::NotApplicable, "Cohen-Macaulayness of the void complex");
  if (bits::count(c.vertices()) > static_cast<int>(kMaxReisnerVertices))
    throw Error(ErrorKind::SizeLimit, "Reisner check is limited to " + std::to_string(kMaxReisnerVertices) + " vertices");
  for (VertexSet face : all_faces(c)) {
    const SimplicialComplex lk = link(c, face);
    const int d = lk.dimension();
    for (const auto& [degree, rank] : reduced_homology_dims(lk, field))
      if (degree < d && rank != 0) return ReisnerFailure{face, degree, rank, d};
  }
  return std::nullopt;
}

inline bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field) {
  return !reisner_failure(c, field).has_value();
}

}  // namespace sqfree
