#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/vertex_set.hpp"

namespace sqfree {

// An ordering of the facets of a complex.
using ShellingCertificate = std::vector<VertexSet>;

namespace detail {

inline void require_facet_permutation(const SimplicialComplex& c, const ShellingCertificate& order) {
  ShellingCertificate sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != c.facets())
    throw Error(ErrorKind::InvalidInput, "shelling order is not a permutation of the facets");
}

// {x in f : f \ h = {x} for some h in earlier}. These are the vertices whose
// removal from f lands in the complex generated by `earlier`.
template <typename Range>
VertexSet restriction_face(VertexSet f, const Range& earlier) {
  VertexSet r = 0;
  for (VertexSet h : earlier) {
    VertexSet diff = f & ~h;
    if (diff != 0 && (diff & (diff - 1)) == 0) r |= diff;
  }
  return r;
}

template <typename Range>
bool extends_shelling(VertexSet f, const Range& earlier, VertexSet restriction) {
  for (VertexSet g : earlier)
    if (((f & ~g) & restriction) == 0) return false;
  return true;
}

}  // namespace detail

// Index of the first facet in `order` violating the shelling condition
//   for all i < j there are x in F_j \ F_i and k < j with F_j \ F_k = {x},
// or nullopt when the whole order is a shelling. Non-pure orders are allowed.
inline std::optional<std::size_t> first_shelling_violation(const SimplicialComplex& c, const ShellingCertificate& order) {
  detail::require_facet_permutation(c, order);
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<VertexSet> earlier(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j));
    const VertexSet r = detail::restriction_face(order[j], earlier);
    if (!detail::extends_shelling(order[j], earlier, r)) return j;
  }
  return std::nullopt;
}

inline bool verify_shelling(const SimplicialComplex& c, const ShellingCertificate& order) {
  return !first_shelling_violation(c, order).has_value();
}

// h-triangle of a complex: h[s][r] is the number of facets with s vertices
// and restriction face of size r in any shelling that lists facets by
// non-increasing size. Computed from faces grouped by degree (the largest
// facet containing them).
inline std::vector<std::vector<std::int64_t>> h_triangle(const SimplicialComplex& c) {
  const int top = c.dimension() + 1;
  std::vector<std::vector<std::int64_t>> f(static_cast<std::size_t>(top + 1),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(top + 1), 0));
  for (VertexSet face : all_faces(c)) {
    int degree = 0;
    for (VertexSet facet : c.facets())
      if (bits::subset(face, facet)) degree = std::max(degree, bits::count(facet));
    ++f[static_cast<std::size_t>(degree)][static_cast<std::size_t>(bits::count(face))];
  }
  auto binom = [](std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return std::int64_t{0};
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  auto h = f;
  for (int s = 0; s <= top; ++s)
    for (int r = 0; r <= s; ++r) {
      std::int64_t sum = 0;
      for (int k = 0; k <= r; ++k)
        sum += ((r - k) % 2 ? -1 : 1) * binom(s - k, r - k) * f[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
      h[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] = sum;
    }
  return h;
}

struct ShellingSearchOptions {
  std::size_t facet_cap = 100;
  std::size_t node_budget = 20'000'000;
  // Facets of equal size are tried in this order first (the rest by
  // bitmask), so a near-shelling is repaired with few moves.
  ShellingCertificate preferred_order;
};

struct ShellingSearchResult {
  enum class Status { Found, NotShellable, Inconclusive };
  Status status = Status::Inconclusive;
  ShellingCertificate certificate;  // set when Found
  std::string reason;
};

// Backtracking search for a shelling.
//
// Only orders listing facets by non-increasing size are explored; every
// shellable complex has such a shelling. Whether a facet may come next
// depends only on the set of facets already placed, so failed prefix sets
// are memoized. Each placement also consumes one unit of the h-triangle
// entry for its (size, restriction size), which must never go negative.
inline ShellingSearchResult find_shelling(const SimplicialComplex& c, const ShellingSearchOptions& opts = {}) {
  using Status = ShellingSearchResult::Status;
  ShellingSearchResult result;
  const std::size_t m = c.facet_count();
  if (m > opts.facet_cap) {
    result.reason = "inconclusive: cap (" + std::to_string(m) + " facets > " + std::to_string(opts.facet_cap) + ")";
    return result;
  }
  if (m <= 1) {
    result.status = Status::Found;
    result.certificate = c.facets();
    return result;
  }

  std::vector<VertexSet> facets = c.facets();
  auto rank = [&](VertexSet f) {
    auto it = std::find(opts.preferred_order.begin(), opts.preferred_order.end(), f);
    return static_cast<std::size_t>(it - opts.preferred_order.begin());
  };
  std::stable_sort(facets.begin(), facets.end(), [&](VertexSet a, VertexSet b) {
    if (bits::count(a) != bits::count(b)) return bits::count(a) > bits::count(b);
    return rank(a) < rank(b);
  });

  // The h-triangle needs every face; skip that pruning for huge facets.
  std::optional<std::vector<std::vector<std::int64_t>>> budget;
  std::size_t face_estimate = 0;
  for (VertexSet f : facets) face_estimate += std::size_t{1} << std::min(bits::count(f), 40);
  if (face_estimate <= (std::size_t{1} << 22)) {
    budget = h_triangle(c);
    for (const auto& row : *budget)
      for (std::size_t r = 0; r < row.size(); ++r)
        if (row[r] < 0) {
          result.status = Status::NotShellable;
          result.reason = "negative h-triangle entry";
          return result;
        }
  }

  const std::size_t words = (m + 63) / 64;
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto w : k) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
      return h;
    }
  };
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> dead;
  std::vector<std::uint64_t> used(words, 0);
  std::vector<VertexSet> placed;
  std::vector<std::size_t> order;
  std::size_t nodes = 0;
  bool out_of_budget = false;

  auto search = [&](auto&& self) -> bool {
    if (placed.size() == m) return true;
    if (++nodes > opts.node_budget) {
      out_of_budget = true;
      return false;
    }
    if (dead.count(used)) return false;
    int level = -1;
    for (std::size_t i = 0; i < m; ++i)
      if (!(used[i / 64] >> (i % 64) & 1U)) {
        level = bits::count(facets[i]);
        break;
      }
    for (std::size_t i = 0; i < m && !out_of_budget; ++i) {
      if (used[i / 64] >> (i % 64) & 1U) continue;
      const VertexSet f = facets[i];
      if (bits::count(f) != level) break;
      VertexSet r = 0;
      if (!placed.empty()) {
        r = detail::restriction_face(f, placed);
        if (!detail::extends_shelling(f, placed, r)) continue;
      }
      std::int64_t* slot = nullptr;
      if (budget) {
        slot = &(*budget)[static_cast<std::size_t>(level)][static_cast<std::size_t>(bits::count(r))];
        if (*slot == 0) continue;
        --*slot;
      }
      used[i / 64] |= std::uint64_t{1} << (i % 64);
      placed.push_back(f);
      order.push_back(i);
      const bool done = self(self);
      if (done) return true;
      order.pop_back();
      placed.pop_back();
      used[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      if (slot) ++*slot;
    }
    if (!out_of_budget) dead.insert(used);
    return false;
  };

  if (search(search)) {
    result.status = Status::Found;
    for (std::size_t i : order) result.certificate.push_back(facets[i]);
  } else if (out_of_budget) {
    result.reason = "inconclusive: node budget of " + std::to_string(opts.node_budget) + " exhausted";
  } else {
    result.status = Status::NotShellable;
    result.reason = "search exhausted";
  }
  return result;
}

}  // namespace sqfree
