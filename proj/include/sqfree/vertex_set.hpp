#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqfree {

// A set of vertices (or variables) of a ground set of at most 64 elements,
// stored as a single machine word. Bit i is the 0-based vertex i.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

enum class ErrorKind { InvalidInput, SizeLimit, NotApplicable };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace bits {

constexpr VertexSet single(std::size_t v) { return VertexSet{1} << v; }

constexpr VertexSet full(std::size_t n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

constexpr int count(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, std::size_t v) { return (s >> v) & 1U; }

constexpr bool subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

// Visit each element of s in increasing order.
template <typename F>
constexpr void for_each(VertexSet s, F&& f) {
  while (s != 0) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

inline std::vector<std::size_t> to_indices(VertexSet s) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  for_each(s, [&](std::size_t v) { out.push_back(v); });
  return out;
}

// 1-based labels, as used by every file format and report.
inline std::vector<int> to_labels(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  for_each(s, [&](std::size_t v) { out.push_back(static_cast<int>(v) + 1); });
  return out;
}

inline VertexSet from_labels(std::span<const int> labels, std::size_t ground_n) {
  VertexSet s = 0;
  for (int l : labels) {
    if (l < 1 || static_cast<std::size_t>(l) > ground_n)
      throw Error(ErrorKind::InvalidInput,
                  "vertex label " + std::to_string(l) + " outside 1.." + std::to_string(ground_n));
    s |= single(static_cast<std::size_t>(l - 1));
  }
  return s;
}

inline VertexSet from_labels(std::initializer_list<int> labels, std::size_t ground_n) {
  return from_labels(std::span<const int>(labels.begin(), labels.size()), ground_n);
}

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each(s, [&](std::size_t v) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

}  // namespace bits

// Reduce a family of sets to its inclusion-maximal members, deduplicated and
// sorted by bitmask.
inline std::vector<VertexSet> maximal_members(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int ca = bits::count(a), cb = bits::count(b);
    return ca != cb ? ca > cb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet k : kept)
      if (bits::subset(s, k)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Inclusion-minimal members, deduplicated and sorted by bitmask.
inline std::vector<VertexSet> minimal_members(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int ca = bits::count(a), cb = bits::count(b);
    return ca != cb ? ca < cb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet k : kept)
      if (bits::subset(k, s)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace sqfree
