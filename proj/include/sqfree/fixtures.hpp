#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "sqfree/graph.hpp"
#include "sqfree/shelling.hpp"
#include "sqfree/vertex_set.hpp"

// The two counterexample graphs and the listed shelling order, as data.
namespace sqfree::fixtures {

// 8 vertices, 13 edges, sequentially Cohen-Macaulay with height 4 but no
// degree-one vertex and reg(R/I) = 2 > a(G) = 1.
inline Graph leafless8() {
  return Graph::from_labeled_edges(8, {{1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 6}, {3, 7},
                                       {4, 6}, {4, 8}, {7, 8}});
}

inline Graph c16() { return circulant(16, {1, 4, 8}); }

// Vertices of C_16(1,4,8) joined to every one of x_17..x_26.
inline constexpr std::array<int, 13> kJoinedCirculantLabels = {1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 16};

// The remaining circulant vertices; with x_17..x_26 they form F_0.
inline constexpr std::array<int, 3> kFreeCirculantLabels = {9, 11, 14};

// C_16(1,4,8) on x_1..x_16, plus x_17..x_26 each joined to the 13 circulant
// vertices outside {x_9, x_11, x_14}. 26 vertices, 170 edges.
inline Graph joined26() {
  std::vector<Edge> edges = c16().edges();
  for (std::size_t extra = 16; extra < 26; ++extra)
    for (int l : kJoinedCirculantLabels) edges.emplace_back(static_cast<std::size_t>(l - 1), extra);
  return Graph(26, edges);
}

// F_0, F_1, ..., F_80 in the listed order: F_0 has 13 vertices, the rest are
// the 80 facets of Ind(C_16(1,4,8)).
inline ShellingCertificate joined26_listed_order() {
  static constexpr std::array<std::array<int, 4>, 80> kCirculantFacets = {{
      {9, 11, 14, 16}, {5, 11, 14, 16}, {7, 9, 14, 16},  {3, 9, 14, 16},  {5, 7, 14, 16},   // F_1..F_5
      {3, 5, 14, 16},  {6, 9, 11, 16},  {5, 7, 10, 16},  {2, 5, 11, 16},  {2, 9, 11, 16},   // F_6..F_10
      {2, 7, 13, 16},  {7, 10, 13, 16}, {2, 11, 13, 16}, {6, 11, 13, 16}, {3, 5, 10, 16},   // F_11..F_15
      {3, 10, 13, 16}, {3, 6, 13, 16},  {2, 7, 9, 16},   {3, 6, 9, 16},   {2, 5, 7, 16},    // F_16..F_20
      {7, 9, 12, 14},  {1, 4, 10, 15},  {1, 8, 10, 15},  {5, 8, 10, 15},  {1, 10, 12, 15},  // F_21..F_25
      {4, 10, 13, 15}, {8, 10, 13, 15}, {5, 10, 12, 15}, {3, 9, 12, 14},  {3, 8, 10, 13},   // F_26..F_30
      {3, 5, 8, 14},   {5, 8, 11, 14},  {6, 8, 11, 13},  {6, 8, 13, 15},  {4, 6, 13, 15},   // F_31..F_35
      {2, 8, 13, 15},  {2, 8, 11, 13},  {1, 4, 6, 15},   {4, 6, 9, 15},   {6, 9, 12, 15},   // F_36..F_40
      {1, 6, 12, 15},  {1, 6, 8, 15},   {2, 4, 13, 15},  {2, 9, 12, 15},  {2, 4, 9, 15},    // F_41..F_45
      {4, 6, 11, 13},  {4, 9, 11, 14},  {4, 7, 9, 14},   {2, 4, 11, 13},  {5, 7, 10, 12},   // F_46..F_50
      {1, 3, 8, 14},   {1, 8, 11, 14},  {1, 3, 12, 14},  {1, 7, 12, 14},  {1, 7, 10, 12},   // F_51..F_55
      {3, 6, 8, 13},   {5, 7, 12, 14},  {3, 5, 12, 14},  {3, 5, 10, 12},  {1, 3, 10, 12},   // F_56..F_60
      {2, 7, 9, 12},   {3, 6, 9, 12},   {2, 5, 7, 12},   {2, 5, 8, 11},   {1, 6, 8, 11},    // F_61..F_65
      {2, 4, 9, 11},   {4, 6, 9, 11},   {1, 3, 6, 12},   {2, 5, 8, 15},   {2, 5, 12, 15},   // F_66..F_70
      {1, 4, 6, 11},   {1, 4, 11, 14},  {1, 4, 7, 14},   {3, 5, 8, 10},   {1, 3, 8, 10},    // F_71..F_75
      {1, 4, 7, 10},   {4, 7, 10, 13},  {1, 3, 6, 8},    {2, 4, 7, 9},    {2, 4, 7, 13},    // F_76..F_80
  }};
  ShellingCertificate order;
  order.push_back(bits::from_labels({9, 11, 14, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26}, 26));
  for (const auto& f : kCirculantFacets) order.push_back(bits::from_labels(std::span<const int>(f), 26));
  return order;
}

// F_1, ..., F_80 alone, a shelling of Ind(C_16(1,4,8)).
inline ShellingCertificate c16_listed_order() {
  ShellingCertificate order = joined26_listed_order();
  order.erase(order.begin());
  return order;
}

}  // namespace sqfree::fixtures
