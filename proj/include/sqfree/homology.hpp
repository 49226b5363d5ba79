#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqfree/complex.hpp"
#include "sqfree/graph.hpp"
#include "sqfree/ideal.hpp"
#include "sqfree/vertex_set.hpp"

namespace sqfree {

// Coefficient field F_p.
struct FieldSpec {
  std::uint32_t characteristic = 2;

  explicit FieldSpec(std::uint32_t p = 2) : characteristic(p) {
    bool prime = p >= 2;
    for (std::uint32_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
    if (!prime) throw Error(ErrorKind::InvalidInput, "field characteristic " + std::to_string(p) + " is not prime");
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline std::vector<FieldSpec> default_fields() { return {FieldSpec(2), FieldSpec(32003)}; }

namespace detail {

inline std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Rank over F_2 with rows packed into 64-bit words.
inline std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  std::size_t rank = 0;
  const std::size_t words = (cols + 63) / 64;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r][w] & mask)
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

// Rank over F_p, dense Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::size_t cols, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = power_mod(rows[rank][c], p - 2, p);
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] = static_cast<std::uint32_t>(rows[rank][k] * inv % p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

// Rank of the simplicial boundary map from faces of size k+1 (`upper`) to
// faces of size k (`lower`), with the sign (-1)^t on the face dropping the
// t-th smallest vertex.
inline std::size_t boundary_rank(const std::vector<VertexSet>& upper, const std::vector<VertexSet>& lower,
                                 std::uint32_t p) {
  if (upper.empty() || lower.empty()) return 0;
  std::unordered_map<VertexSet, std::size_t> column;
  column.reserve(lower.size() * 2);
  for (std::size_t i = 0; i < lower.size(); ++i) column.emplace(lower[i], i);
  const std::size_t cols = lower.size();
  if (p == 2) {
    std::vector<std::vector<std::uint64_t>> rows(upper.size(), std::vector<std::uint64_t>((cols + 63) / 64, 0));
    for (std::size_t r = 0; r < upper.size(); ++r)
      bits::for_each(upper[r], [&](std::size_t v) {
        std::size_t c = column.at(upper[r] & ~bits::single(v));
        rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
      });
    return rank_gf2(std::move(rows), cols);
  }
  std::vector<std::vector<std::uint32_t>> rows(upper.size(), std::vector<std::uint32_t>(cols, 0));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    std::size_t t = 0;
    bits::for_each(upper[r], [&](std::size_t v) {
      std::size_t c = column.at(upper[r] & ~bits::single(v));
      rows[r][c] = (t % 2 == 0) ? 1 : p - 1;
      ++t;
    });
  }
  return rank_mod_p(std::move(rows), cols, p);
}

// Run body(i) for i in [0, count) across hardware threads. Bodies must only
// touch state indexed by i or guarded by the caller.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

// dim H~_d(c; F_p) for -1 <= d <= dim c, computed from boundary ranks of the
// augmented chain complex. Zero entries are included.
inline std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw Error(ErrorKind::NotApplicable, "reduced homology of the void complex is not defined here");
  const int dim = c.dimension();
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(dim + 2));
  for (VertexSet f : all_faces(c)) by_size[static_cast<std::size_t>(bits::count(f))].push_back(f);

  // rank_of[k] is the rank of the map from faces of size k to faces of size k-1.
  std::vector<std::size_t> rank_of(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k)
    rank_of[k] = detail::boundary_rank(by_size[k], by_size[k - 1], field.characteristic);

  std::map<int, std::size_t> out;
  for (std::size_t k = 0; k < by_size.size(); ++k)
    out[static_cast<int>(k) - 1] = by_size[k].size() - rank_of[k] - rank_of[k + 1];
  return out;
}

enum class BettiSubject { Ideal, Quotient };

inline const char* to_string(BettiSubject s) { return s == BettiSubject::Ideal ? "ideal" : "quotient"; }

struct BettiTable {
  BettiSubject subject = BettiSubject::Quotient;
  FieldSpec field{2};
  // (homological index i, internal degree j) -> beta_{i,j}, nonzero only.
  std::map<std::pair<int, int>, std::uint64_t> entries;

  std::uint64_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  // max{j - i : beta_{i,j} != 0}
  int regularity() const {
    if (entries.empty()) throw Error(ErrorKind::NotApplicable, "regularity of the zero module");
    int reg = entries.begin()->first.second - entries.begin()->first.first;
    for (const auto& [ij, b] : entries) reg = std::max(reg, ij.second - ij.first);
    return reg;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline constexpr std::size_t kMaxHochsterVariables = 16;

// Hochster's formula:
//   beta_{i,j}(R/I_D) = sum over |W| = j of dim H~_{j-i-1}(D|_W),
// and beta_{i,j}(I) = beta_{i+1,j}(R/I).
inline BettiTable betti_table(const SqFreeIdeal& ideal, BettiSubject subject, const FieldSpec& field) {
  const std::size_t n = ideal.ring_size();
  if (n > kMaxHochsterVariables)
    throw Error(ErrorKind::SizeLimit, "Betti tables are computed for at most " + std::to_string(kMaxHochsterVariables) +
                                          " variables, got " + std::to_string(n));
  if (ideal.is_unit()) throw Error(ErrorKind::NotApplicable, "Betti table of the unit ideal");
  BettiTable table;
  table.subject = subject;
  table.field = field;

  const SimplicialComplex delta = complex_of_ideal(ideal);
  std::map<std::pair<int, int>, std::uint64_t> quotient;
  std::mutex guard;
  detail::parallel_for(std::size_t{1} << n, [&](std::size_t w) {
    const auto subset = static_cast<VertexSet>(w);
    const SimplicialComplex induced = restriction(delta, subset);
    VertexSet apex = ~VertexSet{0};
    for (VertexSet f : induced.facets()) apex &= f;
    if (apex != 0) return;  // a cone is acyclic
    const int j = bits::count(subset);
    for (const auto& [d, dim] : reduced_homology_dims(induced, field)) {
      if (dim == 0) continue;
      std::lock_guard lock(guard);
      quotient[{j - d - 1, j}] += dim;
    }
  });

  if (subject == BettiSubject::Quotient) {
    table.entries = std::move(quotient);
  } else {
    for (const auto& [ij, b] : quotient)
      if (ij.first >= 1) table.entries[{ij.first - 1, ij.second}] = b;
  }
  return table;
}

inline int regularity(const SqFreeIdeal& ideal, BettiSubject subject, const FieldSpec& field) {
  const BettiTable quotient = betti_table(ideal, BettiSubject::Quotient, field);
  const int reg_quotient = quotient.regularity();
  if (subject == BettiSubject::Quotient) return reg_quotient;
  if (ideal.is_zero()) throw Error(ErrorKind::NotApplicable, "regularity of the zero ideal");
  int reg_ideal = 0;
  bool any = false;
  for (const auto& [ij, b] : quotient.entries)
    if (ij.first >= 1) {
      reg_ideal = any ? std::max(reg_ideal, ij.second - ij.first + 1) : ij.second - ij.first + 1;
      any = true;
    }
  if (reg_ideal != reg_quotient + 1)
    throw Error(ErrorKind::NotApplicable, "internal check reg(I) = reg(R/I) + 1 failed");
  return reg_ideal;
}

// Linear resolution for an ideal generated in a single degree d: reg(I) = d.
inline bool has_linear_resolution(const SqFreeIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero()) throw Error(ErrorKind::NotApplicable, "linear resolution of the zero ideal");
  const auto degrees = ideal.generator_degrees();
  if (degrees.size() != 1)
    throw Error(ErrorKind::NotApplicable, "ideal has generators in several degrees; use the componentwise test");
  return regularity(ideal, BettiSubject::Ideal, field) == degrees.front();
}

enum class ComponentwiseMethod {
  // Components below the top generator degree, plus one regularity
  // computation; falls back to the full scan when the shortcut is silent.
  Shortcut,
  // Every square-free component I_[i] up to the number of variables.
  FullScan,
};

inline bool is_componentwise_linear(const SqFreeIdeal& ideal, const FieldSpec& field,
                                    ComponentwiseMethod method = ComponentwiseMethod::Shortcut) {
  if (ideal.is_zero()) throw Error(ErrorKind::NotApplicable, "componentwise linearity of the zero ideal");
  const auto degrees = ideal.generator_degrees();
  const auto low = static_cast<std::size_t>(std::max(1, degrees.front()));
  const auto top = static_cast<std::size_t>(degrees.back());
  auto component_linear = [&](std::size_t i) {
    SqFreeIdeal comp = squarefree_component(ideal, i);
    return comp.is_zero() || has_linear_resolution(comp, field);
  };

  if (method == ComponentwiseMethod::Shortcut) {
    for (std::size_t i = low; i < top; ++i)
      if (!component_linear(i)) return false;
    if (regularity(ideal, BettiSubject::Ideal, field) == static_cast<int>(top)) return true;
    for (std::size_t i = top; i <= ideal.ring_size(); ++i)
      if (!component_linear(i)) return false;
    return true;
  }
  for (std::size_t i = low; i <= ideal.ring_size(); ++i)
    if (!component_linear(i)) return false;
  return true;
}

// R/I(G) is sequentially Cohen-Macaulay iff the Alexander dual of I(G) is
// componentwise linear.
inline bool is_sequentially_cm(const Graph& g, const FieldSpec& field,
                               ComponentwiseMethod method = ComponentwiseMethod::Shortcut) {
  if (g.ground_size() > kMaxHochsterVariables)
    throw Error(ErrorKind::SizeLimit, "graph has " + std::to_string(g.ground_size()) +
                                          " vertices; the duality route stops at 16, use a shelling certificate");
  const SqFreeIdeal ideal = edge_ideal(g);
  if (ideal.is_zero()) throw Error(ErrorKind::NotApplicable, "edge ideal of an edgeless graph is zero");
  return is_componentwise_linear(alexander_dual(ideal), field, method);
}

}  // namespace sqfree
