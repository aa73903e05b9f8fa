#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "dso/graph.hpp"

namespace dso {

struct GraphClass {
  bool is_connected = true;
  bool is_regular = false;
  int regular_degree = -1;
  bool is_complete = false;
  bool is_bipartite = false;
  std::vector<int> side; // 2-colouring when bipartite, else empty
  bool is_complete_bipartite = false;
  int part_small = 0; // p <= q when complete bipartite
  int part_large = 0;
  bool is_star = false;
  bool is_edgeless = false;
  bool is_perfect_matching = false;
  /// nullopt for disconnected graphs.
  std::optional<int> diameter;
};

/// Eccentricity-based diameter via bitmask BFS from every vertex.
inline std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = 1ULL << s;
    std::uint64_t frontier = seen;
    int depth = 0;
    while (seen != all) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= g.neighbours(std::countr_zero(f));
      }
      next &= ~seen;
      if (next == 0) return std::nullopt;
      seen |= next;
      frontier = next;
      ++depth;
    }
    if (depth > diam) diam = depth;
  }
  return diam;
}

inline GraphClass classify(const Graph& g) {
  GraphClass c;
  const int n = g.order();
  const int m = g.size();
  const auto& d = g.degrees();

  c.diameter = diameter(g);
  c.is_connected = c.diameter.has_value();
  c.is_edgeless = m == 0;

  if (n >= 1) {
    c.is_regular = true;
    for (int x : d) c.is_regular = c.is_regular && x == d[0];
    if (c.is_regular) c.regular_degree = d[0];
    c.is_complete = static_cast<long long>(m) == static_cast<long long>(n) * (n - 1) / 2;
  }

  c.is_perfect_matching = n >= 2;
  for (int x : d) c.is_perfect_matching = c.is_perfect_matching && x == 1;

  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  bool bipartite = true;
  std::vector<int> stack;
  for (int s = 0; s < n && bipartite; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    stack.assign(1, s);
    while (!stack.empty() && bipartite) {
      const int u = stack.back();
      stack.pop_back();
      for (std::uint64_t nb = g.neighbours(u); nb != 0; nb &= nb - 1) {
        const int v = std::countr_zero(nb);
        auto& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          stack.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  c.is_bipartite = bipartite;
  if (bipartite) {
    c.side = colour;
    if (c.is_connected && n >= 2) {
      int zeros = 0;
      for (int x : colour) zeros += x == 0 ? 1 : 0;
      const int ones = n - zeros;
      if (zeros >= 1 && ones >= 1 && m == zeros * ones) {
        c.is_complete_bipartite = true;
        c.part_small = zeros < ones ? zeros : ones;
        c.part_large = zeros < ones ? ones : zeros;
        c.is_star = c.part_small == 1;
      }
    }
  }
  return c;
}

} // namespace dso
