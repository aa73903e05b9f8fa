#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dso {

/// Dense operations keep one 64-bit adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is stored as one bitmask per
/// vertex, so n is capped at kMaxVertices. Edges are kept normalized (i < j)
/// and sorted; degrees are cached.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxVertices) + "]");
    }
    adj_.assign(static_cast<std::size_t>(n), 0);
    deg_.assign(static_cast<std::size_t>(n), 0);
  }

  static Graph from_adjacency(std::vector<std::uint64_t> rows) {
    Graph g(static_cast<int>(rows.size()));
    const int n = g.n_;
    const std::uint64_t valid = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (int i = 0; i < n; ++i) {
      if ((rows[i] & ~valid) != 0 || ((rows[i] >> i) & 1ULL) != 0) {
        throw GraphError("adjacency row " + std::to_string(i) + " is invalid");
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (((rows[i] >> j) & 1ULL) != ((rows[j] >> i) & 1ULL)) {
          throw GraphError("adjacency is not symmetric");
        }
      }
    }
    g.adj_ = std::move(rows);
    g.rebuild_cache();
    return g;
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  bool adjacent(int i, int j) const noexcept {
    return ((adj_[static_cast<std::size_t>(i)] >> j) & 1ULL) != 0;
  }

  int degree(int v) const noexcept { return deg_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const noexcept { return deg_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::uint64_t neighbours(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<std::uint64_t>& adjacency_rows() const noexcept { return adj_; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  friend Graph from_edge_list(int n, const std::vector<Edge>& pairs);

  void rebuild_cache() {
    edges_.clear();
    for (int i = 0; i < n_; ++i) {
      deg_[static_cast<std::size_t>(i)] = std::popcount(adj_[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < n_; ++j) {
        if (adjacent(i, j)) edges_.emplace_back(i, j);
      }
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> deg_;
  std::vector<Edge> edges_;
};

/// Builds a graph from unordered pairs. Duplicates and reversed pairs collapse.
inline Graph from_edge_list(int n, const std::vector<Edge>& pairs) {
  Graph g(n);
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw GraphError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (i == j) {
      throw GraphError("self-loop (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    g.adj_[static_cast<std::size_t>(i)] |= 1ULL << j;
    g.adj_[static_cast<std::size_t>(j)] |= 1ULL << i;
  }
  g.rebuild_cache();
  return g;
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  for (int i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = ~g.neighbours(i) & all & ~(1ULL << i);
  }
  return Graph::from_adjacency(std::move(rows));
}

/// Vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int n = na + b.order();
  if (n > kMaxVertices) {
    throw GraphError("disjoint union exceeds " + std::to_string(kMaxVertices) + " vertices");
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < na; ++i) rows[static_cast<std::size_t>(i)] = a.neighbours(i);
  for (int i = 0; i < b.order(); ++i) rows[static_cast<std::size_t>(na + i)] = b.neighbours(i) << na;
  return Graph::from_adjacency(std::move(rows));
}

/// Induced subgraph with vertex v removed; later vertices shift down by one.
inline Graph delete_vertex(const Graph& g, int v) {
  std::vector<Edge> kept;
  for (auto [i, j] : g.edges()) {
    if (i == v || j == v) continue;
    kept.emplace_back(i > v ? i - 1 : i, j > v ? j - 1 : j);
  }
  return from_edge_list(g.order() - 1, kept);
}

struct DegreeSummary {
  int max_degree = 0;
  int min_degree = 0;
  int m = 0;
  int n = 0;
  long long first_zagreb = 0;
  int isolated = 0;
};

inline DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary s;
  s.n = g.order();
  s.m = g.size();
  if (s.n == 0) return s;
  const auto& d = g.degrees();
  s.max_degree = *std::max_element(d.begin(), d.end());
  s.min_degree = *std::min_element(d.begin(), d.end());
  for (int x : d) {
    s.first_zagreb += static_cast<long long>(x) * x;
    if (x == 0) ++s.isolated;
  }
  return s;
}

} // namespace dso
