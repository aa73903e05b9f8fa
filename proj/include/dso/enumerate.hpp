#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dso/graph.hpp"
#include "dso/graph_io.hpp"

namespace dso {

/// Anything that yields graphs one at a time until exhausted.
template <class S>
concept GraphSource = requires(S& s) {
  { s.next() } -> std::same_as<std::optional<Graph>>;
};

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxCanonicalOrder = 8;

/// Graph whose edge set is the bitmask over graph6 upper-triangle order
/// (bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2), bit 3 = (0,3), ...).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1ULL) {
        rows[static_cast<std::size_t>(i)] |= 1ULL << j;
        rows[static_cast<std::size_t>(j)] |= 1ULL << i;
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

inline std::uint64_t labeled_count(int n) {
  return 1ULL << (n * (n - 1) / 2);
}

/// All labelled graphs on n vertices in edge-bitmask order. A sub-range
/// [first, last) of masks can be requested to split work between consumers.
class LabeledGraphs {
public:
  explicit LabeledGraphs(int n) : LabeledGraphs(n, 0, 0, true) {}
  LabeledGraphs(int n, std::uint64_t first, std::uint64_t last) : LabeledGraphs(n, first, last, false) {}

  std::optional<Graph> next() {
    if (mask_ >= last_) return std::nullopt;
    return graph_from_mask(n_, mask_++);
  }

  std::uint64_t total() const noexcept { return last_ - first_; }

private:
  LabeledGraphs(int n, std::uint64_t first, std::uint64_t last, bool whole) : n_(n) {
    if (n < 1 || n > kMaxEnumerationOrder) {
      throw GraphError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                       ", got " + std::to_string(n));
    }
    const std::uint64_t count = labeled_count(n);
    first_ = whole ? 0 : first;
    last_ = whole ? count : std::min(last, count);
    mask_ = first_;
  }

  int n_;
  std::uint64_t first_ = 0;
  std::uint64_t last_ = 0;
  std::uint64_t mask_ = 0;
};

/// Labelled graphs for every order in [lo, hi], ascending.
class LabeledGraphsUpTo {
public:
  LabeledGraphsUpTo(int lo, int hi) : current_(lo), hi_(hi), inner_(lo) {}

  std::optional<Graph> next() {
    while (true) {
      if (auto g = inner_.next()) return g;
      if (++current_ > hi_) return std::nullopt;
      inner_ = LabeledGraphs(current_);
    }
  }

private:
  int current_;
  int hi_;
  LabeledGraphs inner_;
};

/// graph6 records, one per non-blank line.
class Graph6Stream {
public:
  explicit Graph6Stream(std::istream& in) : in_(&in) {}

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        return parse_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError(e.reason() + " (byte " + std::to_string(e.offset()) + ")", line_, ParseError::Unit::Line);
      }
    }
    return std::nullopt;
  }

private:
  std::istream* in_;
  std::size_t line_ = 0;
};

/// Fixed list of graphs, handy for tests and single-graph CLI inputs.
class GraphList {
public:
  explicit GraphList(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  std::optional<Graph> next() {
    if (pos_ >= graphs_.size()) return std::nullopt;
    return graphs_[pos_++];
  }

private:
  std::vector<Graph> graphs_;
  std::size_t pos_ = 0;
};

/// Minimum graph6 encoding over all n! relabellings. Equal keys iff isomorphic.
inline std::string canonical_key(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw GraphError("canonical_key supports n <= " + std::to_string(kMaxCanonicalOrder));
  }
  const int nbits = n * (n - 1) / 2;
  std::array<int, kMaxCanonicalOrder> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  // The first upper-triangle bit is the most significant, so integer order
  // matches lexicographic order of the graph6 bit string.
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j) {
      const std::uint64_t row = g.neighbours(perm[static_cast<std::size_t>(j)]);
      for (int i = 0; i < j; ++i) {
        code = (code << 1) | ((row >> perm[static_cast<std::size_t>(i)]) & 1ULL);
      }
    }
    if (code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));

  std::vector<bool> bits(static_cast<std::size_t>(nbits));
  for (int k = 0; k < nbits; ++k) bits[static_cast<std::size_t>(k)] = ((best >> (nbits - 1 - k)) & 1ULL) != 0;
  std::string key = detail::graph6_size_header(static_cast<std::uint64_t>(n));
  detail::append_graph6_payload(key, bits);
  return key;
}

} // namespace dso
