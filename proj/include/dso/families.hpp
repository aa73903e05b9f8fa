#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dso/graph.hpp"

namespace dso {

enum class FamilyKind { Path, Cycle, Complete, CompleteBipartite, Star, Matching, Edgeless };

struct FamilyParams {
  int n = 0;
  int p = 0; // complete_bipartite only
  int q = 0;
};

inline std::string_view family_name(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::Path: return "path";
  case FamilyKind::Cycle: return "cycle";
  case FamilyKind::Complete: return "complete";
  case FamilyKind::CompleteBipartite: return "complete_bipartite";
  case FamilyKind::Star: return "star";
  case FamilyKind::Matching: return "matching";
  case FamilyKind::Edgeless: return "edgeless";
  }
  return "?";
}

inline std::optional<FamilyKind> parse_family(std::string_view name) {
  for (auto kind : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Complete,
                    FamilyKind::CompleteBipartite, FamilyKind::Star, FamilyKind::Matching,
                    FamilyKind::Edgeless}) {
    if (family_name(kind) == name) return kind;
  }
  return std::nullopt;
}

/// Conventional labelling: paths and cycles run 0-1-2-..., bipartite parts are
/// contiguous ({0..p-1} and {p..p+q-1}), the star centre is vertex 0, matching
/// pairs are (0,1), (2,3), ...
inline Graph generate_family(FamilyKind kind, const FamilyParams& params) {
  const int n = params.n;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) throw GraphError(std::string(family_name(kind)) + ": " + msg);
  };
  std::vector<Edge> e;
  switch (kind) {
  case FamilyKind::Path:
    require(n >= 1, "n must be >= 1");
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edge_list(n, e);
  case FamilyKind::Cycle:
    require(n >= 3, "n must be >= 3");
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, e);
  case FamilyKind::Complete:
    require(n >= 1, "n must be >= 1");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edge_list(n, e);
  case FamilyKind::CompleteBipartite: {
    const int p = params.p;
    const int q = params.q;
    require(p >= 1 && q >= 1, "p and q must be >= 1");
    require(p + q <= kMaxVertices, "p + q too large");
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return from_edge_list(p + q, e);
  }
  case FamilyKind::Star:
    require(n >= 1, "n must be >= 1");
    for (int j = 1; j < n; ++j) e.emplace_back(0, j);
    return from_edge_list(n, e);
  case FamilyKind::Matching:
    require(n >= 2 && n % 2 == 0, "n must be even and >= 2");
    for (int i = 0; i < n; i += 2) e.emplace_back(i, i + 1);
    return from_edge_list(n, e);
  case FamilyKind::Edgeless:
    require(n >= 1, "n must be >= 1");
    return Graph(n);
  }
  throw GraphError("unknown family");
}

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return from_edge_list(10, e);
}

} // namespace dso
