#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "dso/classify.hpp"
#include "dso/enumerate.hpp"
#include "dso/graph_io.hpp"
#include "dso/parallel.hpp"
#include "dso/spectrum.hpp"

namespace dso {

struct EnergyCandidate {
  std::string graph6;
  int n = 0;
  int m = 0;
  bool connected = false;
  double energy = 0;
  long long nearest_integer = 0;
  double gap = 0;        // refined whenever `refined` is set
  double coarse_gap = 0; // at the scan tolerance
  bool refined = false;
};

/// Ordering used for every candidate list: (gap, n, graph6).
inline bool candidate_less(const EnergyCandidate& a, const EnergyCandidate& b) {
  return std::tie(a.gap, a.n, a.graph6) < std::tie(b.gap, b.n, b.graph6);
}

struct SearchOptions {
  double epsilon = 1e-6;
  bool dedup = false; // canonical dedup for n <= 8; larger graphs pass through
  double scan_tol = 1e-12;
  double refine_tol = 1e-13;
  std::size_t top_k = 0; // size of the near-integer report kept alongside candidates
  unsigned jobs = 0;
  std::size_t chunk = 4096;
};

struct SearchResult {
  std::vector<EnergyCandidate> candidates; // refined gap < epsilon, sorted
  std::vector<EnergyCandidate> nearest;    // top_k smallest refined gaps, sorted
  long long scanned = 0;
  long long edgeless_skipped = 0;
  long long duplicates_skipped = 0;
  long long evaluated = 0;
  long long connected_candidates = 0;
};

inline EnergyCandidate measure_energy(const Graph& g, const std::string& graph6, double tol) {
  EnergyCandidate c;
  c.graph6 = graph6;
  c.n = g.order();
  c.m = g.size();
  c.energy = energy(dso_spectrum(g, tol));
  c.nearest_integer = std::llround(c.energy);
  c.gap = std::abs(c.energy - static_cast<double>(c.nearest_integer));
  c.coarse_gap = c.gap;
  return c;
}

inline void refine(EnergyCandidate& c, const Graph& g, double refine_tol) {
  const EnergyCandidate fine = measure_energy(g, c.graph6, refine_tol);
  c.energy = fine.energy;
  c.nearest_integer = fine.nearest_integer;
  c.gap = fine.gap;
  c.refined = true;
}

/// The k smallest gaps, sorted by (gap, n, graph6). k larger than the input
/// returns everything.
inline std::vector<EnergyCandidate> near_integer_report(std::span<const EnergyCandidate> rows, std::size_t top_k) {
  std::vector<EnergyCandidate> out(rows.begin(), rows.end());
  std::sort(out.begin(), out.end(), candidate_less);
  if (out.size() > top_k) out.resize(top_k);
  return out;
}

/// Scans graphs with at least one edge for near-integral energy. Coarse hits
/// and the running top-k are recomputed at refine_tol before reporting.
template <GraphSource Source>
SearchResult search(Source& source, const SearchOptions& opt = {}) {
  SearchResult result;
  std::unordered_set<std::string> seen;
  std::vector<EnergyCandidate> hits;
  std::vector<EnergyCandidate> best; // bounded to top_k, sorted
  const unsigned jobs = detail::resolve_jobs(opt.jobs);

  std::vector<Graph> batch;
  std::vector<std::string> codes;
  std::vector<EnergyCandidate> rows;
  while (true) {
    batch.clear();
    codes.clear();
    while (batch.size() < std::max<std::size_t>(1, opt.chunk)) {
      auto g = source.next();
      if (!g) break;
      ++result.scanned;
      if (g->size() == 0) {
        ++result.edgeless_skipped;
        continue;
      }
      if (opt.dedup && g->order() <= kMaxCanonicalOrder && !seen.insert(canonical_key(*g)).second) {
        ++result.duplicates_skipped;
        continue;
      }
      codes.push_back(write_graph6(*g));
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) break;

    rows.assign(batch.size(), {});
    detail::parallel_for(batch.size(), jobs, [&](std::size_t i) {
      rows[i] = measure_energy(batch[i], codes[i], opt.scan_tol);
      rows[i].connected = classify(batch[i]).is_connected;
      if (rows[i].gap < opt.epsilon) refine(rows[i], batch[i], opt.refine_tol);
    });

    for (std::size_t i = 0; i < rows.size(); ++i) {
      ++result.evaluated;
      auto& row = rows[i];
      if (row.refined && row.gap < opt.epsilon) hits.push_back(row);
      if (opt.top_k == 0) continue;
      if (best.size() < opt.top_k || candidate_less(row, best.back())) {
        if (!row.refined) refine(row, batch[i], opt.refine_tol);
        best.insert(std::upper_bound(best.begin(), best.end(), row, candidate_less), row);
        if (best.size() > opt.top_k) best.pop_back();
      }
    }
  }
  std::sort(hits.begin(), hits.end(), candidate_less);
  for (const auto& c : hits) result.connected_candidates += c.connected ? 1 : 0;
  result.candidates = std::move(hits);
  result.nearest = std::move(best);
  return result;
}

} // namespace dso
