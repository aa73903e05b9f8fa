#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dso/audit.hpp"
#include "dso/enumerate.hpp"
#include "dso/graph_io.hpp"
#include "dso/parallel.hpp"

namespace dso {

/// Solver failure inside a corpus run, tagged with the offending graph.
class WitnessedSolverError : public SolverError {
public:
  WitnessedSolverError(const SolverError& e, std::string graph6)
      : SolverError(std::string(e.what()) + " on graph " + graph6, e.residual()), graph6_(std::move(graph6)) {}
  const std::string& graph6() const noexcept { return graph6_; }

private:
  std::string graph6_;
};

enum class EqualityVerdict {
  None,             // no equality case claimed
  Vacuous,          // claimed class never applicable and no equality observed
  Exact,            // observed equality <=> stated class, on every applicable graph
  ExactOnConnected, // as Exact, except extra equality cases among disconnected graphs
  OneWay,           // stated class attains equality, but so do other connected graphs
  Refuted,          // some graph in the stated class misses equality
};

inline std::string_view verdict_name(EqualityVerdict v) {
  switch (v) {
  case EqualityVerdict::None: return "none";
  case EqualityVerdict::Vacuous: return "vacuous";
  case EqualityVerdict::Exact: return "exact";
  case EqualityVerdict::ExactOnConnected: return "exact-on-connected";
  case EqualityVerdict::OneWay: return "one-way";
  case EqualityVerdict::Refuted: return "refuted";
  }
  return "?";
}

/// A graph singled out by an aggregate. Ties prefer smaller order, then the
/// lexicographically smaller graph6 string, so the choice does not depend on
/// the order in which graphs arrive.
struct Witness {
  std::string graph6;
  int n = -1;

  bool empty() const noexcept { return n < 0; }
  void offer(int other_n, std::string_view other_g6) {
    if (empty() || other_n < n || (other_n == n && other_g6 < std::string_view(graph6))) {
      graph6 = std::string(other_g6);
      n = other_n;
    }
  }
};

struct CheckAggregate {
  std::string check_id;
  Expectation expectation = Expectation::Holds;
  bool has_equality_claim = false;
  long long applicable = 0;
  long long holds = 0;
  long long fails = 0;
  std::optional<double> worst_slack;
  Witness worst; // graph attaining worst_slack (a failing graph whenever fails > 0)
  long long equality_expected = 0;
  long long equality_observed = 0;
  long long expected_not_observed = 0;
  long long observed_not_expected = 0;
  long long observed_not_expected_connected = 0;
  Witness first_equality;
  Witness first_expected_not_observed;
  Witness first_observed_not_expected;
  Witness first_observed_not_expected_connected;

  EqualityVerdict equality_verdict() const {
    if (!has_equality_claim) return EqualityVerdict::None;
    if (expected_not_observed > 0) return EqualityVerdict::Refuted;
    if (equality_expected == 0 && equality_observed == 0) return EqualityVerdict::Vacuous;
    if (observed_not_expected == 0) return EqualityVerdict::Exact;
    if (observed_not_expected_connected == 0) return EqualityVerdict::ExactOnConnected;
    return EqualityVerdict::OneWay;
  }

  /// A Holds statement must never fail; a DocumentedFail one is reproduced
  /// once any applicable graph fails it.
  bool expectation_violated() const { return expectation == Expectation::Holds && fails > 0; }
  bool finding_reproduced() const { return expectation == Expectation::DocumentedFail && fails > 0; }

  void add(const BoundCheckResult& r, int n, bool connected, std::string_view g6) {
    if (!r.applicable) return;
    ++applicable;
    if (*r.holds) {
      ++holds;
    } else {
      ++fails;
    }
    const double s = *r.slack;
    if (!worst_slack || s < *worst_slack) {
      worst_slack = s;
      worst = Witness{std::string(g6), n};
    } else if (s == *worst_slack) {
      worst.offer(n, g6);
    }
    if (!has_equality_claim) {
      if (r.equality_observed) {
        ++equality_observed;
        first_equality.offer(n, g6);
      }
      return;
    }
    if (r.equality_expected) ++equality_expected;
    if (r.equality_observed) {
      ++equality_observed;
      first_equality.offer(n, g6);
    }
    if (r.equality_expected && !r.equality_observed) {
      ++expected_not_observed;
      first_expected_not_observed.offer(n, g6);
    }
    if (!r.equality_expected && r.equality_observed) {
      ++observed_not_expected;
      first_observed_not_expected.offer(n, g6);
      if (connected) {
        ++observed_not_expected_connected;
        first_observed_not_expected_connected.offer(n, g6);
      }
    }
  }
};

struct AuditReport {
  long long graphs = 0;
  std::vector<CheckAggregate> checks;

  const CheckAggregate* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.check_id == id) return &c;
    return nullptr;
  }

  bool any_expectation_violated() const {
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.expectation_violated(); });
  }
};

struct CorpusAuditOptions {
  double tol = 1e-9;
  double solver_tol = 1e-12;
  unsigned jobs = 0; // 0: hardware concurrency
  std::size_t chunk = 2048;
  std::vector<const CheckSpec*> selection; // empty: whole registry
};

/// Per-graph results in stream order, for row-level exports.
using AuditRowSink = std::function<void(const Graph&, const std::string& graph6, std::span<const BoundCheckResult>)>;

namespace detail {

struct GraphAudit {
  std::string graph6;
  bool connected = false;
  std::vector<BoundCheckResult> results;
  std::exception_ptr error;
};

} // namespace detail

/// Streams the source in bounded chunks, audits each chunk in parallel and
/// merges in stream order, so the report is independent of scheduling.
template <GraphSource Source>
AuditReport run_corpus_audit(Source& source, const CorpusAuditOptions& opt = {}, const AuditRowSink& sink = {}) {
  std::vector<const CheckSpec*> selection = opt.selection;
  if (selection.empty()) {
    for (const auto& spec : check_registry()) selection.push_back(&spec);
  }
  AuditReport report;
  for (const CheckSpec* spec : selection) {
    CheckAggregate a;
    a.check_id = std::string(spec->id);
    a.expectation = spec->expectation;
    a.has_equality_claim = spec->equality_expected != nullptr || spec->kind == CheckKind::Identity;
    report.checks.push_back(std::move(a));
  }
  const unsigned jobs = detail::resolve_jobs(opt.jobs);
  const std::size_t chunk = std::max<std::size_t>(1, opt.chunk);

  std::vector<Graph> batch;
  std::vector<detail::GraphAudit> audits;
  while (true) {
    batch.clear();
    while (batch.size() < chunk) {
      auto g = source.next();
      if (!g) break;
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) break;
    audits.assign(batch.size(), {});
    detail::parallel_for(batch.size(), jobs, [&](std::size_t i) {
      auto& slot = audits[i];
      slot.graph6 = write_graph6(batch[i]);
      try {
        const GraphFacts facts = compute_facts(batch[i], opt.solver_tol);
        slot.connected = facts.cls.is_connected;
        slot.results = run_audit(facts, opt.tol, selection);
      } catch (...) {
        slot.error = std::current_exception();
      }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      auto& slot = audits[i];
      if (slot.error) {
        try {
          std::rethrow_exception(slot.error);
        } catch (const SolverError& e) {
          throw WitnessedSolverError(e, slot.graph6);
        }
      }
      ++report.graphs;
      for (std::size_t k = 0; k < slot.results.size(); ++k) {
        report.checks[k].add(slot.results[k], batch[i].order(), slot.connected, slot.graph6);
      }
      if (sink) sink(batch[i], slot.graph6, slot.results);
    }
  }
  return report;
}

} // namespace dso
