// Command-line front end: spectra, energies, indices, characteristic
// polynomials, family generation, bound audits and the integer-energy scan.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dso/dso.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInputError = 2, kSolverError = 3, kAuditViolation = 4 };

struct InputOptions {
  std::string g6_file;
  std::string edges_file;
  std::string family;
  std::string enumerate;
  int n = 0;
  int p = 0;
  int q = 0;
};

struct CommonOptions {
  std::string format = "text";
  std::string out;
  double tol = 0;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Polymorphic wrapper so every subcommand can pull graphs the same way.
class AnySource {
public:
  template <dso::GraphSource S>
  explicit AnySource(S source) : impl_(std::make_unique<Model<S>>(std::move(source))) {}
  std::optional<dso::Graph> next() { return impl_->next(); }

private:
  struct Concept {
    virtual ~Concept() = default;
    virtual std::optional<dso::Graph> next() = 0;
  };
  template <class S>
  struct Model final : Concept {
    explicit Model(S s) : source(std::move(s)) {}
    std::optional<dso::Graph> next() override { return source.next(); }
    S source;
  };
  std::unique_ptr<Concept> impl_;
};

struct OpenedInput {
  std::unique_ptr<std::ifstream> file; // keeps a graph6 stream alive
  std::optional<AnySource> source;
  bool single = false;                 // exactly one graph
  std::optional<dso::FamilyKind> family;
  int family_n = 0;
};

double tol_default(double fallback) {
  if (const char* env = std::getenv("DSO_TOL")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("DSO_TOL is not a positive number: ") + env);
  }
  return fallback;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--g6", in.g6_file, "graph6 file, one record per line ('-' for stdin)");
  cmd->add_option("--edges", in.edges_file, "edge-list file: 'n m' then m lines 'i j'");
  cmd->add_option("--family", in.family, "path|cycle|complete|complete_bipartite|star|matching|edgeless");
  cmd->add_option("--enumerate", in.enumerate, "all labelled graphs of order N, or of orders LO:HI");
  cmd->add_option("--n", in.n, "order for --family");
  cmd->add_option("--p", in.p, "first part size for complete_bipartite");
  cmd->add_option("--q", in.q, "second part size for complete_bipartite");
}

void add_common_options(CLI::App* cmd, CommonOptions& common, double default_tol) {
  common.tol = default_tol;
  cmd->add_option("--format", common.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", common.out, "write output to FILE instead of standard output");
  cmd->add_option("--tol", common.tol, "tolerance (default overridable by DSO_TOL)")->check(CLI::PositiveNumber);
}

OpenedInput open_input(const InputOptions& in) {
  const int sources = !in.g6_file.empty() + !in.edges_file.empty() + !in.family.empty() + !in.enumerate.empty();
  if (sources != 1) throw UsageError("exactly one of --g6, --edges, --family, --enumerate is required");
  OpenedInput out;
  if (!in.family.empty()) {
    const auto kind = dso::parse_family(in.family);
    if (!kind) throw UsageError("unknown family '" + in.family + "'");
    dso::FamilyParams params{in.n, in.p, in.q};
    out.source.emplace(dso::GraphList({dso::generate_family(*kind, params)}));
    out.single = true;
    out.family = kind;
    out.family_n = *kind == dso::FamilyKind::CompleteBipartite ? in.p + in.q : in.n;
  } else if (!in.edges_file.empty()) {
    std::ifstream f(in.edges_file);
    if (!f) throw UsageError("cannot open " + in.edges_file);
    out.source.emplace(dso::GraphList({dso::read_edge_list(f)}));
    out.single = true;
  } else if (!in.g6_file.empty()) {
    if (in.g6_file == "-") {
      out.source.emplace(dso::Graph6Stream(std::cin));
    } else {
      out.file = std::make_unique<std::ifstream>(in.g6_file);
      if (!*out.file) throw UsageError("cannot open " + in.g6_file);
      out.source.emplace(dso::Graph6Stream(*out.file));
    }
  } else {
    int lo = 0;
    int hi = 0;
    const auto colon = in.enumerate.find(':');
    try {
      if (colon == std::string::npos) {
        lo = hi = std::stoi(in.enumerate);
      } else {
        lo = std::stoi(in.enumerate.substr(0, colon));
        hi = std::stoi(in.enumerate.substr(colon + 1));
      }
    } catch (const std::exception&) {
      throw UsageError("--enumerate expects N or LO:HI");
    }
    if (lo < 1 || hi > dso::kMaxEnumerationOrder || lo > hi) {
      throw UsageError("--enumerate supports orders within 1.." + std::to_string(dso::kMaxEnumerationOrder));
    }
    out.source.emplace(dso::LabeledGraphsUpTo(lo, hi));
  }
  return out;
}

std::vector<const dso::CheckSpec*> select_checks(const std::string& list) {
  std::vector<const dso::CheckSpec*> out;
  if (list.empty()) return out;
  std::stringstream ss(list);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    const auto* spec = dso::find_check(id);
    if (!spec) throw UsageError("unknown check id '" + id + "'");
    out.push_back(spec);
  }
  return out;
}

std::string join_reals(const std::vector<double>& xs, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += sep;
    s += dso::format_real(xs[k]);
  }
  return s;
}

int run_spectrum(OpenedInput& input, const CommonOptions& c, std::ostream& os) {
  if (c.format == "csv") os << "graph6,index,eigenvalue\n";
  while (auto g = input.source->next()) {
    const auto s = dso::dso_spectrum(*g, c.tol);
    const auto g6 = dso::write_graph6(*g);
    if (c.format == "json") {
      os << dso::spectrum_json(s, g6) << "\n";
    } else if (c.format == "csv") {
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        os << g6 << "," << k + 1 << "," << dso::format_real(s.eigenvalues[k]) << "\n";
      }
    } else {
      if (!input.single) os << g6 << ": ";
      os << join_reals(s.eigenvalues, " ") << "  (t=" << s.distinct_count << ")\n";
    }
  }
  return kOk;
}

int run_energy(OpenedInput& input, const CommonOptions& c, std::ostream& os) {
  if (c.format == "csv") os << "graph6,energy,spectral_radius\n";
  while (auto g = input.source->next()) {
    const auto s = dso::dso_spectrum(*g, c.tol);
    const auto g6 = dso::write_graph6(*g);
    const double radius = s.eigenvalues.empty() ? 0.0 : dso::spectral_radius(s);
    if (c.format == "json") {
      os << dso::JsonObject().str("graph6", g6).real("energy", dso::energy(s)).real("spectral_radius", radius).dump()
         << "\n";
    } else if (c.format == "csv") {
      os << g6 << "," << dso::format_real(dso::energy(s)) << "," << dso::format_real(radius) << "\n";
    } else {
      if (!input.single) os << g6 << " ";
      os << dso::format_real(dso::energy(s)) << "\n";
    }
  }
  return kOk;
}

int run_indices(OpenedInput& input, const CommonOptions& c, double alpha, double beta, std::ostream& os) {
  if (c.format == "csv") {
    os << "graph6,n,m,max_degree,min_degree,DSO,GA,M1,M_alpha_beta,trace_M2,trace_identity_lhs,"
          "m_minus_2M12,m_minus_M12\n";
  }
  while (auto g = input.source->next()) {
    const auto g6 = dso::write_graph6(*g);
    const auto d = dso::degree_summary(*g);
    const auto id = dso::trace_square_identity(*g);
    const double mab = dso::gutman_milovanovic(*g, alpha, beta);
    if (c.format == "json") {
      os << dso::JsonObject()
                .str("graph6", g6)
                .integer("n", d.n)
                .integer("m", d.m)
                .integer("max_degree", d.max_degree)
                .integer("min_degree", d.min_degree)
                .real("DSO", dso::dso_index(*g))
                .real("GA", dso::geometric_arithmetic(*g))
                .real("M1", dso::first_zagreb(*g))
                .real("alpha", alpha)
                .real("beta", beta)
                .real("M_alpha_beta", mab)
                .real("trace_M2", dso::trace_square_edge_formula(*g))
                .real("trace_identity_lhs", id.lhs)
                .real("m_minus_2M12", id.rhs_corrected)
                .real("m_minus_M12", id.rhs_as_stated)
                .dump()
         << "\n";
    } else if (c.format == "csv") {
      os << g6 << "," << d.n << "," << d.m << "," << d.max_degree << "," << d.min_degree << ","
         << dso::format_real(dso::dso_index(*g)) << "," << dso::format_real(dso::geometric_arithmetic(*g)) << ","
         << dso::format_real(dso::first_zagreb(*g)) << "," << dso::format_real(mab) << ","
         << dso::format_real(dso::trace_square_edge_formula(*g)) << "," << dso::format_real(id.lhs) << ","
         << dso::format_real(id.rhs_corrected) << "," << dso::format_real(id.rhs_as_stated) << "\n";
    } else {
      if (!input.single) os << g6 << "\n";
      os << "n " << d.n << "\nm " << d.m << "\nDSO " << dso::format_real(dso::dso_index(*g)) << "\nGA "
         << dso::format_real(dso::geometric_arithmetic(*g)) << "\nM1 " << dso::format_real(dso::first_zagreb(*g))
         << "\nM_{" << dso::format_real(alpha) << "," << dso::format_real(beta) << "} " << dso::format_real(mab)
         << "\ntr(M^2) " << dso::format_real(dso::trace_square_edge_formula(*g)) << "\n";
    }
  }
  return kOk;
}

int run_charpoly(OpenedInput& input, const CommonOptions& c, std::ostream& os) {
  const bool exact_path = input.family == dso::FamilyKind::Path && input.family_n >= 2;
  if (c.format == "csv") os << "graph6,degree,coefficient\n";
  while (auto g = input.source->next()) {
    const auto g6 = dso::write_graph6(*g);
    if (exact_path) {
      const auto p = dso::path_char_poly(input.family_n);
      if (c.format == "json") {
        os << dso::charpoly_json(p, g6) << "\n";
      } else if (c.format == "csv") {
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
          os << g6 << "," << k << "," << dso::rational_text(p.coefficients()[k]) << "\n";
        }
      } else {
        std::string line;
        for (const auto& coeff : p.coefficients()) line += (line.empty() ? "" : " ") + dso::rational_text(coeff);
        os << line << "\n";
      }
      continue;
    }
    const auto p = dso::char_poly_numeric(dso::dso_spectrum(*g, c.tol));
    if (c.format == "json") {
      os << dso::charpoly_json(p, g6) << "\n";
    } else if (c.format == "csv") {
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        os << g6 << "," << k << "," << dso::format_real(p.coefficients()[k]) << "\n";
      }
    } else {
      if (!input.single) os << g6 << ": ";
      os << join_reals(p.coefficients(), " ") << "\n";
    }
  }
  return kOk;
}

int run_family(OpenedInput& input, const CommonOptions& c, std::ostream& os) {
  if (c.format == "csv") os << "graph6,u,v\n";
  while (auto g = input.source->next()) {
    const auto g6 = dso::write_graph6(*g);
    if (c.format == "json") {
      std::vector<std::string> edges;
      for (auto [i, j] : g->edges()) edges.push_back("[" + std::to_string(i) + "," + std::to_string(j) + "]");
      std::vector<std::string> degrees;
      for (int d : g->degrees()) degrees.push_back(std::to_string(d));
      os << dso::JsonObject()
                .str("graph6", g6)
                .integer("n", g->order())
                .integer("m", g->size())
                .raw("degrees", dso::json_array(degrees))
                .raw("edges", dso::json_array(edges))
                .dump()
         << "\n";
    } else if (c.format == "csv") {
      for (auto [i, j] : g->edges()) os << g6 << "," << i << "," << j << "\n";
    } else {
      os << g6 << "\n";
    }
  }
  return kOk;
}

int run_audit_cmd(OpenedInput& input, const CommonOptions& c, const std::string& checks, unsigned jobs,
                  double solver_tol, std::ostream& os) {
  dso::CorpusAuditOptions opt;
  opt.tol = c.tol;
  opt.solver_tol = solver_tol;
  opt.jobs = jobs;
  opt.selection = select_checks(checks);
  dso::AuditRowSink sink;
  if (c.format == "csv") {
    os << dso::audit_csv_header();
    sink = [&os](const dso::Graph&, const std::string& g6, std::span<const dso::BoundCheckResult> rows) {
      for (const auto& r : rows) os << dso::audit_csv_row(g6, r);
    };
  }
  const auto report = dso::run_corpus_audit(*input.source, opt, sink);
  if (c.format == "json") {
    os << dso::audit_report_json(report);
  } else if (c.format == "text") {
    os << "graphs " << report.graphs << "\n";
    for (const auto& a : report.checks) {
      os << a.check_id << " [" << dso::expectation_name(a.expectation) << "] applicable=" << a.applicable
         << " holds=" << a.holds << " fails=" << a.fails;
      if (a.worst_slack) os << " worst_slack=" << dso::format_real(*a.worst_slack) << " witness=" << a.worst.graph6;
      os << " equality=" << dso::verdict_name(a.equality_verdict()) << "\n";
    }
  }
  for (const auto& a : report.checks) {
    if (a.expectation_violated()) {
      std::cerr << "dso: check " << a.check_id << " expected to hold but failed on " << a.fails
                << " graph(s); witness " << a.worst.graph6 << "\n";
    }
  }
  return report.any_expectation_violated() ? kAuditViolation : kOk;
}

int run_search_cmd(OpenedInput& input, const CommonOptions& c, double epsilon, bool dedup, std::size_t top_k,
                   unsigned jobs, std::ostream& os) {
  dso::SearchOptions opt;
  opt.epsilon = epsilon;
  opt.dedup = dedup;
  opt.top_k = top_k;
  opt.jobs = jobs;
  opt.scan_tol = c.tol;
  const auto result = dso::search(*input.source, opt);
  if (c.format == "json") {
    for (const auto& cand : result.candidates) os << dso::candidate_json(cand) << "\n";
    for (const auto& row : result.nearest) {
      auto line = dso::candidate_json(row);
      line.insert(line.size() - 1, ",\"near_integer_report\":true");
      os << line << "\n";
    }
  } else if (c.format == "csv") {
    os << "kind,graph6,n,m,energy,gap,nearest_integer,connected\n";
    auto row = [&](const char* kind, const dso::EnergyCandidate& e) {
      os << kind << "," << e.graph6 << "," << e.n << "," << e.m << "," << dso::format_real(e.energy) << ","
         << dso::format_real(e.gap) << "," << e.nearest_integer << "," << (e.connected ? "true" : "false") << "\n";
    };
    for (const auto& cand : result.candidates) row("candidate", cand);
    for (const auto& near : result.nearest) row("nearest", near);
  } else {
    os << "scanned " << result.scanned << "\nedgeless_skipped " << result.edgeless_skipped
       << "\nduplicates_skipped " << result.duplicates_skipped << "\nevaluated " << result.evaluated
       << "\ncandidates " << result.candidates.size() << "\nconnected_candidates " << result.connected_candidates
       << "\n";
    for (const auto& cand : result.candidates) {
      os << "candidate " << cand.graph6 << " energy=" << dso::format_real(cand.energy)
         << " gap=" << dso::format_real(cand.gap) << "\n";
    }
    for (const auto& near : result.nearest) {
      os << "nearest " << near.graph6 << " energy=" << dso::format_real(near.energy)
         << " gap=" << dso::format_real(near.gap) << "\n";
    }
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diminished Sombor matrix spectra, energies, indices and bound audits"};
  app.require_subcommand(1);

  InputOptions in;
  CommonOptions common;
  std::string checks;
  unsigned jobs = 0;
  double solver_tol = 1e-12;
  double epsilon = 1e-6;
  bool dedup = false;
  std::size_t top_k = 0;
  double alpha = 1.0;
  double beta = -2.0;

  double solver_default = 1e-12;
  double audit_default = 1e-9;
  try {
    solver_default = tol_default(1e-12);
    audit_default = tol_default(1e-9);
  } catch (const UsageError& e) {
    std::cerr << "dso: " << e.what() << "\n";
    return kInputError;
  }

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the diminished Sombor matrix");
  auto* energy = app.add_subcommand("energy", "sum of absolute eigenvalues");
  auto* indices = app.add_subcommand("indices", "DSO, GA, M1, M_{alpha,beta} and trace quantities");
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial coefficients c0..cn");
  auto* family = app.add_subcommand("family", "emit a named graph");
  auto* audit = app.add_subcommand("audit", "evaluate the bound registry over a corpus");
  auto* search = app.add_subcommand("search", "scan for near-integral energies");

  for (auto* cmd : {spectrum, energy, indices, charpoly, family, search}) {
    add_input_options(cmd, in);
    add_common_options(cmd, common, solver_default);
  }
  add_input_options(audit, in);
  add_common_options(audit, common, audit_default);

  indices->add_option("--alpha", alpha, "alpha for M_{alpha,beta}");
  indices->add_option("--beta", beta, "beta for M_{alpha,beta}");
  audit->add_option("--checks", checks, "comma-separated check ids (default: all)");
  audit->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
  audit->add_option("--solver-tol", solver_tol, "eigensolver tolerance")->check(CLI::PositiveNumber);
  search->add_option("--epsilon", epsilon, "report energies within epsilon of an integer")
      ->check(CLI::PositiveNumber);
  search->add_flag("--dedup", dedup, "skip graphs isomorphic to one already seen (n <= 8)");
  search->add_option("--top-k", top_k, "also report the k smallest gaps");
  search->add_option("--jobs", jobs, "worker threads (default: available parallelism)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "dso: " << e.what() << "\n";
    return kInputError;
  }

  try {
    auto input = open_input(in);
    std::ofstream file;
    if (!common.out.empty()) {
      file.open(common.out);
      if (!file) throw UsageError("cannot write " + common.out);
    }
    std::ostream& os = common.out.empty() ? std::cout : file;
    int code = kOk;
    if (spectrum->parsed()) code = run_spectrum(input, common, os);
    else if (energy->parsed()) code = run_energy(input, common, os);
    else if (indices->parsed()) code = run_indices(input, common, alpha, beta, os);
    else if (charpoly->parsed()) code = run_charpoly(input, common, os);
    else if (family->parsed()) code = run_family(input, common, os);
    else if (audit->parsed()) code = run_audit_cmd(input, common, checks, jobs, solver_tol, os);
    else if (search->parsed()) code = run_search_cmd(input, common, epsilon, dedup, top_k, jobs, os);
    os.flush();
    return code;
  } catch (const dso::SolverError& e) {
    std::cerr << "dso: " << e.what() << "\n";
    return kSolverError;
  } catch (const std::exception& e) {
    std::cerr << "dso: " << e.what() << "\n";
    return kInputError;
  }
}
