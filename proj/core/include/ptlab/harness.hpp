#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ptlab/extremal.hpp"
#include "ptlab/gadgets.hpp"
#include "ptlab/packing.hpp"
#include "ptlab/testers.hpp"

namespace ptlab {

inline constexpr const char* kReportSchemaVersion = "1";

// ---------------------------------------------------------------------------
// Serialization

nlohmann::json to_json(const TesterReport& r);
nlohmann::json to_json(const WitnessPacking& p);
/// Inverse of to_json(WitnessPacking); `verified` is NOT trusted and comes
/// back false until verify_packing runs against the host.
WitnessPacking packing_from_json(const nlohmann::json& j);
/// Sidecar written next to every generated graph:
/// {construction, params, seed, packing, farness}.
nlohmann::json certificate_json(const GadgetBundle& b, std::uint64_t seed);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string str() const;
};

/// Locale-independent, round-trip-stable number formatting for reports.
std::string format_number(double x);

// ---------------------------------------------------------------------------
// Experiments

struct ExperimentSpec {
  std::string name = "experiment";
  std::string pipeline;  // "hardness" or "easy"
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string out;  // output directory; empty means none

  nlohmann::json to_json() const;
  /// Throws ParseError on missing or mistyped fields.
  static ExperimentSpec from_json(const nlohmann::json& j);
  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

/// Fills unspecified pipeline parameters with their defaults.
ExperimentSpec with_defaults(ExperimentSpec spec);

struct PipelineResult {
  CsvTable table;
  nlohmann::json graphs = nlohmann::json::array();  // [{name, n, m}]
  nlohmann::json results = nlohmann::json::object();
  /// Failed internal checks (e.g. a triangle-free F-portion that was not
  /// ordered transitively). Empty on a healthy run.
  std::vector<std::string> violations;
};

/// For each k: rs_graph -> random_tripartite_extract -> build_c5_gadget, then
/// universal-tester detection rates for induced-C5-freeness and for
/// comparability (via check_order_transitivity on the sample's labeling),
/// against a gnp control whose sampled C5 packing matches the gadget's.
/// Params: ks, ds, trials, retries, control_attempts.
PipelineResult run_hardness(const ExperimentSpec& spec, unsigned threads = 1);

/// Perturbed random cographs under the induced-P3 quadruple tester, with the
/// exact binomial prediction. Params: n, flips, ts, trials.
PipelineResult run_easy(const ExperimentSpec& spec, unsigned threads = 1);

PipelineResult run_pipeline(const ExperimentSpec& spec, unsigned threads = 1);

/// gnp(n, p) with p found by bisection as the least tried edge probability
/// whose greedy packing (triangles, or sampled induced C5s) reaches
/// `target` members. The packing is verified on the returned graph.
struct MatchedControl {
  Graph graph;
  double p = 0.0;
  WitnessPacking packing;
};
MatchedControl matched_gnp(std::size_t n, PackingKind kind, std::size_t target, RngStream rng,
                           std::size_t c5_attempts = 200'000);

/// Top-level report: {schema_version, command_line, spec, graphs, results,
/// timings}.
nlohmann::json make_report(const std::vector<std::string>& command_line,
                           const nlohmann::json& spec, const nlohmann::json& graphs,
                           const nlohmann::json& results, const nlohmann::json& timings);

}  // namespace ptlab
