#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptlab/graph.hpp"
#include "ptlab/recognizers.hpp"
#include "ptlab/rng.hpp"

namespace ptlab {

/// Outcome of one tester run. A rejection carries the queried vertices that
/// witnessed it (the whole sample for the universal tester, the offending
/// triple or quadruple for the density testers).
struct Verdict {
  bool reject = false;
  std::vector<Vertex> witness;
};

/// Membership test applied to a sample: sees the induced subgraph and the
/// sampled vertex indices (ascending) in the host graph.
using SampleRecognizer =
    std::function<RecognitionResult(const Graph& sub, std::span<const Vertex> sample)>;

/// Samples d vertices and rejects iff their induced subgraph is not a member.
/// Throws InvalidArgument if d > n.
Verdict universal_tester(const Graph& g, std::size_t d, const Recognizer& recognizer,
                         RngStream& rng);
Verdict universal_tester(const Graph& g, std::size_t d, const SampleRecognizer& recognizer,
                         RngStream& rng);

/// t independent uniform triples; rejects iff one is a triangle. n >= 3.
Verdict triangle_tester(const Graph& g, std::size_t t, RngStream& rng);

/// t independent uniform 4-sets; rejects iff one induces P3. n >= 4.
Verdict induced_p3_tester(const Graph& g, std::size_t t, RngStream& rng);

enum class TesterKind { Universal, TripleDensity, QuadrupleDensity };

std::string to_string(TesterKind k);
TesterKind parse_tester_kind(const std::string& name);

struct TesterConfig {
  TesterKind kind = TesterKind::Universal;
  /// d for the universal tester, t for the density testers.
  std::size_t budget = 1;
  /// Universal tester only.
  Property property = Property::TriangleFree;
  std::optional<Graph> pattern;  // for InducedHFree
  /// Overrides `property` when set; `custom_name` labels it in reports.
  SampleRecognizer custom;
  std::string custom_name;
  std::uint64_t seed = 0;
};

/// C(d, 2) for universal, 3t for triples, 6t for quadruples.
std::size_t queries_per_trial(TesterKind kind, std::size_t budget);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval at 95% confidence.
Interval wilson95(std::size_t successes, std::size_t trials);

struct TesterReport {
  TesterConfig config;
  std::size_t trials = 0;
  std::size_t rejections = 0;
  double rejection_rate = 0.0;
  Interval wilson;
  std::size_t queries_per_trial = 0;
};

/// Runs a single trial of the configured tester on its own stream.
Verdict run_tester(const Graph& g, const TesterConfig& config, RngStream& rng);

/// Trial i draws from RngStream(config.seed).split(i), so the report depends
/// only on (graph, config, trials), never on `threads`.
TesterReport estimate_detection(const Graph& g, const TesterConfig& config, std::size_t trials,
                                unsigned threads = 1);

/// Positive rational number num/den.
struct Fraction {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Parses "p/q", an integer, or a finite decimal such as "0.05".
Fraction parse_fraction(const std::string& text);

struct SampleCounts {
  /// ceil(2 (100/eps)^16), exact.
  boost::multiprecision::cpp_int p3_t;
  bool exceeds_desk_budget = true;
  std::string triangle_note;
};

/// Quadruple count of the induced-P3 tester at its theoretical delta
/// (eps/100)^16. Throws InvalidArgument unless 0 < eps <= 1.
SampleCounts theoretical_sample_counts(const Fraction& epsilon);

/// (3 delta)^(-1/3): the universal triangle tester needs at least this many
/// vertices when the triangle density (triangles / n^3) is delta.
double analytic_floor(double triangle_density);

struct BudgetSearch {
  std::optional<std::size_t> budget;  // least passing budget
  bool cap_exceeded = false;
  std::vector<TesterReport> curve;  // every budget evaluated, ascending
  std::optional<double> analytic_floor;
};

/// Least budget whose Wilson lower bound on the rejection rate reaches
/// `target`: doubling, then binary search. The universal tester's budget is
/// also capped at n.
BudgetSearch min_budget_for_detection(const Graph& g, const TesterConfig& base, double target,
                                      std::size_t trials, std::size_t cap,
                                      std::optional<double> triangle_density = std::nullopt,
                                      unsigned threads = 1);

}  // namespace ptlab
