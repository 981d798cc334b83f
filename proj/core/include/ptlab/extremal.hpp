#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ptlab/graph.hpp"
#include "ptlab/rng.hpp"

namespace ptlab {

enum class ExtremalQuantity { CutFree, Far };  // c(beta, n) and f(eps, n)

/// Upper-bound candidate for one of the extremal P3 densities.
struct ExtremalRecord {
  ExtremalQuantity quantity = ExtremalQuantity::CutFree;
  std::size_t n = 0;
  double parameter = 0.0;  // beta or epsilon
  Graph graph;
  std::uint64_t p3_count = 0;
  double p3_density = 0.0;  // p3_count / n^4
  /// CutFree: exact search found no beta-cut. Far: the distance oracle
  /// confirmed distance_to_cograph >= ceil(eps n^2).
  bool certified = false;
  std::optional<std::size_t> distance;  // Far only: exact, or the cap when above it
  double lower_bound = 0.0;
  std::size_t restarts = 0;
  std::size_t successful_restarts = 0;

  bool bound_holds() const { return p3_density >= lower_bound; }
};

/// (beta/100)^12
double cut_free_lower_bound(double beta);
/// (eps/100)^16
double far_lower_bound(double epsilon);

/// Record for a given graph, certifying the absence of a beta-cut exactly.
/// Throws LimitExceeded above kExactCutBound.
ExtremalRecord make_p3_record(const Graph& g, double beta);

/// Hill climbing over single-pair toggles from random starts, keeping the
/// graph beta-cut-free (exact check each step). Equal-count moves are taken
/// with probability 1/2. Restart r uses rng.split(r); the best record is the
/// least P3 count, ties by least adjacency code. Throws LimitExceeded if no
/// restart reaches a cut-free graph or n > kExactCutBound.
ExtremalRecord search_min_p3_density(std::size_t n, double beta, std::size_t effort,
                                     const RngStream& rng, unsigned threads = 1);

/// Same search constrained to graphs at distance >= ceil(eps n^2) from every
/// cograph, checked with distance_to_property. Requires n <= 10 and
/// ceil(eps n^2) <= kDistanceMaxCap.
ExtremalRecord estimate_f(std::size_t n, double epsilon, std::size_t effort, const RngStream& rng,
                          unsigned threads = 1);

/// Sidecar JSON; the graph itself is stored separately as an edge list.
nlohmann::json to_json(const ExtremalRecord& r);
/// Rebuilds a record from its sidecar and graph; the P3 count and density are
/// recomputed, and a mismatch with the stored count is an InvariantViolation.
ExtremalRecord record_from_json(const nlohmann::json& j, const Graph& g);

std::string to_string(ExtremalQuantity q);

}  // namespace ptlab
