#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ptlab/digraph.hpp"
#include "ptlab/graph.hpp"
#include "ptlab/labeling.hpp"

namespace ptlab {

/// Outcome of an exact membership test. A non-member always carries a witness:
/// the vertices of a forbidden induced structure. Where order matters the
/// witness is in structural order (path order for P3, cycle order for holes,
/// x, y, z for a transitivity violation x->y->z); otherwise ascending.
struct RecognitionResult {
  bool member = true;
  std::optional<std::vector<Vertex>> witness;
  std::string detail;

  static RecognitionResult yes() { return {}; }
  static RecognitionResult no(std::vector<Vertex> witness, std::string detail) {
    return {false, std::move(witness), std::move(detail)};
  }
};

enum class Property { TriangleFree, InducedHFree, Cograph, Comparability, Perfect, Poset };

std::string_view to_string(Property p);
/// Accepts the CLI spellings: triangle-free, induced-h-free, cograph,
/// comparability, perfect, poset.
Property parse_property(std::string_view name);

using Recognizer = std::function<RecognitionResult(const Graph&)>;

inline constexpr std::size_t kInducedHBound = 6;
inline constexpr std::size_t kExhaustiveOrientationBound = 8;
inline constexpr std::size_t kExactPerfectBound = 14;

RecognitionResult is_triangle_free(const Graph& g);

/// Throws LimitExceeded if h has more than kInducedHBound vertices.
RecognitionResult is_induced_h_free(const Graph& g, const Graph& h);

/// Recursive decomposition along components of g or of its complement.
RecognitionResult is_cograph(const Graph& g);

enum class ComparabilityMode { Forcing, Exhaustive };

/// Forcing mode partitions the edges into implication classes of the
/// successively reduced edge set, orients each class, and verifies that the
/// union is transitive. Exhaustive mode (n <= kExhaustiveOrientationBound)
/// backtracks over all orientations and serves as the oracle.
RecognitionResult is_comparability(const Graph& g,
                                   ComparabilityMode mode = ComparabilityMode::Forcing);

/// A transitive orientation produced by the forcing algorithm, if one exists.
std::optional<Digraph> transitive_orientation(const Graph& g);

/// True iff d orients every edge of g exactly once and is transitive.
bool is_transitive_orientation_of(const Graph& g, const Digraph& d);

/// No induced odd cycle of length >= 5 in g or its complement.
/// Throws LimitExceeded when g.order() > bound.
RecognitionResult is_perfect(const Graph& g, std::size_t bound = kExactPerfectBound);

/// Induced odd cycle of length >= 5, in cycle order.
std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g);

RecognitionResult is_poset(const Digraph& d);

/// Orients every edge from the earlier part to the later one (ties by index,
/// part order as listed in the labeling) and checks transitivity.
/// Throws InvalidArgument if the labeling does not cover g.
RecognitionResult check_order_transitivity(const Graph& g, const PartLabeling& labeling);

/// Independent re-check that witness certifies non-membership of g in p.
/// For InducedHFree, h must be supplied.
bool verify_witness(Property p, const Graph& g, std::span<const Vertex> witness,
                    const Graph* h = nullptr);
bool verify_poset_witness(const Digraph& d, std::span<const Vertex> witness);

/// Recognizer closure for an undirected property. InducedHFree requires h.
Recognizer recognizer_for(Property p, std::optional<Graph> h = std::nullopt);

}  // namespace ptlab
