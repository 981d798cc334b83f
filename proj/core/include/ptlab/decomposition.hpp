#pragma once

#include <optional>
#include <variant>

#include "ptlab/graph.hpp"
#include "ptlab/recognizers.hpp"
#include "ptlab/rng.hpp"

namespace ptlab {

enum class CutKind { Sparse, Dense };

/// Bipartition of the vertex set with its crossing density.
struct Cut {
  VertexSet side1;
  VertexSet side2;
  CutKind kind = CutKind::Sparse;
  double crossing_density = 0.0;
  std::size_t crossing_edges = 0;

  /// Pair modifications needed to turn this into an exact cut.
  std::size_t repair_cost() const {
    const std::size_t pairs = side1.size() * side2.size();
    return kind == CutKind::Sparse ? crossing_edges : pairs - crossing_edges;
  }
};

enum class SearchMode { Exact, Heuristic };

/// Exact search above this order is refused.
inline constexpr std::size_t kExactCutBound = 22;

/// Outcome of a beta-cut search. `certified_none` distinguishes a proof of
/// nonexistence (exact mode, or beta = 0) from a heuristic giving up.
struct BetaCutResult {
  std::optional<Cut> cut;
  bool certified_none = false;
  std::size_t effort = 0;  // local-search restarts spent (heuristic mode)

  bool found() const { return cut.has_value(); }
};

/// A 0-cut: components of g (sparse) or of its complement (dense), taking the
/// component of the lowest vertex as side1. nullopt iff neither is
/// disconnected. Throws InvalidArgument if n < 2.
std::optional<Cut> find_cut(const Graph& g);

/// Throws InvalidArgument unless 0 <= beta < 1/2, LimitExceeded for exact mode
/// above kExactCutBound. Exact mode returns the cut with least repair cost,
/// ties broken by lexicographically least side1.
BetaCutResult find_beta_cut(const Graph& g, double beta, SearchMode mode, RngStream& rng,
                            std::size_t restarts = 64);

/// True if the bipartition qualifies as a beta-cut.
bool is_beta_cut(const Graph& g, const VertexSet& side1, const VertexSet& side2, double beta);

struct Refinement {
  std::vector<VertexSet> parts;  // ordered by smallest vertex
  std::size_t edited_pairs = 0;
  Graph modified_graph;
  std::size_t cuts_used = 0;
  /// Sum over used cuts of |side1| * |side2|.
  std::size_t cut_pairs = 0;
  /// False if some part's "no cut" verdict came from the heuristic.
  bool certified = true;
};

/// Splits parts along beta-cuts of their induced subgraphs until none
/// remains, making each used cut exact (delete crossing edges of a sparse cut,
/// complete a dense one).
Refinement refine_along_cuts(const Graph& g, double beta, SearchMode mode, RngStream& rng);

inline constexpr std::size_t kDistanceMaxOrder = 10;
inline constexpr std::size_t kDistanceMaxCap = 5;

/// Minimum number of pair toggles reaching the property, or nullopt when it
/// exceeds cap. Bounded search tree: some pair inside each witness must be
/// toggled, so branch on those pairs with iterative deepening. The recognizer
/// must be hereditary and return vertex-set witnesses.
/// Throws LimitExceeded if n > 10 or cap > 5.
std::optional<std::size_t> distance_to_property(const Graph& g, const Recognizer& recognizer,
                                                std::size_t cap);

}  // namespace ptlab
