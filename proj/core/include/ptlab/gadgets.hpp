#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ptlab/digraph.hpp"
#include "ptlab/graph.hpp"
#include "ptlab/labeling.hpp"
#include "ptlab/packing.hpp"

namespace ptlab {

// ---------------------------------------------------------------------------
// Sets without three-term arithmetic progressions

/// Subset of 1..ground with no a < b < c, a + c = 2b.
class ApFreeSet {
 public:
  /// Throws InvalidArgument if an element is outside 1..ground, repeated, or
  /// the set contains a 3-AP.
  ApFreeSet(std::size_t ground, std::vector<std::size_t> elements);

  std::size_t ground() const noexcept { return ground_; }
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  struct Trusted {};
  ApFreeSet(std::size_t ground, std::vector<std::size_t> elements, Trusted)
      : ground_(ground), elements_(std::move(elements)) {}
  friend ApFreeSet ap3_free_set_behrend(std::size_t n);

  std::size_t ground_;
  std::vector<std::size_t> elements_;
};

/// A 3-AP (a, b, c) inside the given ascending set, if any.
std::optional<std::array<std::size_t, 3>> find_3ap(const std::vector<std::size_t>& sorted);

enum class ApMode { Exact, Behrend };

inline constexpr std::size_t kExactApBound = 40;
inline constexpr std::size_t kBehrendBound = 100'000'000;

/// Exact: a maximum 3-AP-free subset of 1..n (n <= kExactApBound).
/// Behrend: digit vectors on a common sphere, best parameters scanned, then
/// greedy augmentation for moderate n. Throws LimitExceeded past the guards.
ApFreeSet ap3_free_set(std::size_t n, ApMode mode);

/// Sizes r_3(1..n) of maximum 3-AP-free subsets, computed alongside the
/// exact search (index 0 is r_3(0) = 0).
std::vector<std::size_t> ap3_free_sizes(std::size_t n);

// ---------------------------------------------------------------------------
// Hard instances

/// A constructed instance with its machine-checkable certificate.
struct GadgetBundle {
  std::variant<Graph, Digraph> graph;
  PartLabeling labeling;
  WitnessPacking certificate;
  double farness = 0.0;
  nlohmann::json provenance;

  const Graph& undirected() const { return std::get<Graph>(graph); }
  const Digraph& directed() const { return std::get<Digraph>(graph); }
  std::size_t order() const;
};

/// Ruzsa-Szemeredi tripartite graph: X = 1..k, Y = 1..2k, Z = 1..3k with
/// triangles (x, x + a, x + 2a) for x in 1..k, a in S. Vertices are X, then Y,
/// then Z. The certificate is the k*|S| planted triangles; construction
/// re-checks that they are all the triangles.
GadgetBundle rs_graph(std::size_t k, const ApFreeSet& s);

/// Five-part gadget on 5n vertices from a tripartite F on n vertices whose
/// labeling parts (listed in order) play the roles V2, V3, V5. V1 occupies
/// 0..2n-1, V4 2n..4n-1, F's vertices 4n..5n-1 in their own order.
/// Certificate: greedy_c5_packing over `packing` (triangles of F) or, when
/// absent, a maximum (small F) or greedy triangle packing of F.
GadgetBundle build_c5_gadget(const Graph& f, const PartLabeling& f_labeling,
                             std::optional<WitnessPacking> packing = std::nullopt);

/// Poset gadget on the vertices of a tripartite T (parts listed in order as
/// V1, V2, V3): V1->V2 and V2->V3 arcs where T has edges, V1->V3 arcs where
/// it does not. Certificate: an edge-disjoint packing of T's triangles.
GadgetBundle build_poset_gadget(const Graph& t, const PartLabeling& labeling,
                                std::optional<WitnessPacking> packing = std::nullopt);

/// Proper 3-colouring of g as parts X, Y, Z (empty parts allowed), found by
/// backtracking in decreasing-degree order; nullopt if g is not tripartite.
std::optional<PartLabeling> find_tripartition(const Graph& g);

/// True if every part of the labeling is an independent set of g.
bool is_independent_partition(const Graph& g, const PartLabeling& labeling);

/// Re-checks every between-part and within-part edge rule of a C5 gadget
/// against F, pair by pair. Returns an empty string when all hold.
std::string audit_c5_gadget(const Graph& gadget, const Graph& f);

/// Triangles of T with one vertex per part must each appear as a violated
/// transitivity x->y->z in the poset gadget; marks the packing verified.
bool verify_poset_certificate(const Digraph& gadget, const Graph& t, WitnessPacking& packing);

}  // namespace ptlab
