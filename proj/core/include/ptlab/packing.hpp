#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptlab/counting.hpp"
#include "ptlab/graph.hpp"
#include "ptlab/labeling.hpp"
#include "ptlab/rng.hpp"

namespace ptlab {

enum class PackingKind { Triangle, InducedC5 };

/// Family of forbidden substructures, pairwise sharing at most one vertex (for
/// triangles this is edge-disjointness), so each pair edit destroys at most
/// one member. `verified` is only set by verify_packing against host order
/// `host_n`.
struct WitnessPacking {
  PackingKind kind = PackingKind::Triangle;
  std::vector<std::vector<Vertex>> tuples;
  std::size_t host_n = 0;
  bool verified = false;

  std::size_t size() const noexcept { return tuples.size(); }
};

/// Checks every tuple induces its structure in host and the overlap rule;
/// on success marks p verified for host. Returns false with a reason
/// otherwise (p is left unverified).
bool verify_packing(const Graph& host, WitnessPacking& p, std::string* why = nullptr);

/// Overlap rule only: no vertex pair lies in two tuples.
bool pairwise_share_at_most_one(const std::vector<std::vector<Vertex>>& tuples);

enum class PackingMode { Exact, Greedy };

inline constexpr std::size_t kExactPackingMaxOrder = 14;
inline constexpr std::size_t kExactPackingMaxTriangles = 10000;

/// Exact: maximum edge-disjoint triangle family by branch and bound.
/// Greedy: maximal family scanning triangles lexicographically, or in a
/// shuffled order when rng is given. Throws LimitExceeded past the exact guard.
WitnessPacking triangle_packing(const Graph& g, PackingMode mode, RngStream* rng = nullptr);

enum class CoverMode { Exact, FromPacking };

/// Edges meeting every triangle. Exact: minimum such set. FromPacking: all
/// edges of a maximum packing (3 tau edges).
std::vector<Edge> triangle_cover(const Graph& g, CoverMode mode);

/// Induced-C5 packing of a gadget built by build_c5_gadget, one 5-cycle per
/// planted triangle of F. Tuples are (t2, t3, t5, v1, v4) in gadget indices.
/// Throws InvariantViolation if the V1/V4 pool runs dry.
WitnessPacking greedy_c5_packing(const Graph& gadget, const PartLabeling& labeling,
                                 const WitnessPacking& planted);

/// Greedy induced-C5 packing of an arbitrary graph from `attempts` uniform
/// 5-sets, keeping each induced C5 that shares no pair with an earlier one.
/// Unverified on return.
WitnessPacking sampled_c5_packing(const Graph& g, std::size_t attempts, RngStream& rng);

/// |tuples| / n^2. Throws InvalidArgument unless the packing was verified on
/// a host of order n.
double farness_lower_bound(const WitnessPacking& p, std::size_t n);

struct TripartiteExtract {
  Graph f;
  PartLabeling labeling;  // parts X, Y, Z; may be empty
  WitnessPacking retained;
  std::vector<std::size_t> assignment;
};

/// Best of `retries` uniform tripartitions: keeps only edges between different
/// parts and the packing triangles with one vertex in each part. With
/// `forced`, that assignment is used once instead.
TripartiteExtract random_tripartite_extract(
    const Graph& g, const WitnessPacking& packing, RngStream& rng, std::size_t retries,
    const std::optional<std::vector<std::size_t>>& forced = std::nullopt);

std::string to_string(PackingKind k);

}  // namespace ptlab
