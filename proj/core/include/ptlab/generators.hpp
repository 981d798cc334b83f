#pragma once

#include "ptlab/graph.hpp"
#include "ptlab/rng.hpp"

namespace ptlab {

/// Erdos-Renyi G(n, p). Throws InvalidArgument unless 0 <= p <= 1.
Graph gnp(std::size_t n, double p, RngStream& rng);

/// Random cotree on n leaves: the vertex range is split at a uniform point and
/// each internal node is a disjoint union or a join with probability 1/2.
/// Every output is a cograph.
Graph random_cograph(std::size_t n, RngStream& rng);

/// Toggles k distinct, uniformly chosen vertex pairs.
/// Throws InvalidArgument if k > C(n, 2).
Graph flip_pairs(const Graph& g, std::size_t k, RngStream& rng);

/// Complete bipartite graph K_{a,b}; the first a vertices form one side.
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace ptlab
