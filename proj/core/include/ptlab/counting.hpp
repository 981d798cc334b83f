#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ptlab/graph.hpp"
#include "ptlab/rng.hpp"

namespace ptlab {

using Triangle = std::array<Vertex, 3>;  // ascending

/// Default guard for exact induced-C5 counting.
inline constexpr std::size_t kExactC5Bound = 64;

std::uint64_t count_triangles(const Graph& g);
/// All triangles in lexicographic order.
std::vector<Triangle> list_triangles(const Graph& g);
std::uint64_t triangles_through_edge(const Graph& g, Vertex u, Vertex v);

/// Induced paths on four vertices (three edges).
std::uint64_t count_induced_p3(const Graph& g);

/// Induced 5-cycles. Throws LimitExceeded when g.order() > bound.
std::uint64_t count_induced_c5(const Graph& g, std::size_t bound = kExactC5Bound);

bool is_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);
/// True if the four vertices induce a path with three edges.
bool induces_p3(const Graph& g, std::span<const Vertex> quad);
/// True if the five vertices induce a 5-cycle.
bool induces_c5(const Graph& g, std::span<const Vertex> five);

/// Uniform d-subset of 0..n-1 without replacement (Floyd), ascending.
/// Throws InvalidArgument if d > n.
VertexSet sample_vertices(std::size_t n, std::size_t d, RngStream& rng);

}  // namespace ptlab
