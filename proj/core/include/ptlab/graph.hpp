#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ptlab/bitset.hpp"

namespace ptlab {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws InvalidArgument on self-loops, out-of-range endpoints or repeated
  /// pairs.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  /// Throws InvalidArgument unless rows form a symmetric loopless n x n matrix.
  static Graph from_rows(std::vector<Bitset> rows);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  /// Path on n vertices (n - 1 edges), 0-1-2-...
  static Graph path(std::size_t n);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  explicit Graph(std::vector<Bitset> rows, std::size_t edge_count)
      : rows_(std::move(rows)), edge_count_(edge_count) {}

  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const noexcept { return rows_.size(); }
  bool has_edge(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  void toggle(Vertex u, Vertex v);

  Graph build() const;

 private:
  void check_pair(Vertex u, Vertex v) const;
  std::vector<Bitset> rows_;
};

Graph complement(const Graph& g);

/// Subgraph induced by s (ascending, in range). Vertex i of the result is s[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Number of pairs on which a and b differ. Both must have the same order.
std::size_t hamming_distance(const Graph& a, const Graph& b);

/// n * (n - 1) / 2
constexpr std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Row-major upper-triangle encoding, one char per pair; used for stable
/// lexicographic tie-breaking between graphs of equal order.
std::vector<bool> adjacency_code(const Graph& g);

}  // namespace ptlab
