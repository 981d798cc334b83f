#pragma once

#include <span>
#include <vector>

#include "ptlab/bitset.hpp"
#include "ptlab/graph.hpp"

namespace ptlab {

using Arc = std::pair<Vertex, Vertex>;  // tail -> head

/// Immutable directed graph; row(u) holds the out-neighbours of u.
/// Antiparallel arcs are representable; only self-arcs are rejected.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  /// Throws InvalidArgument on self-arcs, out-of-range endpoints or repeats.
  static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  bool has_arc(Vertex u, Vertex v) const noexcept { return out_[u].test(v); }
  const Bitset& out_row(Vertex u) const noexcept { return out_[u]; }

  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<Bitset> out_;
  std::size_t arc_count_ = 0;
};

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> s);

}  // namespace ptlab
