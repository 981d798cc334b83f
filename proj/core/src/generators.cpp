#include "ptlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ptlab/counting.hpp"
#include "ptlab/errors.hpp"

namespace ptlab {

Graph gnp(std::size_t n, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("gnp: p must lie in [0, 1]");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (p >= 1.0 || rng.bernoulli(p)) b.add_edge(u, v);
    }
  }
  return b.build();
}

namespace {

void build_cotree(GraphBuilder& b, std::span<const Vertex> leaves, RngStream& rng) {
  if (leaves.size() < 2) return;
  const std::size_t cut = 1 + rng.below(leaves.size() - 1);
  const auto left = leaves.first(cut);
  const auto right = leaves.subspan(cut);
  if (rng.below(2) == 1) {
    for (Vertex u : left) {
      for (Vertex v : right) b.add_edge(u, v);
    }
  }
  build_cotree(b, left, rng);
  build_cotree(b, right, rng);
}

}  // namespace

Graph random_cograph(std::size_t n, RngStream& rng) {
  std::vector<Vertex> leaves(n);
  std::iota(leaves.begin(), leaves.end(), Vertex{0});
  std::shuffle(leaves.begin(), leaves.end(), rng);
  GraphBuilder b(n);
  build_cotree(b, leaves, rng);
  return b.build();
}

Graph flip_pairs(const Graph& g, std::size_t k, RngStream& rng) {
  const std::size_t n = g.order();
  const std::size_t pairs = pair_count(n);
  if (k > pairs) throw InvalidArgument("flip_pairs: k exceeds the number of vertex pairs");
  GraphBuilder b(g);
  // Pair index i <-> (u, v) in row-major upper-triangle order.
  std::vector<Edge> index_to_pair;
  index_to_pair.reserve(pairs);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) index_to_pair.emplace_back(u, v);
  }
  for (std::size_t i : sample_vertices(pairs, k, rng)) {
    b.toggle(index_to_pair[i].first, index_to_pair[i].second);
  }
  return b.build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder out(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) out.add_edge(u, v);
  }
  return out.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out.build();
}

}  // namespace ptlab
