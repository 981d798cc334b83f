#include "ptlab/graph.hpp"

#include <string>

#include "ptlab/errors.hpp"

namespace ptlab {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) {
    if (!b.add_edge(u, v)) {
      throw InvalidArgument("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ")");
    }
  }
  return b.build();
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  const std::size_t n = rows.size();
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n) throw InvalidArgument("adjacency row has wrong width");
    if (rows[u].test(u)) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    degree_sum += rows[u].count();
  }
  for (std::size_t u = 0; u < n; ++u) {
    rows[u].for_each([&](std::size_t v) {
      if (!rows[v].test(u)) {
        throw InvalidArgument("asymmetric adjacency between " + std::to_string(u) + " and " +
                              std::to_string(v));
      }
    });
  }
  return Graph(std::move(rows), degree_sum / 2);
}

Graph Graph::complete(std::size_t n) { return complement(Graph(n)); }

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph Graph::path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = rows_[u].find_next(u + 1); v < order(); v = rows_[u].find_next(v + 1)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, Bitset(n)) {}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows_) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    throw InvalidArgument("vertex index out of range in pair (" + std::to_string(u) + ", " +
                          std::to_string(v) + ")");
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!rows_[u].test(v)) return false;
  rows_[u].reset(v);
  rows_[v].reset(u);
  return true;
}

void GraphBuilder::toggle(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].flip(v);
  rows_[v].flip(u);
}

Graph GraphBuilder::build() const {
  std::size_t degree_sum = 0;
  for (const auto& r : rows_) degree_sum += r.count();
  return Graph(rows_, degree_sum / 2);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    Bitset r = g.row(v).complemented();
    r.reset(v);
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.order()) {
      throw InvalidArgument("induced_subgraph: vertex " + std::to_string(s[i]) + " out of range");
    }
    if (i > 0 && s[i] <= s[i - 1]) {
      throw InvalidArgument("induced_subgraph: vertex set must be strictly ascending");
    }
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
    }
  }
  return b.build();
}

std::size_t hamming_distance(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw InvalidArgument("hamming_distance: order mismatch");
  std::size_t twice = 0;
  for (Vertex v = 0; v < a.order(); ++v) {
    Bitset diff = a.row(v);
    diff ^= b.row(v);
    twice += diff.count();
  }
  return twice / 2;
}

std::vector<bool> adjacency_code(const Graph& g) {
  std::vector<bool> code;
  code.reserve(pair_count(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) code.push_back(g.adjacent(u, v));
  }
  return code;
}

}  // namespace ptlab
