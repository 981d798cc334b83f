#include "ptlab/counting.hpp"

#include <algorithm>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {

// Vertices strictly greater than v.
Bitset above(std::size_t n, Vertex v) {
  Bitset b(n);
  for (Vertex u = v + 1; u < n; ++u) b.set(u);
  return b;
}

}  // namespace

std::uint64_t count_triangles(const Graph& g) {
  // Each triangle a<b<c is counted once, from its smallest edge (a, b).
  std::uint64_t total = 0;
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const Bitset& ra = g.row(a);
    for (Vertex b = ra.find_next(a + 1); b < n; b = ra.find_next(b + 1)) {
      Bitset common = ra & g.row(b);
      for (Vertex c = common.find_next(b + 1); c < n; c = common.find_next(c + 1)) ++total;
    }
  }
  return total;
}

std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const Bitset& ra = g.row(a);
    for (Vertex b = ra.find_next(a + 1); b < n; b = ra.find_next(b + 1)) {
      Bitset common = ra & g.row(b);
      for (Vertex c = common.find_next(b + 1); c < n; c = common.find_next(c + 1)) {
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::uint64_t triangles_through_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) return 0;
  return g.row(u).intersection_count(g.row(v));
}

std::uint64_t count_induced_p3(const Graph& g) {
  // An induced path a-b-c-d has a unique middle edge {b, c}. For each edge,
  // a ranges over N(b) \ N[c], d over N(c) \ N[b]; the pair must be
  // non-adjacent. The two end-sets are disjoint, so no double counting.
  std::uint64_t total = 0;
  for (const auto& [b, c] : g.edges()) {
    Bitset ends_b = g.row(b);
    ends_b.subtract(g.row(c));
    ends_b.reset(c);
    Bitset ends_c = g.row(c);
    ends_c.subtract(g.row(b));
    ends_c.reset(b);
    if (ends_c.none()) continue;
    const std::size_t size_c = ends_c.count();
    ends_b.for_each([&](std::size_t a) { total += size_c - ends_c.intersection_count(g.row(a)); });
  }
  return total;
}

std::uint64_t count_induced_c5(const Graph& g, std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound) {
    throw LimitExceeded("exact induced-C5 count limited to " + std::to_string(bound) +
                        " vertices; use the sampling estimator");
  }
  // Cycle s-a-b-c-d-s with s the minimum vertex and a < d fixing the direction.
  std::uint64_t total = 0;
  for (Vertex s = 0; s < n; ++s) {
    const Bitset higher = above(n, s);
    Bitset first = g.row(s) & higher;
    Bitset far = higher;  // vertices > s not adjacent to s
    far.subtract(g.row(s));
    for (Vertex a = first.find_first(); a < n; a = first.find_next(a + 1)) {
      for (Vertex d = first.find_next(a + 1); d < n; d = first.find_next(d + 1)) {
        if (g.adjacent(a, d)) continue;
        Bitset bs = g.row(a) & far;
        bs.subtract(g.row(d));
        Bitset cs_base = g.row(d) & far;
        cs_base.subtract(g.row(a));
        bs.for_each([&](std::size_t b) { total += cs_base.intersection_count(g.row(b)); });
      }
    }
  }
  return total;
}

bool is_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
  return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
}

bool induces_p3(const Graph& g, std::span<const Vertex> quad) {
  if (quad.size() != 4) return false;
  std::array<int, 4> deg{};
  int edges = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (quad[i] == quad[j]) return false;
      if (g.adjacent(quad[i], quad[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  if (edges != 3) return false;
  std::sort(deg.begin(), deg.end());
  // Degree sequence 1,1,2,2 with three edges is exactly the path (the star
  // has 1,1,1,3 and the triangle plus isolated vertex has 0,2,2,2).
  return deg == std::array<int, 4>{1, 1, 2, 2};
}

bool induces_c5(const Graph& g, std::span<const Vertex> five) {
  if (five.size() != 5) return false;
  int edges = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      if (five[i] == five[j]) return false;
      if (g.adjacent(five[i], five[j])) ++deg;
    }
    if (deg != 2) return false;
    edges += deg;
  }
  // The only 2-regular graph on five vertices is C5.
  return edges == 10;
}

VertexSet sample_vertices(std::size_t n, std::size_t d, RngStream& rng) {
  if (d > n) {
    throw InvalidArgument("cannot sample " + std::to_string(d) + " vertices from " +
                          std::to_string(n));
  }
  Bitset chosen(n);
  for (std::size_t j = n - d; j < n; ++j) {
    const auto t = static_cast<Vertex>(rng.below(j + 1));
    if (chosen.test(t)) {
      chosen.set(j);
    } else {
      chosen.set(t);
    }
  }
  return chosen.to_indices();
}

}  // namespace ptlab
