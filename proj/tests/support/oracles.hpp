#pragma once
// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they check: plain loops over subsets,
// permutations and edit sets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "ptlab/digraph.hpp"
#include "ptlab/graph.hpp"

namespace oracle {

using ptlab::Graph;
using ptlab::Vertex;

// All k-subsets of 0..n-1, ascending, in lexicographic order.
inline std::vector<std::vector<Vertex>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  if (k > n) return out;
  std::vector<Vertex> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline std::size_t edges_within(const Graph& g, const std::vector<Vertex>& s) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e += g.adjacent(s[i], s[j]);
  return e;
}

inline std::uint64_t triangles(const Graph& g) {
  std::uint64_t c = 0;
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c2 = b + 1; c2 < n; ++c2)
        c += g.adjacent(a, b) && g.adjacent(b, c2) && g.adjacent(a, c2);
  return c;
}

// s induces a path visiting its vertices in some order, and nothing else.
inline bool is_induced_path(const Graph& g, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  if (edges_within(g, s) != s.size() - 1) return false;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < s.size() && ok; ++i) ok = g.adjacent(s[i], s[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

inline bool is_induced_cycle(const Graph& g, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  if (edges_within(g, s) != s.size()) return false;
  do {
    bool ok = g.adjacent(s.front(), s.back());
    for (std::size_t i = 0; i + 1 < s.size() && ok; ++i) ok = g.adjacent(s[i], s[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

// Four vertices, three edges, degrees {1, 1, 2, 2}: the only such graph is P3.
inline std::uint64_t induced_p3(const Graph& g) {
  std::uint64_t c = 0;
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex x = b + 1; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          const Vertex q[4] = {a, b, x, y};
          int deg[4] = {0, 0, 0, 0}, m = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) ++deg[i], ++deg[j], ++m;
          std::sort(deg, deg + 4);
          c += m == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2;
        }
  return c;
}

inline std::uint64_t induced_c5(const Graph& g) {
  std::uint64_t c = 0;
  for (const auto& s : subsets_of_size(g.order(), 5)) c += is_induced_cycle(g, s);
  return c;
}

// Transitive orientation by trying all 2^m orientations (m <= 20).
inline bool comparability(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < m; ++i) {
      auto [u, v] = edges[i];
      if ((mask >> i) & 1U) arc[u][v] = true;
      else arc[v][u] = true;
    }
    bool ok = true;
    for (Vertex a = 0; a < n && ok; ++a)
      for (Vertex b = 0; b < n && ok; ++b)
        for (Vertex c = 0; c < n && ok; ++c)
          if (arc[a][b] && arc[b][c] && !arc[a][c]) ok = false;
    if (ok) return true;
  }
  return false;
}

inline std::size_t clique_number(const Graph& g, const std::vector<Vertex>& s) {
  std::size_t best = 0;
  const std::size_t k = s.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Vertex> c;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) c.push_back(s[i]);
    if (edges_within(g, c) == c.size() * (c.size() - (c.empty() ? 0 : 1)) / 2) best = std::max(best, c.size());
  }
  return best;
}

inline bool colourable(const Graph& g, const std::vector<Vertex>& s, std::size_t colours) {
  std::vector<std::size_t> col(s.size(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == s.size()) return true;
    for (std::size_t c = 0; c < colours; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = !(col[j] == c && g.adjacent(s[i], s[j]));
      if (!ok) continue;
      col[i] = c;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

// Perfect: clique number equals chromatic number on every induced subgraph.
inline bool perfect(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.push_back(v);
    const std::size_t w = clique_number(g, s);
    if (!colourable(g, s, w)) return false;
  }
  return true;
}

inline bool cograph(const Graph& g) { return induced_p3(g) == 0; }

inline Graph toggled(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  ptlab::GraphBuilder b(g);
  for (auto [u, v] : pairs) b.toggle(u, v);
  return b.build();
}

// Least number of pair toggles reaching pred, trying every toggle set of
// size 0, 1, 2, ... up to cap; nullopt above cap.
inline std::optional<std::size_t> distance(const Graph& g, const std::function<bool(const Graph&)>& pred,
                                           std::size_t cap) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) all.emplace_back(u, v);
  for (std::size_t k = 0; k <= cap && k <= all.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<std::pair<Vertex, Vertex>> pick;
      for (auto i : idx) pick.push_back(all[i]);
      if (pred(toggled(g, pick))) return k;
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == all.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

inline std::vector<std::vector<Vertex>> triangle_list(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : subsets_of_size(g.order(), 3))
    if (edges_within(g, s) == 3) out.push_back(s);
  return out;
}

// Maximum edge-disjoint triangle family by plain recursion (include/skip).
inline std::size_t packing_number(const Graph& g) {
  const auto tri = triangle_list(g);
  std::vector<std::vector<bool>> used(g.order(), std::vector<bool>(g.order(), false));
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t have) {
    if (have + (tri.size() - i) <= best) return;
    if (i == tri.size()) {
      best = std::max(best, have);
      return;
    }
    const auto& t = tri[i];
    if (!used[t[0]][t[1]] && !used[t[0]][t[2]] && !used[t[1]][t[2]]) {
      used[t[0]][t[1]] = used[t[0]][t[2]] = used[t[1]][t[2]] = true;
      go(i + 1, have + 1);
      used[t[0]][t[1]] = used[t[0]][t[2]] = used[t[1]][t[2]] = false;
    }
    go(i + 1, have);
  };
  go(0, 0);
  return best;
}

// Minimum number of edges meeting every triangle, by increasing subset size.
inline std::size_t cover_number(const Graph& g) {
  const auto edges = g.edges();
  const auto tri = triangle_list(g);
  if (tri.empty()) return 0;
  for (std::size_t k = 1; k <= edges.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ptlab::GraphBuilder b(g);
      for (auto i : idx) b.remove_edge(edges[i].first, edges[i].second);
      if (triangles(b.build()) == 0) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == edges.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return edges.size();
}

// Does some bipartition have crossing density <= beta or >= 1 - beta?
inline bool has_beta_cut(const Graph& g, double beta) {
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1U)) continue;
    std::size_t a = 0, cross = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!((mask >> u) & 1U)) continue;
      ++a;
      for (Vertex v = 0; v < n; ++v)
        if (!((mask >> v) & 1U) && g.adjacent(u, v)) ++cross;
    }
    const double pairs = static_cast<double>(a * (n - a));
    const double d = static_cast<double>(cross) / pairs;
    if (d <= beta + 1e-12 || d >= 1 - beta - 1e-12) return true;
  }
  return false;
}

inline bool three_ap_free(const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t k = 0; k < s.size(); ++k)
        if (i != j && j != k && i != k && s[i] + s[k] == 2 * s[j]) return false;
  return true;
}

// Largest 3-AP-free subset of 1..n by trying every subset (n <= 20).
inline std::size_t max_ap_free(std::size_t n) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < n; ++x)
      if ((mask >> x) & 1U) s.push_back(x + 1);
    if (three_ap_free(s)) best = size;
  }
  return best;
}

inline bool poset(const ptlab::Digraph& d) {
  const std::size_t n = d.order();
  for (Vertex a = 0; a < n; ++a) {
    if (d.has_arc(a, a)) return false;
    for (Vertex b = 0; b < n; ++b) {
      if (d.has_arc(a, b) && d.has_arc(b, a)) return false;
      for (Vertex c = 0; c < n; ++c)
        if (d.has_arc(a, b) && d.has_arc(b, c) && !d.has_arc(a, c)) return false;
    }
  }
  return true;
}

// Graph on n <= 7 vertices from the bits of `code`, pair order (0,1),(0,2),...
inline Graph from_code(std::size_t n, std::uint64_t code) {
  ptlab::GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1U) b.add_edge(u, v);
  return b.build();
}

}  // namespace oracle
