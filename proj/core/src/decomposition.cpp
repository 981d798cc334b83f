#include "ptlab/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {

constexpr double kDensityTolerance = 1e-9;

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta < 0.5)) throw InvalidArgument("beta must lie in [0, 1/2)");
}

std::optional<CutKind> classify(std::size_t crossing, std::size_t pairs, double beta) {
  const auto e = static_cast<double>(crossing);
  const auto p = static_cast<double>(pairs);
  if (e <= beta * p + kDensityTolerance) return CutKind::Sparse;
  if (e + kDensityTolerance >= (1.0 - beta) * p) return CutKind::Dense;
  return std::nullopt;
}

std::size_t crossing_edges(const Graph& g, const VertexSet& side1, const VertexSet& side2) {
  Bitset s2(g.order());
  for (Vertex v : side2) s2.set(v);
  std::size_t e = 0;
  for (Vertex v : side1) e += g.row(v).intersection_count(s2);
  return e;
}

Cut make_cut(const Graph& g, VertexSet side1, VertexSet side2, CutKind kind) {
  Cut c;
  c.crossing_edges = crossing_edges(g, side1, side2);
  c.crossing_density =
      static_cast<double>(c.crossing_edges) / static_cast<double>(side1.size() * side2.size());
  c.side1 = std::move(side1);
  c.side2 = std::move(side2);
  c.kind = kind;
  return c;
}

BetaCutResult exact_beta_cut(const Graph& g, double beta) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    g.row(v).for_each([&](std::size_t u) { adj[v] |= std::uint32_t{1} << u; });
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;

  // Vertex 0 stays in side1; side2 is a Gray-code walk over subsets of 1..n-1.
  std::uint32_t side2 = 0;
  std::size_t crossing = 0;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  std::uint32_t best_side2 = 0;
  CutKind best_kind = CutKind::Sparse;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<std::size_t>(std::countr_zero(i)) + 1;
    const std::uint32_t bit = std::uint32_t{1} << v;
    const std::uint32_t side1 = all & ~side2;
    const auto to_side1 = static_cast<std::size_t>(std::popcount(adj[v] & side1 & ~bit));
    const auto to_side2 = static_cast<std::size_t>(std::popcount(adj[v] & side2 & ~bit));
    if (side2 & bit) {
      crossing = crossing - to_side1 + to_side2;
    } else {
      crossing = crossing - to_side2 + to_side1;
    }
    side2 ^= bit;
    const auto s2 = static_cast<std::size_t>(std::popcount(side2));
    const std::size_t pairs = (n - s2) * s2;
    const auto kind = classify(crossing, pairs, beta);
    if (!kind) continue;
    const std::size_t cost = *kind == CutKind::Sparse ? crossing : pairs - crossing;
    bool better = cost < best_cost;
    if (cost == best_cost) {
      // Lexicographic order of the ascending side1 lists. Below the first
      // vertex where they differ both lists agree; the list holding that
      // vertex is smaller unless the other list stops there.
      const std::uint32_t a = all & ~side2;
      const std::uint32_t b = all & ~best_side2;
      const auto first = static_cast<std::size_t>(std::countr_zero(a ^ b));
      const std::uint32_t after = ~((std::uint32_t{2} << first) - 1);
      if ((a >> first) & 1U) {
        better = (b & after) != 0;
      } else {
        better = (a & after) == 0;
      }
    }
    if (better) {
      best_cost = cost;
      best_side2 = side2;
      best_kind = *kind;
    }
  }
  BetaCutResult result;
  if (best_cost == std::numeric_limits<std::size_t>::max()) {
    result.certified_none = true;
    return result;
  }
  VertexSet s1;
  VertexSet s2;
  for (Vertex v = 0; v < n; ++v) ((best_side2 >> v) & 1U ? s2 : s1).push_back(v);
  result.cut = make_cut(g, std::move(s1), std::move(s2), best_kind);
  return result;
}

// Local search minimising min(density, 1 - density) by single-vertex moves.
BetaCutResult heuristic_beta_cut(const Graph& g, double beta, RngStream& rng,
                                 std::size_t restarts) {
  const std::size_t n = g.order();
  BetaCutResult result;
  for (std::size_t r = 0; r < restarts; ++r) {
    ++result.effort;
    std::vector<char> in2(n, 0);
    std::size_t s2 = 0;
    for (Vertex v = 0; v < n; ++v) {
      in2[v] = static_cast<char>(rng.below(2));
      s2 += static_cast<std::size_t>(in2[v]);
    }
    if (s2 == 0 || s2 == n) {
      const Vertex v = rng.below(n);
      in2[v] = static_cast<char>(s2 == 0);
      s2 += s2 == 0 ? 1 : static_cast<std::size_t>(-1);
    }
    std::vector<std::size_t> nbrs_in2(n, 0);
    std::size_t crossing = 0;
    for (Vertex v = 0; v < n; ++v) {
      g.row(v).for_each([&](std::size_t u) { nbrs_in2[v] += static_cast<std::size_t>(in2[u]); });
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!in2[v]) crossing += nbrs_in2[v];
    }
    auto score = [&](std::size_t e, std::size_t side2) {
      const double p = static_cast<double>((n - side2) * side2);
      const double d = static_cast<double>(e) / p;
      return std::min(d, 1.0 - d);
    };
    double current = score(crossing, s2);
    while (true) {
      if (classify(crossing, (n - s2) * s2, beta)) break;
      double best = current;
      Vertex best_v = n;
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t deg = g.degree(v);
        std::size_t e = crossing;
        std::size_t side2 = s2;
        if (in2[v]) {
          if (s2 == 1) continue;
          e = e - (deg - nbrs_in2[v]) + nbrs_in2[v];
          --side2;
        } else {
          if (s2 + 1 == n) continue;
          e = e - nbrs_in2[v] + (deg - nbrs_in2[v]);
          ++side2;
        }
        const double sc = score(e, side2);
        if (sc < best) {
          best = sc;
          best_v = v;
        }
      }
      if (best_v == n) break;
      const std::size_t deg = g.degree(best_v);
      if (in2[best_v]) {
        crossing = crossing - (deg - nbrs_in2[best_v]) + nbrs_in2[best_v];
        --s2;
      } else {
        crossing = crossing - nbrs_in2[best_v] + (deg - nbrs_in2[best_v]);
        ++s2;
      }
      in2[best_v] = static_cast<char>(!in2[best_v]);
      const bool now_in2 = in2[best_v] != 0;
      g.row(best_v).for_each([&](std::size_t u) {
        if (now_in2) {
          ++nbrs_in2[u];
        } else {
          --nbrs_in2[u];
        }
      });
      current = best;
    }
    if (auto kind = classify(crossing, (n - s2) * s2, beta)) {
      VertexSet a;
      VertexSet b;
      for (Vertex v = 0; v < n; ++v) (in2[v] ? b : a).push_back(v);
      if (a.front() != 0) std::swap(a, b);
      result.cut = make_cut(g, std::move(a), std::move(b), *kind);
      return result;
    }
  }
  return result;
}

}  // namespace

std::optional<Cut> find_cut(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidArgument("find_cut needs at least 2 vertices");
  for (const bool use_complement : {false, true}) {
    Bitset comp(n);
    Bitset frontier(n);
    comp.set(0);
    frontier.set(0);
    while (frontier.any()) {
      const Vertex x = frontier.find_first();
      frontier.reset(x);
      Bitset next = use_complement ? g.row(x).complemented() : g.row(x);
      next.reset(x);
      next.subtract(comp);
      comp |= next;
      frontier |= next;
    }
    if (comp.count() < n) {
      VertexSet side1 = comp.to_indices();
      VertexSet side2 = comp.complemented().to_indices();
      return make_cut(g, std::move(side1), std::move(side2),
                      use_complement ? CutKind::Dense : CutKind::Sparse);
    }
  }
  return std::nullopt;
}

bool is_beta_cut(const Graph& g, const VertexSet& side1, const VertexSet& side2, double beta) {
  if (side1.empty() || side2.empty()) return false;
  return classify(crossing_edges(g, side1, side2), side1.size() * side2.size(), beta)
      .has_value();
}

BetaCutResult find_beta_cut(const Graph& g, double beta, SearchMode mode, RngStream& rng,
                            std::size_t restarts) {
  check_beta(beta);
  if (g.order() < 2) throw InvalidArgument("find_beta_cut needs at least 2 vertices");
  if (mode == SearchMode::Exact) {
    if (g.order() > kExactCutBound) {
      throw LimitExceeded("exact beta-cut enumeration limited to " +
                          std::to_string(kExactCutBound) + " vertices");
    }
    return exact_beta_cut(g, beta);
  }
  if (beta == 0.0) {
    BetaCutResult r;
    r.cut = find_cut(g);
    r.certified_none = !r.cut;
    return r;
  }
  return heuristic_beta_cut(g, beta, rng, restarts);
}

Refinement refine_along_cuts(const Graph& g, double beta, SearchMode mode, RngStream& rng) {
  check_beta(beta);
  Refinement out;
  GraphBuilder current(g);
  std::vector<VertexSet> stack;
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  if (!all.empty()) stack.push_back(std::move(all));

  while (!stack.empty()) {
    VertexSet part = std::move(stack.back());
    stack.pop_back();
    if (part.size() < 2) {
      out.parts.push_back(std::move(part));
      continue;
    }
    const Graph sub = induced_subgraph(current.build(), part);
    BetaCutResult r = find_beta_cut(sub, beta, mode, rng);
    if (!r.cut) {
      if (!r.certified_none) out.certified = false;
      out.parts.push_back(std::move(part));
      continue;
    }
    VertexSet side1;
    VertexSet side2;
    for (Vertex v : r.cut->side1) side1.push_back(part[v]);
    for (Vertex v : r.cut->side2) side2.push_back(part[v]);
    for (Vertex a : side1) {
      for (Vertex b : side2) {
        if (r.cut->kind == CutKind::Sparse) {
          current.remove_edge(a, b);
        } else {
          current.add_edge(a, b);
        }
      }
    }
    out.edited_pairs += r.cut->repair_cost();
    out.cut_pairs += side1.size() * side2.size();
    ++out.cuts_used;
    stack.push_back(std::move(side2));
    stack.push_back(std::move(side1));
  }
  std::sort(out.parts.begin(), out.parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  out.modified_graph = current.build();
  if (hamming_distance(g, out.modified_graph) != out.edited_pairs) {
    throw InvariantViolation("refinement edit count disagrees with the modified graph");
  }
  return out;
}

namespace {

bool toggle_search(GraphBuilder& b, const Recognizer& recognizer, std::size_t depth,
                   std::vector<Edge>& toggled) {
  const RecognitionResult r = recognizer(b.build());
  if (r.member) return true;
  if (depth == 0) return false;
  if (!r.witness) throw InvalidArgument("distance search needs recognizers that return witnesses");
  VertexSet w = *r.witness;
  std::sort(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const Edge e{w[i], w[j]};
      if (std::find(toggled.begin(), toggled.end(), e) != toggled.end()) continue;
      b.toggle(e.first, e.second);
      toggled.push_back(e);
      const bool ok = toggle_search(b, recognizer, depth - 1, toggled);
      toggled.pop_back();
      b.toggle(e.first, e.second);
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::size_t> distance_to_property(const Graph& g, const Recognizer& recognizer,
                                                std::size_t cap) {
  if (g.order() > kDistanceMaxOrder) {
    throw LimitExceeded("edit-distance search limited to " + std::to_string(kDistanceMaxOrder) +
                        " vertices");
  }
  if (cap > kDistanceMaxCap) {
    throw LimitExceeded("edit-distance cap limited to " + std::to_string(kDistanceMaxCap));
  }
  GraphBuilder b(g);
  std::vector<Edge> toggled;
  for (std::size_t k = 0; k <= cap; ++k) {
    if (toggle_search(b, recognizer, k, toggled)) return k;
  }
  return std::nullopt;
}

}  // namespace ptlab
