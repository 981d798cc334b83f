#include "ptlab/recognizers.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ptlab/counting.hpp"
#include "ptlab/errors.hpp"

namespace ptlab {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::TriangleFree: return "triangle-free";
    case Property::InducedHFree: return "induced-h-free";
    case Property::Cograph: return "cograph";
    case Property::Comparability: return "comparability";
    case Property::Perfect: return "perfect";
    case Property::Poset: return "poset";
  }
  return "?";
}

Property parse_property(std::string_view name) {
  for (Property p : {Property::TriangleFree, Property::InducedHFree, Property::Cograph,
                     Property::Comparability, Property::Perfect, Property::Poset}) {
    if (to_string(p) == name) return p;
  }
  throw InvalidArgument("unknown property '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Triangle-free

RecognitionResult is_triangle_free(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const Bitset& ra = g.row(a);
    for (Vertex b = ra.find_next(a + 1); b < n; b = ra.find_next(b + 1)) {
      Bitset common = ra & g.row(b);
      if (Vertex c = common.find_next(b + 1); c < n) {
        return RecognitionResult::no({a, b, c}, "triangle");
      }
    }
  }
  return RecognitionResult::yes();
}

// ---------------------------------------------------------------------------
// Induced H

namespace {

// Pair (i, j), i < j < k, packed into bit index of a k-vertex adjacency mask.
std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

std::uint32_t adjacency_mask(const Graph& g, std::span<const Vertex> vs) {
  std::uint32_t mask = 0;
  for (std::size_t j = 1; j < vs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.adjacent(vs[i], vs[j])) mask |= std::uint32_t{1} << pair_bit(i, j);
    }
  }
  return mask;
}

// Lexicographic next k-combination of 0..n-1; false when exhausted.
bool next_combination(std::vector<Vertex>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RecognitionResult is_induced_h_free(const Graph& g, const Graph& h) {
  const std::size_t k = h.order();
  if (k > kInducedHBound) {
    throw LimitExceeded("induced-H search limited to patterns with at most " +
                        std::to_string(kInducedHBound) + " vertices");
  }
  if (k > g.order()) return RecognitionResult::yes();

  // Every labelled copy of h, as a k-vertex adjacency mask.
  std::vector<bool> copy_of_h(std::size_t{1} << pair_count(k), false);
  std::vector<Vertex> perm(k);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    std::uint32_t mask = 0;
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (h.adjacent(perm[i], perm[j])) mask |= std::uint32_t{1} << pair_bit(i, j);
      }
    }
    copy_of_h[mask] = true;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  do {
    if (copy_of_h[adjacency_mask(g, subset)]) {
      return RecognitionResult::no(subset, "induced copy of H");
    }
  } while (next_combination(subset, g.order()));
  return RecognitionResult::yes();
}

// ---------------------------------------------------------------------------
// Cograph

namespace {

std::vector<Bitset> components_within(const Graph& g, const Bitset& within, bool use_complement) {
  std::vector<Bitset> comps;
  Bitset unseen = within;
  const std::size_t n = g.order();
  for (Vertex start = unseen.find_first(); start < n; start = unseen.find_first()) {
    Bitset comp(n);
    Bitset frontier(n);
    frontier.set(start);
    comp.set(start);
    unseen.reset(start);
    while (frontier.any()) {
      const Vertex x = frontier.find_first();
      frontier.reset(x);
      Bitset next = use_complement ? g.row(x).complemented() : g.row(x);
      next &= unseen;
      comp |= next;
      frontier |= next;
      unseen.subtract(next);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Walks an induced P3 from its smaller endpoint.
std::vector<Vertex> path_order(const Graph& g, const std::array<Vertex, 4>& quad) {
  const auto inner_degree = [&](Vertex v) {
    std::size_t d = 0;
    for (Vertex w : quad) d += g.adjacent(v, w);
    return d;
  };
  std::vector<Vertex> path;
  for (Vertex v : quad) {
    if (inner_degree(v) == 1) {
      path.push_back(v);
      break;
    }
  }
  while (path.size() < 4) {
    for (Vertex w : quad) {
      if (g.adjacent(path.back(), w) && (path.size() < 2 || w != path[path.size() - 2])) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

std::optional<std::vector<Vertex>> find_p3_in(const Graph& g, const std::vector<Vertex>& vs) {
  const std::size_t k = vs.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        for (std::size_t d = c + 1; d < k; ++d) {
          const std::array<Vertex, 4> quad{vs[a], vs[b], vs[c], vs[d]};
          if (induces_p3(g, quad)) return path_order(g, quad);
        }
      }
    }
  }
  return std::nullopt;
}

// Returns the first vertex set (DFS order) on which neither g nor its
// complement is disconnected, if any.
std::optional<Bitset> first_prime_part(const Graph& g, const Bitset& part) {
  if (part.count() <= 1) return std::nullopt;
  auto comps = components_within(g, part, false);
  if (comps.size() == 1) comps = components_within(g, part, true);
  if (comps.size() == 1) return part;
  for (const auto& c : comps) {
    if (auto prime = first_prime_part(g, c)) return prime;
  }
  return std::nullopt;
}

}  // namespace

RecognitionResult is_cograph(const Graph& g) {
  Bitset all(g.order());
  all.set_all();
  const auto prime = first_prime_part(g, all);
  if (!prime) return RecognitionResult::yes();
  auto p3 = find_p3_in(g, prime->to_indices());
  if (!p3) throw InvariantViolation("non-decomposable vertex set without an induced P3");
  return RecognitionResult::no(std::move(*p3), "induced P3");
}

// ---------------------------------------------------------------------------
// Comparability

bool is_transitive_orientation_of(const Graph& g, const Digraph& d) {
  const std::size_t n = g.order();
  if (d.order() != n || d.arc_count() != g.edge_count()) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool forward = d.has_arc(u, v);
      const bool backward = d.has_arc(v, u);
      if (g.adjacent(u, v) != (forward || backward) || (forward && backward)) return false;
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    bool ok = true;
    d.out_row(x).for_each([&](std::size_t y) {
      Bitset missing = d.out_row(y);
      missing.subtract(d.out_row(x));
      if (missing.any()) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

// Golumbic's decomposition: repeatedly take the implication class of the
// lowest remaining edge within the remaining edge set, reject if it contains
// both orientations of some edge, then remove it. The union of the chosen
// classes is transitive when every class is antisymmetric.
std::optional<Digraph> forcing_orientation(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> remaining;
  remaining.reserve(n);
  for (Vertex v = 0; v < n; ++v) remaining.push_back(g.row(v));
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  std::vector<Bitset> in_class(n, Bitset(n));

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = remaining[u].find_next(u + 1); v < n; v = remaining[u].find_next(u + 1)) {
      std::vector<Arc> cls{{u, v}};
      in_class[u].set(v);
      bool contradiction = false;
      auto force = [&](Vertex x, Vertex y) {
        if (in_class[y].test(x)) contradiction = true;
        if (!in_class[x].test(y)) {
          in_class[x].set(y);
          cls.emplace_back(x, y);
        }
      };
      for (std::size_t head = 0; head < cls.size() && !contradiction; ++head) {
        const auto [a, b] = cls[head];
        // ab forces ac when bc is not a remaining edge, and cb when ac is not.
        Bitset from_a = remaining[a];
        from_a.subtract(remaining[b]);
        from_a.reset(b);
        from_a.for_each([&](std::size_t c) { force(a, c); });
        Bitset into_b = remaining[b];
        into_b.subtract(remaining[a]);
        into_b.reset(a);
        into_b.for_each([&](std::size_t c) { force(c, b); });
      }
      for (const auto& [x, y] : cls) in_class[x].reset(y);
      if (contradiction) return std::nullopt;
      for (const auto& [x, y] : cls) {
        remaining[x].reset(y);
        remaining[y].reset(x);
        arcs.emplace_back(x, y);
      }
    }
  }
  Digraph d = Digraph::from_arcs(n, arcs);
  if (!is_transitive_orientation_of(g, d)) return std::nullopt;
  return d;
}

// Exhaustive backtracking over orientations with early transitivity pruning.
class OrientationSearch {
 public:
  explicit OrientationSearch(const Graph& g)
      : g_(g), edges_(g.edges()), dir_(g.order(), std::vector<int>(g.order(), 0)) {}

  bool run() { return assign(0); }

 private:
  // dir_[x][y] == 1 means x->y chosen, -1 means y->x chosen, 0 unassigned.
  bool arc(Vertex x, Vertex y) const { return dir_[x][y] == 1; }

  bool consistent_at(Vertex x, Vertex y) const {
    // New arc x->y. Check paths w->x->y and x->y->z.
    const std::size_t n = g_.order();
    for (Vertex w = 0; w < n; ++w) {
      if (arc(w, x) && w != y) {
        if (!g_.adjacent(w, y) || dir_[w][y] == -1) return false;
      }
      if (arc(y, w) && w != x) {
        if (!g_.adjacent(x, w) || dir_[x][w] == -1) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t i) {
    if (i == edges_.size()) return true;
    const auto [u, v] = edges_[i];
    for (const auto& [x, y] : {Arc{u, v}, Arc{v, u}}) {
      dir_[x][y] = 1;
      dir_[y][x] = -1;
      if (consistent_at(x, y) && assign(i + 1)) return true;
      dir_[x][y] = 0;
      dir_[y][x] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> dir_;
};

bool comparability_member(const Graph& g, ComparabilityMode mode) {
  if (mode == ComparabilityMode::Exhaustive) return OrientationSearch(g).run();
  return forcing_orientation(g).has_value();
}

// Greedy vertex deletion down to a minimal non-comparability induced subgraph.
std::vector<Vertex> minimal_noncomparability(const Graph& g, ComparabilityMode mode) {
  std::vector<Vertex> keep(g.order());
  std::iota(keep.begin(), keep.end(), Vertex{0});
  for (std::size_t i = 0; i < keep.size();) {
    std::vector<Vertex> trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!comparability_member(induced_subgraph(g, trial), mode)) {
      keep = std::move(trial);
    } else {
      ++i;
    }
  }
  return keep;
}

}  // namespace

std::optional<Digraph> transitive_orientation(const Graph& g) { return forcing_orientation(g); }

RecognitionResult is_comparability(const Graph& g, ComparabilityMode mode) {
  if (mode == ComparabilityMode::Exhaustive && g.order() > kExhaustiveOrientationBound) {
    throw LimitExceeded("exhaustive orientation search limited to " +
                        std::to_string(kExhaustiveOrientationBound) + " vertices");
  }
  if (comparability_member(g, mode)) return RecognitionResult::yes();
  return RecognitionResult::no(minimal_noncomparability(g, mode),
                               "minimal non-comparability induced subgraph");
}

// ---------------------------------------------------------------------------
// Perfect

namespace {

class HoleSearch {
 public:
  explicit HoleSearch(const Graph& g) : g_(g) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      if (extend()) return path_;
    }
    return std::nullopt;
  }

 private:
  // path_ is an induced path starting at its minimum vertex path_[0].
  bool extend() {
    const Vertex s = path_.front();
    const Vertex last = path_.back();
    const std::size_t len = path_.size();
    const Bitset& next = g_.row(last);
    for (Vertex v = next.find_next(s + 1); v < g_.order(); v = next.find_next(v + 1)) {
      if (std::find(path_.begin(), path_.end(), v) != path_.end()) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < len; ++i) {
        if (g_.adjacent(v, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (len >= 2 && g_.adjacent(v, s)) {
        if (len + 1 >= 5 && (len + 1) % 2 == 1) {
          path_.push_back(v);
          return true;
        }
        continue;
      }
      path_.push_back(v);
      if (extend()) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> path_;
};

bool is_odd_hole(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 5 || k % 2 == 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j] || cycle[i] >= g.order()) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) { return HoleSearch(g).run(); }

RecognitionResult is_perfect(const Graph& g, std::size_t bound) {
  if (g.order() > bound) {
    throw LimitExceeded("exact perfectness check limited to " + std::to_string(bound) +
                        " vertices");
  }
  if (auto hole = find_odd_hole(g)) return RecognitionResult::no(std::move(*hole), "odd hole");
  if (auto anti = find_odd_hole(complement(g))) {
    return RecognitionResult::no(std::move(*anti), "odd antihole");
  }
  return RecognitionResult::yes();
}

// ---------------------------------------------------------------------------
// Posets and orderings

RecognitionResult is_poset(const Digraph& d) {
  const std::size_t n = d.order();
  for (Vertex x = 0; x < n; ++x) {
    if (d.has_arc(x, x)) return RecognitionResult::no({x}, "loop");
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (d.has_arc(x, y) && d.has_arc(y, x)) return RecognitionResult::no({x, y}, "antiparallel");
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    const Bitset& out_x = d.out_row(x);
    for (Vertex y = out_x.find_first(); y < n; y = out_x.find_next(y + 1)) {
      Bitset missing = d.out_row(y);
      missing.subtract(out_x);
      missing.reset(x);
      if (Vertex z = missing.find_first(); z < n) {
        return RecognitionResult::no({x, y, z}, "intransitive");
      }
    }
  }
  return RecognitionResult::yes();
}

bool verify_poset_witness(const Digraph& d, std::span<const Vertex> w) {
  for (Vertex v : w) {
    if (v >= d.order()) return false;
  }
  if (w.size() == 1) return d.has_arc(w[0], w[0]);
  if (w.size() == 2) return d.has_arc(w[0], w[1]) && d.has_arc(w[1], w[0]);
  if (w.size() == 3) {
    return w[0] != w[2] && d.has_arc(w[0], w[1]) && d.has_arc(w[1], w[2]) &&
           !d.has_arc(w[0], w[2]);
  }
  return false;
}

RecognitionResult check_order_transitivity(const Graph& g, const PartLabeling& labeling) {
  const std::size_t n = g.order();
  if (labeling.vertex_count() != n) {
    throw InvalidArgument("labeling covers " + std::to_string(labeling.vertex_count()) +
                          " vertices but the graph has " + std::to_string(n));
  }
  auto before = [&](Vertex a, Vertex b) {
    const auto pa = labeling.part_of(a);
    const auto pb = labeling.part_of(b);
    return pa != pb ? pa < pb : a < b;
  };
  for (Vertex b = 0; b < n; ++b) {
    Bitset later(n);
    std::vector<Vertex> earlier;
    g.row(b).for_each([&](std::size_t x) {
      if (before(x, b)) {
        earlier.push_back(x);
      } else {
        later.set(x);
      }
    });
    for (Vertex a : earlier) {
      Bitset missing = later;
      missing.subtract(g.row(a));
      if (Vertex c = missing.find_first(); c < n) {
        return RecognitionResult::no({a, b, c}, "ordered path a<b<c with a, c non-adjacent");
      }
    }
  }
  return RecognitionResult::yes();
}

// ---------------------------------------------------------------------------
// Witness verification and dispatch

namespace {

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool same = true;
    for (Vertex u = 0; u < a.order() && same; ++u) {
      for (Vertex v = u + 1; v < a.order(); ++v) {
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) {
          same = false;
          break;
        }
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Vertex> sorted_unique(std::span<const Vertex> w) {
  std::vector<Vertex> s(w.begin(), w.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

bool verify_witness(Property p, const Graph& g, std::span<const Vertex> witness, const Graph* h) {
  for (Vertex v : witness) {
    if (v >= g.order()) return false;
  }
  const auto set = sorted_unique(witness);
  if (set.size() != witness.size()) return false;
  switch (p) {
    case Property::TriangleFree:
      return witness.size() == 3 && is_triangle(g, witness[0], witness[1], witness[2]);
    case Property::Cograph:
      return induces_p3(g, witness);
    case Property::InducedHFree:
      return h != nullptr && isomorphic_small(induced_subgraph(g, set), *h);
    case Property::Comparability: {
      const Graph sub = induced_subgraph(g, set);
      const auto mode = sub.order() <= kExhaustiveOrientationBound ? ComparabilityMode::Exhaustive
                                                                   : ComparabilityMode::Forcing;
      return !comparability_member(sub, mode);
    }
    case Property::Perfect:
      return is_odd_hole(g, witness) || is_odd_hole(complement(g), witness);
    case Property::Poset:
      return false;
  }
  return false;
}

Recognizer recognizer_for(Property p, std::optional<Graph> h) {
  switch (p) {
    case Property::TriangleFree: return is_triangle_free;
    case Property::Cograph: return is_cograph;
    case Property::Comparability:
      return [](const Graph& g) { return is_comparability(g); };
    case Property::Perfect:
      return [](const Graph& g) { return is_perfect(g); };
    case Property::InducedHFree:
      if (!h) throw InvalidArgument("induced-h-free needs a pattern graph H");
      return [pattern = std::move(*h)](const Graph& g) { return is_induced_h_free(g, pattern); };
    case Property::Poset:
      throw InvalidArgument("poset is a digraph property; use is_poset");
  }
  throw InvalidArgument("unknown property");
}

}  // namespace ptlab
