#include "ptlab/packing.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <unordered_set>

#include "ptlab/errors.hpp"

namespace ptlab {

std::string to_string(PackingKind k) {
  return k == PackingKind::Triangle ? "triangle" : "inducedC5";
}

bool pairwise_share_at_most_one(const std::vector<std::vector<Vertex>>& tuples) {
  std::unordered_set<std::uint64_t> seen;
  for (const auto& t : tuples) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        const auto lo = static_cast<std::uint64_t>(std::min(t[i], t[j]));
        const auto hi = static_cast<std::uint64_t>(std::max(t[i], t[j]));
        if (!seen.insert((hi << 32) | lo).second) return false;
      }
    }
  }
  return true;
}

bool verify_packing(const Graph& host, WitnessPacking& p, std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    p.verified = false;
    return false;
  };
  const std::size_t arity = p.kind == PackingKind::Triangle ? 3 : 5;
  for (std::size_t i = 0; i < p.tuples.size(); ++i) {
    const auto& t = p.tuples[i];
    if (t.size() != arity) return fail("tuple " + std::to_string(i) + " has wrong arity");
    for (Vertex v : t) {
      if (v >= host.order()) return fail("tuple " + std::to_string(i) + " is out of range");
    }
    const bool ok = arity == 3 ? is_triangle(host, t[0], t[1], t[2]) : induces_c5(host, t);
    if (!ok) {
      return fail("tuple " + std::to_string(i) + " does not induce a " + to_string(p.kind));
    }
  }
  if (!pairwise_share_at_most_one(p.tuples)) return fail("two tuples share a vertex pair");
  p.host_n = host.order();
  p.verified = true;
  return true;
}

double farness_lower_bound(const WitnessPacking& p, std::size_t n) {
  if (!p.verified) throw InvalidArgument("farness_lower_bound needs a verified packing");
  if (p.host_n != n) throw InvalidArgument("packing was verified on a host of different order");
  if (n == 0) return 0.0;
  return static_cast<double>(p.size()) / (static_cast<double>(n) * static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Exact packing and cover over the triangle hypergraph (n <= 14, so at most
// 91 edges fit in a fixed-width mask).

namespace {

using EdgeMask = std::bitset<128>;

struct TriangleHypergraph {
  std::vector<Triangle> triangles;
  std::vector<EdgeMask> masks;
  std::vector<std::array<std::size_t, 3>> edge_ids;
  std::vector<Edge> edges;

  explicit TriangleHypergraph(const Graph& g) : triangles(list_triangles(g)), edges(g.edges()) {
    const std::size_t n = g.order();
    std::vector<std::size_t> id(n * n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      id[edges[i].first * n + edges[i].second] = i;
    }
    for (const auto& t : triangles) {
      const std::array<std::size_t, 3> e{id[t[0] * n + t[1]], id[t[0] * n + t[2]],
                                         id[t[1] * n + t[2]]};
      EdgeMask m;
      for (auto x : e) m.set(x);
      masks.push_back(m);
      edge_ids.push_back(e);
    }
  }
};

void check_exact_guard(const Graph& g, std::size_t triangles) {
  if (g.order() > kExactPackingMaxOrder || triangles > kExactPackingMaxTriangles) {
    throw LimitExceeded("exact triangle packing/cover limited to n <= " +
                        std::to_string(kExactPackingMaxOrder) + " and at most " +
                        std::to_string(kExactPackingMaxTriangles) + " triangles");
  }
}

class PackingSearch {
 public:
  explicit PackingSearch(const TriangleHypergraph& h) : h_(h) {}

  std::vector<std::size_t> run() {
    // Greedy lexicographic packing seeds the incumbent.
    EdgeMask used;
    for (std::size_t i = 0; i < h_.masks.size(); ++i) {
      if ((h_.masks[i] & used).none()) {
        used |= h_.masks[i];
        best_.push_back(i);
      }
    }
    std::vector<std::size_t> all(h_.masks.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> chosen;
    recurse(all, chosen);
    return best_;
  }

 private:
  std::size_t upper_bound(const std::vector<std::size_t>& avail) const {
    EdgeMask edges;
    for (auto i : avail) edges |= h_.masks[i];
    return std::min(avail.size(), edges.count() / 3);
  }

  void recurse(const std::vector<std::size_t>& avail, std::vector<std::size_t>& chosen) {
    if (avail.empty()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + upper_bound(avail) <= best_.size()) return;

    // Branch on the first edge of the first available triangle: either one of
    // the triangles through it is packed, or the edge stays unused.
    const std::size_t pivot = h_.edge_ids[avail.front()][0];
    for (auto i : avail) {
      if (!h_.masks[i].test(pivot)) continue;
      std::vector<std::size_t> next;
      next.reserve(avail.size());
      for (auto j : avail) {
        if ((h_.masks[j] & h_.masks[i]).none()) next.push_back(j);
      }
      chosen.push_back(i);
      recurse(next, chosen);
      chosen.pop_back();
    }
    std::vector<std::size_t> without;
    without.reserve(avail.size());
    for (auto j : avail) {
      if (!h_.masks[j].test(pivot)) without.push_back(j);
    }
    recurse(without, chosen);
  }

  const TriangleHypergraph& h_;
  std::vector<std::size_t> best_;
};

class CoverSearch {
 public:
  explicit CoverSearch(const TriangleHypergraph& h) : h_(h) {}

  EdgeMask run(const EdgeMask& incumbent) {
    best_ = incumbent;
    EdgeMask removed;
    recurse(removed);
    return best_;
  }

 private:
  // Edge-disjoint greedy packing of the triangles not yet hit: each needs its
  // own cover edge.
  std::size_t lower_bound(const EdgeMask& removed) const {
    EdgeMask used;
    std::size_t count = 0;
    for (const auto& m : h_.masks) {
      if ((m & removed).none() && (m & used).none()) {
        used |= m;
        ++count;
      }
    }
    return count;
  }

  void recurse(EdgeMask& removed) {
    const std::size_t count = removed.count();
    if (count + lower_bound(removed) >= best_.count()) return;
    std::size_t open = h_.masks.size();
    for (std::size_t i = 0; i < h_.masks.size(); ++i) {
      if ((h_.masks[i] & removed).none()) {
        open = i;
        break;
      }
    }
    if (open == h_.masks.size()) {
      best_ = removed;
      return;
    }
    for (auto e : h_.edge_ids[open]) {
      removed.set(e);
      recurse(removed);
      removed.reset(e);
    }
  }

  const TriangleHypergraph& h_;
  EdgeMask best_;
};

}  // namespace

WitnessPacking triangle_packing(const Graph& g, PackingMode mode, RngStream* rng) {
  WitnessPacking p;
  p.kind = PackingKind::Triangle;
  if (mode == PackingMode::Exact) {
    const TriangleHypergraph h(g);
    check_exact_guard(g, h.triangles.size());
    for (auto i : PackingSearch(h).run()) {
      const auto& t = h.triangles[i];
      p.tuples.push_back({t[0], t[1], t[2]});
    }
  } else {
    auto triangles = list_triangles(g);
    if (rng) std::shuffle(triangles.begin(), triangles.end(), *rng);
    std::unordered_set<std::uint64_t> used;
    auto key = [](Vertex a, Vertex b) {
      return (static_cast<std::uint64_t>(std::max(a, b)) << 32) | std::min(a, b);
    };
    for (const auto& t : triangles) {
      const auto k01 = key(t[0], t[1]);
      const auto k02 = key(t[0], t[2]);
      const auto k12 = key(t[1], t[2]);
      if (used.count(k01) || used.count(k02) || used.count(k12)) continue;
      used.insert({k01, k02, k12});
      p.tuples.push_back({t[0], t[1], t[2]});
    }
  }
  std::string why;
  if (!verify_packing(g, p, &why)) throw InvariantViolation("triangle packing: " + why);
  return p;
}

std::vector<Edge> triangle_cover(const Graph& g, CoverMode mode) {
  if (mode == CoverMode::FromPacking) {
    const auto packing = triangle_packing(g, PackingMode::Exact);
    std::vector<Edge> cover;
    for (const auto& t : packing.tuples) {
      cover.emplace_back(t[0], t[1]);
      cover.emplace_back(t[0], t[2]);
      cover.emplace_back(t[1], t[2]);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
  }
  const TriangleHypergraph h(g);
  check_exact_guard(g, h.triangles.size());
  // Incumbent: all edges of a maximal packing hit every triangle.
  EdgeMask incumbent;
  for (const auto& m : h.masks) {
    if ((m & incumbent).none()) incumbent |= m;
  }
  const EdgeMask best = CoverSearch(h).run(incumbent);
  std::vector<Edge> cover;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    if (best.test(i)) cover.push_back(h.edges[i]);
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Induced C5 packing for the five-part gadget

WitnessPacking greedy_c5_packing(const Graph& gadget, const PartLabeling& labeling,
                                 const WitnessPacking& planted) {
  if (planted.kind != PackingKind::Triangle) {
    throw InvalidArgument("planted packing must consist of triangles");
  }
  const std::size_t f_n = planted.host_n;
  if (gadget.order() != 5 * f_n || labeling.vertex_count() != gadget.order()) {
    throw InvalidArgument("gadget order must be five times the order of F");
  }
  const auto v1_part = labeling.find("V1");
  const auto v4_part = labeling.find("V4");
  if (!v1_part || !v4_part) throw InvalidArgument("gadget labeling must name V1 and V4");
  const VertexSet& v1 = labeling.part(*v1_part).vertices;
  const VertexSet& v4 = labeling.part(*v4_part).vertices;
  const std::size_t offset = 4 * f_n;

  WitnessPacking out;
  out.kind = PackingKind::InducedC5;
  std::unordered_set<std::uint64_t> used_pairs;
  std::vector<std::vector<Vertex>> triangles;  // gadget indices

  for (const auto& tri : planted.tuples) {
    std::vector<Vertex> t;
    for (Vertex x : tri) t.push_back(x + offset);
    // Order the triangle's vertices as (V2, V3, V5).
    std::vector<Vertex> ordered(3, gadget.order());
    for (Vertex x : t) {
      const std::string& name = labeling.part(labeling.part_of(x)).name;
      const std::size_t slot = name == "V2" ? 0 : name == "V3" ? 1 : name == "V5" ? 2 : 3;
      if (slot == 3 || ordered[slot] != gadget.order()) {
        throw InvalidArgument("planted triangle is not one-vertex-per-part in V2, V3, V5");
      }
      ordered[slot] = x;
    }

    // Drop V1/V4 vertices of earlier cycles whose triangle meets this one.
    std::unordered_set<Vertex> blocked;
    for (std::size_t j = 0; j < out.tuples.size(); ++j) {
      const auto& tj = triangles[j];
      const bool meets = std::any_of(tj.begin(), tj.end(), [&](Vertex x) {
        return std::find(ordered.begin(), ordered.end(), x) != ordered.end();
      });
      if (meets) {
        blocked.insert(out.tuples[j][3]);
        blocked.insert(out.tuples[j][4]);
      }
    }
    bool placed = false;
    for (Vertex a : v1) {
      if (blocked.count(a)) continue;
      for (Vertex b : v4) {
        if (blocked.count(b)) continue;
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (used_pairs.count(key)) continue;
        used_pairs.insert(key);
        out.tuples.push_back({ordered[0], ordered[1], ordered[2], a, b});
        triangles.push_back(ordered);
        placed = true;
        break;
      }
      if (placed) break;
    }
    if (!placed) {
      throw InvariantViolation("V1 x V4 pool exhausted; planted triangles are not edge-disjoint?");
    }
  }
  std::string why;
  if (!verify_packing(gadget, out, &why)) throw InvariantViolation("C5 packing: " + why);
  return out;
}

// ---------------------------------------------------------------------------
// Random tripartition

TripartiteExtract random_tripartite_extract(const Graph& g, const WitnessPacking& packing,
                                            RngStream& rng, std::size_t retries,
                                            const std::optional<std::vector<std::size_t>>& forced) {
  if (packing.kind != PackingKind::Triangle) throw InvalidArgument("need a triangle packing");
  const std::size_t n = g.order();
  if (forced && forced->size() != n) throw InvalidArgument("forced assignment has wrong length");
  const std::size_t draws = forced ? 1 : std::max<std::size_t>(retries, 1);

  std::vector<std::size_t> best_assignment;
  std::size_t best_retained = 0;
  for (std::size_t r = 0; r < draws; ++r) {
    std::vector<std::size_t> assignment(n);
    if (forced) {
      assignment = *forced;
    } else {
      for (auto& a : assignment) a = rng.below(3);
    }
    std::size_t retained = 0;
    for (const auto& t : packing.tuples) {
      const auto a = assignment[t[0]];
      const auto b = assignment[t[1]];
      const auto c = assignment[t[2]];
      if (a != b && b != c && a != c) ++retained;
    }
    if (r == 0 || retained > best_retained) {
      best_retained = retained;
      best_assignment = std::move(assignment);
    }
  }

  TripartiteExtract out;
  GraphBuilder b(n);
  for (const auto& [u, v] : g.edges()) {
    if (best_assignment[u] != best_assignment[v]) b.add_edge(u, v);
  }
  out.f = b.build();
  out.labeling = PartLabeling::from_assignment(best_assignment, {"X", "Y", "Z"}, true);
  out.retained.kind = PackingKind::Triangle;
  for (const auto& t : packing.tuples) {
    const auto a = best_assignment[t[0]];
    const auto bb = best_assignment[t[1]];
    const auto c = best_assignment[t[2]];
    if (a != bb && bb != c && a != c) out.retained.tuples.push_back(t);
  }
  out.assignment = std::move(best_assignment);
  std::string why;
  if (!verify_packing(out.f, out.retained, &why)) {
    throw InvariantViolation("retained packing: " + why);
  }
  return out;
}

WitnessPacking sampled_c5_packing(const Graph& g, std::size_t attempts, RngStream& rng) {
  WitnessPacking out;
  out.kind = PackingKind::InducedC5;
  if (g.order() < 5) return out;
  std::unordered_set<std::uint64_t> used;
  auto key = [](Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(std::max(a, b)) << 32) | std::min(a, b);
  };
  for (std::size_t i = 0; i < attempts; ++i) {
    const VertexSet s = sample_vertices(g.order(), 5, rng);
    if (!induces_c5(g, s)) continue;
    bool fresh = true;
    for (std::size_t a = 0; a < 5 && fresh; ++a) {
      for (std::size_t b = a + 1; b < 5 && fresh; ++b) fresh = !used.count(key(s[a], s[b]));
    }
    if (!fresh) continue;
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = a + 1; b < 5; ++b) used.insert(key(s[a], s[b]));
    }
    out.tuples.push_back(s);
  }
  return out;
}

}  // namespace ptlab
