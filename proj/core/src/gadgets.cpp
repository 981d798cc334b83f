#include "ptlab/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ptlab/counting.hpp"
#include "ptlab/errors.hpp"

namespace ptlab {

// ---------------------------------------------------------------------------
// 3-AP-free sets

std::optional<std::array<std::size_t, 3>> find_3ap(const std::vector<std::size_t>& sorted) {
  if (sorted.size() < 3) return std::nullopt;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const std::size_t a = sorted[i];
      const std::size_t c = sorted[j];
      if ((a + c) % 2 == 0 && std::binary_search(sorted.begin() + i, sorted.begin() + j, (a + c) / 2)) {
        return std::array<std::size_t, 3>{a, (a + c) / 2, c};
      }
    }
  }
  return std::nullopt;
}

ApFreeSet::ApFreeSet(std::size_t ground, std::vector<std::size_t> elements)
    : ground_(ground), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > ground_) {
      throw InvalidArgument("element " + std::to_string(elements_[i]) + " outside 1.." +
                            std::to_string(ground_));
    }
    if (i > 0 && elements_[i] == elements_[i - 1]) throw InvalidArgument("repeated element");
  }
  if (auto ap = find_3ap(elements_)) {
    throw InvalidArgument("set contains the progression " + std::to_string((*ap)[0]) + ", " +
                          std::to_string((*ap)[1]) + ", " + std::to_string((*ap)[2]));
  }
}

namespace {

using Mask = std::uint64_t;  // bit x <-> integer x, x <= 40

bool extends_ap_free(Mask chosen, std::size_t x) {
  for (std::size_t a = 1; a < 64; ++a) {
    if (!((chosen >> a) & 1U)) continue;
    if ((a + x) % 2 == 0 && ((chosen >> ((a + x) / 2)) & 1U)) return false;
    const std::size_t far = 2 * x;
    if (far > a && far - a < 64 && ((chosen >> (far - a)) & 1U)) return false;
    if (2 * a > x && 2 * a - x < 64 && ((chosen >> (2 * a - x)) & 1U)) return false;
  }
  return true;
}

// Searches for an AP-free set in 1..m of size `target` containing 1 and m,
// using r[len] as the bound on how many elements fit in a window of len.
bool search_with_ends(std::size_t m, std::size_t target, const std::vector<std::size_t>& r,
                      std::size_t x, Mask chosen, std::size_t size, Mask& found) {
  if (size == target) {
    found = chosen;
    return true;
  }
  if (x >= m) return false;
  if (size + r[m - x] < target) return false;
  if (extends_ap_free(chosen, x) &&
      search_with_ends(m, target, r, x + 1, chosen | (Mask{1} << x), size + 1, found)) {
    return true;
  }
  return search_with_ends(m, target, r, x + 1, chosen, size, found);
}

struct ExactTable {
  std::vector<std::size_t> sizes;
  std::vector<Mask> sets;
};

ExactTable exact_table(std::size_t n) {
  ExactTable t;
  t.sizes.assign(n + 1, 0);
  t.sets.assign(n + 1, 0);
  if (n >= 1) {
    t.sizes[1] = 1;
    t.sets[1] = Mask{1} << 1;
  }
  for (std::size_t m = 2; m <= n; ++m) {
    // r(m) is r(m-1) or r(m-1) + 1, and a set attaining the larger value must
    // use both 1 and m (otherwise a translate fits in 1..m-1).
    Mask found = 0;
    const Mask ends = (Mask{1} << 1) | (Mask{1} << m);
    const std::size_t target = t.sizes[m - 1] + 1;
    if (search_with_ends(m, target, t.sizes, 2, ends, 2, found)) {
      t.sizes[m] = target;
      t.sets[m] = found;
    } else {
      t.sizes[m] = t.sizes[m - 1];
      t.sets[m] = t.sets[m - 1];
    }
  }
  return t;
}

constexpr std::size_t kBehrendVectorBudget = std::size_t{1} << 22;
constexpr std::size_t kAugmentLimit = 50'000;
constexpr std::size_t kPairVerifyLimit = 20'000;

}  // namespace

std::vector<std::size_t> ap3_free_sizes(std::size_t n) {
  if (n > kExactApBound) {
    throw LimitExceeded("exact 3-AP-free search limited to n <= " + std::to_string(kExactApBound));
  }
  return exact_table(n).sizes;
}

ApFreeSet ap3_free_set_behrend(std::size_t n) {
  if (n > kBehrendBound) {
    throw LimitExceeded("Behrend construction limited to n <= " + std::to_string(kBehrendBound));
  }
  // Integers v + 1 whose base-(2k-1) digits of v lie in 0..k-1 and share the
  // same sum of squares. Digit-wise sums never carry, so a + c = 2b forces
  // x + z = 2y on the digit vectors, impossible on a sphere unless x = y = z.
  std::vector<std::size_t> best;
  std::size_t best_dim = 0;
  std::size_t best_k = 0;
  for (std::size_t dim = 2; dim <= 40; ++dim) {
    // Scan a window around the k with (2k - 1)^dim ~ n.
    const auto centre = static_cast<std::size_t>((std::pow(static_cast<double>(n), 1.0 / dim) + 1) / 2);
    for (std::size_t k = std::max<std::size_t>(2, centre > 1 ? centre - 1 : 2); k <= centre + 3; ++k) {
      const std::size_t base = 2 * k - 1;
      // Smallest value using the top digit must stay below n.
      std::size_t top_unit = 1;
      bool overflow = false;
      for (std::size_t i = 1; i < dim; ++i) {
        if (top_unit > n / base) {
          overflow = true;
          break;
        }
        top_unit *= base;
      }
      if (overflow || top_unit >= n) break;
      std::size_t vectors = 1;
      for (std::size_t i = 0; i < dim && vectors <= kBehrendVectorBudget; ++i) vectors *= k;
      if (vectors > kBehrendVectorBudget) break;

      const auto for_each_fitting = [&](auto&& visit) {
        std::vector<std::size_t> digits(dim, 0);
        while (true) {
          std::size_t value = 0;
          std::size_t radius = 0;
          bool fits = true;
          for (std::size_t i = dim; i-- > 0;) {
            if (value > (n - 1) / base) {
              fits = false;
              break;
            }
            value = value * base + digits[i];
            radius += digits[i] * digits[i];
          }
          if (fits && value + 1 <= n) visit(value + 1, radius);
          std::size_t pos = 0;
          while (pos < dim && ++digits[pos] == k) digits[pos++] = 0;
          if (pos == dim) break;
        }
      };
      // Count each sphere first, then collect only the largest.
      std::vector<std::uint32_t> sphere_size(dim * (k - 1) * (k - 1) + 1, 0);
      for_each_fitting([&](std::size_t, std::size_t r) { ++sphere_size[r]; });
      const auto top = std::max_element(sphere_size.begin(), sphere_size.end());
      if (*top > best.size()) {
        const auto radius = static_cast<std::size_t>(top - sphere_size.begin());
        best.clear();
        for_each_fitting([&](std::size_t v, std::size_t r) {
          if (r == radius) best.push_back(v);
        });
        best_dim = dim;
        best_k = k;
      }
    }
  }
  if (n >= 1 && best.empty()) best = {1};
  std::sort(best.begin(), best.end());

  if (n <= kAugmentLimit) {
    std::vector<bool> member(n + 1, false);
    for (auto x : best) member[x] = true;
    for (std::size_t x = 1; x <= n; ++x) {
      if (member[x]) continue;
      bool ok = true;
      for (auto s : best) {
        if ((x + s) % 2 == 0 && member[(x + s) / 2]) { ok = false; break; }
        if (2 * s > x && 2 * s - x <= n && member[2 * s - x]) { ok = false; break; }
        if (2 * x > s && 2 * x - s <= n && member[2 * x - s]) { ok = false; break; }
      }
      if (ok) {
        best.insert(std::lower_bound(best.begin(), best.end(), x), x);
        member[x] = true;
      }
    }
  }

  if (best.size() <= kPairVerifyLimit) {
    if (find_3ap(best)) throw InvariantViolation("Behrend set contains a 3-AP");
  } else {
    // Structural check: every element is on the chosen sphere.
    const std::size_t base = 2 * best_k - 1;
    std::optional<std::size_t> radius;
    for (auto x : best) {
      std::size_t v = x - 1;
      std::size_t r = 0;
      for (std::size_t i = 0; i < best_dim; ++i) {
        const std::size_t d = v % base;
        if (d >= best_k) throw InvariantViolation("Behrend digit out of range");
        r += d * d;
        v /= base;
      }
      if (v != 0 || (radius && *radius != r)) throw InvariantViolation("Behrend sphere mismatch");
      radius = r;
    }
  }
  return ApFreeSet(n, std::move(best), ApFreeSet::Trusted{});
}

ApFreeSet ap3_free_set(std::size_t n, ApMode mode) {
  if (mode == ApMode::Behrend) return ap3_free_set_behrend(n);
  if (n > kExactApBound) {
    throw LimitExceeded("exact 3-AP-free search limited to n <= " + std::to_string(kExactApBound));
  }
  const ExactTable t = exact_table(n);
  std::vector<std::size_t> elements;
  for (std::size_t x = 1; x <= n; ++x) {
    if ((t.sets[n] >> x) & 1U) elements.push_back(x);
  }
  return ApFreeSet(n, std::move(elements));
}

// ---------------------------------------------------------------------------
// Gadgets

std::size_t GadgetBundle::order() const {
  return std::visit([](const auto& g) { return g.order(); }, graph);
}

GadgetBundle rs_graph(std::size_t k, const ApFreeSet& s) {
  if (k == 0) throw InvalidArgument("rs_graph needs k >= 1");
  for (auto a : s.elements()) {
    if (a > k) throw InvalidArgument("rs_graph: element " + std::to_string(a) + " exceeds k");
  }
  const std::size_t n = 6 * k;
  auto x_vertex = [&](std::size_t x) { return x - 1; };
  auto y_vertex = [&](std::size_t y) { return k + y - 1; };
  auto z_vertex = [&](std::size_t z) { return 3 * k + z - 1; };

  GraphBuilder b(n);
  WitnessPacking planted;
  planted.kind = PackingKind::Triangle;
  for (std::size_t x = 1; x <= k; ++x) {
    for (auto a : s.elements()) {
      const Vertex vx = x_vertex(x);
      const Vertex vy = y_vertex(x + a);
      const Vertex vz = z_vertex(x + 2 * a);
      b.add_edge(vx, vy);
      b.add_edge(vy, vz);
      b.add_edge(vx, vz);
      planted.tuples.push_back({vx, vy, vz});
    }
  }
  GadgetBundle out;
  const Graph g = b.build();
  std::string why;
  if (!verify_packing(g, planted, &why)) throw InvariantViolation("rs_graph planted: " + why);
  if (count_triangles(g) != planted.size()) {
    throw InvariantViolation("rs_graph has triangles outside the planted family");
  }
  std::vector<std::size_t> assignment(n);
  for (Vertex v = 0; v < n; ++v) assignment[v] = v < k ? 0 : v < 3 * k ? 1 : 2;
  out.labeling = PartLabeling::from_assignment(assignment, {"X", "Y", "Z"});
  out.farness = farness_lower_bound(planted, n);
  out.certificate = std::move(planted);
  out.graph = g;
  out.provenance = {{"construction", "rs"},
                    {"params", {{"k", k}, {"S", s.elements()}, {"ground", s.ground()}}}};
  return out;
}

std::optional<PartLabeling> find_tripartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> colour(n, 3);
  // Iterative backtracking; colour[v] == 3 means unassigned.
  std::size_t i = 0;
  while (i < n) {
    const Vertex v = order[i];
    std::size_t c = colour[v] == 3 ? 0 : colour[v] + 1;
    for (; c < 3; ++c) {
      bool clash = false;
      g.row(v).for_each([&](Vertex w) { clash = clash || colour[w] == c; });
      if (!clash) break;
    }
    if (c < 3) {
      colour[v] = c;
      ++i;
      continue;
    }
    colour[v] = 3;
    if (i == 0) return std::nullopt;
    --i;
  }
  return PartLabeling::from_assignment(colour, {"X", "Y", "Z"}, true);
}

bool is_independent_partition(const Graph& g, const PartLabeling& labeling) {
  for (const auto& p : labeling.parts()) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
        if (g.adjacent(p.vertices[i], p.vertices[j])) return false;
      }
    }
  }
  return true;
}

namespace {

void require_three_parts(const Graph& g, const PartLabeling& labeling, const char* what) {
  if (labeling.vertex_count() != g.order()) {
    throw InvalidArgument(std::string(what) + ": labeling does not cover the graph");
  }
  if (labeling.part_count() != 3) {
    throw InvalidArgument(std::string(what) + ": labeling must have exactly three parts");
  }
  if (!is_independent_partition(g, labeling)) {
    throw InvalidArgument(std::string(what) + ": graph is not tripartite under the labeling");
  }
}

WitnessPacking default_packing(const Graph& f) {
  const bool small = f.order() <= kExactPackingMaxOrder &&
                     count_triangles(f) <= kExactPackingMaxTriangles;
  return triangle_packing(f, small ? PackingMode::Exact : PackingMode::Greedy);
}

WitnessPacking checked_packing(const Graph& host, std::optional<WitnessPacking> packing) {
  WitnessPacking p = packing ? std::move(*packing) : default_packing(host);
  std::string why;
  if (p.kind != PackingKind::Triangle || !verify_packing(host, p, &why)) {
    throw InvalidArgument("supplied packing is not an edge-disjoint triangle packing: " + why);
  }
  return p;
}

// Role of each gadget vertex for a gadget of order 5n; F roles come from the
// gadget's own labeling.
enum Role { R1 = 0, R2 = 1, R3 = 2, R4 = 3, R5 = 4 };

}  // namespace

GadgetBundle build_c5_gadget(const Graph& f, const PartLabeling& f_labeling,
                             std::optional<WitnessPacking> packing) {
  require_three_parts(f, f_labeling, "build_c5_gadget");
  const std::size_t n = f.order();
  if (n == 0) throw InvalidArgument("build_c5_gadget needs a nonempty F");
  WitnessPacking planted = checked_packing(f, std::move(packing));

  const std::size_t offset = 4 * n;
  std::vector<std::size_t> role(5 * n);
  for (Vertex v = 0; v < 2 * n; ++v) role[v] = R1;
  for (Vertex v = 2 * n; v < 4 * n; ++v) role[v] = R4;
  constexpr std::array<std::size_t, 3> kFRoles{R2, R3, R5};
  for (Vertex v = 0; v < n; ++v) role[offset + v] = kFRoles[f_labeling.part_of(v)];

  GraphBuilder b(5 * n);
  for (Vertex u = 0; u < 5 * n; ++u) {
    for (Vertex v = u + 1; v < 5 * n; ++v) {
      const std::size_t ru = std::min(role[u], role[v]);
      const std::size_t rv = std::max(role[u], role[v]);
      bool edge = false;
      if ((ru == R1 && rv == R4) || (ru == R1 && rv == R5) || (ru == R2 && rv == R4)) {
        edge = true;
      } else if ((ru == R2 && rv == R3) || (ru == R3 && rv == R5)) {
        edge = f.adjacent(u - offset, v - offset);
      } else if (ru == R2 && rv == R5) {
        edge = !f.adjacent(u - offset, v - offset);
      }
      if (edge) b.add_edge(u, v);
    }
  }

  GadgetBundle out;
  const Graph g = b.build();
  out.labeling =
      PartLabeling::from_assignment(role, {"V1", "V2", "V3", "V4", "V5"}, /*allow_empty=*/true);
  if (auto problem = audit_c5_gadget(g, f); !problem.empty()) {
    throw InvariantViolation("c5 gadget audit: " + problem);
  }
  out.certificate = greedy_c5_packing(g, out.labeling, planted);
  out.farness = farness_lower_bound(out.certificate, g.order());
  out.graph = g;
  out.provenance = {{"construction", "c5-gadget"},
                    {"params", {{"f_order", n}, {"planted", planted.size()}}}};
  return out;
}

std::string audit_c5_gadget(const Graph& gadget, const Graph& f) {
  const std::size_t n = f.order();
  if (gadget.order() != 5 * n) return "gadget order is not 5 |F|";
  const std::size_t offset = 4 * n;
  // Recover F's roles from adjacency to V1 and V4: V2 is empty to V1 and
  // complete to V4, V3 empty to both, V5 complete to V1 and empty to V4.
  auto role_of = [&](Vertex v) -> std::size_t {
    if (v < 2 * n) return R1;
    if (v < 4 * n) return R4;
    const bool to_v1 = gadget.adjacent(v, 0);
    const bool to_v4 = gadget.adjacent(v, 2 * n);
    if (!to_v1 && to_v4) return R2;
    if (!to_v1 && !to_v4) return R3;
    if (to_v1 && !to_v4) return R5;
    return 99;
  };
  std::vector<std::size_t> role(5 * n);
  for (Vertex v = 0; v < 5 * n; ++v) {
    role[v] = role_of(v);
    if (role[v] == 99) return "F vertex " + std::to_string(v) + " adjacent to both V1 and V4";
  }
  for (Vertex u = 0; u < 5 * n; ++u) {
    for (Vertex v = u + 1; v < 5 * n; ++v) {
      const std::size_t ru = std::min(role[u], role[v]);
      const std::size_t rv = std::max(role[u], role[v]);
      const bool has = gadget.adjacent(u, v);
      bool want = false;
      if (ru == rv) {
        want = false;
      } else if ((ru == R1 && rv == R4) || (ru == R1 && rv == R5) || (ru == R2 && rv == R4)) {
        want = true;
      } else if ((ru == R1 && (rv == R2 || rv == R3)) || (ru == R3 && rv == R4) ||
                 (ru == R4 && rv == R5)) {
        want = false;
      } else if ((ru == R2 && rv == R3) || (ru == R3 && rv == R5)) {
        want = f.adjacent(u - offset, v - offset);
      } else if (ru == R2 && rv == R5) {
        want = !f.adjacent(u - offset, v - offset);
      }
      if (has != want) {
        return "pair (" + std::to_string(u) + ", " + std::to_string(v) + ") breaks the V" +
               std::to_string(ru + 1) + "-V" + std::to_string(rv + 1) + " rule";
      }
    }
  }
  return {};
}

bool verify_poset_certificate(const Digraph& gadget, const Graph& t, WitnessPacking& packing) {
  if (!verify_packing(t, packing)) return false;
  for (const auto& tri : packing.tuples) {
    // Some ordering of the triangle must be a path x->y->z without x->z.
    bool violated = false;
    std::array<Vertex, 3> p{tri[0], tri[1], tri[2]};
    std::sort(p.begin(), p.end());
    do {
      if (gadget.has_arc(p[0], p[1]) && gadget.has_arc(p[1], p[2]) && !gadget.has_arc(p[0], p[2])) {
        violated = true;
      }
    } while (!violated && std::next_permutation(p.begin(), p.end()));
    if (!violated) {
      packing.verified = false;
      return false;
    }
  }
  return true;
}

GadgetBundle build_poset_gadget(const Graph& t, const PartLabeling& labeling,
                                std::optional<WitnessPacking> packing) {
  require_three_parts(t, labeling, "build_poset_gadget");
  const std::size_t n = t.order();
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const std::size_t pu = labeling.part_of(u);
      const std::size_t pv = labeling.part_of(v);
      if ((pu == 0 && pv == 1) || (pu == 1 && pv == 2)) {
        if (t.adjacent(u, v)) arcs.emplace_back(u, v);
      } else if (pu == 0 && pv == 2) {
        if (!t.adjacent(u, v)) arcs.emplace_back(u, v);
      }
    }
  }
  GadgetBundle out;
  Digraph d = Digraph::from_arcs(n, arcs);
  WitnessPacking cert = checked_packing(t, std::move(packing));
  if (!verify_poset_certificate(d, t, cert)) {
    throw InvariantViolation("poset gadget certificate does not verify");
  }
  out.farness = farness_lower_bound(cert, n);
  out.certificate = std::move(cert);
  std::vector<std::size_t> assignment(n);
  for (Vertex v = 0; v < n; ++v) assignment[v] = labeling.part_of(v);
  out.labeling = PartLabeling::from_assignment(assignment, {"V1", "V2", "V3"}, true);
  out.graph = std::move(d);
  out.provenance = {{"construction", "poset-gadget"},
                    {"params", {{"t_order", n}, {"packing", out.certificate.size()}}}};
  return out;
}

}  // namespace ptlab
