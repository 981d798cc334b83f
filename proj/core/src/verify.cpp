#include "ptlab/verify.hpp"

#include <sstream>

#include "ptlab/counting.hpp"
#include "ptlab/decomposition.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/gadgets.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/packing.hpp"
#include "ptlab/testers.hpp"

namespace ptlab {

namespace {

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges{";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : " ") << u << '-' << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string describe(std::span<const Vertex> s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << ']';
  return out.str();
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& what) {
    ++result_.checks;
    if (!ok && result_.failures.size() < 50) result_.failures.push_back(what());
  }
  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

double pick_p(std::size_t i) {
  static constexpr double ps[] = {0.3, 0.5, 0.7};
  return ps[i % 3];
}

SuiteResult recognizers_suite(const VerifyOptions& o) {
  Suite s("recognizers");
  const Recognizer cograph = o.cograph ? o.cograph : Recognizer(is_cograph);
  const Recognizer comparability =
      o.comparability ? o.comparability : Recognizer([](const Graph& g) { return is_comparability(g); });
  const Recognizer perfect = o.perfect ? o.perfect : Recognizer([](const Graph& g) { return is_perfect(g); });
  const RngStream root(o.seed);

  auto witness_ok = [&](Property p, const Graph& g, const RecognitionResult& r) {
    return r.member || (r.witness && verify_witness(p, g, *r.witness));
  };

  for (std::size_t i = 0; i < o.seeds; ++i) {
    RngStream rng = root.split(i);
    const std::size_t n = 4 + i % 5;
    const Graph g = i % 4 == 3 ? random_cograph(n, rng) : gnp(n, pick_p(i), rng);
    const auto co = cograph(g);
    const auto cmp = comparability(g);
    const auto perf = perfect(g);
    s.check(!co.member || cmp.member, [&] { return "cograph but not comparability: " + describe(g); });
    s.check(!cmp.member || perf.member, [&] { return "comparability but not perfect: " + describe(g); });
    s.check(co.member == (count_induced_p3(g) == 0),
            [&] { return "cograph verdict disagrees with induced-P3 count: " + describe(g); });
    s.check(cmp.member == is_comparability(g, ComparabilityMode::Exhaustive).member,
            [&] { return "comparability verdict disagrees with exhaustive orientation: " + describe(g); });
    s.check(witness_ok(Property::Cograph, g, co), [&] { return "cograph witness fails: " + describe(g); });
    s.check(witness_ok(Property::Comparability, g, cmp),
            [&] { return "comparability witness fails: " + describe(g); });
    s.check(witness_ok(Property::Perfect, g, perf), [&] { return "perfect witness fails: " + describe(g); });
    if (cmp.member) {
      const auto d = transitive_orientation(g);
      s.check(d && is_transitive_orientation_of(g, *d),
              [&] { return "no valid transitive orientation for a comparability graph: " + describe(g); });
    }
  }
  return s.done();
}

SuiteResult packing_suite(const VerifyOptions& o) {
  Suite s("packing");
  const RngStream root(o.seed ^ 0x9e3779b97f4a7c15ULL);
  const Recognizer tf = recognizer_for(Property::TriangleFree);
  for (std::size_t i = 0; i < o.seeds; ++i) {
    RngStream rng = root.split(i);
    const std::size_t n = 6 + i % 7;
    const Graph g = gnp(n, pick_p(i), rng);
    WitnessPacking exact = triangle_packing(g, PackingMode::Exact);
    const std::size_t tau = exact.size();
    const std::size_t nu = triangle_cover(g, CoverMode::Exact).size();
    s.check(tau <= nu && nu <= 3 * tau, [&] {
      return "tau=" + std::to_string(tau) + " nu=" + std::to_string(nu) + " on " + describe(g);
    });
    std::string why;
    s.check(verify_packing(g, exact, &why), [&] { return "exact packing fails: " + why + " " + describe(g); });
    WitnessPacking greedy = triangle_packing(g, PackingMode::Greedy);
    s.check(verify_packing(g, greedy, &why) && greedy.size() <= tau,
            [&] { return "greedy packing invalid or above tau: " + describe(g); });
    const auto cover = triangle_cover(g, CoverMode::FromPacking);
    GraphBuilder b(g);
    for (auto [u, v] : cover) b.remove_edge(u, v);
    s.check(cover.size() <= 3 * tau && count_triangles(b.build()) == 0,
            [&] { return "packing-derived cover fails: " + describe(g); });
    if (n <= 7) {
      const auto d = distance_to_property(g, tf, kDistanceMaxCap);
      s.check(!d || (*d >= tau && *d == nu), [&] {
        return "distance " + std::to_string(d.value_or(0)) + " vs tau " + std::to_string(tau) +
               " nu " + std::to_string(nu) + " on " + describe(g);
      });
    }
  }
  return s.done();
}

Graph random_tripartite(std::size_t per_part, double p, RngStream& rng, PartLabeling& labeling) {
  const std::size_t n = 3 * per_part;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u / per_part != v / per_part && rng.bernoulli(p)) b.add_edge(u, v);
    }
  }
  std::vector<std::size_t> assignment(n);
  for (Vertex v = 0; v < n; ++v) assignment[v] = v / per_part;
  labeling = PartLabeling::from_assignment(assignment, {"V1", "V2", "V3"});
  return b.build();
}

SuiteResult gadgets_suite(const VerifyOptions& o) {
  Suite s("gadgets");
  const RngStream root(o.seed ^ 0x5851f42d4c957f2dULL);
  for (std::size_t k = 1; k <= 12; ++k) {
    const ApFreeSet set = ap3_free_set(k, ApMode::Exact);
    GadgetBundle rs = rs_graph(k, set);
    const Graph& g = rs.undirected();
    std::string why;
    s.check(count_triangles(g) == k * set.size() && verify_packing(g, rs.certificate, &why),
            [&] { return "rs_graph k=" + std::to_string(k) + " " + why; });
    s.check(is_independent_partition(g, rs.labeling), [&] { return "rs parts not independent"; });
  }
  const std::size_t gadget_runs = std::max<std::size_t>(1, o.seeds / 50);
  for (std::size_t i = 0; i < gadget_runs; ++i) {
    RngStream rng = root.split(i);
    const std::size_t k = 3 + i % 3;
    const GadgetBundle rs = rs_graph(k, ap3_free_set(k, ApMode::Exact));
    TripartiteExtract ex = random_tripartite_extract(rs.undirected(), rs.certificate, rng, 8);
    GadgetBundle gadget = build_c5_gadget(ex.f, ex.labeling, ex.retained);
    const Graph& h = gadget.undirected();
    s.check(audit_c5_gadget(h, ex.f).empty(), [&] { return "c5 gadget audit: " + audit_c5_gadget(h, ex.f); });
    std::string why;
    s.check(verify_packing(h, gadget.certificate, &why) && gadget.certificate.size() == ex.retained.size(),
            [&] { return "c5 certificate: " + why; });
    const std::size_t offset = 4 * ex.f.order();
    for (std::size_t t = 0; t < 100; ++t) {
      const VertexSet sample = sample_vertices(h.order(), std::min<std::size_t>(12, h.order()), rng);
      VertexSet fpart;
      for (Vertex v : sample) {
        if (v >= offset) fpart.push_back(v - offset);
      }
      if (!is_triangle_free(induced_subgraph(ex.f, fpart)).member) continue;
      const Graph sub = induced_subgraph(h, sample);
      s.check(check_order_transitivity(sub, gadget.labeling.restrict_to(sample)).member &&
                  is_comparability(sub).member,
              [&] { return "triangle-free F-portion not comparability: sample " + describe(sample); });
    }
  }
  for (std::size_t i = 0; i < gadget_runs; ++i) {
    RngStream rng = root.split(1000 + i);
    PartLabeling labeling;
    const Graph t = random_tripartite(3, 0.6, rng, labeling);
    GadgetBundle poset = build_poset_gadget(t, labeling);
    const Digraph& d = poset.directed();
    s.check(verify_poset_certificate(d, t, poset.certificate), [&] { return "poset certificate: " + describe(t); });
    for (std::size_t j = 0; j < 100; ++j) {
      const VertexSet sample = sample_vertices(t.order(), 1 + rng.below(t.order()), rng);
      const bool tf = count_triangles(induced_subgraph(t, sample)) == 0;
      const bool is_p = is_poset(induced_subdigraph(d, sample)).member;
      s.check(tf == is_p, [&] {
        return std::string("poset sample ") + (tf ? "triangle-free but not a poset" : "with a triangle is a poset") +
               ": " + describe(sample) + " in " + describe(t);
      });
    }
  }
  return s.done();
}

SuiteResult testers_suite(const VerifyOptions& o) {
  Suite s("testers");
  const RngStream root(o.seed ^ 0xda3e39cb94b95bdbULL);
  const std::size_t graphs = std::max<std::size_t>(1, o.seeds / 20);
  for (std::size_t i = 0; i < graphs; ++i) {
    RngStream rng = root.split(i);
    const Graph co = random_cograph(12, rng);
    const Graph bip = complete_bipartite(5, 7);
    TesterConfig p3;
    p3.kind = TesterKind::QuadrupleDensity;
    p3.budget = 20;
    p3.seed = i;
    s.check(estimate_detection(co, p3, 100).rejections == 0,
            [&] { return "induced-P3 tester rejected a cograph: " + describe(co); });
    TesterConfig uni;
    uni.budget = 6;
    uni.property = Property::Cograph;
    uni.seed = i;
    s.check(estimate_detection(co, uni, 100).rejections == 0,
            [&] { return "universal cograph tester rejected a cograph: " + describe(co); });
    TesterConfig tri;
    tri.kind = TesterKind::TripleDensity;
    tri.budget = 20;
    tri.seed = i;
    s.check(estimate_detection(bip, tri, 100).rejections == 0,
            [&] { return "triangle tester rejected a bipartite graph"; });

    const Graph g = gnp(20, 0.3, rng);
    const TesterReport a = estimate_detection(g, tri, 200, 1);
    const TesterReport b = estimate_detection(g, tri, 200, std::max(2U, o.threads));
    s.check(a.rejections == b.rejections, [&] { return "thread count changed the result on " + describe(g); });
    s.check(a.wilson.lo <= a.rejection_rate && a.rejection_rate <= a.wilson.hi,
            [&] { return "Wilson interval misses the point estimate"; });
  }
  return s.done();
}

SuiteResult decomposition_suite(const VerifyOptions& o) {
  Suite s("decomposition");
  const RngStream root(o.seed ^ 0x2545f4914f6cdd1dULL);
  for (std::size_t i = 0; i < o.seeds; ++i) {
    RngStream rng = root.split(i);
    const std::size_t n = 2 + i % 5;
    const Graph g = i % 3 == 2 ? random_cograph(n, rng) : gnp(n, pick_p(i), rng);
    const bool p3_free = count_induced_p3(g) == 0;
    s.check(!p3_free || find_cut(g).has_value(), [&] { return "cograph without an exact cut: " + describe(g); });
    // Exact cuts shatter g down to singletons iff g is a cograph.
    const Refinement shatter = refine_along_cuts(g, 0.0, SearchMode::Exact, rng);
    s.check((shatter.parts.size() == n) == p3_free,
            [&] { return "0-cut refinement disagrees with induced-P3 freeness: " + describe(g); });

    const Graph h = gnp(6 + i % 5, pick_p(i), rng);
    const Refinement r0 = refine_along_cuts(h, 0.0, SearchMode::Exact, rng);
    for (const auto& part : r0.parts) {
      if (part.size() < 2) continue;
      s.check(count_induced_p3(induced_subgraph(r0.modified_graph, part)) > 0,
              [&] { return "final part " + describe(part) + " has no induced P3 in " + describe(h); });
    }
    const double beta = 0.1;
    const Refinement r = refine_along_cuts(h, beta, SearchMode::Exact, rng);
    s.check(static_cast<double>(r.edited_pairs) <= beta * static_cast<double>(pair_count(h.order())) + 1e-9,
            [&] { return "refinement edits exceed beta C(n,2) on " + describe(h); });
    s.check(hamming_distance(h, r.modified_graph) == r.edited_pairs,
            [&] { return "edited_pairs disagrees with the modified graph on " + describe(h); });
    const BetaCutResult heur = find_beta_cut(h, 0.2, SearchMode::Heuristic, rng, 16);
    s.check(!heur.cut || is_beta_cut(h, heur.cut->side1, heur.cut->side2, 0.2),
            [&] { return "heuristic returned a non-cut on " + describe(h); });
  }
  return s.done();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"recognizers", "packing", "gadgets", "testers",
                                                 "decomposition"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "recognizers") return recognizers_suite(options);
  if (name == "packing") return packing_suite(options);
  if (name == "gadgets") return gadgets_suite(options);
  if (name == "testers") return testers_suite(options);
  if (name == "decomposition") return decomposition_suite(options);
  throw InvalidArgument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_verify_suite(const std::string& name, const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, options));
  } else {
    out.push_back(run_suite(name, options));
  }
  return out;
}

nlohmann::json to_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"checks", r.checks}, {"passed", r.passed()}, {"failures", r.failures}};
}

}  // namespace ptlab
