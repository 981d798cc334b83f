#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ptlab/decomposition.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/gadgets.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/packing.hpp"

using namespace ptlab;

TEST(TrianglePacking, Examples) {
  EXPECT_EQ(triangle_packing(Graph::complete(3), PackingMode::Exact).size(), 1u);
  EXPECT_EQ(triangle_packing(Graph::complete(4), PackingMode::Exact).size(), 1u);
  EXPECT_EQ(triangle_packing(Graph::complete(7), PackingMode::Exact).size(), 7u);  // Fano plane
  EXPECT_THROW(triangle_packing(Graph::complete(15), PackingMode::Exact), LimitExceeded);

  for (std::size_t k = 1; k <= 8; ++k) {
    const GadgetBundle rs = rs_graph(k, ap3_free_set(k, ApMode::Exact));
    WitnessPacking p = triangle_packing(rs.undirected(), PackingMode::Greedy);
    EXPECT_EQ(p.size(), rs.certificate.size());
    auto a = p.tuples, b = rs.certificate.tuples;
    for (auto& t : a) std::sort(t.begin(), t.end());
    for (auto& t : b) std::sort(t.begin(), t.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(TrianglePacking, ExactAgreesWithRecursionOracle) {
  RngStream rng(19);
  for (int i = 0; i < 150; ++i) {
    const Graph g = gnp(5 + rng.below(5), 0.3 + 0.5 * rng.uniform(), rng);
    WitnessPacking p = triangle_packing(g, PackingMode::Exact);
    ASSERT_EQ(p.size(), oracle::packing_number(g)) << "iteration " << i;
    ASSERT_TRUE(verify_packing(g, p));
    WitnessPacking gr = triangle_packing(g, PackingMode::Greedy, &rng);
    ASSERT_TRUE(verify_packing(g, gr));
    ASSERT_LE(gr.size(), p.size());
    // Greedy is maximal: every remaining triangle shares an edge with it.
    ASSERT_GE(3 * gr.size(), p.size());
  }
}

TEST(TriangleCover, Examples) {
  EXPECT_EQ(triangle_cover(Graph::complete(3), CoverMode::Exact).size(), 1u);
  const auto k4 = triangle_cover(Graph::complete(4), CoverMode::Exact);
  ASSERT_EQ(k4.size(), 2u);
  EXPECT_NE(k4[0].first, k4[1].first);  // a perfect matching
  EXPECT_NE(k4[0].second, k4[1].second);
  EXPECT_TRUE(triangle_cover(Graph::cycle(7), CoverMode::Exact).empty());
}

TEST(TriangleCover, ExactAgreesWithOracleAndChainHolds) {
  RngStream rng(20);
  for (int i = 0; i < 120; ++i) {
    const Graph g = gnp(5 + rng.below(4), 0.3 + 0.5 * rng.uniform(), rng);
    const std::size_t nu = triangle_cover(g, CoverMode::Exact).size();
    ASSERT_EQ(nu, oracle::cover_number(g)) << "iteration " << i;
    const std::size_t tau = triangle_packing(g, PackingMode::Exact).size();
    ASSERT_LE(tau, nu);
    ASSERT_LE(nu, 3 * tau);
    const auto from = triangle_cover(g, CoverMode::FromPacking);
    ASSERT_EQ(from.size(), 3 * tau);
    GraphBuilder b(g);
    for (auto [u, v] : from) b.remove_edge(u, v);
    ASSERT_EQ(oracle::triangles(b.build()), 0u);
  }
}

TEST(VerifyPacking, RejectsBadFamilies) {
  const Graph k4 = Graph::complete(4);
  WitnessPacking p{PackingKind::Triangle, {{0, 1, 2}, {0, 1, 3}}};
  std::string why;
  EXPECT_FALSE(verify_packing(k4, p, &why));
  EXPECT_FALSE(p.verified);
  EXPECT_FALSE(why.empty());
  WitnessPacking q{PackingKind::Triangle, {{0, 1, 2}}};
  EXPECT_TRUE(verify_packing(k4, q));
  EXPECT_THROW(farness_lower_bound(p, 4), InvalidArgument);
  EXPECT_THROW(farness_lower_bound(q, 5), InvalidArgument);
  WitnessPacking notc5{PackingKind::InducedC5, {{0, 1, 2, 3, 4}}};
  EXPECT_FALSE(verify_packing(Graph::complete(5), notc5));
}

TEST(Farness, Examples) {
  WitnessPacking k4 = triangle_packing(Graph::complete(4), PackingMode::Exact);
  ASSERT_TRUE(verify_packing(Graph::complete(4), k4));
  EXPECT_DOUBLE_EQ(farness_lower_bound(k4, 4), 1.0 / 16);
  const auto d = distance_to_property(Graph::complete(4), recognizer_for(Property::TriangleFree), 5);
  EXPECT_LE(farness_lower_bound(k4, 4) * 16, static_cast<double>(*d));

  const std::size_t k = 7;
  const ApFreeSet s = ap3_free_set(k, ApMode::Exact);
  const GadgetBundle rs = rs_graph(k, s);
  EXPECT_DOUBLE_EQ(rs.farness, static_cast<double>(s.size()) / (36.0 * k));

  WitnessPacking empty;
  ASSERT_TRUE(verify_packing(Graph(3), empty));
  EXPECT_EQ(farness_lower_bound(empty, 3), 0.0);
}

TEST(Farness, NeverExceedsExactDistance) {
  RngStream rng(23);
  const Recognizer tf = recognizer_for(Property::TriangleFree);
  for (int i = 0; i < 200; ++i) {
    const Graph g = gnp(4 + rng.below(4), 0.6, rng);
    WitnessPacking p = triangle_packing(g, PackingMode::Exact);
    ASSERT_TRUE(verify_packing(g, p));
    const auto d = distance_to_property(g, tf, kDistanceMaxCap);
    const double n2 = static_cast<double>(g.order() * g.order());
    if (d) ASSERT_LE(farness_lower_bound(p, g.order()) * n2, static_cast<double>(*d) + 1e-9);
  }
}

TEST(GreedyC5Packing, Examples) {
  const Graph f = Graph::complete(3);
  const PartLabeling l(3, {{"X", {0}}, {"Y", {1}}, {"Z", {2}}});
  const GadgetBundle g = build_c5_gadget(f, l);
  ASSERT_EQ(g.certificate.size(), 1u);
  EXPECT_TRUE(oracle::is_induced_cycle(g.undirected(), g.certificate.tuples[0]));

  WitnessPacking none;
  none.host_n = 3;
  EXPECT_EQ(greedy_c5_packing(g.undirected(), g.labeling, none).size(), 0u);

  RngStream rng(2);
  for (std::size_t k = 3; k <= 8; ++k) {
    const GadgetBundle rs = rs_graph(k, ap3_free_set(k, ApMode::Exact));
    TripartiteExtract ex = random_tripartite_extract(rs.undirected(), rs.certificate, rng, 4);
    const GadgetBundle gadget = build_c5_gadget(ex.f, ex.labeling, ex.retained);
    ASSERT_EQ(gadget.certificate.size(), ex.retained.size());
    const auto& t = gadget.certificate.tuples;
    for (std::size_t a = 0; a < t.size(); ++a) {
      EXPECT_TRUE(oracle::is_induced_cycle(gadget.undirected(), t[a]));
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        std::size_t shared = 0;
        for (Vertex x : t[a]) shared += std::count(t[b].begin(), t[b].end(), x);
        EXPECT_LE(shared, 1u);
      }
    }
  }
}

TEST(SampledC5Packing, VerifiesOnRandomGraphs) {
  RngStream rng(4);
  for (int i = 0; i < 5; ++i) {
    const Graph g = gnp(40, 0.5, rng);
    WitnessPacking p = sampled_c5_packing(g, 20000, rng);
    EXPECT_GT(p.size(), 0u);
    EXPECT_TRUE(verify_packing(g, p));
  }
}

TEST(TripartiteExtract, RetentionIsTwoNinthsForOneTriangle) {
  const Graph k3 = Graph::complete(3);
  WitnessPacking p{PackingKind::Triangle, {{0, 1, 2}}};
  ASSERT_TRUE(verify_packing(k3, p));
  RngStream rng(101);
  const int trials = 100000;
  int kept = 0;
  for (int i = 0; i < trials; ++i) kept += random_tripartite_extract(k3, p, rng, 1).retained.size();
  const double mean = static_cast<double>(kept) / trials;
  const double se = std::sqrt((2.0 / 9) * (7.0 / 9) / trials);
  EXPECT_NEAR(mean, 2.0 / 9, 3 * se);
}

TEST(TripartiteExtract, ForcedAndEmptyCases) {
  const GadgetBundle rs = rs_graph(4, ap3_free_set(4, ApMode::Exact));
  std::vector<std::size_t> aligned(rs.order());
  for (Vertex v = 0; v < rs.order(); ++v) aligned[v] = rs.labeling.part_of(v);
  RngStream rng(1);
  TripartiteExtract ex = random_tripartite_extract(rs.undirected(), rs.certificate, rng, 1, aligned);
  EXPECT_EQ(ex.retained.size(), rs.certificate.size());
  EXPECT_EQ(ex.f, rs.undirected());

  WitnessPacking none;
  EXPECT_EQ(random_tripartite_extract(rs.undirected(), none, rng, 3).retained.size(), 0u);
}

TEST(TripartiteExtract, PackingBoundedByTwoSmallestParts) {
  RngStream rng(8);
  for (int i = 0; i < 40; ++i) {
    const Graph g = gnp(10, 0.7, rng);
    WitnessPacking p = triangle_packing(g, PackingMode::Exact);
    ASSERT_TRUE(verify_packing(g, p));
    TripartiteExtract ex = random_tripartite_extract(g, p, rng, 1);
    std::vector<std::size_t> sizes;
    for (const auto& part : ex.labeling.parts()) sizes.push_back(part.vertices.size());
    std::sort(sizes.begin(), sizes.end());
    const std::size_t tau_f = triangle_packing(ex.f, PackingMode::Exact).size();
    EXPECT_LE(tau_f, sizes[0] * sizes[1]);
    EXPECT_LE(ex.retained.size(), tau_f);
  }
}
