#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ptlab/counting.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/gadgets.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/recognizers.hpp"

using namespace ptlab;

TEST(ApFree, Examples) {
  EXPECT_EQ(ap3_free_set(9, ApMode::Exact).size(), 5u);
  EXPECT_EQ(ap3_free_set(2, ApMode::Exact).size(), 2u);
  EXPECT_EQ(ap3_free_set(1, ApMode::Exact).size(), 1u);
  EXPECT_THROW(ApFreeSet(5, {1, 2, 3}), InvalidArgument);
  EXPECT_THROW(ApFreeSet(5, {1, 6}), InvalidArgument);
  EXPECT_THROW(ApFreeSet(5, {2, 2}), InvalidArgument);
  EXPECT_THROW(ap3_free_set(kExactApBound + 1, ApMode::Exact), LimitExceeded);
  const auto ap = find_3ap({1, 4, 5, 7});
  ASSERT_TRUE(ap);
  EXPECT_EQ(*ap, (std::array<std::size_t, 3>{1, 4, 7}));
  EXPECT_FALSE(find_3ap({1, 2, 4, 5}));
}

TEST(ApFree, ExactSizesMatchEnumeration) {
  const auto sizes = ap3_free_sizes(20);
  for (std::size_t n = 1; n <= 20; ++n) {
    const ApFreeSet s = ap3_free_set(n, ApMode::Exact);
    EXPECT_EQ(s.size(), oracle::max_ap_free(n)) << "n=" << n;
    EXPECT_EQ(sizes[n], s.size());
    EXPECT_TRUE(oracle::three_ap_free(s.elements()));
  }
}

TEST(ApFree, BehrendSetsAreValid) {
  for (std::size_t n : {10u, 100u, 1000u, 20000u}) {
    const ApFreeSet s = ap3_free_set(n, ApMode::Behrend);
    EXPECT_GT(s.size(), 0u);
    EXPECT_FALSE(find_3ap(s.elements())) << "n=" << n;
    for (std::size_t x : s.elements()) {
      EXPECT_GE(x, 1u);
      EXPECT_LE(x, n);
    }
  }
  EXPECT_THROW(ap3_free_set(kBehrendBound + 1, ApMode::Behrend), LimitExceeded);
}

TEST(RsGraph, Examples) {
  const GadgetBundle rs = rs_graph(5, ApFreeSet(5, {1, 2, 4}));
  EXPECT_EQ(rs.order(), 30u);
  EXPECT_EQ(rs.undirected().edge_count(), 45u);
  EXPECT_EQ(count_triangles(rs.undirected()), 15u);
  EXPECT_EQ(oracle::triangles(rs.undirected()), 15u);

  const GadgetBundle one = rs_graph(1, ap3_free_set(1, ApMode::Exact));
  EXPECT_EQ(one.order(), 6u);
  EXPECT_EQ(count_triangles(one.undirected()), 1u);

  EXPECT_THROW(rs_graph(3, ApFreeSet(3, {1, 2, 3})), InvalidArgument);
  EXPECT_THROW(rs_graph(0, ApFreeSet(0, {})), InvalidArgument);
}

TEST(RsGraph, PlantedTrianglesAreAllTriangles) {
  for (std::size_t k = 1; k <= 12; ++k) {
    const ApFreeSet s = ap3_free_set(k, ApMode::Exact);
    GadgetBundle rs = rs_graph(k, s);
    EXPECT_EQ(rs.certificate.size(), k * s.size());
    EXPECT_EQ(oracle::triangles(rs.undirected()), k * s.size());
    EXPECT_TRUE(verify_packing(rs.undirected(), rs.certificate));
    EXPECT_TRUE(is_independent_partition(rs.undirected(), rs.labeling));
    EXPECT_NEAR(rs.farness, static_cast<double>(k * s.size()) / (36.0 * k * k), 1e-15);
  }
}

TEST(C5Gadget, SingleTriangle) {
  const PartLabeling l(3, {{"X", {0}}, {"Y", {1}}, {"Z", {2}}});
  GadgetBundle g = build_c5_gadget(Graph::complete(3), l);
  EXPECT_EQ(g.order(), 15u);
  EXPECT_EQ(g.labeling.part_count(), 5u);
  EXPECT_EQ(audit_c5_gadget(g.undirected(), Graph::complete(3)), "");
  EXPECT_GE(count_induced_c5(g.undirected()), 1u);
  EXPECT_EQ(count_induced_c5(g.undirected()), oracle::induced_c5(g.undirected()));
  EXPECT_TRUE(verify_packing(g.undirected(), g.certificate));
  EXPECT_EQ(g.certificate.size(), 1u);
}

TEST(C5Gadget, FromExtractedRsGraphs) {
  RngStream rng(5);
  for (std::size_t k = 2; k <= 8; ++k) {
    const GadgetBundle rs = rs_graph(k, ap3_free_set(k, ApMode::Exact));
    TripartiteExtract ex = random_tripartite_extract(rs.undirected(), rs.certificate, rng, 8);
    GadgetBundle g = build_c5_gadget(ex.f, ex.labeling, ex.retained);
    EXPECT_EQ(g.order(), 5 * ex.f.order());
    EXPECT_EQ(audit_c5_gadget(g.undirected(), ex.f), "");
    EXPECT_TRUE(verify_packing(g.undirected(), g.certificate));
    EXPECT_EQ(g.certificate.size(), ex.retained.size());
  }
}

TEST(C5Gadget, RejectsNonTripartiteLabeling) {
  const PartLabeling bad(3, {{"X", {0, 1}}, {"Y", {2}}, {"Z", {}}}, true);
  EXPECT_THROW(build_c5_gadget(Graph::complete(3), bad), InvalidArgument);
}

TEST(C5Gadget, AuditCatchesTampering) {
  const PartLabeling l(3, {{"X", {0}}, {"Y", {1}}, {"Z", {2}}});
  const GadgetBundle g = build_c5_gadget(Graph::complete(3), l);
  GraphBuilder b(g.undirected());
  b.toggle(0, 14);
  EXPECT_NE(audit_c5_gadget(b.build(), Graph::complete(3)), "");
}

TEST(PosetGadget, PosetIffTriangleFree) {
  RngStream rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + rng.below(7);
    std::vector<std::size_t> part(n);
    for (auto& p : part) p = rng.below(3);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (part[u] != part[v] && rng.bernoulli(0.6)) b.add_edge(u, v);
    const Graph t = b.build();
    const PartLabeling l = PartLabeling::from_assignment(part, {"V1", "V2", "V3"}, true);
    GadgetBundle g = build_poset_gadget(t, l);
    ASSERT_EQ(is_poset(g.directed()).member, oracle::triangles(t) == 0) << "iteration " << i;
    ASSERT_EQ(oracle::poset(g.directed()), oracle::triangles(t) == 0);
    ASSERT_TRUE(verify_poset_certificate(g.directed(), t, g.certificate));
  }
}

TEST(FindTripartition, Examples) {
  EXPECT_FALSE(find_tripartition(Graph::complete(4)));
  const auto c5 = find_tripartition(Graph::cycle(5));
  ASSERT_TRUE(c5);
  EXPECT_TRUE(is_independent_partition(Graph::cycle(5), *c5));
  const auto empty = find_tripartition(Graph(4));
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->part_count(), 3u);

  const GadgetBundle rs = rs_graph(6, ap3_free_set(6, ApMode::Exact));
  const auto l = find_tripartition(rs.undirected());
  ASSERT_TRUE(l);
  EXPECT_TRUE(is_independent_partition(rs.undirected(), *l));
}
