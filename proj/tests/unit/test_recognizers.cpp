#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ptlab/counting.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/gadgets.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/recognizers.hpp"

using namespace ptlab;

namespace {

const Graph kP3 = Graph::path(4);

Digraph digraph(std::size_t n, std::vector<Arc> arcs) { return Digraph::from_arcs(n, arcs); }

}  // namespace

TEST(TriangleFree, Examples) {
  EXPECT_TRUE(is_triangle_free(Graph::cycle(5)).member);
  const auto k4 = is_triangle_free(Graph::complete(4));
  ASSERT_FALSE(k4.member);
  EXPECT_EQ(k4.witness->size(), 3u);

  const GadgetBundle rs = rs_graph(5, ApFreeSet(5, {1, 2, 4}));
  const auto r = is_triangle_free(rs.undirected());
  ASSERT_FALSE(r.member);
  std::vector<Vertex> w = *r.witness;
  std::sort(w.begin(), w.end());
  bool planted = false;
  for (auto t : rs.certificate.tuples) {
    std::sort(t.begin(), t.end());
    planted = planted || t == w;
  }
  EXPECT_TRUE(planted);
}

TEST(InducedHFree, Examples) {
  EXPECT_FALSE(is_induced_h_free(Graph::cycle(5), kP3).member);
  EXPECT_TRUE(is_induced_h_free(Graph::complete(4), kP3).member);
  EXPECT_THROW(is_induced_h_free(Graph::cycle(9), Graph::cycle(7)), LimitExceeded);

  // Single-triangle F: u2=0, u3=1, u5=2 in F coordinates.
  const Graph f = Graph::complete(3);
  const PartLabeling l(3, {{"X", {0}}, {"Y", {1}}, {"Z", {2}}});
  const GadgetBundle gadget = build_c5_gadget(f, l);
  const auto r = is_induced_h_free(gadget.undirected(), Graph::cycle(5));
  ASSERT_FALSE(r.member);
  const auto& w = *r.witness;
  EXPECT_TRUE(oracle::is_induced_cycle(gadget.undirected(), w));
}

TEST(Cograph, Examples) {
  EXPECT_TRUE(is_cograph(Graph::cycle(4)).member);
  const auto p = is_cograph(kP3);
  ASSERT_FALSE(p.member);
  std::vector<Vertex> w = *p.witness;
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(is_cograph(Graph::cycle(5)).member);
  EXPECT_TRUE(is_cograph(Graph(0)).member);
  EXPECT_TRUE(is_cograph(Graph(1)).member);
}

TEST(Cograph, ExhaustiveAgreementWithInducedP3Freeness) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
      const Graph g = oracle::from_code(n, code);
      const auto r = is_cograph(g);
      ASSERT_EQ(r.member, oracle::cograph(g)) << "n=" << n << " code=" << code;
      ASSERT_EQ(r.member, is_induced_h_free(g, kP3).member);
      if (!r.member) {
        const auto& w = *r.witness;
        ASSERT_TRUE(oracle::is_induced_path(g, w));
        ASSERT_TRUE(g.adjacent(w[0], w[1]) && g.adjacent(w[1], w[2]) && g.adjacent(w[2], w[3]));
      }
    }
  }
}

TEST(Comparability, Examples) {
  EXPECT_TRUE(is_comparability(Graph::cycle(6)).member);
  EXPECT_FALSE(is_comparability(Graph::cycle(5)).member);
  EXPECT_FALSE(is_comparability(Graph::cycle(5), ComparabilityMode::Exhaustive).member);
  RngStream rng(17);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_cograph(1 + rng.below(8), rng);
    EXPECT_TRUE(is_comparability(g, ComparabilityMode::Exhaustive).member);
    EXPECT_TRUE(is_comparability(g).member);
  }
}

TEST(Comparability, AgreesWithBruteForceOnAllSmallGraphs) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
      const Graph g = oracle::from_code(n, code);
      const bool expected = oracle::comparability(g);
      ASSERT_EQ(is_comparability(g).member, expected) << "n=" << n << " code=" << code;
      ASSERT_EQ(is_comparability(g, ComparabilityMode::Exhaustive).member, expected);
    }
  }
}

TEST(Comparability, ForcingMatchesExhaustiveOnRandomGraphs) {
  RngStream rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 2 + rng.below(6);  // 2..7
    const Graph g = gnp(n, 0.2 + 0.6 * rng.uniform(), rng);
    const auto forcing = is_comparability(g);
    ASSERT_EQ(forcing.member, is_comparability(g, ComparabilityMode::Exhaustive).member)
        << "iteration " << i;
    if (forcing.member) {
      const auto d = transitive_orientation(g);
      ASSERT_TRUE(d && is_transitive_orientation_of(g, *d));
    } else {
      ASSERT_TRUE(verify_witness(Property::Comparability, g, *forcing.witness));
      ASSERT_FALSE(oracle::comparability(induced_subgraph(g, *forcing.witness)));
    }
  }
}

TEST(Comparability, LargerKnownCases) {
  // Complements of comparability graphs need not be comparability graphs.
  EXPECT_TRUE(is_comparability(complete_bipartite(6, 7)).member);
  EXPECT_FALSE(is_comparability(complement(Graph::cycle(7))).member);
  EXPECT_TRUE(is_comparability(Graph::path(30)).member);
  EXPECT_FALSE(is_comparability(Graph::cycle(11)).member);
}

TEST(Perfect, Examples) {
  const auto c5 = is_perfect(Graph::cycle(5));
  ASSERT_FALSE(c5.member);
  EXPECT_EQ(c5.witness->size(), 5u);
  EXPECT_TRUE(is_perfect(Graph::cycle(6)).member);
  EXPECT_FALSE(is_perfect(complement(Graph::cycle(7))).member);
  EXPECT_THROW(is_perfect(Graph(15)), LimitExceeded);
}

TEST(Perfect, AgreesWithCliqueColouringOracle) {
  RngStream rng(77);
  for (int i = 0; i < 300; ++i) {
    const Graph g = gnp(3 + rng.below(5), 0.5, rng);  // 3..7
    ASSERT_EQ(is_perfect(g).member, oracle::perfect(g)) << "iteration " << i;
  }
}

TEST(Perfect, WitnessesAreOddHolesOrAntiholes) {
  RngStream rng(78);
  for (int i = 0; i < 300; ++i) {
    const Graph g = gnp(9, 0.5, rng);
    const auto r = is_perfect(g);
    if (r.member) continue;
    const auto& w = *r.witness;
    EXPECT_TRUE(w.size() % 2 == 1 && w.size() >= 5);
    EXPECT_TRUE(oracle::is_induced_cycle(g, w) || oracle::is_induced_cycle(complement(g), w));
  }
}

TEST(ContainmentChain, CographComparabilityPerfect) {
  RngStream rng(5);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + rng.below(8);
    const Graph g = i % 2 ? random_cograph(n, rng) : gnp(n, rng.uniform(), rng);
    const bool co = is_cograph(g).member;
    const bool cmp = is_comparability(g).member;
    const bool perf = is_perfect(g).member;
    ASSERT_TRUE(!co || cmp) << "iteration " << i;
    ASSERT_TRUE(!cmp || perf) << "iteration " << i;
  }
}

TEST(Poset, Examples) {
  EXPECT_TRUE(is_poset(digraph(3, {{0, 1}, {1, 2}, {0, 2}})).member);
  const auto cyc = is_poset(digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  ASSERT_FALSE(cyc.member);
  EXPECT_TRUE(verify_poset_witness(digraph(3, {{0, 1}, {1, 2}, {2, 0}}), *cyc.witness));
  const auto anti = is_poset(digraph(2, {{0, 1}, {1, 0}}));
  ASSERT_FALSE(anti.member);
  EXPECT_EQ(anti.witness->size(), 2u);
}

TEST(Poset, AgreesWithOracleOnRandomDigraphs) {
  RngStream rng(31);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && rng.bernoulli(0.3)) arcs.emplace_back(u, v);
    const Digraph d = Digraph::from_arcs(n, arcs);
    const auto r = is_poset(d);
    ASSERT_EQ(r.member, oracle::poset(d));
    if (!r.member) ASSERT_TRUE(verify_poset_witness(d, *r.witness));
  }
}

TEST(OrderTransitivity, Examples) {
  const PartLabeling l(4, {{"V1", {0, 1}}, {"V2", {2, 3}}});
  EXPECT_TRUE(check_order_transitivity(Graph(4), l).member);
  EXPECT_THROW(check_order_transitivity(Graph(5), l), InvalidArgument);

  // A full planted triangle in a single-triangle gadget violates the order.
  const PartLabeling fl(3, {{"X", {0}}, {"Y", {1}}, {"Z", {2}}});
  const GadgetBundle g = build_c5_gadget(Graph::complete(3), fl);
  const VertexSet s{12, 13, 14};  // u2, u3, u5
  const auto r = check_order_transitivity(induced_subgraph(g.undirected(), s), g.labeling.restrict_to(s));
  EXPECT_FALSE(r.member);
}

TEST(Witnesses, NonMembersAlwaysCarryVerifiableWitnesses) {
  RngStream rng(9);
  const Graph c4 = Graph::cycle(4);
  for (int i = 0; i < 500; ++i) {
    const Graph g = gnp(3 + rng.below(6), 0.5, rng);
    for (Property p : {Property::TriangleFree, Property::Cograph, Property::Comparability, Property::Perfect}) {
      const auto r = recognizer_for(p)(g);
      if (!r.member) ASSERT_TRUE(r.witness && verify_witness(p, g, *r.witness)) << to_string(p);
      else ASSERT_FALSE(r.witness.has_value());
    }
    const auto h = recognizer_for(Property::InducedHFree, c4)(g);
    if (!h.member) ASSERT_TRUE(verify_witness(Property::InducedHFree, g, *h.witness, &c4));
  }
  EXPECT_THROW(recognizer_for(Property::InducedHFree), InvalidArgument);
}

TEST(Property, NamesRoundTrip) {
  for (Property p : {Property::TriangleFree, Property::InducedHFree, Property::Cograph, Property::Comparability,
                     Property::Perfect, Property::Poset}) {
    EXPECT_EQ(parse_property(to_string(p)), p);
  }
  EXPECT_THROW(parse_property("planar"), InvalidArgument);
}
