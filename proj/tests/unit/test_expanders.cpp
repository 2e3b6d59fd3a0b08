#include <gtest/gtest.h>

#include <cmath>

#include "ecut/error.hpp"
#include "ecut/expanders.hpp"
#include "ecut/graph_io.hpp"
#include "ecut/graph_ops.hpp"
#include "ecut/spectral.hpp"
#include "oracles.hpp"

using namespace ecut;

namespace {

// Largest |nontrivial adjacency eigenvalue| of a connected d-regular graph.
double oracle_lambda(const LeveledGraph& g, int d) {
  auto ev = oracle::walk_eigenvalues(g);
  ev.pop_back();
  return d * std::max(std::abs(ev.front()), std::abs(ev.back()));
}

}  // namespace

TEST(RandomRegular, SimpleRegularDeterministic) {
  for (auto [d, n] : {std::pair{3, 10}, {3, 64}, {4, 50}, {5, 20}}) {
    auto g = random_regular_graph(d, n, 7);
    EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(n));
    EXPECT_TRUE(is_regular(g, d));
    EXPECT_EQ(serialize_graph(g), serialize_graph(random_regular_graph(d, n, 7)));
  }
  EXPECT_NE(random_regular_graph(3, 64, 1).edges(), random_regular_graph(3, 64, 2).edges());
}

TEST(MakeExpander, CubicOnEight) {
  auto x = make_expander({3, 8, 0.05, 1});
  EXPECT_TRUE(is_regular(x.graph, 3));
  EXPECT_TRUE(is_connected(x.graph));
  EXPECT_GE(x.gap, 0.05);
  EXPECT_NEAR(x.lambda, oracle_lambda(x.graph, 3), 1e-9);
  EXPECT_NEAR(x.gap, 1 - x.lambda / 3, 1e-12);
}

TEST(MakeExpander, Deterministic) {
  ExpanderSpec spec{3, 200, 0.05, 9};
  EXPECT_EQ(serialize_graph(make_expander(spec).graph), serialize_graph(make_expander(spec).graph));
}

TEST(MakeExpander, OddProductRejected) { EXPECT_THROW(make_expander({3, 5, 0.05, 1}), Error); }

TEST(MakeExpander, CompleteGraphOnFive) {
  auto x = make_expander({4, 5, 0.05, 1});
  EXPECT_EQ(x.graph.edge_count(), 10u);
  EXPECT_NEAR(x.lambda, 1, 1e-9);
  EXPECT_NEAR(x.gap, 0.75, 1e-9);
}

TEST(MakeExpander, TooSmallRejected) { EXPECT_THROW(make_expander({4, 4, 0.05, 1}), Error); }

TEST(MakeExpander, UnreachableGapReported) {
  try {
    make_expander({3, 100, 0.9, 1, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "no expander found for spec");
  }
}

TEST(CertifyGap, KnownSpectra) {
  EXPECT_NEAR(certify_gap(oracle::cycle(4), 2), 0, 1e-12);
  EXPECT_NEAR(certify_gap(oracle::complete(4), 3), 2.0 / 3, 1e-12);
  EXPECT_NEAR(certify_gap(oracle::petersen(), 3), 1.0 / 3, 1e-12);
}

TEST(CertifyGap, RejectsIrregularAndDisconnected) {
  EXPECT_THROW(certify_gap(oracle::path(4), 2), Error);
  auto two = oracle::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_THROW(certify_gap(two, 2), Error);
}

TEST(CertifyGap, IterativeMatchesDense) {
  for (auto [d, n] : {std::pair{3, 120}, {3, 1000}, {4, 400}, {4, 2000}}) {
    auto g = random_regular_graph(d, n, 5);
    if (!is_connected(g)) continue;
    EigenOptions it;
    it.force_iterative = true;
    EXPECT_NEAR(nontrivial_lambda(g, d), nontrivial_lambda(g, d, it), 1e-6) << n;
  }
}

TEST(CertifyGap, DenseMatchesJacobiOracle) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto g = random_regular_graph(3, 40, seed);
    if (!is_connected(g)) continue;
    EXPECT_NEAR(nontrivial_lambda(g, 3), oracle_lambda(g, 3), 1e-9);
  }
}

TEST(CertifiedExpander, CheegerSandwichSmall) {
  for (std::size_t n : {4, 6, 8, 10, 12, 14, 16}) {
    auto x = make_expander({3, n, 0.01, 3});
    const double ch = oracle::cheeger(x.graph);
    EXPECT_LE((3 - x.lambda) / 2, ch + 1e-12) << n;
    EXPECT_LE(ch, std::sqrt(2 * 3 * (3 - x.lambda)) + 1e-12) << n;
  }
}
