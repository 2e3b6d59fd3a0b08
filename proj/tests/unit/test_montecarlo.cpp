#include <gtest/gtest.h>

#include <cmath>

#include "ecut/construction.hpp"
#include "ecut/error.hpp"
#include "ecut/montecarlo.hpp"
#include "ecut/rng.hpp"
#include "oracles.hpp"

using namespace ecut;

namespace {

ConstructionParams five(int h, int L, bool truncate) {
  ConstructionParams p;
  p.h = h;
  p.L = L;
  p.override_L = true;
  p.truncate_forest = truncate;
  return p;
}

// Path 0..L with vertex L tagged Leaf.
LeveledGraph path_with_leaf(int L) {
  GraphBuilder b;
  for (int i = 0; i <= L; ++i) b.add_vertex(i, i == L ? Role::Leaf : Role::TreeNode);
  for (int i = 0; i < L; ++i) b.add_edge(i, i + 1);
  return std::move(b).finish();
}

}  // namespace

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  CounterRng a(5, 1);
  CounterRng b(5, 1);
  CounterRng c(5, 2);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
}

TEST(Rng, BoundedIsUniform) {
  CounterRng r(1, 0);
  std::vector<int> count(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++count[r.below(7)];
  double chi2 = 0;
  for (int c : count) chi2 += (c - n / 7.0) * (c - n / 7.0) / (n / 7.0);
  EXPECT_LT(chi2, 22.5);  // 6 dof, p = 0.001
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0);
    EXPECT_LT(u, 1);
  }
}

TEST(Hitting, LeafStartIsZero) {
  auto g = path_with_leaf(3);
  EXPECT_EQ(sample_hitting_time(g, 3, 1), 0);
}

TEST(Hitting, ShortPathMatchesLinearSolve) {
  auto g = path_with_leaf(2);
  const auto stats = sample_hitting_times(g, 0, 20000, 3);
  // Reflecting at 0, absorbing at 2: expected 4.
  const double exact = exact_hitting_time(g, 0, 2);
  EXPECT_NEAR(exact, 4, 1e-12);
  EXPECT_NEAR(stats.mean, exact, 4 * stats.stddev / std::sqrt(20000.0));
}

TEST(Hitting, DeterministicAcrossThreads) {
  auto g = build_five_regular(five(1, 2, true));
  auto a = sample_hitting_times(g, 0, 500, 9, 1);
  auto b = sample_hitting_times(g, 0, 500, 9, 4);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(sample_hitting_time(g, 0, 9, 17), a.samples[17]);
}

TEST(Hitting, RequiresLeaves) {
  EXPECT_THROW(sample_hitting_time(oracle::petersen(), 0, 1), Error);
}

TEST(Hitting, StepCapEnforced) {
  auto g = path_with_leaf(50);
  EXPECT_THROW(sample_hitting_time(g, 0, 1, 0, 10), Error);
}

// Mean leaf hitting time from the root agrees with the lumped height chain,
// on full and truncated builds alike.
TEST(Hitting, FiveRegularMatchesLumpedChain) {
  for (auto [h, truncate] : {std::pair{1, false}, {1, true}, {2, true}}) {
    auto g = build_five_regular(five(h, 2, truncate));
    const auto stats = sample_hitting_times(g, 0, 20000, 21);
    const double exact = oracle::five_regular_root_hitting(h, 2);
    EXPECT_NEAR(stats.mean, exact, 4 * stats.stddev / std::sqrt(20000.0)) << h << truncate;
  }
}

TEST(Hitting, FiveRegularNearPrediction) {
  auto g = build_five_regular(five(3, 2, true));
  const auto stats = sample_hitting_times(g, 0, 10000, 5);
  EXPECT_NEAR(stats.mean / predicted_tau(0, 3, 2), 1, 0.15);
  EXPECT_FALSE(bimodality_check(stats).bimodal);
}

TEST(Hitting, ConcentrationImprovesWithHeight) {
  double prev = INFINITY;
  for (int h = 2; h <= 4; ++h) {
    auto g = build_five_regular(five(h, 2, true));
    const auto stats = sample_hitting_times(g, 0, 5000, 8);
    const double cv = stats.stddev / stats.mean;
    EXPECT_LE(cv, prev) << h;
    prev = cv;
  }
}

TEST(PredictedTau, Examples) {
  EXPECT_NEAR(predicted_tau(2, 7, 3), 5.0 / 3 * 7, 1e-12);
  EXPECT_NEAR(predicted_tau(std::nextafter(2.0, 3.0), 7, 3), 5.0 / 3 * 7, 1e-9);
  EXPECT_DOUBLE_EQ(predicted_tau(3, 4, 2), 0);
  EXPECT_NEAR(predicted_tau(0, 3, 1), 15, 1e-12);
  EXPECT_NEAR(predicted_tau(0, 4, 2), 100, 1e-12);
  EXPECT_THROW(predicted_tau(3.5, 1, 1), Error);
  EXPECT_THROW(predicted_tau(-0.1, 1, 1), Error);
}

TEST(PathOracle, UnitLength) {
  auto r = path_passage_oracle(1, 100, 1);
  EXPECT_DOUBLE_EQ(r.mean_time, 1);
  EXPECT_DOUBLE_EQ(r.mean_visits, 1);
}

TEST(PathOracle, AgreesWithTridiagonalSolve) {
  for (int L : {2, 5, 8}) {
    const auto [time, visits] = oracle::path_passage_exact(L);
    EXPECT_NEAR(time, L * L, 1e-9);
    EXPECT_NEAR(visits, L, 1e-9);
    auto r = path_passage_oracle(L, 40000, 2);
    EXPECT_NEAR(r.mean_time, time, 4 * r.time_stderr) << L;
    EXPECT_NEAR(r.mean_visits, visits, 4 * r.visits_stderr) << L;
  }
}

TEST(StretchedEdgeDelay, ClosedFormAndSimulation) {
  EXPECT_DOUBLE_EQ(stretched_edge_delay(1), 1);
  EXPECT_DOUBLE_EQ(stretched_edge_delay(2), 7);
  for (int L : {2, 4}) {
    auto r = stretched_edge_delay_mc(L, 100000, 4);
    EXPECT_NEAR(r.mean_time / stretched_edge_delay(L), 1, 0.03) << L;
  }
}

TEST(Summary, QuantilesMonotone) {
  std::vector<std::int64_t> s;
  for (int i = 1; i <= 1000; ++i) s.push_back((i * 37) % 101 + 1);
  auto st = summarize_samples(s);
  for (int i = 1; i < 5; ++i) EXPECT_LE(st.quantiles[i - 1], st.quantiles[i]);
  EXPECT_EQ(st.samples.size(), 1000u);
}

TEST(Bimodality, SyntheticTwoPointMixture) {
  std::vector<std::int64_t> s;
  for (int i = 0; i < 2000; ++i) s.push_back(i % 2 ? 200 : 100);
  auto r = bimodality_check(s);
  EXPECT_TRUE(r.bimodal);
  EXPECT_NEAR(r.mean_low, 100, 1e-6);
  EXPECT_NEAR(r.mean_high, 200, 1e-6);
  EXPECT_NEAR(r.weight_low, 0.5, 1e-6);
}

TEST(Bimodality, UnimodalNotFlagged) {
  CounterRng rng(3, 0);
  std::vector<std::int64_t> s;
  for (int i = 0; i < 5000; ++i) {
    std::int64_t x = 0;
    for (int k = 0; k < 12; ++k) x += static_cast<std::int64_t>(rng.below(21));
    s.push_back(x);
  }
  EXPECT_FALSE(bimodality_check(s).bimodal);
}

TEST(Bimodality, NeedsEnoughSamples) {
  std::vector<std::int64_t> s(999, 5);
  EXPECT_THROW(bimodality_check(s), Error);
}

TEST(CylinderOracle, BareEdgeAndExactAgreement) {
  auto edge = cylinder_gadget(1);
  EXPECT_DOUBLE_EQ(cylinder_passage_oracle(edge, 100, 1).mean_time, 1);
  for (int L : {5, 9}) {
    auto gadget = cylinder_gadget(L);
    auto r = cylinder_passage_oracle(gadget, 40000, 6);
    EXPECT_NEAR(r.mean_time, cylinder_layout(L).passage_time, 4 * r.time_stderr) << L;
  }
  auto r9 = cylinder_passage_oracle(cylinder_gadget(9), 100000, 7);
  EXPECT_NEAR(r9.mean_time / 81, 1, 0.05);
}
