// Copyright 2026 The rwspace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rwspace/flow.hpp"
#include "support/oracles.hpp"

namespace rwspace {
namespace {

constexpr double kPi = std::numbers::pi;

double max_displacement(const DiscreteImmersion& a, const DiscreteImmersion& b) {
  double worst = 0.0;
  for (std::size_t v = 0; v < a.positions.size(); ++v) {
    worst = std::max(worst, euclidean_norm(a.positions[v] - b.positions[v]));
  }
  return worst;
}

TEST(GradedParameters, UniformAndGraded) {
  const auto u = graded_parameters(2 * kPi, 8, true, 0.0);
  ASSERT_EQ(u.size(), 8u);
  EXPECT_NEAR(u[4], kPi, 1e-15);
  const auto open = graded_parameters(1.0, 5, false, 0.0);
  EXPECT_DOUBLE_EQ(open.back(), 1.0);
  const auto g = graded_parameters(3.0, 40, false, 0.25);
  EXPECT_DOUBLE_EQ(g.front(), 0.0);
  EXPECT_NEAR(g.back(), 3.0, 1e-15);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
  EXPECT_THROW(graded_parameters(1.0, 5, true, 1.0), std::invalid_argument);
  EXPECT_THROW(graded_parameters(1.0, 1, true, 0.0), std::invalid_argument);
}

TEST(Families, SliceSpheres) {
  const auto gc = make_slice_sphere(de_sitter_surface(1), 0.0, 1, 128);
  EXPECT_EQ(gc.positions.size(), 128u);
  for (const auto& p : gc.positions) {
    EXPECT_EQ(p[0], 0.0);
    EXPECT_NEAR(spatial_radius(p), 1.0, 1e-15);
  }
  const auto s2 = make_slice_sphere(static_einstein_surface(2), 2.0, 2, 2);
  EXPECT_EQ(s2.k(), 2);
  EXPECT_TRUE(s2.domain.closed());
  for (const auto& p : s2.positions) {
    EXPECT_EQ(p[0], 2.0);
    EXPECT_NEAR(spatial_radius(p), 1.0, 1e-15);
  }
  EXPECT_NO_THROW(gc.validate());
  EXPECT_NO_THROW(s2.validate());
  EXPECT_NO_THROW(make_slice_sphere(de_sitter_surface(3), 0.7, 2, 1, 0.0).validate());
  EXPECT_THROW(make_slice_sphere(de_sitter_surface(1), 0.0, 2, 1), std::invalid_argument);
  EXPECT_THROW(make_slice_sphere(de_sitter_surface(3), 0.0, 3, 8), std::invalid_argument);
}

TEST(Families, ProductGeodesics) {
  const auto closed = make_product_geodesic_Q1(0.0, 1, 64);
  EXPECT_TRUE(closed.domain.closed());
  EXPECT_NO_THROW(closed.validate());
  for (double a : {0.75, 1.0}) {
    const auto im = make_product_geodesic_Q1(a, 1, 128);
    EXPECT_FALSE(im.domain.closed());
    EXPECT_NO_THROW(im.validate());
    const auto rep = takahashi_residual(im);
    EXPECT_FALSE(rep.evaluated.front());
    EXPECT_LE(rep.sup, 1e-11);
    const double b = std::sqrt(1 + a * a);
    // The last vertex closes one full rotation.
    EXPECT_NEAR(im.positions.back()[1], 1.0, 1e-12);
    EXPECT_NEAR(im.positions.back()[0], a * 2 * kPi / b, 1e-12);
  }
  EXPECT_THROW(make_product_geodesic_Q1(0.5, 1, 4), std::invalid_argument);
}

TEST(Families, DeSitterGeodesics) {
  const auto gc = make_desitter_geodesic({0, 1, 0, 0}, {0, 0, 1, 0}, 64);
  for (const auto& p : gc.positions) EXPECT_EQ(p[0], 0.0);
  const auto mixed = make_desitter_geodesic({0, 1, 0, 0}, {1, 0, std::sqrt(2.0), 0}, 64);
  EXPECT_NO_THROW(mixed.validate());
  double tmax = 0.0;
  for (const auto& p : mixed.positions) tmax = std::max(tmax, p[0]);
  EXPECT_NEAR(tmax, 1.0, 1e-12);
  EXPECT_LE(takahashi_residual(mixed).sup, 1e-11);

  const auto graded = make_desitter_geodesic({0, 1, 0, 0}, {1, 0, std::sqrt(2.0), 0}, 128, 1.0, 0.25);
  const auto rep = takahashi_residual(graded);
  EXPECT_GT(rep.sup, 1e-8);
  EXPECT_LE(rep.sup, 5.0 / (128 * 128));

  const auto scaled = make_desitter_geodesic({0, 1, 0, 0}, {1, 0, std::sqrt(2.0), 0}, 64, 2.0);
  EXPECT_NO_THROW(scaled.validate());
  for (double q : takahashi_residual(scaled).q) EXPECT_NEAR(q, 0.25, 1e-13);
  EXPECT_LE(takahashi_residual(scaled).sup, 1e-11);

  EXPECT_THROW(make_desitter_geodesic({0, 2, 0, 0}, {0, 0, 1, 0}, 64), std::invalid_argument);
  EXPECT_THROW(make_desitter_geodesic({0, 1, 0, 0}, {1, 0, 0, 0}, 64), std::invalid_argument);
  EXPECT_THROW(make_desitter_geodesic({0, 1, 0, 0}, {0, 1, 0, 0}, 64), std::invalid_argument);
}

TEST(Families, PerturbationsStayOnSurface) {
  const auto base = make_slice_sphere(de_sitter_surface(2), 0.0, 2, 2);
  const auto a = perturb_randomly(base, 0.05, 42);
  const auto b = perturb_randomly(base, 0.05, 42);
  const auto c = perturb_randomly(base, 0.05, 43);
  EXPECT_EQ(a.positions, b.positions);
  EXPECT_NE(a.positions, c.positions);
  EXPECT_NO_THROW(a.validate());
  const auto pc = make_perturbed_great_circle(2, 64, 0.1);
  EXPECT_NO_THROW(pc.validate());
  // Projection rescales (1, 0, 0.1) to unit length.
  EXPECT_NEAR(pc.positions[0][3], 0.1 / std::sqrt(1.01), 1e-15);
  EXPECT_THROW(make_perturbed_great_circle(1, 64, 0.1), std::invalid_argument);
}

TEST(RefinementStudy, RejectsTooFewLevels) {
  EXPECT_THROW(refinement_study([](int) { return make_product_geodesic_Q1(0, 1, 16); }, 2),
               std::invalid_argument);
}

TEST(RefinementStudy, DeSitterMixedGeodesicGradedOrder) {
  const auto st = refinement_study(
      [](int l) {
        return make_desitter_geodesic({0, 1, 0, 0}, {1, 0, std::sqrt(2.0), 0}, 64 << l, 1.0, 0.25);
      },
      3);
  EXPECT_FALSE(st.exact);
  EXPECT_NEAR(st.order, 2.0, 0.1);
  EXPECT_EQ(st.h.size(), 3u);
}

TEST(Stationarize, PreconditionsAndConfig) {
  FlowConfig bad;
  bad.tol = 0.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = FlowConfig{};
  bad.step = -1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = FlowConfig{};
  bad.reproject_every = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);

  EXPECT_THROW(stationarize(make_product_geodesic_Q1(0.75, 1, 64)), ImmersionError);
  auto free = make_slice_sphere(de_sitter_surface(1), 0.0, 1, 32);
  free.constraint.reset();
  EXPECT_THROW(stationarize(free), ConstraintError);
}

TEST(Stationarize, FixedPointTerminatesImmediately) {
  const auto gc = make_slice_sphere(de_sitter_surface(1), 0.0, 1, 128);
  const auto res = stationarize(gc);
  EXPECT_EQ(res.trace.termination, FlowTermination::kConverged);
  EXPECT_LE(res.trace.iterations, 1);
  EXPECT_EQ(res.trace.sup_h_tilde.size(), static_cast<std::size_t>(res.trace.iterations) + 1);
  EXPECT_STREQ(to_string(res.trace.termination), "converged");
}

TEST(Stationarize, FixedPointConsistencyOnGradedFamilies) {
  FlowConfig cfg;
  cfg.tol = 1e-14;
  cfg.max_iters = 1;
  for (const auto& im : {make_slice_sphere(de_sitter_surface(1), 0.0, 1, 128, 0.25),
                         make_desitter_geodesic({0, 1, 0, 0}, {1, 0, std::sqrt(2.0), 0}, 128, 1.0, 0.25)}) {
    const auto res = stationarize(im, cfg);
    ASSERT_EQ(res.trace.iterations, 1);
    EXPECT_LE(max_displacement(im, res.immersion), 10.0 * takahashi_residual(im).sup);
  }
}

TEST(Stationarize, PerturbedGreatCircleRelaxes) {
  FlowConfig cfg;
  cfg.max_iters = 400;
  const auto res = stationarize(make_perturbed_great_circle(2, 64, 0.1), cfg);
  EXPECT_EQ(res.trace.termination, FlowTermination::kMaxIterations);
  EXPECT_LT(res.trace.sup_h_tilde.back(), 0.5 * res.trace.sup_h_tilde.front());
  for (double g : res.trace.min_gram_eig) EXPECT_GT(g, 0.0);
  EXPECT_NO_THROW(res.immersion.validate());
  EXPECT_EQ(res.trace.residual.size(), res.trace.sup_h_tilde.size());
}

TEST(Stationarize, NonGeodesicSliceDriftsMonotonically) {
  FlowConfig cfg;
  cfg.max_iters = 300;
  const auto res = stationarize(make_slice_sphere(de_sitter_surface(1), 0.5, 1, 64), cfg);
  const auto& mt = res.trace.mean_time;
  ASSERT_GT(mt.size(), 10u);
  for (std::size_t i = 1; i < mt.size(); ++i) EXPECT_GT(mt[i], mt[i - 1]);
  EXPECT_GT(mt.back(), 0.5);
}

TEST(Stationarize, ExpandingNccRegionHasNoStationaryLimit) {
  // f = exp(s): f' > 0 and f^2 (log f)'' = 0 <= 1.
  const auto conv = warp_to_profile({SmoothFunction(parse_expr("exp(s)", "s")), {-1.5, 1.5}, 1});
  const RotationHypersurface q{1, conv.profile};
  FlowConfig cfg;
  cfg.max_iters = 2000;
  const auto res = stationarize(make_slice_sphere(q, 0.0, 1, 48), cfg);
  EXPECT_NE(res.trace.termination, FlowTermination::kConverged);
  const auto& mt = res.trace.mean_time;
  ASSERT_GT(mt.size(), 2u);
  const bool up = mt[1] > mt[0];
  for (std::size_t i = 1; i < mt.size(); ++i) EXPECT_EQ(mt[i] > mt[i - 1], up) << i;
}

TEST(Stationarize, GuardStopsOversizedSteps) {
  FlowConfig cfg;
  cfg.step = 5.0;
  cfg.max_iters = 50;
  const auto start = perturb_randomly(make_slice_sphere(de_sitter_surface(1), 0.0, 1, 64), 0.05, 3);
  const auto res = stationarize(start, cfg);
  EXPECT_NE(res.trace.termination, FlowTermination::kConverged);
  EXPECT_NE(res.trace.termination, FlowTermination::kMaxIterations);
  EXPECT_FALSE(res.trace.message.empty());
  EXPECT_NO_THROW(res.immersion.validate());
  for (double g : res.trace.min_gram_eig) EXPECT_GT(g, 0.0);
}

}  // namespace
}  // namespace rwspace
