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
#include <string>
#include <vector>

#include "rwspace/qsurface.hpp"
#include "support/oracles.hpp"

namespace rwspace {
namespace {

RotationHypersurface surface(const char* r, Interval j, int n) {
  return {n, ProfileFunction{SmoothFunction(parse_expr(r, "t")), j}};
}

struct Corpus {
  const char* r;
  Interval j;
  int n;
};

const std::vector<Corpus>& corpus() {
  static const std::vector<Corpus> c = {
      {"sqrt(1+t^2)", {-5, 5}, 1},     {"1", {-3, 3}, 2},
      {"sqrt(t^2+t+2)", {-3, 3}, 2},   {"2 + 0.3*sin(t)", {-4, 4}, 1},
      {"1 + t^2/10", {-1, 1}, 3},      {"sqrt(9+t^2)", {-4, 4}, 1},
  };
  return c;
}

AmbientVector random_point(const RotationHypersurface& q, oracle::Rng& rng) {
  const double lo = std::max(q.profile.interval.lo, -4.0);
  const double hi = std::min(q.profile.interval.hi, 4.0);
  const double t = rng.uniform(0.9 * lo, 0.9 * hi);
  AmbientVector p(q.ambient_dim());
  double norm = 0.0;
  while (norm < 1e-3) {
    norm = 0.0;
    for (std::size_t i = 1; i < p.dim(); ++i) {
      p[i] = rng.normal();
      norm += p[i] * p[i];
    }
    norm = std::sqrt(norm);
  }
  const double r = q.profile.r.jet(t).value;
  for (std::size_t i = 1; i < p.dim(); ++i) p[i] *= r / norm;
  p[0] = t;
  return p;
}

AmbientVector random_tangent(const RotationHypersurface& q, const AmbientVector& p,
                             oracle::Rng& rng) {
  AmbientVector w(p.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) w[i] = rng.normal();
  const AmbientVector nrm = unit_normal(q, p);
  return w - lorentz_inner(w, nrm) * nrm;
}

void expect_vec_near(const AmbientVector& got, const AmbientVector& want, double tol) {
  ASSERT_EQ(got.dim(), want.dim());
  for (std::size_t i = 0; i < got.dim(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "component " << i;
}

TEST(Contains, Examples) {
  const auto cyl = surface("1", {-5, 5}, 2);
  EXPECT_TRUE(contains(cyl, {0.5, 1, 0, 0}, 1e-12));
  const auto ds = surface("sqrt(1+t^2)", {-5, 5}, 2);
  EXPECT_TRUE(contains(ds, {0, 1, 0, 0}, 1e-12));
  EXPECT_FALSE(contains(ds, {0, 2, 0, 0}, 1e-12));
  EXPECT_TRUE(contains(ds, {1, 1, 1, 0}, 1e-12));
  EXPECT_THROW(contains(ds, {7, 1, 1, 0}, 1e-12), OutsideProfileDomain);
  EXPECT_THROW(contains(ds, {0, 1, 0}, 1e-12), std::invalid_argument);
}

TEST(IsTangent, Examples) {
  const auto cyl = surface("1", {-5, 5}, 2);
  EXPECT_TRUE(is_tangent(cyl, {0, 1, 0, 0}, {1, 0, 0, 0}, 1e-12));
  EXPECT_FALSE(is_tangent(cyl, {0, 1, 0, 0}, {0, 1, 0, 0}, 1e-12));
  const auto ds = surface("sqrt(1+t^2)", {-5, 5}, 2);
  EXPECT_TRUE(is_tangent(ds, {1, 1, 1, 0}, {2, 1, 1, 0}, 1e-12));
  EXPECT_THROW(is_tangent(ds, {0, 2, 0, 0}, {1, 0, 0, 0}, 1e-12), OffSurfaceError);
}

TEST(Frames, ClosedFormExamples) {
  const auto cyl = surface("1", {-5, 5}, 2);
  const AmbientVector p{0.7, 0.6, 0.8, 0};
  expect_vec_near(unit_normal(cyl, p), {0, 0.6, 0.8, 0}, 1e-15);
  expect_vec_near(unit_timelike_T(cyl, p), {1, 0, 0, 0}, 1e-15);
  const auto k = conformal_K(cyl, p);
  expect_vec_near(k.k, {1, 0, 0, 0}, 1e-15);
  EXPECT_EQ(k.rho, 0.0);

  const auto ds = surface("sqrt(1+t^2)", {-5, 5}, 2);
  expect_vec_near(unit_normal(ds, {0, 1, 0, 0}), {0, 1, 0, 0}, 1e-15);
  expect_vec_near(unit_timelike_T(ds, {0, 1, 0, 0}), {1, 0, 0, 0}, 1e-15);
  // r(1) = sqrt2, r'(1) = 1/sqrt2: N = (r r', x) / (r sqrt(1 - r'^2)) = (1, sqrt2, 0, 0).
  expect_vec_near(unit_normal(ds, {1, oracle::kSqrt2, 0, 0}), {1, oracle::kSqrt2, 0, 0}, 1e-14);
  const auto k0 = conformal_K(ds, {0, 1, 0, 0});
  expect_vec_near(k0.k, {1, 0, 0, 0}, 1e-15);
  EXPECT_EQ(k0.rho, 0.0);
}

TEST(Frames, IdentitiesAtRandomPoints) {
  oracle::Rng rng(11);
  for (const auto& c : corpus()) {
    const auto q = surface(c.r, c.j, c.n);
    for (int i = 0; i < 200; ++i) {
      const AmbientVector p = random_point(q, rng);
      const AmbientVector nrm = unit_normal(q, p);
      const AmbientVector t = unit_timelike_T(q, p);
      EXPECT_NEAR(lorentz_inner(nrm, nrm), 1.0, 1e-10) << c.r;
      EXPECT_NEAR(lorentz_inner(t, t), -1.0, 1e-10) << c.r;
      EXPECT_NEAR(lorentz_inner(nrm, t), 0.0, 1e-10) << c.r;
      EXPECT_TRUE(is_tangent(q, p, t, 1e-10)) << c.r;
      EXPECT_FALSE(is_tangent(q, p, nrm, 1e-10)) << c.r;
      EXPECT_GT(t[0], 0.0);
      const auto k = conformal_K(q, p);
      const double r = q.jet(p[0]).value;
      EXPECT_NEAR(lorentz_inner(k.k, k.k), -r * r, 1e-10 * r * r);
      expect_vec_near(k.k, r * t, 1e-12 * r);

      const auto frame = tangent_frame(q, p);
      ASSERT_EQ(frame.size(), static_cast<std::size_t>(c.n) + 1);
      for (std::size_t a = 0; a < frame.size(); ++a) {
        for (std::size_t b = 0; b < frame.size(); ++b) {
          const double want = a == b ? (a == 0 ? -1.0 : 1.0) : 0.0;
          EXPECT_NEAR(lorentz_inner(frame[a], frame[b]), want, 1e-10);
        }
      }
    }
  }
}

TEST(AlphaBeta, Examples) {
  const auto cyl = surface("1", {-5, 5}, 3);
  for (double t : {-2.0, 0.0, 1.5}) {
    const auto ab = alpha_beta(cyl, t);
    EXPECT_EQ(ab.alpha, -1.0);
    EXPECT_EQ(ab.beta, -1.0);
    EXPECT_NEAR(mean_curvature_H(cyl, t), -0.75, 1e-12);
  }
  EXPECT_NEAR(mean_curvature_H(surface("1", {-5, 5}, 1), 0.3), -0.5, 1e-12);
  const auto ds = surface("sqrt(1+t^2)", {-5, 5}, 2);
  const auto um = surface("sqrt(t^2+t+2)", {-5, 5}, 2);
  for (double t : {-4.0, -1.0, 0.0, 0.5, 3.0}) {
    EXPECT_NEAR(alpha_beta(ds, t).alpha, -1.0, 1e-13);
    EXPECT_NEAR(alpha_beta(ds, t).beta, 0.0, 1e-13);
    EXPECT_NEAR(mean_curvature_H(ds, t), -1.0, 1e-13);
    EXPECT_NEAR(alpha_beta(um, t).beta, 0.0, 1e-13);
  }
  EXPECT_THROW(alpha_beta(ds, 5.0), OutsideProfileDomain);
}

TEST(Weingarten, CylinderExamples) {
  const auto cyl = surface("1", {-5, 5}, 2);
  const AmbientVector p{0.2, 1, 0, 0};
  const AmbientVector v{0, 0, 1, 0.5};
  expect_vec_near(weingarten(cyl, p, v), -1.0 * v, 1e-15);
  expect_vec_near(weingarten(cyl, p, {1, 0, 0, 0}), {0, 0, 0, 0}, 1e-15);
  EXPECT_THROW(weingarten(cyl, p, {0, 1, 0, 0}), NotTangentError);
}

TEST(Weingarten, MatchesFiniteDifferenceOfNormal) {
  oracle::Rng rng(23);
  const double eps = 1e-5;
  for (const auto& c : corpus()) {
    const auto q = surface(c.r, c.j, c.n);
    for (int i = 0; i < 50; ++i) {
      const AmbientVector p = random_point(q, rng);
      for (int d = 0; d < 5; ++d) {
        const AmbientVector v = random_tangent(q, p, rng);
        const AmbientVector plus = unit_normal(q, project_to_surface(q, p + eps * v));
        const AmbientVector minus = unit_normal(q, project_to_surface(q, p - eps * v));
        const AmbientVector fd = -1.0 * (plus - minus) / (2 * eps);
        const AmbientVector a = weingarten(q, p, v);
        const double scale = std::max(euclidean_norm(a), 1e-3 * euclidean_norm(v));
        EXPECT_LE(euclidean_norm(a - fd) / scale, 1e-6) << c.r;
        // Self-adjointness and tangency.
        const AmbientVector u = random_tangent(q, p, rng);
        EXPECT_NEAR(lorentz_inner(weingarten(q, p, u), v), lorentz_inner(u, a),
                    1e-10 * euclidean_norm(u) * euclidean_norm(v) * std::max(1.0, euclidean_norm(a)));
        EXPECT_TRUE(is_tangent(q, p, a, 1e-9));
      }
    }
  }
}

TEST(ConformalField, FiniteDifferenceConformality) {
  oracle::Rng rng(5);
  const double eps = 1e-5;
  for (const auto& c : corpus()) {
    const auto q = surface(c.r, c.j, c.n);
    for (int i = 0; i < 30; ++i) {
      const AmbientVector p = random_point(q, rng);
      const AmbientVector v = random_tangent(q, p, rng);
      const AmbientVector dk = (conformal_K(q, project_to_surface(q, p + eps * v)).k -
                                conformal_K(q, project_to_surface(q, p - eps * v)).k) /
                               (2 * eps);
      AmbientVector rest = dk - conformal_K(q, p).rho * v;
      const AmbientVector nrm = unit_normal(q, p);
      rest -= lorentz_inner(rest, nrm) * nrm;
      EXPECT_LE(euclidean_norm(rest), 1e-6 * std::max(1.0, euclidean_norm(v))) << c.r;
    }
  }
}

TEST(Weingarten, EigenstructureAndTrace) {
  oracle::Rng rng(99);
  for (const auto& c : corpus()) {
    const auto q = surface(c.r, c.j, c.n);
    for (int i = 0; i < 40; ++i) {
      const AmbientVector p = random_point(q, rng);
      const auto ab = alpha_beta(q, p[0]);
      const auto frame = tangent_frame(q, p);
      double trace = 0.0;
      for (std::size_t a = 0; a < frame.size(); ++a) {
        const AmbientVector img = weingarten(q, p, frame[a]);
        const double sign = a == 0 ? -1.0 : 1.0;
        trace += sign * lorentz_inner(img, frame[a]);
        const double eig = a == 0 ? ab.alpha - ab.beta : ab.alpha;
        expect_vec_near(img, eig * frame[a], 1e-10 * std::max(1.0, euclidean_norm(img)));
      }
      EXPECT_NEAR(mean_curvature_H(q, p[0]), trace / (c.n + 1), 1e-10) << c.r;
    }
  }
}

TEST(Projection, Examples) {
  const auto cyl = surface("1", {-5, 5}, 2);
  expect_vec_near(project_to_surface(cyl, {0.3, 2, 0, 0}), {0.3, 1, 0, 0}, 1e-15);
  const AmbientVector on{0.3, 0.6, 0, 0.8};
  expect_vec_near(project_to_surface(cyl, on), on, 1e-15);
  const auto ds = surface("sqrt(1+t^2)", {-5, 5}, 2);
  expect_vec_near(project_to_surface(ds, {1, 1, 0, 0}), {1, oracle::kSqrt2, 0, 0}, 1e-15);
  EXPECT_THROW(project_to_surface(ds, {1, 0, 0, 0}), GeometryError);
  EXPECT_THROW(project_to_surface(ds, {9, 1, 0, 0}), OutsideProfileDomain);
}

TEST(Projection, Idempotent) {
  oracle::Rng rng(3);
  const auto q = surface("2 + 0.3*sin(t)", {-4, 4}, 2);
  for (int i = 0; i < 100; ++i) {
    const AmbientVector p{rng.uniform(-3, 3), rng.normal(), rng.normal(), rng.normal()};
    const AmbientVector once = project_to_surface(q, p);
    EXPECT_EQ(project_to_surface(q, once), once);
  }
}

TEST(Classify, UmbilicalDeSitterLike) {
  const auto q = surface("sqrt(t^2+t+2)", {-3, 3}, 1);
  const auto c = classify(q, interior_grid(q.profile.interval, 201));
  EXPECT_TRUE(c.umbilical.holds);
  EXPECT_NEAR(c.umbilical.a, 1.0, 1e-8);
  EXPECT_NEAR(c.umbilical.b, 2.0, 1e-8);
  EXPECT_TRUE(c.cmc.holds);
  EXPECT_NEAR(c.cmc.c, 0.0, 1e-12);
  EXPECT_TRUE(c.ppc.holds);
  EXPECT_NEAR(c.ppc.lambda, 1.0, 1e-10);
  EXPECT_LE(c.ppc.max_residual, 1e-10);
  EXPECT_NEAR(sectional_curvature_umbilical(c), 4.0 / 7.0, 1e-10);
  EXPECT_LE(c.cmc.relation_residual, 1e-10);
}

TEST(Classify, SectionalCurvatures) {
  const auto unit = surface("sqrt(1+t^2)", {-3, 3}, 2);
  EXPECT_NEAR(sectional_curvature_umbilical(classify(unit, interior_grid(unit.profile.interval, 51))),
              1.0, 1e-12);
  const auto big = surface("sqrt(9+t^2)", {-3, 3}, 2);
  EXPECT_NEAR(sectional_curvature_umbilical(classify(big, interior_grid(big.profile.interval, 51))),
              1.0 / 9.0, 1e-12);
}

TEST(Classify, ConstantProfileIsCmcOnly) {
  for (int n : {1, 2, 3}) {
    const auto q = surface("2", {-2, 2}, n);
    const auto c = classify(q, interior_grid(q.profile.interval, 51));
    EXPECT_FALSE(c.umbilical.holds);
    EXPECT_TRUE(c.cmc.holds);
    EXPECT_NEAR(c.cmc.c, -std::pow(2.0, n), 1e-12);
    EXPECT_THROW(sectional_curvature_umbilical(c), GeometryError);
  }
}

TEST(Classify, GenericProfileIsNothing) {
  const auto q = surface("1 + t^2/10", {-1, 1}, 1);
  const auto c = classify(q, interior_grid(q.profile.interval, 101));
  EXPECT_FALSE(c.umbilical.holds);
  EXPECT_FALSE(c.cmc.holds);
  EXPECT_FALSE(c.ppc.holds);
  EXPECT_GT(c.umbilical.max_abs_beta, c.tol);
  EXPECT_GT(c.cmc.stdev, c.tol);
  EXPECT_GT(c.ppc.max_residual, c.tol);
}

TEST(Classify, TabulatedToleranceDefault) {
  const auto tab = warp_to_profile({SmoothFunction(parse_expr("cosh(s)", "s")), {-2, 2}, 1});
  const RotationHypersurface q{1, tab.profile};
  EXPECT_EQ(default_classification_tol(q), 1e-5);
  const auto c = classify(q, interior_grid(q.profile.interval, 101));
  EXPECT_TRUE(c.umbilical.holds);
  EXPECT_NEAR(c.umbilical.a, 0.0, 1e-8);
  EXPECT_NEAR(c.umbilical.b, 1.0, 1e-8);
}

TEST(FirstIntegral, Examples) {
  const auto ds = surface("sqrt(1+t^2)", {-3, 3}, 1);
  const auto g = interior_grid(ds.profile.interval, 101);
  const auto a = cmc_first_integral_n1(ds, g);
  EXPECT_TRUE(a.applicable);
  EXPECT_NEAR(a.mean, 0.0, 1e-10);
  EXPECT_LE(a.max_deviation, 1e-10);

  const auto cyl = surface("1", {-3, 3}, 1);
  const auto b = cmc_first_integral_n1(cyl, g);
  EXPECT_TRUE(b.applicable);
  EXPECT_NEAR(b.mean, 0.5, 1e-14);

  const auto gen = surface("1 + t^2/10", {-1, 1}, 1);
  const auto c = cmc_first_integral_n1(gen, interior_grid(gen.profile.interval, 101));
  EXPECT_FALSE(c.applicable);
  EXPECT_GT(c.max_deviation, 1e-8);

  EXPECT_THROW(cmc_first_integral_n1(surface("1", {-1, 1}, 2), g), GeometryError);
}

TEST(SliceClassification, Examples) {
  const auto ds = surface("sqrt(1+t^2)", {-3, 3}, 2);
  EXPECT_TRUE(slice_classification(ds, 0.0).totally_geodesic);
  const auto one = slice_classification(ds, 1.0);
  EXPECT_FALSE(one.totally_geodesic);
  // r' / (r sqrt(1 - r'^2)) = (1/sqrt2) / (sqrt2 / sqrt2) = 1/sqrt2.
  EXPECT_NEAR(one.umbilical_factor, oracle::kInvSqrt2, 1e-14);
  EXPECT_TRUE(slice_classification(surface("1", {-3, 3}, 1), 2.2).totally_geodesic);
  EXPECT_THROW(slice_classification(ds, 3.0), OutsideProfileDomain);
}

TEST(Ncc, CoshIsEqualityCase) {
  const auto rep = ncc_check(WarpingFunction{SmoothFunction(parse_expr("cosh(s)", "s")), {-3, 3}, 1},
                             500);
  EXPECT_TRUE(rep.warp_holds);
  EXPECT_TRUE(rep.profile_holds);
  EXPECT_TRUE(rep.signs_agree);
  EXPECT_LE(rep.max_identity_error, 1e-9);
  for (double w : rep.warp_form) EXPECT_NEAR(w, 0.0, 1e-12);
}

TEST(Ncc, StaticEinsteinHolds) {
  const auto rep = ncc_check(WarpingFunction{SmoothFunction(parse_expr("1", "s")), {-3, 3}, 1}, 200);
  EXPECT_TRUE(rep.warp_holds && rep.profile_holds && rep.signs_agree);
  for (double w : rep.warp_form) EXPECT_EQ(w, -1.0);
}

TEST(Ncc, GaussianWarpFailsOnSameIntervals) {
  const auto rep = ncc_check(
      WarpingFunction{SmoothFunction(parse_expr("exp(s^2)", "s")), {-1.5, 1.5}, 1}, 400);
  EXPECT_FALSE(rep.warp_holds);
  EXPECT_FALSE(rep.profile_holds);
  EXPECT_TRUE(rep.signs_agree);
  ASSERT_EQ(rep.warp_violations.size(), rep.profile_violations.size());
  for (std::size_t i = 0; i < rep.warp_violations.size(); ++i) {
    EXPECT_EQ(rep.warp_violations[i].lo, rep.profile_violations[i].lo);
    EXPECT_EQ(rep.warp_violations[i].hi, rep.profile_violations[i].hi);
  }
}

TEST(Ncc, FromProfileMatchesFromWarp) {
  const auto q = surface("sqrt(1+t^2)", {-4, 4}, 1);
  const auto rep = ncc_check(q, 300);
  EXPECT_TRUE(rep.profile_holds);
  EXPECT_TRUE(rep.signs_agree);
  EXPECT_LE(rep.max_identity_error, 1e-12);
  const auto exp_rep = ncc_check(WarpingFunction{SmoothFunction(parse_expr("exp(s)", "s")), {-1, 1}, 1}, 200);
  EXPECT_TRUE(exp_rep.warp_holds);
  EXPECT_TRUE(exp_rep.profile_holds);
}

}  // namespace
}  // namespace rwspace
