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

#ifndef RWSPACE_FLOW_HPP_
#define RWSPACE_FLOW_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rwspace/immersion.hpp"

namespace rwspace {

struct FlowConfig {
  // Explicit Euler step; 0 selects 0.2 * (shortest edge length)^2.
  double step = 0.0;
  int max_iters = 20000;
  // Converged once sup |H~| <= tol.
  double tol = 1e-4;
  int reproject_every = 1;
  bool spacelike_guard = true;
  // Quality floors: min/max edge length ratio (k = 1), min angle in degrees
  // (k = 2).
  double min_edge_ratio = 0.1;
  double min_angle_deg = 10.0;
  MassLumping lumping = MassLumping::kMixedVoronoi;

  // Throws std::invalid_argument on non-positive step, tol or iteration
  // counts.
  void validate() const;
};

enum class FlowTermination {
  kConverged,
  kMaxIterations,
  kSpacelikeGuard,
  kDomainExit,
  kMeshQuality,
  kDegenerate,
};

const char* to_string(FlowTermination t);

struct FlowTrace {
  // Entry i describes the immersion before update i; the last entry is the
  // returned immersion.
  std::vector<double> sup_h_tilde;
  std::vector<double> residual;
  std::vector<double> min_gram_eig;
  std::vector<double> mean_time;
  FlowTermination termination = FlowTermination::kMaxIterations;
  std::string message;
  double step = 0.0;
  // Updates applied.
  int iterations = 0;
  // residual / sup |H~| at the final immersion.
  double residual_ratio = 0.0;
};

struct FlowResult {
  DiscreteImmersion immersion;
  FlowTrace trace;
};

// Projected explicit mean curvature flow Psi <- Psi + step * H~ followed by
// projection onto Q(r). Throws ImmersionError unless the input is closed,
// constrained and spacelike. Numerical failures during the run end it with
// the matching termination status; the last valid immersion is returned.
FlowResult stationarize(const DiscreteImmersion& im, const FlowConfig& cfg = {});

// Vertex placement along a closed or open parameter range. With grading
// eps in [0, 1) the parameters are s = u + eps * (L / 2 pi) sin(2 pi u / L)
// for uniform u in [0, L].
std::vector<double> graded_parameters(double length, int count, bool closed, double grading);

// Q(sqrt(R^2 + t^2)), the De Sitter space of radius R, and Q(R), the static
// Einstein space, both over the whole real line.
RotationHypersurface de_sitter_surface(int n, double radius = 1.0);
RotationHypersurface static_einstein_surface(int n, double radius = 1.0);

// Slice sphere {t0} x r(t0) S^k inside the first k+1 spatial axes: a loop
// of `resolution` vertices for k = 1, an icosphere with `resolution`
// subdivisions for k = 2.
DiscreteImmersion make_slice_sphere(const RotationHypersurface& q, double t0, int k, int resolution,
                                    double grading = 0.0);

// s -> (a s, cos(b s), sin(b s), 0, ...), b = sqrt(1 + a^2), in Q(1). For
// a = 0 a closed loop; otherwise a path over `turns` periods of the rotation.
DiscreteImmersion make_product_geodesic_Q1(double a, int turns, int m, int n = 1,
                                           double grading = 0.0);

// R (cos s p + sin s v) on Q(sqrt(R^2 + t^2)); p on the unit De Sitter
// space, v unit spacelike and orthogonal to p. Throws std::invalid_argument
// otherwise.
DiscreteImmersion make_desitter_geodesic(const AmbientVector& p, const AmbientVector& v, int m,
                                         double radius = 1.0, double grading = 0.0);

// Great circle of the slice t = 0 of the unit De Sitter space of dimension
// n + 1 (n >= 2) with x_3 = amplitude cos(mode s) before projection.
DiscreteImmersion make_perturbed_great_circle(int n, int m, double amplitude, int mode = 2);

// Adds uniform noise in [-amplitude, amplitude] to each spatial coordinate
// and projects back onto Q(r).
DiscreteImmersion perturb_randomly(const DiscreteImmersion& im, double amplitude,
                                   std::uint64_t seed);

struct RefinementStudy {
  std::vector<double> h;
  std::vector<double> residual_sup;
  // Least-squares slope of log(residual) against log(h).
  double order = 0.0;
  // Every residual is at roundoff level, so the order is meaningless.
  bool exact = false;
};

// Evaluates the Takahashi residual of family(level) for level = 0..levels-1
// with h the longest edge. Throws std::invalid_argument if levels < 3.
RefinementStudy refinement_study(const std::function<DiscreteImmersion(int)>& family, int levels,
                                 MassLumping lumping = MassLumping::kMixedVoronoi);

}  // namespace rwspace

#endif  // RWSPACE_FLOW_HPP_
