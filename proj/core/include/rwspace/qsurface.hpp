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

#ifndef RWSPACE_QSURFACE_HPP_
#define RWSPACE_QSURFACE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "rwspace/minkowski.hpp"
#include "rwspace/profile.hpp"

namespace rwspace {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Time coordinate outside the profile interval J.
class OutsideProfileDomain : public GeometryError {
 public:
  OutsideProfileDomain(double t, const Interval& j);
  double t() const { return t_; }

 private:
  double t_;
};

// Point not on Q(r) within the surface tolerance.
class OffSurfaceError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NotTangentError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Q(r) = {(t, x) : t in J, |x| = r(t)} in L^{n+2}, a Lorentzian rotation
// hypersurface about the time axis.
struct RotationHypersurface {
  int n = 1;
  ProfileFunction profile;
  // Relative tolerance for on-surface preconditions.
  double surface_tol = 1e-8;

  std::size_t ambient_dim() const { return static_cast<std::size_t>(n) + 2; }
  // Profile jet at t; throws OutsideProfileDomain unless t lies in J.
  Jet jet(double t) const;
};

// Throws OutsideProfileDomain when the time coordinate is outside J and
// std::invalid_argument on a dimension mismatch.
bool contains(const RotationHypersurface& q, const AmbientVector& p, double tol);

// -r r' a + <v_x, x> = 0 within tol * |v| * |p|.
bool is_tangent(const RotationHypersurface& q, const AmbientVector& p, const AmbientVector& v,
                double tol);

// N = (r r', x) / (r sqrt(1 - r'^2)); unit spacelike.
AmbientVector unit_normal(const RotationHypersurface& q, const AmbientVector& p);

// T = (1, (r'/r) x) / sqrt(1 - r'^2); unit timelike, future pointing.
AmbientVector unit_timelike_T(const RotationHypersurface& q, const AmbientVector& p);

struct ConformalField {
  AmbientVector k;
  // Conformal factor r' / sqrt(1 - r'^2).
  double rho = 0.0;
};

// K = (r, r' x) / sqrt(1 - r'^2) = r T.
ConformalField conformal_K(const RotationHypersurface& q, const AmbientVector& p);

struct WeingartenCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
};

// alpha = -1 / (r sqrt(1-r'^2)), beta = (r'' r + r'^2 - 1) / (r (1-r'^2)^{3/2}).
WeingartenCoefficients alpha_beta(const RotationHypersurface& q, double t);

// A(v) = alpha v + beta <T, v> T for v tangent at p. Throws NotTangentError.
AmbientVector weingarten(const RotationHypersurface& q, const AmbientVector& p,
                         const AmbientVector& v);

// H = trace(A) / (n + 1) = alpha - beta / (n + 1).
double mean_curvature_H(const RotationHypersurface& q, double t);

// Lorentz-orthonormal basis of T_p Q(r) with T first, then n spacelike
// vectors orthogonal to T.
std::vector<AmbientVector> tangent_frame(const RotationHypersurface& q, const AmbientVector& p);

// Point (t, r(t) x / |x|). Throws on a zero spatial part or t outside J.
AmbientVector project_to_surface(const RotationHypersurface& q, const AmbientVector& p);

// Point (t, r(t), 0, ..., 0) of the profile curve.
AmbientVector profile_point(const RotationHypersurface& q, double t);

// 1e-8 for closed-form profiles, 1e-5 for tabulated ones.
double default_classification_tol(const RotationHypersurface& q);

struct SurfaceClassification {
  struct Umbilical {
    bool holds = false;
    // r^2 = t^2 + a t + b with a = 2 r(0) r'(0), b = r(0)^2.
    double a = 0.0;
    double b = 0.0;
    double max_abs_beta = 0.0;
    std::vector<double> beta;
  };
  struct ConstantMeanCurvature {
    bool holds = false;
    // Mean of r^n (r'' r + r'^2 - 1) / (1 - r'^2)^{3/2} over the grid.
    double c = 0.0;
    double stdev = 0.0;
    double mean_h = 0.0;
    // max |alpha - c / ((n+1) r^{n+1}) - H| over the grid.
    double relation_residual = 0.0;
    std::vector<double> invariant;
  };
  struct ProportionalCurvatures {
    bool holds = false;
    double lambda = 0.0;
    double max_residual = 0.0;
    // r r'' - lambda (1 - r'^2) per grid point.
    std::vector<double> residual;
  };

  std::vector<double> grid;
  double tol = 0.0;
  Umbilical umbilical;
  ConstantMeanCurvature cmc;
  ProportionalCurvatures ppc;
};

// Classifies Q(r) on `grid`. All three tests are reported independently;
// tol <= 0 selects default_classification_tol().
SurfaceClassification classify(const RotationHypersurface& q, const std::vector<double>& grid,
                               double tol = 0.0);

// 4 / (4b - a^2) for an umbilical classification; throws GeometryError
// otherwise.
double sectional_curvature_umbilical(const SurfaceClassification& c);

struct FirstIntegralReport {
  bool applicable = false;  // Q(r) classified CMC
  double mean = 0.0;
  double max_deviation = 0.0;
  // r / sqrt(1 - r'^2) + r^2 H per grid point.
  std::vector<double> quantity;
};

// n = 1 only; throws GeometryError otherwise.
FirstIntegralReport cmc_first_integral_n1(const RotationHypersurface& q,
                                          const std::vector<double>& grid, double tol = 0.0);

struct SliceClassification {
  // The slice t = t0 is umbilical in Q(r): the covariant derivative of T
  // along the slice is `umbilical_factor` times the identity, with
  // umbilical_factor = r' / (r sqrt(1 - r'^2)), constant on the slice.
  double umbilical_factor = 0.0;
  bool totally_geodesic = false;
};

SliceClassification slice_classification(const RotationHypersurface& q, double t0,
                                         double tol = 1e-12);

struct NccReport {
  // Matched points t = h(s).
  std::vector<double> s;
  std::vector<double> t;
  // f^2 (log f)'' - 1 = f f'' - f'^2 - 1; NCC holds where <= tol.
  std::vector<double> warp_form;
  // r'' r + r'^2 - 1; NCC holds where <= tol.
  std::vector<double> profile_form;
  bool warp_holds = false;
  bool profile_holds = false;
  // Signs (with tolerance) of both forms agree at every matched point.
  bool signs_agree = false;
  // max |profile_form - warp_form / (1 + f'^2)^2|.
  double max_identity_error = 0.0;
  // Maximal runs of violating matched points, as closed s-intervals.
  std::vector<Interval> warp_violations;
  std::vector<Interval> profile_violations;
};

// Null convergence check from a warping function. Both forms are evaluated
// at up to `grid_size` matched points of the f -> r conversion.
NccReport ncc_check(const WarpingFunction& w, int grid_size, double tol = 1e-9,
                    const QuadratureConfig& cfg = {});

// Same check from a profile; the warp form is recovered from r through the
// inverse derivative relations at s = h~(t).
NccReport ncc_check(const RotationHypersurface& q, int grid_size, double tol = 1e-9,
                    const QuadratureConfig& cfg = {});

}  // namespace rwspace

#endif  // RWSPACE_QSURFACE_HPP_
