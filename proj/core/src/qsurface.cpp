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

#include "rwspace/qsurface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <numeric>

namespace rwspace {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void check_dim(const RotationHypersurface& q, const AmbientVector& v) {
  if (v.dim() != q.ambient_dim()) {
    throw std::invalid_argument("vector of dimension " + std::to_string(v.dim()) +
                                " for a hypersurface of L^" + std::to_string(q.ambient_dim()));
  }
}

// Validates that p lies on Q(r) and returns the profile jet at its time.
Jet on_surface_jet(const RotationHypersurface& q, const AmbientVector& p) {
  check_dim(q, p);
  const Jet j = q.jet(p.time());
  const double rho = spatial_radius(p);
  const double scale = std::max(1.0, j.value * j.value);
  if (std::abs(rho * rho - j.value * j.value) > q.surface_tol * scale) {
    throw OffSurfaceError("point with |x| = " + fmt(rho) + " is off Q(r), r(" + fmt(p.time()) +
                          ") = " + fmt(j.value));
  }
  return j;
}

int sign_with_tol(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

std::vector<Interval> violation_runs(const std::vector<double>& s,
                                     const std::vector<bool>& flagged) {
  std::vector<Interval> runs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!flagged[i]) continue;
    std::size_t j = i;
    while (j + 1 < s.size() && flagged[j + 1]) ++j;
    runs.push_back({s[i], s[j]});
    i = j;
  }
  return runs;
}

std::vector<std::size_t> subsample(std::size_t available, int wanted) {
  std::vector<std::size_t> idx;
  const std::size_t m = std::min<std::size_t>(available, static_cast<std::size_t>(wanted));
  if (m < 2) {
    for (std::size_t i = 0; i < available; ++i) idx.push_back(i);
    return idx;
  }
  for (std::size_t i = 0; i < m; ++i) idx.push_back(i * (available - 1) / (m - 1));
  return idx;
}

void finish_ncc(NccReport& report, double tol) {
  std::vector<bool> warp_bad(report.s.size()), profile_bad(report.s.size());
  report.warp_holds = true;
  report.profile_holds = true;
  report.signs_agree = true;
  for (std::size_t i = 0; i < report.s.size(); ++i) {
    warp_bad[i] = report.warp_form[i] > tol;
    profile_bad[i] = report.profile_form[i] > tol;
    report.warp_holds = report.warp_holds && !warp_bad[i];
    report.profile_holds = report.profile_holds && !profile_bad[i];
    if (sign_with_tol(report.warp_form[i], tol) != sign_with_tol(report.profile_form[i], tol)) {
      report.signs_agree = false;
    }
  }
  report.warp_violations = violation_runs(report.s, warp_bad);
  report.profile_violations = violation_runs(report.s, profile_bad);
}

}  // namespace

OutsideProfileDomain::OutsideProfileDomain(double t, const Interval& j)
    : GeometryError("time coordinate " + fmt(t) + " outside profile interval (" + fmt(j.lo) +
                    ", " + fmt(j.hi) + ")"),
      t_(t) {}

Jet RotationHypersurface::jet(double t) const {
  if (!profile.interval.contains(t)) throw OutsideProfileDomain(t, profile.interval);
  return profile.r.jet(t);
}

bool contains(const RotationHypersurface& q, const AmbientVector& p, double tol) {
  check_dim(q, p);
  const double r = q.jet(p.time()).value;
  const double rho = spatial_radius(p);
  return std::abs(rho * rho - r * r) <= tol;
}

bool is_tangent(const RotationHypersurface& q, const AmbientVector& p, const AmbientVector& v,
                double tol) {
  const Jet j = on_surface_jet(q, p);
  check_dim(q, v);
  double s = -j.value * j.d1 * v[0];
  for (std::size_t i = 1; i < v.dim(); ++i) s += v[i] * p[i];
  return std::abs(s) <= tol * euclidean_norm(v) * euclidean_norm(p);
}

AmbientVector unit_normal(const RotationHypersurface& q, const AmbientVector& p) {
  const Jet j = on_surface_jet(q, p);
  AmbientVector nrm = p;
  nrm[0] = j.value * j.d1;
  return nrm / (j.value * std::sqrt(1.0 - j.d1 * j.d1));
}

AmbientVector unit_timelike_T(const RotationHypersurface& q, const AmbientVector& p) {
  const Jet j = on_surface_jet(q, p);
  AmbientVector t = p * (j.d1 / j.value);
  t[0] = 1.0;
  return t / std::sqrt(1.0 - j.d1 * j.d1);
}

ConformalField conformal_K(const RotationHypersurface& q, const AmbientVector& p) {
  const Jet j = on_surface_jet(q, p);
  const double w = std::sqrt(1.0 - j.d1 * j.d1);
  AmbientVector k = p * j.d1;
  k[0] = j.value;
  return {k / w, j.d1 / w};
}

WeingartenCoefficients alpha_beta(const RotationHypersurface& q, double t) {
  const Jet j = q.jet(t);
  const double g = 1.0 - j.d1 * j.d1;
  const double sg = std::sqrt(g);
  return {-1.0 / (j.value * sg), (j.d2 * j.value + j.d1 * j.d1 - 1.0) / (j.value * g * sg)};
}

AmbientVector weingarten(const RotationHypersurface& q, const AmbientVector& p,
                         const AmbientVector& v) {
  if (!is_tangent(q, p, v, 1e-8)) throw NotTangentError("vector is not tangent to Q(r)");
  const auto [alpha, beta] = alpha_beta(q, p.time());
  const AmbientVector t = unit_timelike_T(q, p);
  return alpha * v + (beta * lorentz_inner(t, v)) * t;
}

double mean_curvature_H(const RotationHypersurface& q, double t) {
  const auto [alpha, beta] = alpha_beta(q, t);
  return alpha - beta / (q.n + 1);
}

std::vector<AmbientVector> tangent_frame(const RotationHypersurface& q, const AmbientVector& p) {
  const AmbientVector nrm = unit_normal(q, p);
  std::vector<AmbientVector> frame{unit_timelike_T(q, p)};
  const std::size_t dim = q.ambient_dim();
  for (std::size_t i = 0; i < dim && frame.size() < dim - 1; ++i) {
    AmbientVector v = AmbientVector::basis(dim, i);
    v.axpy(-lorentz_inner(v, nrm), nrm);
    v.axpy(lorentz_inner(v, frame[0]), frame[0]);
    for (std::size_t a = 1; a < frame.size(); ++a) v.axpy(-lorentz_inner(v, frame[a]), frame[a]);
    const double nn = lorentz_inner(v, v);
    if (nn > 1e-8) frame.push_back(v / std::sqrt(nn));
  }
  if (frame.size() != dim - 1) throw GeometryError("failed to build a tangent frame");
  return frame;
}

AmbientVector project_to_surface(const RotationHypersurface& q, const AmbientVector& p) {
  check_dim(q, p);
  const double r = q.jet(p.time()).value;
  const double rho = spatial_radius(p);
  if (!(rho > 0.0)) throw GeometryError("cannot project a point on the time axis");
  // Rescaling changes the last bits even on Q(r); points within roundoff of
  // the surface are returned as given so that projection is idempotent.
  if (std::abs(rho - r) <= 8.0 * std::numeric_limits<double>::epsilon() * r) return p;
  AmbientVector out = p * (r / rho);
  out[0] = p.time();
  return out;
}

AmbientVector profile_point(const RotationHypersurface& q, double t) {
  AmbientVector p(q.ambient_dim());
  p[0] = t;
  p[1] = q.jet(t).value;
  return p;
}

double default_classification_tol(const RotationHypersurface& q) {
  return q.profile.r.is_tabulated() ? 1e-5 : 1e-8;
}

SurfaceClassification classify(const RotationHypersurface& q, const std::vector<double>& grid,
                               double tol) {
  SurfaceClassification out;
  out.grid = grid;
  out.tol = tol > 0.0 ? tol : default_classification_tol(q);
  const std::size_t m = grid.size();
  if (m == 0) throw std::invalid_argument("classify: empty grid");

  std::vector<Jet> jets(m);
  for (std::size_t i = 0; i < m; ++i) jets[i] = q.jet(grid[i]);

  // Umbilicity: beta == 0.
  auto& um = out.umbilical;
  um.beta.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    um.beta[i] = alpha_beta(q, grid[i]).beta;
    um.max_abs_beta = std::max(um.max_abs_beta, std::abs(um.beta[i]));
  }
  const Jet at0 = q.jet(0.0);
  um.a = 2.0 * at0.value * at0.d1;
  um.b = at0.value * at0.value;
  um.holds = um.max_abs_beta <= out.tol && um.b > 0.0 && um.a * um.a < 4.0 * um.b;

  // CMC: r^n (r'' r + r'^2 - 1) / (1 - r'^2)^{3/2} constant.
  auto& cmc = out.cmc;
  cmc.invariant.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Jet& j = jets[i];
    const double g = 1.0 - j.d1 * j.d1;
    cmc.invariant[i] =
        std::pow(j.value, q.n) * (j.d2 * j.value + j.d1 * j.d1 - 1.0) / (g * std::sqrt(g));
  }
  cmc.c = std::accumulate(cmc.invariant.begin(), cmc.invariant.end(), 0.0) / m;
  double var = 0.0;
  for (double v : cmc.invariant) var += (v - cmc.c) * (v - cmc.c);
  cmc.stdev = std::sqrt(var / m);
  for (double t : grid) cmc.mean_h += mean_curvature_H(q, t);
  cmc.mean_h /= m;
  for (std::size_t i = 0; i < m; ++i) {
    const double alpha = alpha_beta(q, grid[i]).alpha;
    const double predicted = cmc.c / ((q.n + 1) * std::pow(jets[i].value, q.n + 1)) + cmc.mean_h;
    cmc.relation_residual = std::max(cmc.relation_residual, std::abs(alpha - predicted));
  }
  cmc.holds = cmc.stdev <= out.tol;

  // Proportional principal curvatures: r r'' = lambda (1 - r'^2).
  auto& ppc = out.ppc;
  double num = 0.0;
  double den = 0.0;
  for (const Jet& j : jets) {
    const double g = 1.0 - j.d1 * j.d1;
    num += j.value * j.d2 * g;
    den += g * g;
  }
  ppc.lambda = num / den;
  ppc.residual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Jet& j = jets[i];
    ppc.residual[i] = j.value * j.d2 - ppc.lambda * (1.0 - j.d1 * j.d1);
    ppc.max_residual = std::max(ppc.max_residual, std::abs(ppc.residual[i]));
  }
  ppc.holds = ppc.max_residual <= out.tol;
  return out;
}

double sectional_curvature_umbilical(const SurfaceClassification& c) {
  if (!c.umbilical.holds) throw GeometryError("Q(r) is not totally umbilical");
  return 4.0 / (4.0 * c.umbilical.b - c.umbilical.a * c.umbilical.a);
}

FirstIntegralReport cmc_first_integral_n1(const RotationHypersurface& q,
                                          const std::vector<double>& grid, double tol) {
  if (q.n != 1) throw GeometryError("the first integral is only available for n = 1");
  FirstIntegralReport out;
  out.applicable = classify(q, grid, tol).cmc.holds;
  out.quantity.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Jet j = q.jet(grid[i]);
    out.quantity[i] =
        j.value / std::sqrt(1.0 - j.d1 * j.d1) + j.value * j.value * mean_curvature_H(q, grid[i]);
  }
  out.mean = std::accumulate(out.quantity.begin(), out.quantity.end(), 0.0) /
             static_cast<double>(grid.size());
  for (double v : out.quantity) out.max_deviation = std::max(out.max_deviation, std::abs(v - out.mean));
  return out;
}

SliceClassification slice_classification(const RotationHypersurface& q, double t0, double tol) {
  const Jet j = q.jet(t0);
  return {j.d1 / (j.value * std::sqrt(1.0 - j.d1 * j.d1)), std::abs(j.d1) <= tol};
}

NccReport ncc_check(const WarpingFunction& w, int grid_size, double tol,
                    const QuadratureConfig& cfg) {
  const WarpToProfileResult conv = warp_to_profile(w, cfg);
  const TabulatedFunction& table = *conv.profile.r.table();
  NccReport out;
  for (std::size_t i : subsample(conv.h.size(), grid_size)) {
    const double s = conv.h.grid()[i];
    const Jet f = w.f.jet(s);
    const double r = table.values()[i];
    const double r1 = table.deriv1()[i];
    const double r2 = table.deriv2()[i];
    const double g = 1.0 + f.d1 * f.d1;
    const double warp_form = f.value * f.d2 - f.d1 * f.d1 - 1.0;
    out.s.push_back(s);
    out.t.push_back(table.grid()[i]);
    out.warp_form.push_back(warp_form);
    out.profile_form.push_back(r2 * r + r1 * r1 - 1.0);
    out.max_identity_error =
        std::max(out.max_identity_error, std::abs(out.profile_form.back() - warp_form / (g * g)));
  }
  finish_ncc(out, tol);
  return out;
}

NccReport ncc_check(const RotationHypersurface& q, int grid_size, double tol,
                    const QuadratureConfig& cfg) {
  const ProfileToWarpResult conv = profile_to_warp(q.profile, q.n, cfg);
  const TabulatedFunction& h_tilde = conv.h_tilde;
  NccReport out;
  for (std::size_t i : subsample(h_tilde.size(), grid_size)) {
    const double t = h_tilde.grid()[i];
    const Jet r = q.profile.jet(t);
    const double g = 1.0 - r.d1 * r.d1;
    const double f1 = r.d1 / std::sqrt(g);
    const double f2 = r.d2 / (g * g);
    const double warp_form = r.value * f2 - f1 * f1 - 1.0;
    const double gf = 1.0 + f1 * f1;
    out.s.push_back(h_tilde.values()[i]);
    out.t.push_back(t);
    out.warp_form.push_back(warp_form);
    out.profile_form.push_back(r.d2 * r.value + r.d1 * r.d1 - 1.0);
    out.max_identity_error = std::max(
        out.max_identity_error, std::abs(out.profile_form.back() - warp_form / (gf * gf)));
  }
  finish_ncc(out, tol);
  return out;
}

}  // namespace rwspace
