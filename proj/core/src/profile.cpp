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

#include "rwspace/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rwspace {

namespace {

struct Hermite {
  double h00, h10, h01, h11;
};

Hermite hermite_basis(double u) {
  const double u2 = u * u;
  const double u3 = u2 * u;
  return {2 * u3 - 3 * u2 + 1, u3 - 2 * u2 + u, -2 * u3 + 3 * u2, u3 - u2};
}

double hermite(double u, double h, double y0, double m0, double y1, double m1) {
  const Hermite b = hermite_basis(u);
  return b.h00 * y0 + b.h10 * h * m0 + b.h01 * y1 + b.h11 * h * m1;
}

// Fritsch-Carlson slopes for monotone cubic interpolation of (x, y).
std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  std::vector<double> m(n);
  m[0] = delta[0];
  m[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    m[i] = delta[i - 1] * delta[i] <= 0.0 ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      m[i] = 0.0;
      m[i + 1] = 0.0;
      continue;
    }
    const double a = m[i] / delta[i];
    const double b = m[i + 1] / delta[i];
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      m[i] = tau * a * delta[i];
      m[i + 1] = tau * b * delta[i];
    }
  }
  return m;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// Grid from lo to hi through 0, uniform on each side with spacing <= step.
std::vector<double> integration_grid(double lo, double hi, double step) {
  const double scale = std::max(std::abs(lo), std::abs(hi));
  if (!(step > 64.0 * std::numeric_limits<double>::epsilon() * scale)) {
    throw ProfileError("integrator step underflow (step " + fmt(step) + ")");
  }
  const auto left = static_cast<std::size_t>(std::ceil(-lo / step));
  const auto right = static_cast<std::size_t>(std::ceil(hi / step));
  std::vector<double> grid;
  grid.reserve(left + right + 1);
  for (std::size_t i = left; i >= 1; --i) grid.push_back(lo * static_cast<double>(i) / left);
  grid.push_back(0.0);
  for (std::size_t i = 1; i <= right; ++i) grid.push_back(hi * static_cast<double>(i) / right);
  return grid;
}

// Classical RK4 for y' = g(x). Returns y at every grid point, y(0) = 0.
template <typename G>
std::vector<double> integrate_from_zero(const std::vector<double>& grid, G&& g) {
  const auto zero = static_cast<std::size_t>(
      std::find(grid.begin(), grid.end(), 0.0) - grid.begin());
  std::vector<double> y(grid.size(), 0.0);
  auto step = [&](double x, double y0, double dx) {
    const double k1 = g(x, y0);
    const double k2 = g(x + 0.5 * dx, y0 + 0.5 * dx * k1);
    const double k3 = g(x + 0.5 * dx, y0 + 0.5 * dx * k2);
    const double k4 = g(x + dx, y0 + dx * k3);
    return y0 + dx / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };
  for (std::size_t i = zero + 1; i < grid.size(); ++i) {
    y[i] = step(grid[i - 1], y[i - 1], grid[i] - grid[i - 1]);
  }
  for (std::size_t i = zero; i-- > 0;) {
    y[i] = step(grid[i + 1], y[i + 1], grid[i] - grid[i + 1]);
  }
  return y;
}

void require_strictly_increasing(const std::vector<double>& v, const char* what) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) {
      throw ProfileError(std::string(what) + " is not strictly increasing at sample " +
                         std::to_string(i));
    }
  }
}

// Interval pulled in by `step` at finite ends and clipped at infinite ones.
Interval working_interval(const Interval& interval, double step, double truncation) {
  Interval w = interval.truncated(truncation);
  if (std::isfinite(interval.lo)) w.lo += step;
  if (std::isfinite(interval.hi)) w.hi -= step;
  if (!(w.lo < 0.0 && 0.0 < w.hi)) {
    throw ProfileError("interval too short for the integration step");
  }
  return w;
}

}  // namespace

bool Interval::finite() const { return std::isfinite(lo) && std::isfinite(hi); }

Interval Interval::truncated(double extent) const {
  return {std::isfinite(lo) ? lo : -extent, std::isfinite(hi) ? hi : extent};
}

TabulatedFunction::TabulatedFunction(std::vector<double> grid, std::vector<double> values,
                                     std::vector<double> deriv1, std::vector<double> deriv2)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      d1_(std::move(deriv1)),
      d2_(std::move(deriv2)) {
  const std::size_t n = grid_.size();
  if (n < 2 || values_.size() != n || d1_.size() != n || d2_.size() != n) {
    throw std::invalid_argument("tabulated function needs >= 2 samples of equal length");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(grid_[i] > grid_[i - 1])) {
      throw std::invalid_argument("tabulated grid is not strictly increasing at sample " +
                                  std::to_string(i));
    }
  }
  d2_slopes_ = monotone_slopes(grid_, d2_);
}

std::size_t TabulatedFunction::segment(double x) const {
  if (!(x >= grid_.front() && x <= grid_.back())) {
    throw std::out_of_range("tabulated function evaluated outside [" + fmt(grid_.front()) +
                            ", " + fmt(grid_.back()) + "] at " + fmt(x));
  }
  auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, grid_.size() - 2);
}

Jet TabulatedFunction::jet(double x) const {
  const std::size_t i = segment(x);
  const double h = grid_[i + 1] - grid_[i];
  const double u = (x - grid_[i]) / h;
  return {hermite(u, h, values_[i], d1_[i], values_[i + 1], d1_[i + 1]),
          hermite(u, h, d1_[i], d2_[i], d1_[i + 1], d2_[i + 1]),
          hermite(u, h, d2_[i], d2_slopes_[i], d2_[i + 1], d2_slopes_[i + 1])};
}

double TabulatedFunction::inverse(double y) const {
  if (!(y >= values_.front() && y <= values_.back())) {
    throw std::out_of_range("inverse requested outside the value range at " + fmt(y));
  }
  auto it = std::upper_bound(values_.begin(), values_.end(), y);
  std::size_t i = static_cast<std::size_t>(it - values_.begin());
  i = i == 0 ? 0 : std::min(i - 1, values_.size() - 2);
  const double dy = values_[i + 1] - values_[i];
  if (!(dy > 0.0) || !(d1_[i] > 0.0) || !(d1_[i + 1] > 0.0)) {
    throw std::domain_error("inverse requires a strictly increasing table");
  }
  const double u = (y - values_[i]) / dy;
  double x = hermite(u, dy, grid_[i], 1.0 / d1_[i], grid_[i + 1], 1.0 / d1_[i + 1]);
  x = std::clamp(x, grid_[i], grid_[i + 1]);
  // Newton on the value interpolant; converges in two or three steps from
  // the Hermite guess.
  for (int iter = 0; iter < 8; ++iter) {
    const Jet j = jet(x);
    const double step = (j.value - y) / j.d1;
    x = std::clamp(x - step, grid_.front(), grid_.back());
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

SmoothFunction::SmoothFunction(Expr expr) {
  Expr df = expr.derivative();
  Expr ddf = df.derivative();
  repr_ = ClosedForm{std::move(expr), std::move(df), std::move(ddf)};
}

SmoothFunction::SmoothFunction(TabulatedFunction table) : repr_(std::move(table)) {}

Jet SmoothFunction::jet(double x) const {
  if (const auto* cf = std::get_if<ClosedForm>(&repr_)) {
    return {cf->f.eval(x), cf->df.eval(x), cf->ddf.eval(x)};
  }
  return std::get<TabulatedFunction>(repr_).jet(x);
}

const Expr* SmoothFunction::expr() const {
  const auto* cf = std::get_if<ClosedForm>(&repr_);
  return cf ? &cf->f : nullptr;
}

const TabulatedFunction* SmoothFunction::table() const {
  return std::get_if<TabulatedFunction>(&repr_);
}

void WarpingFunction::validate() const {
  if (n < 1) throw ProfileError("fibre dimension n must be positive");
  if (!interval.contains(0.0)) {
    throw ProfileError("warping interval must contain 0, got (" + fmt(interval.lo) + ", " +
                       fmt(interval.hi) + ")");
  }
}

Jet ProfileFunction::jet(double t) const {
  if (!interval.closure_contains(t)) {
    throw ProfileError("t = " + fmt(t) + " outside profile interval (" + fmt(interval.lo) +
                       ", " + fmt(interval.hi) + ")");
  }
  return r.jet(t);
}

void ProfileFunction::validate() const {
  if (!interval.contains(0.0)) {
    throw ProfileError("profile interval must contain 0, got (" + fmt(interval.lo) + ", " +
                       fmt(interval.hi) + ")");
  }
}

double QuadratureConfig::resolve_step(const Interval& interval) const {
  if (step < 0.0) throw std::invalid_argument("quadrature step must be positive");
  if (step > 0.0) return step;
  return std::min(1e-4 * interval.truncated(truncation).length(), 1e-3);
}

WarpToProfileResult warp_to_profile(const WarpingFunction& w, const QuadratureConfig& cfg) {
  w.validate();
  const double step = cfg.resolve_step(w.interval);
  const Interval work = working_interval(w.interval, step, cfg.truncation);
  const std::vector<double> s = integration_grid(work.lo, work.hi, step);

  std::vector<Jet> f(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    f[i] = w.f.jet(s[i]);
    if (!(f[i].value > 0.0)) {
      throw ProfileError("non-positive warping function f(" + fmt(s[i]) + ") = " +
                         fmt(f[i].value));
    }
  }
  const std::vector<double> t = integrate_from_zero(s, [&](double x, double) {
    const double d = w.f.jet(x).d1;
    return std::sqrt(1.0 + d * d);
  });
  require_strictly_increasing(t, "h");

  const std::size_t m = s.size();
  std::vector<double> h1(m), h2(m), r(m), r1(m), r2(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double g = 1.0 + f[i].d1 * f[i].d1;
    const double sg = std::sqrt(g);
    h1[i] = sg;
    h2[i] = f[i].d1 * f[i].d2 / sg;
    r[i] = f[i].value;
    r1[i] = f[i].d1 / sg;
    r2[i] = f[i].d2 / (g * g);
  }
  WarpToProfileResult out;
  out.h = TabulatedFunction(s, t, std::move(h1), std::move(h2));
  out.profile.interval = {t.front(), t.back()};
  out.profile.r = SmoothFunction(TabulatedFunction(t, std::move(r), std::move(r1), std::move(r2)));
  return out;
}

ProfileToWarpResult profile_to_warp(const ProfileFunction& p, int n, const QuadratureConfig& cfg) {
  p.validate();
  const double step = cfg.resolve_step(p.interval);
  const Interval work = working_interval(p.interval, step, cfg.truncation);
  const std::vector<double> t = integration_grid(work.lo, work.hi, step);

  std::vector<Jet> r(t.size());
  std::vector<double> bad;
  for (std::size_t i = 0; i < t.size(); ++i) {
    r[i] = p.jet(t[i]);
    if (!(r[i].value > 0.0) || !(std::abs(r[i].d1) < 1.0)) bad.push_back(t[i]);
  }
  if (!bad.empty()) {
    const std::string message = "profile is not admissible at " + std::to_string(bad.size()) +
                                " grid points (first t = " + fmt(bad.front()) + ")";
    throw AdmissibilityError(message, std::move(bad));
  }
  const std::vector<double> s = integrate_from_zero(t, [&](double x, double) {
    const double d = p.jet(x).d1;
    return std::sqrt(std::max(0.0, 1.0 - d * d));
  });
  require_strictly_increasing(s, "h~");

  const std::size_t m = t.size();
  std::vector<double> ht1(m), ht2(m), f(m), f1(m), f2(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double g = 1.0 - r[i].d1 * r[i].d1;
    const double sg = std::sqrt(g);
    ht1[i] = sg;
    ht2[i] = -r[i].d1 * r[i].d2 / sg;
    f[i] = r[i].value;
    f1[i] = r[i].d1 / sg;
    f2[i] = r[i].d2 / (g * g);
  }
  ProfileToWarpResult out;
  out.h_tilde = TabulatedFunction(t, s, std::move(ht1), std::move(ht2));
  out.warp.n = n;
  out.warp.interval = {s.front(), s.back()};
  out.warp.f = SmoothFunction(TabulatedFunction(s, std::move(f), std::move(f1), std::move(f2)));
  return out;
}

std::vector<double> interior_grid(const Interval& interval, int size, double truncation) {
  if (size < 2) throw std::invalid_argument("grid size must be at least 2");
  const Interval w = interval.truncated(truncation);
  std::vector<double> grid(static_cast<std::size_t>(size));
  const double dt = w.length() / (size + 1);
  for (int i = 0; i < size; ++i) grid[static_cast<std::size_t>(i)] = w.lo + (i + 1) * dt;
  return grid;
}

AdmissibilityReport check_admissible(const ProfileFunction& p, int grid_size, double margin,
                                     double truncation) {
  AdmissibilityReport report;
  report.grid = interior_grid(p.interval, grid_size, truncation);
  report.min_r = std::numeric_limits<double>::infinity();
  for (double t : report.grid) {
    Jet j;
    try {
      j = p.r.jet(t);
    } catch (const DomainError&) {
      report.violations.push_back({t, std::nan(""), std::nan("")});
      continue;
    }
    report.min_r = std::min(report.min_r, j.value);
    report.max_abs_r1 = std::max(report.max_abs_r1, std::abs(j.d1));
    if (!(j.value > 0.0) || !(std::abs(j.d1) < 1.0 - margin)) {
      report.violations.push_back({t, j.value, j.d1});
    }
  }
  return report;
}

}  // namespace rwspace
