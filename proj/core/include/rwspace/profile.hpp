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

#ifndef RWSPACE_PROFILE_HPP_
#define RWSPACE_PROFILE_HPP_

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rwspace/expr.hpp"

namespace rwspace {

// Open interval (lo, hi); either end may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  bool closure_contains(double x) const { return x >= lo && x <= hi; }
  bool finite() const;
  double length() const { return hi - lo; }
  // Clips infinite ends to [-extent, extent].
  Interval truncated(double extent) const;
};

// Value and first two derivatives at a point.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Samples with analytically known first and second derivatives.
//
// Values are interpolated by cubic Hermite on (value, d1), first derivatives
// by cubic Hermite on (d1, d2), and second derivatives by monotone
// (Fritsch-Carlson) cubic Hermite on d2.
class TabulatedFunction {
 public:
  TabulatedFunction() = default;
  // Throws std::invalid_argument unless sizes agree, there are at least two
  // samples and the grid is strictly increasing.
  TabulatedFunction(std::vector<double> grid, std::vector<double> values,
                    std::vector<double> deriv1, std::vector<double> deriv2);

  // Throws std::out_of_range outside [front(), back()].
  Jet jet(double x) const;
  double value(double x) const { return jet(x).value; }

  // Solves value(x) = y for tables with strictly increasing values and
  // positive first derivatives: Hermite interpolation of the swapped table
  // followed by Newton iteration.
  double inverse(double y) const;

  std::size_t size() const { return grid_.size(); }
  double front() const { return grid_.front(); }
  double back() const { return grid_.back(); }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& deriv1() const { return d1_; }
  const std::vector<double>& deriv2() const { return d2_; }

 private:
  std::size_t segment(double x) const;

  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> d1_;
  std::vector<double> d2_;
  std::vector<double> d2_slopes_;
};

// A smooth scalar function of one variable, closed-form or tabulated.
class SmoothFunction {
 public:
  SmoothFunction() = default;
  explicit SmoothFunction(Expr expr);
  explicit SmoothFunction(TabulatedFunction table);

  Jet jet(double x) const;

  bool is_tabulated() const { return std::holds_alternative<TabulatedFunction>(repr_); }
  // nullptr when tabulated.
  const Expr* expr() const;
  // nullptr when closed-form.
  const TabulatedFunction* table() const;

 private:
  struct ClosedForm {
    Expr f, df, ddf;
  };
  std::variant<ClosedForm, TabulatedFunction> repr_;
};

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when |r'| >= 1 or r <= 0 makes a profile unusable.
class AdmissibilityError : public ProfileError {
 public:
  AdmissibilityError(const std::string& message, std::vector<double> where)
      : ProfileError(message), where_(std::move(where)) {}
  const std::vector<double>& where() const { return where_; }

 private:
  std::vector<double> where_;
};

// Warping function f > 0 of the spacetime I x_f S^n, in the variable s.
struct WarpingFunction {
  SmoothFunction f;
  Interval interval;
  int n = 1;

  // Throws ProfileError unless n >= 1 and 0 lies in the interval.
  void validate() const;
};

// Profile r of the rotation hypersurface Q(r), in the variable t.
struct ProfileFunction {
  SmoothFunction r;
  Interval interval;

  // Throws ProfileError if t lies outside the closed interval.
  Jet jet(double t) const;
  // Throws ProfileError unless 0 lies in the interval.
  void validate() const;
};

struct QuadratureConfig {
  // Integration step; 0 selects 1e-4 * (interval length) capped at 1e-3.
  double step = 0.0;
  // Infinite interval ends are clipped to +-truncation before integrating.
  double truncation = 10.0;

  double resolve_step(const Interval& interval) const;
};

struct WarpToProfileResult {
  ProfileFunction profile;
  // h(s) with h' = sqrt(1 + f'^2), h(0) = 0.
  TabulatedFunction h;
};

// Integrates h' = sqrt(1 + f'(s)^2) with classical RK4 from s = 0 and
// tabulates r = f o h^{-1} on t = h(s) with r' = f'/sqrt(1+f'^2) and
// r'' = f''/(1+f'^2)^2. Finite interval ends are pulled in by one step.
// Throws ProfileError on non-positive f or step underflow.
WarpToProfileResult warp_to_profile(const WarpingFunction& w, const QuadratureConfig& cfg = {});

struct ProfileToWarpResult {
  WarpingFunction warp;
  // h~(t) with h~' = sqrt(1 - r'^2), h~(0) = 0.
  TabulatedFunction h_tilde;
};

// Inverse construction: integrates h~' = sqrt(1 - r'(t)^2) and tabulates
// f = r o h~^{-1} with f' = r'/sqrt(1-r'^2) and f'' = r''/(1-r'^2)^2.
// Throws AdmissibilityError where |r'| >= 1 or r <= 0.
ProfileToWarpResult profile_to_warp(const ProfileFunction& p, int n,
                                    const QuadratureConfig& cfg = {});

struct AdmissibilityReport {
  struct Violation {
    double t = 0.0;
    double r = 0.0;
    double r1 = 0.0;
  };

  std::vector<double> grid;
  double min_r = 0.0;
  double max_abs_r1 = 0.0;
  std::vector<Violation> violations;

  bool admissible() const { return violations.empty(); }
};

// `grid_size` equispaced points strictly inside the (truncated) interval,
// i.e. the interval shrunk by one grid step on each side. A point violates
// admissibility when r <= 0 or |r'| >= 1 - margin.
AdmissibilityReport check_admissible(const ProfileFunction& p, int grid_size,
                                     double margin = 0.0, double truncation = 10.0);

// `size` equispaced points strictly inside `interval` (clipped to
// +-truncation), excluding both ends.
std::vector<double> interior_grid(const Interval& interval, int size, double truncation = 10.0);

}  // namespace rwspace

#endif  // RWSPACE_PROFILE_HPP_
