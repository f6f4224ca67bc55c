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

#include "rwspace/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rwspace {

namespace {

void check_dims(const AmbientVector& a, const AmbientVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

AmbientVector AmbientVector::basis(std::size_t dim, std::size_t i) {
  AmbientVector v(dim);
  v.c_.at(i) = 1.0;
  return v;
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
  check_dims(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& o) {
  check_dims(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AmbientVector& AmbientVector::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

AmbientVector& AmbientVector::operator/=(double s) {
  for (double& x : c_) x /= s;
  return *this;
}

AmbientVector& AmbientVector::axpy(double s, const AmbientVector& o) {
  check_dims(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += s * o.c_[i];
  return *this;
}

AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
AmbientVector operator-(AmbientVector a) { return a *= -1.0; }
AmbientVector operator*(double s, AmbientVector a) { return a *= s; }
AmbientVector operator*(AmbientVector a, double s) { return a *= s; }
AmbientVector operator/(AmbientVector a, double s) { return a /= s; }

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::kSpacelike:
      return "spacelike";
    case CausalCharacter::kTimelike:
      return "timelike";
    case CausalCharacter::kNull:
      return "null";
    case CausalCharacter::kZero:
      return "zero";
  }
  return "unknown";
}

double lorentz_inner(const AmbientVector& u, const AmbientVector& v) {
  check_dims(u, v);
  if (u.dim() == 0) return 0.0;
  double s = -u[0] * v[0];
  for (std::size_t i = 1; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

CausalCharacter causal_character(const AmbientVector& v, double tol) {
  if (tol < 0.0) throw std::invalid_argument("causal_character: negative tolerance");
  const double m = sup_norm(v);
  if (m <= tol) return CausalCharacter::kZero;
  const double q = lorentz_inner(v, v);
  if (std::abs(q) <= tol * m * m) return CausalCharacter::kNull;
  return q > 0.0 ? CausalCharacter::kSpacelike : CausalCharacter::kTimelike;
}

double spatial_radius(const AmbientVector& v) {
  double s = 0.0;
  for (double x : v.spatial()) s += x * x;
  return std::sqrt(s);
}

double sup_norm(const AmbientVector& v) {
  double m = 0.0;
  for (double x : v.components()) m = std::max(m, std::abs(x));
  return m;
}

double euclidean_norm(const AmbientVector& v) {
  double s = 0.0;
  for (double x : v.components()) s += x * x;
  return std::sqrt(s);
}

}  // namespace rwspace
