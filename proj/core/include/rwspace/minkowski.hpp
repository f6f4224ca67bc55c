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

#ifndef RWSPACE_MINKOWSKI_HPP_
#define RWSPACE_MINKOWSKI_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rwspace {

// Point or vector of Lorentz-Minkowski space L^{n+2}. Component 0 is the
// time coordinate, components 1..n+1 are spatial. Signature (-,+,...,+).
class AmbientVector {
 public:
  AmbientVector() = default;
  explicit AmbientVector(std::size_t dim) : c_(dim, 0.0) {}
  AmbientVector(std::initializer_list<double> components) : c_(components) {}
  explicit AmbientVector(std::vector<double> components) : c_(std::move(components)) {}

  static AmbientVector basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  double time() const { return c_[0]; }
  std::span<const double> spatial() const { return std::span<const double>(c_).subspan(1); }
  std::span<const double> components() const { return c_; }

  AmbientVector& operator+=(const AmbientVector& o);
  AmbientVector& operator-=(const AmbientVector& o);
  AmbientVector& operator*=(double s);
  AmbientVector& operator/=(double s);

  // Adds s*o in place.
  AmbientVector& axpy(double s, const AmbientVector& o);

  bool operator==(const AmbientVector&) const = default;

 private:
  std::vector<double> c_;
};

AmbientVector operator+(AmbientVector a, const AmbientVector& b);
AmbientVector operator-(AmbientVector a, const AmbientVector& b);
AmbientVector operator-(AmbientVector a);
AmbientVector operator*(double s, AmbientVector a);
AmbientVector operator*(AmbientVector a, double s);
AmbientVector operator/(AmbientVector a, double s);

enum class CausalCharacter { kSpacelike, kTimelike, kNull, kZero };

const char* to_string(CausalCharacter c);

// <u,v> = -u0 v0 + sum_i ui vi. Throws std::invalid_argument on dim mismatch.
double lorentz_inner(const AmbientVector& u, const AmbientVector& v);

// Zero if |v|_inf <= tol, null if |<v,v>| <= tol |v|_inf^2, otherwise the
// sign of <v,v> decides.
CausalCharacter causal_character(const AmbientVector& v, double tol);

// Euclidean norm of the spatial part.
double spatial_radius(const AmbientVector& v);

double sup_norm(const AmbientVector& v);
// Coordinate (Euclidean) norm over all components.
double euclidean_norm(const AmbientVector& v);

}  // namespace rwspace

#endif  // RWSPACE_MINKOWSKI_HPP_
