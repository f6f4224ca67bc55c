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

#ifndef RWSPACE_IMMERSION_HPP_
#define RWSPACE_IMMERSION_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rwspace/mesh.hpp"
#include "rwspace/minkowski.hpp"
#include "rwspace/qsurface.hpp"

namespace rwspace {

class ImmersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simplex whose induced Gram matrix is not positive definite.
class NonSpacelikeError : public ImmersionError {
 public:
  NonSpacelikeError(std::size_t simplex, double min_eigenvalue);
  std::size_t simplex() const { return simplex_; }
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  std::size_t simplex_;
  double min_eigenvalue_;
};

// A simplex with a zero edge vector.
class DegenerateSimplexError : public ImmersionError {
 public:
  explicit DegenerateSimplexError(std::size_t simplex);
  std::size_t simplex() const { return simplex_; }

 private:
  std::size_t simplex_;
};

// A vertex star whose projected edge vectors span fewer than k dimensions.
class DegenerateStarError : public ImmersionError {
 public:
  explicit DegenerateStarError(int vertex);
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

// An operation that needs the Q(r) constraint got an unconstrained immersion,
// or a constrained vertex is off the surface.
class ConstraintError : public ImmersionError {
 public:
  using ImmersionError::ImmersionError;
};

// Vertexwise map of a simplicial k-manifold into L^{n+2}, optionally
// constrained to lie on a rotation hypersurface Q(r).
struct DiscreteImmersion {
  SimplicialDomain domain;
  std::vector<AmbientVector> positions;
  int ambient_n = 1;
  std::optional<RotationHypersurface> constraint;

  int k() const { return domain.k(); }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(ambient_n) + 2; }

  // Checks vertex count and dimensions (std::invalid_argument), that every
  // simplex is spacelike (NonSpacelikeError, DegenerateSimplexError) and that
  // constrained vertices lie on Q(r) (ConstraintError, OutsideProfileDomain).
  void validate() const;
  // Throws ConstraintError when there is no constraint.
  const RotationHypersurface& surface() const;
};

// Vertex masses for k = 2: one third of the incident areas, or mixed
// Voronoi areas (circumcentric dual cells, with the obtuse-triangle fallback).
// Curves always use half the incident edge lengths.
enum class MassLumping { kBarycentric, kMixedVoronoi };

struct SimplexGram {
  int k = 1;
  // Row-major k x k Gram matrix of the edge vectors from the first vertex.
  std::array<double, 4> g{};
  double det = 0.0;
  double min_eigenvalue = 0.0;
  // Length (k = 1) or area (k = 2) in the induced metric; 0 when not spacelike.
  double measure = 0.0;
  bool spacelike = false;
};

// Throws DegenerateSimplexError on a zero edge.
std::vector<SimplexGram> induced_gram(const DiscreteImmersion& im);

// Smallest Gram eigenvalue over all simplices.
double min_gram_eigenvalue(const DiscreteImmersion& im);

struct VertexField {
  std::vector<AmbientVector> value;
  // False at boundary vertices, where the operator is not evaluated.
  std::vector<bool> evaluated;
  // Lumped vertex masses.
  std::vector<double> mass;
};

// Discrete div o grad applied to each coordinate of the immersion. Throws
// NonSpacelikeError or DegenerateSimplexError.
VertexField laplace_beltrami(const DiscreteImmersion& im,
                             MassLumping lumping = MassLumping::kMixedVoronoi);

// H = Laplacian / k.
VertexField mean_curvature_ambient(const DiscreteImmersion& im,
                                   MassLumping lumping = MassLumping::kMixedVoronoi);

// |grad Psi_0|^2 per vertex: per-simplex quadratic form with the inverse Gram
// matrix, averaged over the vertex star with measure weights.
std::vector<double> grad_component0(const DiscreteImmersion& im);

struct TangentialTReport {
  // |T^T|^2, T projected onto the simplex tangent spaces around each vertex.
  std::vector<double> lhs;
  // (1 - r'(Psi_0)^2) |grad Psi_0|^2.
  std::vector<double> rhs;
  std::vector<double> residual;
  double max_abs_residual = 0.0;
};

TangentialTReport T_tangential_identity(const DiscreteImmersion& im);

struct QAndP {
  std::vector<double> q;
  std::vector<AmbientVector> P;
  std::vector<double> grad0_sq;
};

// P = (r r'(Psi_0), Psi_1, ..., Psi_{n+1}) and
// q = [k - (r'' r + r'^2 - 1) |grad Psi_0|^2] / (r^2 (1 - r'^2)).
QAndP q_and_P(const DiscreteImmersion& im);

struct StationarityReport {
  int k = 1;
  std::vector<bool> evaluated;
  std::vector<double> mass;
  std::vector<AmbientVector> laplacian;
  std::vector<double> grad0_sq;
  std::vector<double> q;
  std::vector<AmbientVector> P;
  // Laplacian + q P.
  std::vector<AmbientVector> residual;
  // Laplacian - alpha [k - (r'' r + r'^2 - 1) |grad Psi_0|^2] N.
  std::vector<AmbientVector> residual_normal_form;
  // Euclidean coordinate norm of the residual per vertex (0 where not
  // evaluated).
  std::vector<double> residual_norm;

  // Over evaluated vertices.
  double sup = 0.0;
  // sqrt(sum mass |R|^2) and sum mass |R|.
  double l2 = 0.0;
  double l1 = 0.0;
  // max sqrt(|<R, R>|).
  double lorentz_sup = 0.0;
  // max |R_i| per ambient coordinate.
  std::vector<double> component_sup;
  // max |residual - residual_normal_form| / (1 + |laplacian| + |q P|).
  double form_difference = 0.0;
};

StationarityReport takahashi_residual(const DiscreteImmersion& im,
                                      MassLumping lumping = MassLumping::kMixedVoronoi);

struct MeanCurvatureInQ {
  // H~ = Laplacian / k - (S / k) N, S = sum <A X_i, X_i> over a discrete
  // orthonormal frame.
  std::vector<AmbientVector> value;
  std::vector<bool> evaluated;
  std::vector<double> shape_trace;
  // <H~, N>, zero in the smooth setting.
  std::vector<double> normal_component;
  // max over evaluated vertices of the Euclidean norm of H~.
  double sup_norm = 0.0;
};

// Throws DegenerateStarError when a projected star has rank < k.
MeanCurvatureInQ mean_curvature_in_Q(const DiscreteImmersion& im,
                                     MassLumping lumping = MassLumping::kMixedVoronoi);

struct TraceDiagnostics {
  // -k + (r'' r + r'^2 - 1) |grad Psi_0|^2.
  std::vector<double> trace_AP;
  std::vector<double> minus_q_over_alpha_sq;
  double max_rel_trace_error = 0.0;
  // k <H, H> with H = Laplacian / k, and q^2 / (k alpha^2); evaluated
  // vertices only.
  std::vector<double> k_h_sq;
  std::vector<double> q_sq_over_k_alpha_sq;
  double max_rel_ah_error = 0.0;
};

TraceDiagnostics trace_diagnostics(const DiscreteImmersion& im, const StationarityReport& report);

struct IntegralIdentity {
  // sum over vertices of mass * q * r(Psi_0) r'(Psi_0).
  double value = 0.0;
  double residual_l1 = 0.0;
};

// Throws ImmersionError on a domain with boundary.
IntegralIdentity integral_identity(const DiscreteImmersion& im, const StationarityReport& report);

// Longest and shortest Lorentzian edge lengths.
struct EdgeLengths {
  double min = 0.0;
  double max = 0.0;
};
EdgeLengths edge_lengths(const DiscreteImmersion& im);

// Smallest triangle angle in the induced metric, in degrees (k = 2).
double min_triangle_angle_deg(const DiscreteImmersion& im);

}  // namespace rwspace

#endif  // RWSPACE_IMMERSION_HPP_
