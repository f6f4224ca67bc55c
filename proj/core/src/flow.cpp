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

#include "rwspace/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace rwspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Evaluation {
  MeanCurvatureInQ h_tilde;
  double residual = 0.0;
  double min_gram = 0.0;
  double mean_time = 0.0;
};

Evaluation evaluate(const DiscreteImmersion& im, MassLumping lumping) {
  Evaluation e;
  e.h_tilde = mean_curvature_in_Q(im, lumping);
  e.residual = takahashi_residual(im, lumping).sup;
  e.min_gram = min_gram_eigenvalue(im);
  for (const auto& p : im.positions) e.mean_time += p.time();
  e.mean_time /= static_cast<double>(im.positions.size());
  return e;
}

void record(FlowTrace& trace, const Evaluation& e) {
  trace.sup_h_tilde.push_back(e.h_tilde.sup_norm);
  trace.residual.push_back(e.residual);
  trace.min_gram_eig.push_back(e.min_gram);
  trace.mean_time.push_back(e.mean_time);
}

Expr t_var() { return Expr::variable("t"); }

DiscreteImmersion curve_immersion(const RotationHypersurface& q, std::vector<AmbientVector> pts,
                                  bool closed) {
  DiscreteImmersion im;
  const int m = static_cast<int>(pts.size());
  im.domain = closed ? SimplicialDomain::loop(m) : SimplicialDomain::path(m);
  im.positions = std::move(pts);
  im.ambient_n = q.n;
  im.constraint = q;
  return im;
}

}  // namespace

void FlowConfig::validate() const {
  if (step < 0.0 || !std::isfinite(step)) throw std::invalid_argument("flow step must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("flow tolerance must be positive");
  if (max_iters < 0) throw std::invalid_argument("max_iters must be non-negative");
  if (reproject_every < 1) throw std::invalid_argument("reproject_every must be >= 1");
}

const char* to_string(FlowTermination t) {
  switch (t) {
    case FlowTermination::kConverged: return "converged";
    case FlowTermination::kMaxIterations: return "max_iters";
    case FlowTermination::kSpacelikeGuard: return "spacelike_guard";
    case FlowTermination::kDomainExit: return "domain_exit";
    case FlowTermination::kMeshQuality: return "mesh_quality";
    case FlowTermination::kDegenerate: return "degenerate";
  }
  return "unknown";
}

FlowResult stationarize(const DiscreteImmersion& im, const FlowConfig& cfg) {
  cfg.validate();
  im.validate();
  const RotationHypersurface& surf = im.surface();
  if (!im.domain.closed()) throw ImmersionError("flow needs a closed domain");

  FlowResult out{im, {}};
  FlowTrace& trace = out.trace;
  const double h_min = edge_lengths(im).min;
  trace.step = cfg.step > 0.0 ? cfg.step : 0.2 * h_min * h_min;

  Evaluation e = evaluate(im, cfg.lumping);
  record(trace, e);
  DiscreteImmersion next = im;
  while (true) {
    if (e.h_tilde.sup_norm <= cfg.tol) {
      trace.termination = FlowTermination::kConverged;
      break;
    }
    if (trace.iterations >= cfg.max_iters) {
      trace.termination = FlowTermination::kMaxIterations;
      break;
    }
    const DiscreteImmersion& cur = out.immersion;
    const bool reproject = (trace.iterations + 1) % cfg.reproject_every == 0;
    bool stop = false;
    for (std::size_t v = 0; v < cur.positions.size() && !stop; ++v) {
      AmbientVector p = cur.positions[v];
      p.axpy(trace.step, e.h_tilde.value[v]);
      if (!surf.profile.interval.contains(p.time())) {
        trace.termination = FlowTermination::kDomainExit;
        trace.message = "vertex " + std::to_string(v) + " left the profile interval";
        stop = true;
        break;
      }
      if (reproject) {
        if (!(spatial_radius(p) > 0.0)) {
          trace.termination = FlowTermination::kDegenerate;
          trace.message = "vertex " + std::to_string(v) + " reached the time axis";
          stop = true;
          break;
        }
        p = project_to_surface(surf, p);
      }
      next.positions[v] = std::move(p);
    }
    if (stop) break;

    try {
      const double gmin = min_gram_eigenvalue(next);
      if (!(gmin > 0.0)) {
        if (cfg.spacelike_guard) {
          trace.termination = FlowTermination::kSpacelikeGuard;
          trace.message = "update would make a simplex non-spacelike";
          break;
        }
      }
      if (next.k() == 1) {
        const EdgeLengths l = edge_lengths(next);
        if (l.min < cfg.min_edge_ratio * l.max) {
          trace.termination = FlowTermination::kMeshQuality;
          trace.message = "edge length ratio below floor";
          break;
        }
      } else if (min_triangle_angle_deg(next) < cfg.min_angle_deg) {
        trace.termination = FlowTermination::kMeshQuality;
        trace.message = "triangle angle below floor";
        break;
      }
      Evaluation en = evaluate(next, cfg.lumping);
      std::swap(out.immersion.positions, next.positions);
      e = std::move(en);
    } catch (const OutsideProfileDomain& err) {
      trace.termination = FlowTermination::kDomainExit;
      trace.message = err.what();
      break;
    } catch (const ImmersionError& err) {
      trace.termination = FlowTermination::kDegenerate;
      trace.message = err.what();
      break;
    } catch (const GeometryError& err) {
      trace.termination = FlowTermination::kDegenerate;
      trace.message = err.what();
      break;
    }
    ++trace.iterations;
    record(trace, e);
  }
  trace.residual_ratio = e.h_tilde.sup_norm > 0.0 ? e.residual / e.h_tilde.sup_norm : 0.0;
  return out;
}

std::vector<double> graded_parameters(double length, int count, bool closed, double grading) {
  if (count < 2) throw std::invalid_argument("need at least two parameters");
  if (grading < 0.0 || grading >= 1.0) throw std::invalid_argument("grading must lie in [0, 1)");
  std::vector<double> s(static_cast<std::size_t>(count));
  const double du = length / (closed ? count : count - 1);
  for (int j = 0; j < count; ++j) {
    const double u = j * du;
    s[static_cast<std::size_t>(j)] = u + grading * (length / kTwoPi) * std::sin(kTwoPi * u / length);
  }
  return s;
}

RotationHypersurface de_sitter_surface(int n, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  const Expr r = Expr::apply(Expr::Kind::kSqrt,
                             Expr::add(Expr::constant(radius * radius),
                                       Expr::pow(t_var(), Expr::constant(2.0))));
  return RotationHypersurface{n, ProfileFunction{SmoothFunction(r), Interval{}}};
}

RotationHypersurface static_einstein_surface(int n, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  return RotationHypersurface{n, ProfileFunction{SmoothFunction(Expr::constant(radius)), Interval{}}};
}

DiscreteImmersion make_slice_sphere(const RotationHypersurface& q, double t0, int k, int resolution,
                                    double grading) {
  if (k != 1 && k != 2) throw std::invalid_argument("slice spheres need k in {1, 2}");
  if (k > q.n) throw std::invalid_argument("slice sphere dimension exceeds n");
  const double r0 = q.jet(t0).value;
  const std::size_t dim = q.ambient_dim();
  if (k == 1) {
    if (resolution < 3) throw std::invalid_argument("a slice circle needs at least 3 vertices");
    std::vector<AmbientVector> pts;
    for (double s : graded_parameters(kTwoPi, resolution, true, grading)) {
      AmbientVector p(dim);
      p[0] = t0;
      p[1] = r0 * std::cos(s);
      p[2] = r0 * std::sin(s);
      pts.push_back(std::move(p));
    }
    return curve_immersion(q, std::move(pts), true);
  }
  const UnitSphereMesh mesh = make_icosphere(resolution);
  DiscreteImmersion im;
  im.domain = SimplicialDomain::surface(static_cast<int>(mesh.vertices.size()), mesh.triangles);
  for (const auto& u : mesh.vertices) {
    AmbientVector p(dim);
    p[0] = t0;
    for (std::size_t i = 0; i < 3; ++i) p[i + 1] = r0 * u[i];
    im.positions.push_back(std::move(p));
  }
  im.ambient_n = q.n;
  im.constraint = q;
  return im;
}

DiscreteImmersion make_product_geodesic_Q1(double a, int turns, int m, int n, double grading) {
  if (m < 8) throw std::invalid_argument("product geodesic needs m >= 8");
  if (turns < 1) throw std::invalid_argument("turns must be positive");
  const RotationHypersurface q = static_einstein_surface(n);
  const double b = std::sqrt(1.0 + a * a);
  const bool closed = a == 0.0;
  const double length = closed ? kTwoPi : kTwoPi * turns / b;
  std::vector<AmbientVector> pts;
  for (double s : graded_parameters(length, m, closed, grading)) {
    AmbientVector p(q.ambient_dim());
    p[0] = a * s;
    p[1] = std::cos(b * s);
    p[2] = std::sin(b * s);
    pts.push_back(std::move(p));
  }
  return curve_immersion(q, std::move(pts), closed);
}

DiscreteImmersion make_desitter_geodesic(const AmbientVector& p, const AmbientVector& v, int m,
                                         double radius, double grading) {
  if (p.dim() != v.dim() || p.dim() < 3) throw std::invalid_argument("dimension mismatch");
  if (m < 3) throw std::invalid_argument("a closed geodesic needs at least 3 vertices");
  constexpr double kTol = 1e-12;
  if (std::abs(lorentz_inner(p, p) - 1.0) > kTol) {
    throw std::invalid_argument("p is not on the unit De Sitter space");
  }
  if (std::abs(lorentz_inner(v, v) - 1.0) > kTol) {
    throw std::invalid_argument("v is not a unit spacelike vector");
  }
  if (std::abs(lorentz_inner(p, v)) > kTol) throw std::invalid_argument("v is not tangent at p");
  const RotationHypersurface q = de_sitter_surface(static_cast<int>(p.dim()) - 2, radius);
  std::vector<AmbientVector> pts;
  for (double s : graded_parameters(kTwoPi, m, true, grading)) {
    pts.push_back(radius * (std::cos(s) * p + std::sin(s) * v));
  }
  return curve_immersion(q, std::move(pts), true);
}

DiscreteImmersion make_perturbed_great_circle(int n, int m, double amplitude, int mode) {
  if (n < 2) throw std::invalid_argument("an off-plane perturbation needs n >= 2");
  const RotationHypersurface q = de_sitter_surface(n);
  std::vector<AmbientVector> pts;
  for (double s : graded_parameters(kTwoPi, m, true, 0.0)) {
    AmbientVector p(q.ambient_dim());
    p[1] = std::cos(s);
    p[2] = std::sin(s);
    p[3] = amplitude * std::cos(mode * s);
    pts.push_back(project_to_surface(q, p));
  }
  return curve_immersion(q, std::move(pts), true);
}

DiscreteImmersion perturb_randomly(const DiscreteImmersion& im, double amplitude,
                                   std::uint64_t seed) {
  const RotationHypersurface& q = im.surface();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-amplitude, amplitude);
  DiscreteImmersion out = im;
  for (auto& p : out.positions) {
    for (std::size_t i = 1; i < p.dim(); ++i) p[i] += noise(rng);
    p = project_to_surface(q, p);
  }
  return out;
}

RefinementStudy refinement_study(const std::function<DiscreteImmersion(int)>& family, int levels,
                                 MassLumping lumping) {
  if (levels < 3) throw std::invalid_argument("a refinement study needs at least 3 levels");
  RefinementStudy out;
  out.exact = true;
  for (int level = 0; level < levels; ++level) {
    const DiscreteImmersion im = family(level);
    const StationarityReport rep = takahashi_residual(im, lumping);
    double scale = 1.0;
    for (std::size_t v = 0; v < rep.laplacian.size(); ++v) {
      if (rep.evaluated[v]) scale = std::max(scale, euclidean_norm(rep.laplacian[v]));
    }
    if (rep.sup > 1e-11 * scale) out.exact = false;
    out.h.push_back(edge_lengths(im).max);
    out.residual_sup.push_back(rep.sup);
  }
  if (out.exact) {
    out.order = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double cnt = levels;
  for (int i = 0; i < levels; ++i) {
    const double x = std::log(out.h[static_cast<std::size_t>(i)]);
    const double y = std::log(out.residual_sup[static_cast<std::size_t>(i)]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.order = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  return out;
}

}  // namespace rwspace
