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

#include "rwspace/immersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rwspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

const AmbientVector& pos(const DiscreteImmersion& im, int v) { return im.positions[idx(v)]; }

// Edge vectors from `v` to the other vertices of simplex s.
std::vector<AmbientVector> edges_from(const DiscreteImmersion& im, std::size_t s, int v) {
  std::vector<AmbientVector> out;
  for (int w : im.domain.simplex(s)) {
    if (w != v) out.push_back(pos(im, w) - pos(im, v));
  }
  return out;
}

// w^T G^{-1} w for the Gram matrix of `edges` and w_i = <x, e_i>.
double gram_quadratic_form(const std::vector<AmbientVector>& edges, const std::vector<double>& w) {
  if (edges.size() == 1) return w[0] * w[0] / lorentz_inner(edges[0], edges[0]);
  const double a = lorentz_inner(edges[0], edges[0]);
  const double b = lorentz_inner(edges[0], edges[1]);
  const double c = lorentz_inner(edges[1], edges[1]);
  const double det = a * c - b * b;
  return (c * w[0] * w[0] - 2.0 * b * w[0] * w[1] + a * w[1] * w[1]) / det;
}

double profile_c(const Jet& j) { return j.d2 * j.value + j.d1 * j.d1 - 1.0; }

}  // namespace

NonSpacelikeError::NonSpacelikeError(std::size_t simplex, double min_eigenvalue)
    : ImmersionError("simplex " + std::to_string(simplex) +
                     " is not spacelike (min Gram eigenvalue " + std::to_string(min_eigenvalue) +
                     ")"),
      simplex_(simplex),
      min_eigenvalue_(min_eigenvalue) {}

DegenerateSimplexError::DegenerateSimplexError(std::size_t simplex)
    : ImmersionError("simplex " + std::to_string(simplex) + " has a zero edge"), simplex_(simplex) {}

DegenerateStarError::DegenerateStarError(int vertex)
    : ImmersionError("tangent star of vertex " + std::to_string(vertex) + " is degenerate"),
      vertex_(vertex) {}

const RotationHypersurface& DiscreteImmersion::surface() const {
  if (!constraint) throw ConstraintError("operation requires an immersion constrained to Q(r)");
  return *constraint;
}

void DiscreteImmersion::validate() const {
  if (ambient_n < 1) throw std::invalid_argument("ambient n must be positive");
  if (positions.size() != idx(domain.vertex_count())) {
    throw std::invalid_argument("immersion has " + std::to_string(positions.size()) +
                                " positions for " + std::to_string(domain.vertex_count()) +
                                " vertices");
  }
  for (const auto& p : positions) {
    if (p.dim() != ambient_dim()) {
      throw std::invalid_argument("vertex of dimension " + std::to_string(p.dim()) +
                                  ", expected " + std::to_string(ambient_dim()));
    }
  }
  if (domain.k() > ambient_n) {
    throw std::invalid_argument("a spacelike k-submanifold of Q(r) needs k <= n");
  }
  const auto grams = induced_gram(*this);
  for (std::size_t s = 0; s < grams.size(); ++s) {
    if (!grams[s].spacelike) throw NonSpacelikeError(s, grams[s].min_eigenvalue);
  }
  if (constraint) {
    if (constraint->n != ambient_n) throw ConstraintError("constraint dimension mismatch");
    for (std::size_t v = 0; v < positions.size(); ++v) {
      const auto& p = positions[v];
      const double r = constraint->jet(p.time()).value;
      const double tol = constraint->surface_tol * std::max(1.0, r * r);
      if (!contains(*constraint, p, tol)) {
        throw ConstraintError("vertex " + std::to_string(v) + " is off Q(r)");
      }
    }
  }
}

std::vector<SimplexGram> induced_gram(const DiscreteImmersion& im) {
  const int k = im.k();
  std::vector<SimplexGram> out(im.domain.simplex_count());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto verts = im.domain.simplex(s);
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        if (pos(im, verts[a]) == pos(im, verts[b])) throw DegenerateSimplexError(s);
      }
    }
    const auto e = edges_from(im, s, verts[0]);
    SimplexGram& g = out[s];
    g.k = k;
    if (k == 1) {
      g.g[0] = lorentz_inner(e[0], e[0]);
      g.det = g.g[0];
      g.min_eigenvalue = g.g[0];
    } else {
      const double a = lorentz_inner(e[0], e[0]);
      const double b = lorentz_inner(e[0], e[1]);
      const double c = lorentz_inner(e[1], e[1]);
      g.g = {a, b, b, c};
      g.det = a * c - b * b;
      const double mean = 0.5 * (a + c);
      const double half_gap = std::hypot(0.5 * (a - c), b);
      g.min_eigenvalue = mean - half_gap;
    }
    g.spacelike = g.min_eigenvalue > 0.0 && g.det > 0.0;
    if (g.spacelike) g.measure = k == 1 ? std::sqrt(g.det) : 0.5 * std::sqrt(g.det);
  }
  return out;
}

double min_gram_eigenvalue(const DiscreteImmersion& im) {
  double m = kInf;
  for (const auto& g : induced_gram(im)) m = std::min(m, g.min_eigenvalue);
  return m;
}

VertexField laplace_beltrami(const DiscreteImmersion& im, MassLumping lumping) {
  const auto grams = induced_gram(im);
  for (std::size_t s = 0; s < grams.size(); ++s) {
    if (!grams[s].spacelike) throw NonSpacelikeError(s, grams[s].min_eigenvalue);
  }
  const auto nv = idx(im.domain.vertex_count());
  const std::size_t dim = im.ambient_dim();
  VertexField out;
  out.value.assign(nv, AmbientVector(dim));
  out.evaluated.assign(nv, false);
  out.mass.assign(nv, 0.0);

  if (im.k() == 1) {
    for (std::size_t s = 0; s < grams.size(); ++s) {
      for (int v : im.domain.simplex(s)) out.mass[idx(v)] += 0.5 * grams[s].measure;
    }
    for (int v = 0; v < im.domain.vertex_count(); ++v) {
      if (im.domain.on_boundary(v)) continue;
      const int a = im.domain.prev(v);
      const int b = im.domain.next(v);
      const AmbientVector fwd = pos(im, b) - pos(im, v);
      const AmbientVector bwd = pos(im, v) - pos(im, a);
      const double lf = std::sqrt(lorentz_inner(fwd, fwd));
      const double lb = std::sqrt(lorentz_inner(bwd, bwd));
      out.value[idx(v)] = (fwd / lf - bwd / lb) / (0.5 * (lf + lb));
      out.evaluated[idx(v)] = true;
    }
    return out;
  }

  // Cotangent weights: for triangle (i, j, l) the angle at i weights edge (j, l).
  std::vector<AmbientVector> accum(nv, AmbientVector(dim));
  for (std::size_t s = 0; s < grams.size(); ++s) {
    const auto& tri = im.domain.triangles()[s];
    const double two_area = std::sqrt(grams[s].det);
    std::array<double, 3> cot{};
    std::array<double, 3> len_sq{};  // length^2 of the edge opposite corner c
    for (int c = 0; c < 3; ++c) {
      const int i = tri[idx(c)];
      const int j = tri[idx((c + 1) % 3)];
      const int l = tri[idx((c + 2) % 3)];
      const AmbientVector a = pos(im, j) - pos(im, i);
      const AmbientVector b = pos(im, l) - pos(im, i);
      cot[idx(c)] = lorentz_inner(a, b) / two_area;
      const AmbientVector opp = pos(im, l) - pos(im, j);
      len_sq[idx(c)] = lorentz_inner(opp, opp);
    }
    for (int c = 0; c < 3; ++c) {
      const int j = tri[idx((c + 1) % 3)];
      const int l = tri[idx((c + 2) % 3)];
      const double w = 0.5 * cot[idx(c)];
      const AmbientVector d = pos(im, l) - pos(im, j);
      accum[idx(j)].axpy(w, d);
      accum[idx(l)].axpy(-w, d);
    }
    const double area = grams[s].measure;
    if (lumping == MassLumping::kBarycentric) {
      for (int v : tri) out.mass[idx(v)] += area / 3.0;
      continue;
    }
    // Mixed Voronoi areas: Voronoi region for non-obtuse triangles, otherwise
    // half the area to the obtuse corner and a quarter to the others.
    int obtuse = -1;
    for (int c = 0; c < 3; ++c) {
      if (cot[idx(c)] < 0.0) obtuse = c;
    }
    for (int c = 0; c < 3; ++c) {
      const int v = tri[idx(c)];
      if (obtuse < 0) {
        const double e1 = len_sq[idx((c + 2) % 3)];  // edge from c to c+1
        const double e2 = len_sq[idx((c + 1) % 3)];  // edge from c to c+2
        out.mass[idx(v)] += (e1 * cot[idx((c + 2) % 3)] + e2 * cot[idx((c + 1) % 3)]) / 8.0;
      } else {
        out.mass[idx(v)] += c == obtuse ? area / 2.0 : area / 4.0;
      }
    }
  }
  for (int v = 0; v < im.domain.vertex_count(); ++v) {
    if (im.domain.on_boundary(v)) continue;
    out.value[idx(v)] = accum[idx(v)] / out.mass[idx(v)];
    out.evaluated[idx(v)] = true;
  }
  return out;
}

VertexField mean_curvature_ambient(const DiscreteImmersion& im, MassLumping lumping) {
  VertexField f = laplace_beltrami(im, lumping);
  for (auto& v : f.value) v /= static_cast<double>(im.k());
  return f;
}

std::vector<double> grad_component0(const DiscreteImmersion& im) {
  const auto grams = induced_gram(im);
  const auto nv = idx(im.domain.vertex_count());
  std::vector<double> sum(nv, 0.0);
  std::vector<double> weight(nv, 0.0);
  for (std::size_t s = 0; s < grams.size(); ++s) {
    if (!grams[s].spacelike) throw NonSpacelikeError(s, grams[s].min_eigenvalue);
    const auto verts = im.domain.simplex(s);
    const auto e = edges_from(im, s, verts[0]);
    std::vector<double> du;
    for (const auto& ei : e) du.push_back(ei[0]);
    const double g = std::max(0.0, gram_quadratic_form(e, du));
    for (int v : verts) {
      sum[idx(v)] += grams[s].measure * g;
      weight[idx(v)] += grams[s].measure;
    }
  }
  for (std::size_t v = 0; v < nv; ++v) sum[v] /= weight[v];
  return sum;
}

TangentialTReport T_tangential_identity(const DiscreteImmersion& im) {
  const auto& q = im.surface();
  const auto grams = induced_gram(im);
  const auto g0 = grad_component0(im);
  const auto nv = idx(im.domain.vertex_count());
  TangentialTReport out;
  out.lhs.assign(nv, 0.0);
  out.rhs.assign(nv, 0.0);
  out.residual.assign(nv, 0.0);
  for (int v = 0; v < im.domain.vertex_count(); ++v) {
    const AmbientVector t = unit_timelike_T(q, pos(im, v));
    double sum = 0.0;
    double weight = 0.0;
    for (int s : im.domain.star(v)) {
      const auto e = edges_from(im, idx(s), v);
      std::vector<double> w;
      for (const auto& ei : e) w.push_back(lorentz_inner(t, ei));
      sum += grams[idx(s)].measure * gram_quadratic_form(e, w);
      weight += grams[idx(s)].measure;
    }
    const double r1 = q.jet(pos(im, v).time()).d1;
    out.lhs[idx(v)] = sum / weight;
    out.rhs[idx(v)] = (1.0 - r1 * r1) * g0[idx(v)];
    out.residual[idx(v)] = out.lhs[idx(v)] - out.rhs[idx(v)];
    out.max_abs_residual = std::max(out.max_abs_residual, std::abs(out.residual[idx(v)]));
  }
  return out;
}

QAndP q_and_P(const DiscreteImmersion& im) {
  const auto& surf = im.surface();
  QAndP out;
  out.grad0_sq = grad_component0(im);
  const double k = im.k();
  for (std::size_t v = 0; v < im.positions.size(); ++v) {
    const AmbientVector& p = im.positions[v];
    const Jet j = surf.jet(p.time());
    out.q.push_back((k - profile_c(j) * out.grad0_sq[v]) /
                    (j.value * j.value * (1.0 - j.d1 * j.d1)));
    AmbientVector pv = p;
    pv[0] = j.value * j.d1;
    out.P.push_back(std::move(pv));
  }
  return out;
}

StationarityReport takahashi_residual(const DiscreteImmersion& im, MassLumping lumping) {
  const auto& surf = im.surface();
  const VertexField lap = laplace_beltrami(im, lumping);
  QAndP qp = q_and_P(im);
  const auto nv = im.positions.size();
  const std::size_t dim = im.ambient_dim();
  const double k = im.k();

  StationarityReport rep;
  rep.k = im.k();
  rep.evaluated = lap.evaluated;
  rep.mass = lap.mass;
  rep.laplacian = lap.value;
  rep.grad0_sq = std::move(qp.grad0_sq);
  rep.q = std::move(qp.q);
  rep.P = std::move(qp.P);
  rep.residual.assign(nv, AmbientVector(dim));
  rep.residual_normal_form.assign(nv, AmbientVector(dim));
  rep.residual_norm.assign(nv, 0.0);
  rep.component_sup.assign(dim, 0.0);

  double l2_sq = 0.0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!rep.evaluated[v]) continue;
    const AmbientVector& p = im.positions[v];
    const AmbientVector qp_v = rep.q[v] * rep.P[v];
    AmbientVector r = rep.laplacian[v] + qp_v;

    const Jet j = surf.jet(p.time());
    const double alpha = alpha_beta(surf, p.time()).alpha;
    AmbientVector alt = rep.laplacian[v];
    alt.axpy(-alpha * (k - profile_c(j) * rep.grad0_sq[v]), unit_normal(surf, p));

    const double scale = 1.0 + euclidean_norm(rep.laplacian[v]) + euclidean_norm(qp_v);
    rep.form_difference = std::max(rep.form_difference, euclidean_norm(r - alt) / scale);

    const double norm = euclidean_norm(r);
    rep.residual_norm[v] = norm;
    rep.sup = std::max(rep.sup, norm);
    rep.l1 += rep.mass[v] * norm;
    l2_sq += rep.mass[v] * norm * norm;
    rep.lorentz_sup = std::max(rep.lorentz_sup, std::sqrt(std::abs(lorentz_inner(r, r))));
    for (std::size_t i = 0; i < dim; ++i) {
      rep.component_sup[i] = std::max(rep.component_sup[i], std::abs(r[i]));
    }
    rep.residual[v] = std::move(r);
    rep.residual_normal_form[v] = std::move(alt);
  }
  rep.l2 = std::sqrt(l2_sq);
  return rep;
}

MeanCurvatureInQ mean_curvature_in_Q(const DiscreteImmersion& im, MassLumping lumping) {
  const auto& surf = im.surface();
  const VertexField lap = laplace_beltrami(im, lumping);
  const auto grams = induced_gram(im);
  const auto nv = im.positions.size();
  const double k = im.k();

  MeanCurvatureInQ out;
  out.value.assign(nv, AmbientVector(im.ambient_dim()));
  out.evaluated = lap.evaluated;
  out.shape_trace.assign(nv, 0.0);
  out.normal_component.assign(nv, 0.0);
  for (int v = 0; v < im.domain.vertex_count(); ++v) {
    if (!out.evaluated[idx(v)]) continue;
    const AmbientVector& p = pos(im, v);
    const AmbientVector nrm = unit_normal(surf, p);
    double trace = 0.0;
    double weight = 0.0;
    for (int s : im.domain.star(v)) {
      // Lorentz-Gram-Schmidt on the star edges of s, projected into T_p Q(r).
      std::vector<AmbientVector> frame;
      for (AmbientVector e : edges_from(im, idx(s), v)) {
        e.axpy(-lorentz_inner(e, nrm), nrm);
        for (const auto& x : frame) e.axpy(-lorentz_inner(e, x), x);
        const double nn = lorentz_inner(e, e);
        if (!(nn > 0.0) || nn <= 1e-14 * sup_norm(e) * sup_norm(e)) throw DegenerateStarError(v);
        frame.push_back(e / std::sqrt(nn));
      }
      double s_trace = 0.0;
      for (const auto& x : frame) s_trace += lorentz_inner(weingarten(surf, p, x), x);
      trace += grams[idx(s)].measure * s_trace;
      weight += grams[idx(s)].measure;
    }
    trace /= weight;
    AmbientVector h = lap.value[idx(v)] / k;
    h.axpy(-trace / k, nrm);
    out.shape_trace[idx(v)] = trace;
    out.normal_component[idx(v)] = lorentz_inner(h, nrm);
    out.sup_norm = std::max(out.sup_norm, euclidean_norm(h));
    out.value[idx(v)] = std::move(h);
  }
  return out;
}

TraceDiagnostics trace_diagnostics(const DiscreteImmersion& im, const StationarityReport& report) {
  const auto& surf = im.surface();
  const double k = im.k();
  TraceDiagnostics out;
  for (std::size_t v = 0; v < im.positions.size(); ++v) {
    const double t = im.positions[v].time();
    const Jet j = surf.jet(t);
    const double alpha = alpha_beta(surf, t).alpha;
    const double a2 = alpha * alpha;
    const double tr = -k + profile_c(j) * report.grad0_sq[v];
    const double rhs = -report.q[v] / a2;
    out.trace_AP.push_back(tr);
    out.minus_q_over_alpha_sq.push_back(rhs);
    out.max_rel_trace_error = std::max(
        out.max_rel_trace_error, std::abs(tr - rhs) / std::max({std::abs(tr), std::abs(rhs), 1e-300}));
    if (!report.evaluated[v]) {
      out.k_h_sq.push_back(0.0);
      out.q_sq_over_k_alpha_sq.push_back(0.0);
      continue;
    }
    const AmbientVector h = report.laplacian[v] / k;
    const double lhs = k * lorentz_inner(h, h);
    const double want = report.q[v] * report.q[v] / (k * a2);
    out.k_h_sq.push_back(lhs);
    out.q_sq_over_k_alpha_sq.push_back(want);
    out.max_rel_ah_error = std::max(
        out.max_rel_ah_error, std::abs(lhs - want) / std::max({std::abs(lhs), std::abs(want), 1e-300}));
  }
  return out;
}

IntegralIdentity integral_identity(const DiscreteImmersion& im, const StationarityReport& report) {
  if (!im.domain.closed()) throw ImmersionError("integral identity needs a closed domain");
  const auto& surf = im.surface();
  IntegralIdentity out;
  for (std::size_t v = 0; v < im.positions.size(); ++v) {
    const Jet j = surf.jet(im.positions[v].time());
    out.value += report.mass[v] * report.q[v] * j.value * j.d1;
  }
  out.residual_l1 = report.l1;
  return out;
}

EdgeLengths edge_lengths(const DiscreteImmersion& im) {
  EdgeLengths out{kInf, 0.0};
  for (const auto& [a, b] : im.domain.unique_edges()) {
    const AmbientVector e = pos(im, b) - pos(im, a);
    const double l = std::sqrt(std::max(0.0, lorentz_inner(e, e)));
    out.min = std::min(out.min, l);
    out.max = std::max(out.max, l);
  }
  return out;
}

double min_triangle_angle_deg(const DiscreteImmersion& im) {
  double best = 180.0;
  for (const auto& tri : im.domain.triangles()) {
    for (int c = 0; c < 3; ++c) {
      const AmbientVector a = pos(im, tri[idx((c + 1) % 3)]) - pos(im, tri[idx(c)]);
      const AmbientVector b = pos(im, tri[idx((c + 2) % 3)]) - pos(im, tri[idx(c)]);
      const double cosang =
          lorentz_inner(a, b) / std::sqrt(lorentz_inner(a, a) * lorentz_inner(b, b));
      best = std::min(best, std::acos(std::clamp(cosang, -1.0, 1.0)) * 180.0 / std::numbers::pi);
    }
  }
  return best;
}

}  // namespace rwspace
