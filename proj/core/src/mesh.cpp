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

#include "rwspace/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace rwspace {

namespace {

void check_index(int v, int vertex_count) {
  if (v < 0 || v >= vertex_count) {
    throw MeshError("vertex index " + std::to_string(v) + " out of range");
  }
}

std::array<int, 2> sorted(int a, int b) { return a < b ? std::array{a, b} : std::array{b, a}; }

}  // namespace

SimplicialDomain SimplicialDomain::curve(int vertex_count, std::vector<std::array<int, 2>> edges,
                                         bool closed) {
  if (vertex_count < 2) throw MeshError("a curve needs at least two vertices");
  SimplicialDomain d;
  d.k_ = 1;
  d.vertex_count_ = vertex_count;
  d.closed_ = closed;
  const auto nv = static_cast<std::size_t>(vertex_count);

  std::vector<std::vector<int>> adj(nv);
  for (const auto& [a, b] : edges) {
    check_index(a, vertex_count);
    check_index(b, vertex_count);
    if (a == b) throw MeshError("degenerate edge at vertex " + std::to_string(a));
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  const std::size_t expected = closed ? nv : nv - 1;
  if (edges.size() != expected) {
    throw MeshError(std::string(closed ? "a loop" : "a path") + " through " +
                    std::to_string(nv) + " vertices needs " + std::to_string(expected) +
                    " edges, got " + std::to_string(edges.size()));
  }
  int start = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t deg = adj[v].size();
    if (deg > 2 || deg == 0) throw MeshError("vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    if (!closed && deg == 1) {
      start = static_cast<int>(v);
      break;
    }
  }
  if (!closed) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (adj[v].size() == 1) {
        start = static_cast<int>(v);
        break;
      }
    }
  }

  // Walk the curve from `start`, orienting edges along the walk.
  d.prev_.assign(nv, -1);
  d.next_.assign(nv, -1);
  std::vector<bool> seen(nv, false);
  int cur = start;
  int before = -1;
  std::size_t visited = 0;
  std::vector<std::array<int, 2>> oriented;
  while (true) {
    seen[static_cast<std::size_t>(cur)] = true;
    ++visited;
    int nxt = -1;
    for (int w : adj[static_cast<std::size_t>(cur)]) {
      if (w != before && !seen[static_cast<std::size_t>(w)]) {
        nxt = w;
        break;
      }
    }
    if (nxt < 0) break;
    d.next_[static_cast<std::size_t>(cur)] = nxt;
    d.prev_[static_cast<std::size_t>(nxt)] = cur;
    oriented.push_back({cur, nxt});
    before = cur;
    cur = nxt;
  }
  if (visited != nv) throw MeshError("curve edges do not form a single connected component");
  if (closed) {
    const auto& a = adj[static_cast<std::size_t>(cur)];
    if (std::find(a.begin(), a.end(), start) == a.end()) {
      throw MeshError("closed curve does not return to its start");
    }
    d.next_[static_cast<std::size_t>(cur)] = start;
    d.prev_[static_cast<std::size_t>(start)] = cur;
    oriented.push_back({cur, start});
  }
  d.edges_ = std::move(oriented);
  d.boundary_.assign(nv, false);
  if (!closed) {
    d.boundary_[static_cast<std::size_t>(start)] = true;
    d.boundary_[static_cast<std::size_t>(cur)] = true;
  }
  d.build_stars();
  return d;
}

SimplicialDomain SimplicialDomain::loop(int vertex_count) {
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < vertex_count; ++i) edges.push_back({i, (i + 1) % vertex_count});
  return curve(vertex_count, std::move(edges), true);
}

SimplicialDomain SimplicialDomain::path(int vertex_count) {
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) edges.push_back({i, i + 1});
  return curve(vertex_count, std::move(edges), false);
}

SimplicialDomain SimplicialDomain::surface(int vertex_count,
                                           std::vector<std::array<int, 3>> triangles) {
  if (triangles.empty()) throw MeshError("a surface needs at least one triangle");
  SimplicialDomain d;
  d.k_ = 2;
  d.vertex_count_ = vertex_count;
  const auto nv = static_cast<std::size_t>(vertex_count);

  std::map<std::array<int, 2>, int> edge_count;
  std::vector<bool> used(nv, false);
  for (const auto& tri : triangles) {
    for (int v : tri) {
      check_index(v, vertex_count);
      used[static_cast<std::size_t>(v)] = true;
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw MeshError("degenerate triangle");
    }
    for (int e = 0; e < 3; ++e) ++edge_count[sorted(tri[e], tri[(e + 1) % 3])];
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!used[v]) throw MeshError("vertex " + std::to_string(v) + " is not in any triangle");
  }
  d.boundary_.assign(nv, false);
  d.closed_ = true;
  for (const auto& [edge, count] : edge_count) {
    if (count > 2) {
      throw MeshError("non-manifold edge (" + std::to_string(edge[0]) + ", " +
                      std::to_string(edge[1]) + ") in " + std::to_string(count) + " triangles");
    }
    if (count == 1) {
      d.closed_ = false;
      d.boundary_[static_cast<std::size_t>(edge[0])] = true;
      d.boundary_[static_cast<std::size_t>(edge[1])] = true;
    }
    d.unique_edges_.push_back(edge);
  }
  d.triangles_ = std::move(triangles);
  d.build_stars();
  return d;
}

std::vector<int> SimplicialDomain::simplex(std::size_t s) const {
  if (k_ == 1) return {edges_[s][0], edges_[s][1]};
  return {triangles_[s][0], triangles_[s][1], triangles_[s][2]};
}

void SimplicialDomain::build_stars() {
  star_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (std::size_t s = 0; s < simplex_count(); ++s) {
    for (int v : simplex(s)) star_[static_cast<std::size_t>(v)].push_back(static_cast<int>(s));
  }
  if (k_ == 1) unique_edges_ = edges_;
}

UnitSphereMesh make_icosphere(int subdivisions) {
  if (subdivisions < 0) throw MeshError("negative subdivision count");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  UnitSphereMesh mesh;
  mesh.vertices = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
                   {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
                   {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  mesh.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                    {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                    {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                    {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  auto normalize = [](std::array<double, 3> p) {
    const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return std::array{p[0] / n, p[1] / n, p[2] / n};
  };
  for (auto& v : mesh.vertices) v = normalize(v);

  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::array<int, 2>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = sorted(a, b);
      if (auto it = midpoint.find(key); it != midpoint.end()) return it->second;
      const auto& pa = mesh.vertices[static_cast<std::size_t>(a)];
      const auto& pb = mesh.vertices[static_cast<std::size_t>(b)];
      mesh.vertices.push_back(
          normalize({pa[0] + pb[0], pa[1] + pb[1], pa[2] + pb[2]}));
      const int idx = static_cast<int>(mesh.vertices.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> refined;
    refined.reserve(mesh.triangles.size() * 4);
    for (const auto& [a, b, c] : mesh.triangles) {
      const int ab = mid(a, b);
      const int bc = mid(b, c);
      const int ca = mid(c, a);
      refined.push_back({a, ab, ca});
      refined.push_back({b, bc, ab});
      refined.push_back({c, ca, bc});
      refined.push_back({ab, bc, ca});
    }
    mesh.triangles = std::move(refined);
  }
  return mesh;
}

}  // namespace rwspace
