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

#ifndef RWSPACE_MESH_HPP_
#define RWSPACE_MESH_HPP_

#include <array>
#include <stdexcept>
#include <vector>

namespace rwspace {

class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Combinatorial domain of a discrete k-manifold: a path or loop of edges
// (k = 1) or a manifold triangle mesh (k = 2). Validated on construction.
class SimplicialDomain {
 public:
  SimplicialDomain() = default;

  // Throws MeshError unless the edges form one path (closed = false) or one
  // cycle (closed = true) through every vertex.
  static SimplicialDomain curve(int vertex_count, std::vector<std::array<int, 2>> edges,
                                bool closed);
  static SimplicialDomain loop(int vertex_count);
  static SimplicialDomain path(int vertex_count);
  // Throws MeshError unless every edge lies in one or two triangles. The mesh
  // is closed when every edge lies in exactly two.
  static SimplicialDomain surface(int vertex_count, std::vector<std::array<int, 3>> triangles);

  int k() const { return k_; }
  int vertex_count() const { return vertex_count_; }
  bool closed() const { return closed_; }
  std::size_t simplex_count() const { return k_ == 1 ? edges_.size() : triangles_.size(); }

  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  // Vertex indices of simplex s (2 or 3 entries).
  std::vector<int> simplex(std::size_t s) const;

  // k = 1 only: previous / next vertex along the curve, -1 past an end.
  int prev(int v) const { return prev_[static_cast<std::size_t>(v)]; }
  int next(int v) const { return next_[static_cast<std::size_t>(v)]; }

  bool on_boundary(int v) const { return boundary_[static_cast<std::size_t>(v)]; }
  // Simplices incident to each vertex.
  const std::vector<int>& star(int v) const { return star_[static_cast<std::size_t>(v)]; }
  // All undirected edges (for k = 2 the triangle edges), each once.
  const std::vector<std::array<int, 2>>& unique_edges() const { return unique_edges_; }

 private:
  void build_stars();

  int k_ = 1;
  int vertex_count_ = 0;
  bool closed_ = false;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<int> prev_;
  std::vector<int> next_;
  std::vector<bool> boundary_;
  std::vector<std::vector<int>> star_;
  std::vector<std::array<int, 2>> unique_edges_;
};

struct UnitSphereMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> triangles;
};

// Icosahedron refined `subdivisions` times by edge midpoints projected to
// the unit sphere; consistently outward oriented.
UnitSphereMesh make_icosphere(int subdivisions);

}  // namespace rwspace

#endif  // RWSPACE_MESH_HPP_
