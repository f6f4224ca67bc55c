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

#ifndef RWSPACE_TOOLS_COMMANDS_HPP_
#define RWSPACE_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "rwspace/immersion.hpp"

namespace rwspace::cli {

struct ProfileOptions {
  std::string spec;
  int grid = 201;
  std::optional<double> tol;
  std::string out = ".";
};

int run_profile(const ProfileOptions& o);
int run_geometry(const ProfileOptions& o);
int run_classify(const ProfileOptions& o);

struct ImmersionOptions {
  std::string immersion;
  std::optional<std::string> profile;
  std::optional<std::string> config;
  std::optional<double> tol;
  std::optional<int> max_iters;
  // Overrides the flow config file; verify defaults to mixed Voronoi.
  std::optional<MassLumping> mass;
  std::string out = ".";
};

int run_immersion(const ImmersionOptions& o);
int run_verify(const ImmersionOptions& o);
int run_flow(const ImmersionOptions& o);

struct FamilyOptions {
  std::string family;
  std::optional<std::string> profile;
  // Curve vertex count, or the refinement study's coarsest vertex count.
  int grid = 128;
  // Icosphere subdivisions for k = 2 families, or the number of refinement
  // levels in a study.
  std::optional<int> refine;
  int k = 1;
  std::optional<int> n;
  double t0 = 0.0;
  double a = 0.75;
  int turns = 1;
  double boost = 0.0;
  double radius = 1.0;
  double amplitude = 0.1;
  int mode = 2;
  std::optional<double> grading;
  std::optional<double> perturb;
  std::uint64_t seed = 1;
  MassLumping mass = MassLumping::kMixedVoronoi;
  std::string out = ".";
};

int run_families(const FamilyOptions& o);
int run_study(const FamilyOptions& o);

}  // namespace rwspace::cli

#endif  // RWSPACE_TOOLS_COMMANDS_HPP_
