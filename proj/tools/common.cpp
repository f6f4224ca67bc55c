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

#include "common.hpp"

#include <cmath>

namespace rwspace::cli {

nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::filesystem::path out(dir.empty() ? "." : dir);
  std::filesystem::create_directories(out);
  return out;
}

ProfileSpec load_profile_spec(const std::string& path) {
  return profile_spec_from_json(read_json_file(path), path);
}

LoadedImmersion load_immersion(const std::string& path, const std::optional<std::string>& profile_path) {
  LoadedImmersion loaded = immersion_from_json(read_json_file(path), path);
  if (profile_path) {
    ProfileSpec spec = load_profile_spec(*profile_path);
    if (spec.n != loaded.immersion.ambient_n) {
      throw JsonInputError(*profile_path, 0, "profile n differs from immersion n");
    }
    loaded.immersion.constraint = resolve_profile(spec).surface();
    loaded.constraint_spec = std::move(spec);
  }
  return loaded;
}

MassLumping parse_mass(const std::string& name) {
  return name == "barycentric" ? MassLumping::kBarycentric : MassLumping::kMixedVoronoi;
}

const char* mass_name(MassLumping m) {
  return m == MassLumping::kBarycentric ? "barycentric" : "mixed";
}

}  // namespace rwspace::cli
