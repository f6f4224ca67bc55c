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

#ifndef RWSPACE_TOOLS_COMMON_HPP_
#define RWSPACE_TOOLS_COMMON_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rwspace/immersion.hpp"
#include "rwspace/io.hpp"

namespace rwspace::cli {

// Exit status 2: the input was read but failed a geometric or structural
// check. Any report describing the failure has already been written.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit status 3: a computation ran but did not reach its target.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
  kExitMalformedInput = 4,
};

// Non-finite values become JSON null.
nlohmann::json number(double x);

std::filesystem::path prepare_out_dir(const std::string& dir);

ProfileSpec load_profile_spec(const std::string& path);

// The constraint comes from `profile_path` when given, otherwise from the
// file's own "constraint_profile" entry.
LoadedImmersion load_immersion(const std::string& path, const std::optional<std::string>& profile_path);

MassLumping parse_mass(const std::string& name);
const char* mass_name(MassLumping m);

}  // namespace rwspace::cli

#endif  // RWSPACE_TOOLS_COMMON_HPP_
