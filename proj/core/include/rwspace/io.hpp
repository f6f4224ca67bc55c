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

#ifndef RWSPACE_IO_HPP_
#define RWSPACE_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rwspace/immersion.hpp"
#include "rwspace/profile.hpp"
#include "rwspace/qsurface.hpp"

namespace rwspace {

// Unreadable, syntactically malformed or structurally wrong JSON input.
class JsonInputError : public std::runtime_error {
 public:
  JsonInputError(std::string source, std::size_t byte_offset, const std::string& detail);
  const std::string& source() const { return source_; }
  // 0 when the failure is not tied to a position in the text.
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::string source_;
  std::size_t byte_offset_;
};

// { "kind": "warping" | "profile", "expr": ..., "var": "s" | "t",
//   "interval": [a, b], "n": ... } with null for an infinite end.
struct ProfileSpec {
  enum class Kind { kWarping, kProfile };
  Kind kind = Kind::kProfile;
  std::string expr;
  std::string var = "t";
  Interval interval;
  int n = 1;
};

ProfileSpec profile_spec_from_json(const nlohmann::json& j, const std::string& source = "<json>");
nlohmann::json to_json(const ProfileSpec& spec);

// A profile spec with its parsed and converted functions. For warping
// specs, `profile` is the tabulated r and `h` the s -> t table.
struct ResolvedProfile {
  ProfileSpec spec;
  std::optional<WarpingFunction> warp;
  std::optional<TabulatedFunction> h;
  ProfileFunction profile;

  RotationHypersurface surface() const { return {spec.n, profile}; }
};

// Throws ParseError for a bad expression and ProfileError when the
// conversion fails.
ResolvedProfile resolve_profile(const ProfileSpec& spec, const QuadratureConfig& cfg = {});

// Serialises positions and connectivity; the constraint is written from
// `constraint_spec` when given.
nlohmann::json immersion_to_json(const DiscreteImmersion& im,
                                 const std::optional<ProfileSpec>& constraint_spec);

struct LoadedImmersion {
  DiscreteImmersion immersion;
  std::optional<ProfileSpec> constraint_spec;
};

// Builds the domain (MeshError on bad connectivity) and resolves the
// constraint profile; does not validate spacelikeness.
LoadedImmersion immersion_from_json(const nlohmann::json& j, const std::string& source = "<json>",
                                    const QuadratureConfig& cfg = {});

// Reads and parses a JSON file; JsonInputError carries the byte offset of
// a syntax error.
nlohmann::json read_json_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

// x with 17 significant digits, independent of the locale.
std::string format_double(double x);

// Comma-separated table with a fixed header, numbers via format_double.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  // Throws std::invalid_argument when the row width differs from the header.
  void add_row(const std::vector<double>& row);
  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::size_t width_;
  std::string text_;
};

nlohmann::json to_json(const AmbientVector& v);
AmbientVector ambient_vector_from_json(const nlohmann::json& j);

}  // namespace rwspace

#endif  // RWSPACE_IO_HPP_
