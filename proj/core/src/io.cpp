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

#include "rwspace/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace rwspace {

namespace {

using nlohmann::json;

[[noreturn]] void structural(const std::string& source, const std::string& detail) {
  throw JsonInputError(source, 0, detail);
}

const json& require(const json& j, const char* key, const std::string& source) {
  if (!j.is_object()) structural(source, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) structural(source, std::string("missing key \"") + key + "\"");
  return *it;
}

double interval_end(const json& j, double infinite, const std::string& source) {
  if (j.is_null()) return infinite;
  if (!j.is_number()) structural(source, "interval ends must be numbers or null");
  return j.get<double>();
}

json interval_end_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

template <std::size_t N>
std::array<int, N> index_tuple(const json& j, const std::string& source, const char* what) {
  if (!j.is_array() || j.size() != N) structural(source, what);
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number_integer()) structural(source, what);
    out[i] = j[i].get<int>();
  }
  return out;
}

int integer_field(const json& j, const char* key, const std::string& source) {
  const json& v = require(j, key, source);
  if (!v.is_number_integer()) structural(source, std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

JsonInputError::JsonInputError(std::string source, std::size_t byte_offset,
                               const std::string& detail)
    : std::runtime_error(source + (byte_offset > 0 ? " (byte " + std::to_string(byte_offset) + ")"
                                                   : std::string()) +
                         ": " + detail),
      source_(std::move(source)),
      byte_offset_(byte_offset) {}

ProfileSpec profile_spec_from_json(const json& j, const std::string& source) {
  ProfileSpec spec;
  const json& kind = require(j, "kind", source);
  if (kind == "warping") {
    spec.kind = ProfileSpec::Kind::kWarping;
    spec.var = "s";
  } else if (kind == "profile") {
    spec.kind = ProfileSpec::Kind::kProfile;
    spec.var = "t";
  } else {
    structural(source, "\"kind\" must be \"warping\" or \"profile\"");
  }
  const json& expr = require(j, "expr", source);
  if (!expr.is_string()) structural(source, "\"expr\" must be a string");
  spec.expr = expr.get<std::string>();
  if (const auto it = j.find("var"); it != j.end()) {
    if (!it->is_string()) structural(source, "\"var\" must be a string");
    spec.var = it->get<std::string>();
  }
  const json& iv = require(j, "interval", source);
  if (!iv.is_array() || iv.size() != 2) structural(source, "\"interval\" must be [a, b]");
  const double inf = std::numeric_limits<double>::infinity();
  spec.interval = {interval_end(iv[0], -inf, source), interval_end(iv[1], inf, source)};
  if (!(spec.interval.lo < spec.interval.hi)) structural(source, "empty interval");
  if (j.contains("n")) spec.n = integer_field(j, "n", source);
  if (spec.n < 1) structural(source, "\"n\" must be positive");
  return spec;
}

json to_json(const ProfileSpec& spec) {
  return json{{"kind", spec.kind == ProfileSpec::Kind::kWarping ? "warping" : "profile"},
              {"expr", spec.expr},
              {"var", spec.var},
              {"interval", json::array({interval_end_json(spec.interval.lo),
                                        interval_end_json(spec.interval.hi)})},
              {"n", spec.n}};
}

ResolvedProfile resolve_profile(const ProfileSpec& spec, const QuadratureConfig& cfg) {
  ResolvedProfile out;
  out.spec = spec;
  SmoothFunction fn(parse_expr(spec.expr, spec.var));
  if (spec.kind == ProfileSpec::Kind::kProfile) {
    out.profile = ProfileFunction{std::move(fn), spec.interval};
    out.profile.validate();
    return out;
  }
  WarpingFunction w{std::move(fn), spec.interval, spec.n};
  w.validate();
  WarpToProfileResult conv = warp_to_profile(w, cfg);
  out.warp = std::move(w);
  out.h = std::move(conv.h);
  out.profile = std::move(conv.profile);
  return out;
}

json immersion_to_json(const DiscreteImmersion& im, const std::optional<ProfileSpec>& constraint_spec) {
  json verts = json::array();
  for (const auto& p : im.positions) verts.push_back(to_json(p));
  json out{{"k", im.k()}, {"n", im.ambient_n}, {"closed", im.domain.closed()}, {"vertices", verts}};
  json simplices = json::array();
  if (im.k() == 1) {
    for (const auto& e : im.domain.edges()) simplices.push_back({e[0], e[1]});
    out["edges"] = simplices;
  } else {
    for (const auto& t : im.domain.triangles()) simplices.push_back({t[0], t[1], t[2]});
    out["triangles"] = simplices;
  }
  if (constraint_spec) out["constraint_profile"] = to_json(*constraint_spec);
  return out;
}

LoadedImmersion immersion_from_json(const json& j, const std::string& source,
                                    const QuadratureConfig& cfg) {
  const int k = integer_field(j, "k", source);
  const int n = integer_field(j, "n", source);
  if (k != 1 && k != 2) structural(source, "\"k\" must be 1 or 2");
  if (n < 1) structural(source, "\"n\" must be positive");
  const json& closed = require(j, "closed", source);
  if (!closed.is_boolean()) structural(source, "\"closed\" must be a boolean");
  const json& verts = require(j, "vertices", source);
  if (!verts.is_array()) structural(source, "\"vertices\" must be an array");

  LoadedImmersion out;
  DiscreteImmersion& im = out.immersion;
  im.ambient_n = n;
  for (const auto& v : verts) {
    try {
      im.positions.push_back(ambient_vector_from_json(v));
    } catch (const std::invalid_argument& e) {
      structural(source, e.what());
    }
    if (im.positions.back().dim() != static_cast<std::size_t>(n) + 2) {
      structural(source, "vertex " + std::to_string(im.positions.size() - 1) + " must have n + 2 = " +
                             std::to_string(n + 2) + " components");
    }
  }
  const int nv = static_cast<int>(im.positions.size());
  if (k == 1) {
    const json& edges = require(j, "edges", source);
    if (!edges.is_array()) structural(source, "\"edges\" must be an array");
    std::vector<std::array<int, 2>> list;
    for (const auto& e : edges) {
      list.push_back(index_tuple<2>(e, source, "edges must be integer pairs [i, j]"));
    }
    im.domain = SimplicialDomain::curve(nv, std::move(list), closed.get<bool>());
  } else {
    const json& tris = require(j, "triangles", source);
    if (!tris.is_array()) structural(source, "\"triangles\" must be an array");
    std::vector<std::array<int, 3>> list;
    for (const auto& t : tris) {
      list.push_back(index_tuple<3>(t, source, "triangles must be integer triples [i, j, l]"));
    }
    im.domain = SimplicialDomain::surface(nv, std::move(list));
    if (im.domain.closed() != closed.get<bool>()) {
      throw MeshError("\"closed\" flag disagrees with the triangle connectivity");
    }
  }
  if (const auto it = j.find("constraint_profile"); it != j.end() && !it->is_null()) {
    ProfileSpec spec = profile_spec_from_json(*it, source);
    if (spec.n != n) structural(source, "constraint profile n differs from immersion n");
    im.constraint = resolve_profile(spec, cfg).surface();
    out.constraint_spec = std::move(spec);
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonInputError(path.string(), 0, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw JsonInputError(path.string(), e.byte, e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& row) {
  if (row.size() != width_) throw std::invalid_argument("CSV row width mismatch");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += format_double(row[i]);
  }
  text_ += '\n';
}

std::string CsvWriter::str() const { return text_; }

void CsvWriter::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text_;
}

json to_json(const AmbientVector& v) {
  json a = json::array();
  for (double c : v.components()) a.push_back(c);
  return a;
}

AmbientVector ambient_vector_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2) throw std::invalid_argument("vector must be a numeric array");
  std::vector<double> c;
  for (const auto& x : j) {
    if (!x.is_number()) throw std::invalid_argument("vector must be a numeric array");
    c.push_back(x.get<double>());
  }
  return AmbientVector(std::move(c));
}

}  // namespace rwspace
