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

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "commands.hpp"
#include "common.hpp"
#include "rwspace/flow.hpp"

namespace rwspace::cli {

namespace {

using nlohmann::json;

struct Family {
  DiscreteImmersion immersion;
  ProfileSpec spec;
};

ProfileSpec closed_form_spec(std::string expr, int n) {
  ProfileSpec spec;
  spec.kind = ProfileSpec::Kind::kProfile;
  spec.expr = std::move(expr);
  spec.var = "t";
  spec.n = n;
  return spec;
}

ProfileSpec de_sitter_spec(int n, double radius) {
  return closed_form_spec("sqrt(" + format_double(radius * radius) + " + t^2)", n);
}

bool is_surface_family(const FamilyOptions& o) { return o.family == "slice-sphere" && o.k == 2; }

// `resolution` is the vertex count for curves and the icosphere subdivision
// level for surfaces.
Family build_family(const FamilyOptions& o, int resolution, double grading) {
  const std::string& f = o.family;
  if (f == "great-circle") {
    const int n = o.n.value_or(1);
    return {make_slice_sphere(de_sitter_surface(n, o.radius), 0.0, 1, resolution, grading),
            de_sitter_spec(n, o.radius)};
  }
  if (f == "slice-sphere") {
    if (o.profile) {
      ProfileSpec spec = load_profile_spec(*o.profile);
      if (o.n && *o.n != spec.n) throw std::invalid_argument("--n differs from the profile's n");
      const RotationHypersurface q = resolve_profile(spec).surface();
      return {make_slice_sphere(q, o.t0, o.k, resolution, grading), std::move(spec)};
    }
    const int n = o.n.value_or(o.k);
    return {make_slice_sphere(de_sitter_surface(n, o.radius), o.t0, o.k, resolution, grading),
            de_sitter_spec(n, o.radius)};
  }
  if (f == "product-geodesic") {
    const int n = o.n.value_or(1);
    return {make_product_geodesic_Q1(o.a, o.turns, resolution, n, grading), closed_form_spec("1", n)};
  }
  if (f == "desitter-geodesic") {
    const int n = o.n.value_or(2);
    if (n < 2) throw std::invalid_argument("desitter-geodesic needs n >= 2");
    const std::size_t dim = static_cast<std::size_t>(n) + 2;
    const AmbientVector p = AmbientVector::basis(dim, 1);
    const AmbientVector v =
        std::sinh(o.boost) * AmbientVector::basis(dim, 0) + std::cosh(o.boost) * AmbientVector::basis(dim, 2);
    return {make_desitter_geodesic(p, v, resolution, o.radius, grading), de_sitter_spec(n, o.radius)};
  }
  if (f == "perturbed-circle") {
    const int n = o.n.value_or(2);
    return {make_perturbed_great_circle(n, resolution, o.amplitude, o.mode), de_sitter_spec(n, 1.0)};
  }
  throw std::invalid_argument("unknown family \"" + f + "\"");
}

}  // namespace

int run_families(const FamilyOptions& o) {
  const int resolution = is_surface_family(o) ? o.refine.value_or(3) : o.grid;
  Family fam = build_family(o, resolution, o.grading.value_or(0.0));
  if (o.perturb) fam.immersion = perturb_randomly(fam.immersion, *o.perturb, o.seed);
  const auto out = prepare_out_dir(o.out);
  const auto path = out / (o.family + ".json");
  write_json_file(path, immersion_to_json(fam.immersion, fam.spec));
  std::printf("wrote %s (%zu vertices)\n", path.string().c_str(), fam.immersion.positions.size());
  return kExitOk;
}

int run_study(const FamilyOptions& o) {
  if (o.perturb) throw std::invalid_argument("--perturb is not supported by study");
  const int levels = o.refine.value_or(3);
  const bool surface = is_surface_family(o);
  const double grading = o.grading.value_or(surface ? 0.0 : 0.25);
  std::vector<std::size_t> vertex_counts;
  const RefinementStudy st = refinement_study(
      [&](int level) {
        // Surfaces start from two subdivisions; curves double the vertex count.
        const int resolution = surface ? 2 + level : o.grid << level;
        Family fam = build_family(o, resolution, grading);
        vertex_counts.push_back(fam.immersion.positions.size());
        return fam.immersion;
      },
      levels, o.mass);
  const auto out = prepare_out_dir(o.out);

  CsvWriter table({"level", "vertex_count", "h", "residual_sup"});
  json rows = json::array();
  for (std::size_t i = 0; i < st.h.size(); ++i) {
    table.add_row({static_cast<double>(i), static_cast<double>(vertex_counts[i]), st.h[i], st.residual_sup[i]});
    rows.push_back({{"level", i},
                    {"vertex_count", vertex_counts[i]},
                    {"h", number(st.h[i])},
                    {"residual_sup", number(st.residual_sup[i])}});
  }
  table.write(out / "study.csv");
  write_json_file(out / "study.json", {{"command", "study"},
                                       {"family", o.family},
                                       {"levels", levels},
                                       {"grading", grading},
                                       {"mass_lumping", mass_name(o.mass)},
                                       {"order", number(st.order)},
                                       {"exact", st.exact},
                                       {"rows", rows}});
  std::printf("observed order %s%s\n", format_double(st.order).c_str(),
              st.exact ? " (all residuals at roundoff)" : "");
  return kExitOk;
}

}  // namespace rwspace::cli
