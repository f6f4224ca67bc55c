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
#include <vector>

#include "commands.hpp"
#include "common.hpp"
#include "rwspace/qsurface.hpp"

namespace rwspace::cli {

namespace {

using nlohmann::json;

json interval_json(const Interval& iv) { return json::array({number(iv.lo), number(iv.hi)}); }

json admissibility_json(const AdmissibilityReport& rep) {
  json violations = json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"t", number(v.t)}, {"r", number(v.r)}, {"r1", number(v.r1)}});
  }
  return {{"admissible", rep.admissible()},
          {"min_r", number(rep.min_r)},
          {"max_abs_r1", number(rep.max_abs_r1)},
          {"violation_count", rep.violations.size()},
          {"violations", violations}};
}

void require_admissible(const AdmissibilityReport& rep) {
  if (rep.admissible()) return;
  const auto& v = rep.violations.front();
  throw ValidationFailure("profile is not admissible at " + std::to_string(rep.violations.size()) +
                          " grid points (first: t = " + format_double(v.t) +
                          ", r = " + format_double(v.r) + ", r' = " + format_double(v.r1) + ")");
}

std::vector<double> profile_grid(const ProfileFunction& p, int size) {
  return interior_grid(p.interval, size, QuadratureConfig{}.truncation);
}

}  // namespace

int run_profile(const ProfileOptions& o) {
  const ProfileSpec spec = load_profile_spec(o.spec);
  const ResolvedProfile resolved = resolve_profile(spec);
  const auto out = prepare_out_dir(o.out);
  const AdmissibilityReport adm = check_admissible(resolved.profile, o.grid);

  json report{{"command", "profile"},
              {"spec", to_json(spec)},
              {"grid_size", o.grid},
              {"profile_interval", interval_json(resolved.profile.interval)},
              {"admissibility", admissibility_json(adm)}};

  if (!adm.admissible()) {
    write_json_file(out / "profile_report.json", report);
    require_admissible(adm);
  }

  CsvWriter table({"t", "r", "r1", "r2"});
  for (double t : profile_grid(resolved.profile, o.grid)) {
    const Jet j = resolved.profile.jet(t);
    table.add_row({t, j.value, j.d1, j.d2});
  }
  table.write(out / "profile.csv");

  // Matched samples (s, t = h(s), f(s), r(t)) of the two descriptions.
  CsvWriter conversion({"s", "t", "f", "r"});
  if (resolved.warp) {
    const WarpingFunction& w = *resolved.warp;
    for (double s : interior_grid(w.interval, o.grid, QuadratureConfig{}.truncation)) {
      const double t = resolved.h->value(s);
      conversion.add_row({s, t, w.f.jet(s).value, resolved.profile.jet(t).value});
    }
    report["warp_interval"] = interval_json(w.interval);
  } else {
    const ProfileToWarpResult back = profile_to_warp(resolved.profile, spec.n);
    for (double t : profile_grid(resolved.profile, o.grid)) {
      const double s = back.h_tilde.value(t);
      conversion.add_row({s, t, back.warp.f.jet(s).value, resolved.profile.jet(t).value});
    }
    report["warp_interval"] = interval_json(back.warp.interval);
  }
  conversion.write(out / "conversion.csv");
  report["tables"] = {{"profile", "profile.csv"}, {"conversion", "conversion.csv"}};
  write_json_file(out / "profile_report.json", report);
  std::printf("admissible profile, max |r'| = %s\n", format_double(adm.max_abs_r1).c_str());
  return kExitOk;
}

int run_geometry(const ProfileOptions& o) {
  const ProfileSpec spec = load_profile_spec(o.spec);
  const RotationHypersurface q = resolve_profile(spec).surface();
  require_admissible(check_admissible(q.profile, o.grid));
  const auto out = prepare_out_dir(o.out);

  CsvWriter table({"t", "r", "r1", "r2", "alpha", "beta", "H", "N_t", "N_x1", "T_t", "T_x1", "K_t",
                   "K_x1", "rho"});
  for (double t : profile_grid(q.profile, o.grid)) {
    const Jet j = q.jet(t);
    const AmbientVector p = profile_point(q, t);
    const AmbientVector nrm = unit_normal(q, p);
    const AmbientVector tt = unit_timelike_T(q, p);
    const ConformalField kf = conformal_K(q, p);
    const WeingartenCoefficients ab = alpha_beta(q, t);
    table.add_row({t, j.value, j.d1, j.d2, ab.alpha, ab.beta, mean_curvature_H(q, t), nrm[0], nrm[1],
                   tt[0], tt[1], kf.k[0], kf.k[1], kf.rho});
  }
  table.write(out / "geometry.csv");
  std::printf("wrote %d samples\n", o.grid);
  return kExitOk;
}

int run_classify(const ProfileOptions& o) {
  const ProfileSpec spec = load_profile_spec(o.spec);
  const ResolvedProfile resolved = resolve_profile(spec);
  const RotationHypersurface q = resolved.surface();
  const std::vector<double> grid = profile_grid(q.profile, o.grid);
  const SurfaceClassification c = classify(q, grid, o.tol.value_or(0.0));
  const NccReport ncc = resolved.warp ? ncc_check(*resolved.warp, o.grid) : ncc_check(q, o.grid);
  const auto out = prepare_out_dir(o.out);

  auto intervals = [](const std::vector<Interval>& v) {
    json a = json::array();
    for (const auto& iv : v) a.push_back(interval_json(iv));
    return a;
  };

  json report{
      {"command", "classify"},
      {"spec", to_json(spec)},
      {"n", q.n},
      {"grid_size", o.grid},
      {"tol", c.tol},
      {"umbilical",
       {{"holds", c.umbilical.holds},
        {"a", number(c.umbilical.a)},
        {"b", number(c.umbilical.b)},
        {"max_abs_beta", number(c.umbilical.max_abs_beta)},
        {"sectional_curvature",
         c.umbilical.holds ? number(sectional_curvature_umbilical(c)) : json(nullptr)}}},
      {"cmc",
       {{"holds", c.cmc.holds},
        {"c", number(c.cmc.c)},
        {"stdev", number(c.cmc.stdev)},
        {"mean_h", number(c.cmc.mean_h)},
        {"relation_residual", number(c.cmc.relation_residual)}}},
      {"proportional_curvatures",
       {{"holds", c.ppc.holds},
        {"lambda", number(c.ppc.lambda)},
        {"max_residual", number(c.ppc.max_residual)}}},
      {"ncc",
       {{"warp_holds", ncc.warp_holds},
        {"profile_holds", ncc.profile_holds},
        {"signs_agree", ncc.signs_agree},
        {"max_identity_error", number(ncc.max_identity_error)},
        {"warp_violations", intervals(ncc.warp_violations)},
        {"profile_violations", intervals(ncc.profile_violations)}}},
      {"first_integral", nullptr}};
  if (q.n == 1) {
    const FirstIntegralReport fi = cmc_first_integral_n1(q, grid, o.tol.value_or(0.0));
    report["first_integral"] = {{"applicable", fi.applicable},
                                {"mean", number(fi.mean)},
                                {"max_deviation", number(fi.max_deviation)}};
  }

  CsvWriter table({"t", "beta", "cmc_invariant", "ppc_residual"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.add_row({grid[i], c.umbilical.beta[i], c.cmc.invariant[i], c.ppc.residual[i]});
  }
  table.write(out / "classification.csv");
  write_json_file(out / "classification.json", report);
  std::printf("umbilical=%s cmc=%s proportional=%s ncc=%s\n", c.umbilical.holds ? "yes" : "no",
              c.cmc.holds ? "yes" : "no", c.ppc.holds ? "yes" : "no",
              ncc.profile_holds ? "yes" : "no");
  return kExitOk;
}

}  // namespace rwspace::cli
