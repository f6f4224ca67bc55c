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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "commands.hpp"
#include "common.hpp"
#include "rwspace/flow.hpp"

namespace rwspace::cli {

namespace {

using nlohmann::json;

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const NonSpacelikeError*>(&e)) return "non_spacelike";
  if (dynamic_cast<const DegenerateSimplexError*>(&e)) return "degenerate_simplex";
  if (dynamic_cast<const ConstraintError*>(&e)) return "constraint";
  if (dynamic_cast<const OutsideProfileDomain*>(&e)) return "outside_profile_domain";
  return "invalid";
}

// Largest relative distance | |x| - r(t) | / r(t) from Q(r); infinite when a
// vertex lies outside the profile interval.
double max_constraint_error(const DiscreteImmersion& im) {
  const RotationHypersurface& q = im.surface();
  double worst = 0.0;
  for (const auto& p : im.positions) {
    if (!q.profile.interval.contains(p.time())) return std::numeric_limits<double>::infinity();
    const double r = q.jet(p.time()).value;
    worst = std::max(worst, std::abs(spatial_radius(p) - r) / r);
  }
  return worst;
}

json spec_or_null(const std::optional<ProfileSpec>& spec) { return spec ? to_json(*spec) : json(nullptr); }

FlowConfig read_flow_config(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_object()) throw JsonInputError(path, 0, "flow config must be a JSON object");
  FlowConfig cfg;
  for (const auto& [key, value] : j.items()) {
    auto bad = [&](const char* what) {
      throw JsonInputError(path, 0, "\"" + key + "\" must be " + what);
    };
    if (key == "step" || key == "tol" || key == "min_edge_ratio" || key == "min_angle_deg") {
      if (!value.is_number()) bad("a number");
      const double x = value.get<double>();
      if (key == "step") cfg.step = x;
      if (key == "tol") cfg.tol = x;
      if (key == "min_edge_ratio") cfg.min_edge_ratio = x;
      if (key == "min_angle_deg") cfg.min_angle_deg = x;
    } else if (key == "max_iters" || key == "reproject_every") {
      if (!value.is_number_integer()) bad("an integer");
      (key == "max_iters" ? cfg.max_iters : cfg.reproject_every) = value.get<int>();
    } else if (key == "spacelike_guard") {
      if (!value.is_boolean()) bad("a boolean");
      cfg.spacelike_guard = value.get<bool>();
    } else if (key == "mass") {
      if (value != "mixed" && value != "barycentric") bad("\"mixed\" or \"barycentric\"");
      cfg.lumping = parse_mass(value.get<std::string>());
    } else {
      throw JsonInputError(path, 0, "unknown flow config key \"" + key + "\"");
    }
  }
  return cfg;
}

}  // namespace

int run_immersion(const ImmersionOptions& o) {
  const LoadedImmersion loaded = load_immersion(o.immersion, o.profile);
  const DiscreteImmersion& im = loaded.immersion;
  const auto out = prepare_out_dir(o.out);

  json report{{"command", "immersion"},
              {"k", im.k()},
              {"n", im.ambient_n},
              {"vertex_count", im.positions.size()},
              {"simplex_count", im.domain.simplex_count()},
              {"closed", im.domain.closed()},
              {"constrained", im.constraint.has_value()},
              {"constraint_profile", spec_or_null(loaded.constraint_spec)},
              {"min_gram_eigenvalue", number(min_gram_eigenvalue(im))},
              {"max_constraint_error", im.constraint ? number(max_constraint_error(im)) : json(nullptr)},
              {"valid", true},
              {"error", nullptr}};
  std::string failure;
  try {
    im.validate();
  } catch (const std::exception& e) {
    failure = e.what();
    report["valid"] = false;
    report["error"] = {{"kind", error_kind(e)}, {"message", failure}};
  }
  write_json_file(out / "validation.json", report);
  if (!failure.empty()) throw ValidationFailure(failure);
  std::printf("valid %s immersion with %zu vertices\n", im.k() == 1 ? "curve" : "surface",
              im.positions.size());
  return kExitOk;
}

int run_verify(const ImmersionOptions& o) {
  const LoadedImmersion loaded = load_immersion(o.immersion, o.profile);
  const DiscreteImmersion& im = loaded.immersion;
  im.validate();
  const MassLumping mass = o.mass.value_or(MassLumping::kMixedVoronoi);
  const StationarityReport rep = takahashi_residual(im, mass);
  const MeanCurvatureInQ hq = mean_curvature_in_Q(im, mass);
  const TraceDiagnostics tr = trace_diagnostics(im, rep);
  const TangentialTReport tt = T_tangential_identity(im);
  const EdgeLengths el = edge_lengths(im);
  const auto out = prepare_out_dir(o.out);

  double q_min = std::numeric_limits<double>::infinity();
  double q_max = -q_min;
  double normal_max = 0.0;
  for (std::size_t v = 0; v < rep.q.size(); ++v) {
    if (!rep.evaluated[v]) continue;
    q_min = std::min(q_min, rep.q[v]);
    q_max = std::max(q_max, rep.q[v]);
    normal_max = std::max(normal_max, std::abs(hq.normal_component[v]));
  }
  json component_sup = json::array();
  for (double c : rep.component_sup) component_sup.push_back(number(c));

  json report{
      {"command", "verify"},
      {"k", im.k()},
      {"n", im.ambient_n},
      {"vertex_count", im.positions.size()},
      {"closed", im.domain.closed()},
      {"mass_lumping", mass_name(mass)},
      {"constraint_profile", spec_or_null(loaded.constraint_spec)},
      {"edge_length", {{"min", number(el.min)}, {"max", number(el.max)}}},
      {"residual",
       {{"sup", number(rep.sup)},
        {"l2", number(rep.l2)},
        {"l1", number(rep.l1)},
        {"lorentz_sup", number(rep.lorentz_sup)},
        {"component_sup", component_sup},
        {"form_difference", number(rep.form_difference)}}},
      {"q", {{"min", number(q_min)}, {"max", number(q_max)}}},
      {"mean_curvature_in_Q",
       {{"sup_norm", number(hq.sup_norm)}, {"max_abs_normal_component", number(normal_max)}}},
      {"trace",
       {{"max_rel_trace_error", number(tr.max_rel_trace_error)},
        {"max_rel_ah_error", number(tr.max_rel_ah_error)}}},
      {"tangential_T", {{"max_abs_residual", number(tt.max_abs_residual)}}},
      {"integral_identity", nullptr},
      {"tol", o.tol ? number(*o.tol) : json(nullptr)},
      {"stationary", o.tol ? json(rep.sup <= *o.tol) : json(nullptr)}};
  if (im.domain.closed()) {
    const IntegralIdentity ii = integral_identity(im, rep);
    report["integral_identity"] = {{"value", number(ii.value)}, {"residual_l1", number(ii.residual_l1)}};
  }

  std::vector<std::string> header{"vertex", "q"};
  for (std::size_t i = 0; i < im.ambient_dim(); ++i) header.push_back("res" + std::to_string(i));
  header.push_back("res_norm");
  CsvWriter table(header);
  for (std::size_t v = 0; v < rep.residual.size(); ++v) {
    if (!rep.evaluated[v]) continue;
    std::vector<double> row{static_cast<double>(v), rep.q[v]};
    for (double c : rep.residual[v].components()) row.push_back(c);
    row.push_back(rep.residual_norm[v]);
    table.add_row(row);
  }
  table.write(out / "residual.csv");
  write_json_file(out / "stationarity.json", report);
  std::printf("sup |Lap Psi + q P| = %s\n", format_double(rep.sup).c_str());
  if (o.tol && !(rep.sup <= *o.tol)) {
    throw ValidationFailure("residual sup " + format_double(rep.sup) + " exceeds tol " +
                            format_double(*o.tol));
  }
  return kExitOk;
}

int run_flow(const ImmersionOptions& o) {
  const LoadedImmersion loaded = load_immersion(o.immersion, o.profile);
  loaded.immersion.validate();
  FlowConfig cfg = o.config ? read_flow_config(*o.config) : FlowConfig{};
  if (o.tol) cfg.tol = *o.tol;
  if (o.max_iters) cfg.max_iters = *o.max_iters;
  if (o.mass) cfg.lumping = *o.mass;
  cfg.validate();
  const auto out = prepare_out_dir(o.out);

  const FlowResult res = stationarize(loaded.immersion, cfg);
  const FlowTrace& tr = res.trace;

  CsvWriter table({"iter", "sup_Htilde", "residual", "min_gram_eig"});
  for (std::size_t i = 0; i < tr.sup_h_tilde.size(); ++i) {
    table.add_row({static_cast<double>(i), tr.sup_h_tilde[i], tr.residual[i], tr.min_gram_eig[i]});
  }
  table.write(out / "flow_trace.csv");
  write_json_file(out / "flow_final.json", immersion_to_json(res.immersion, loaded.constraint_spec));

  const bool converged = tr.termination == FlowTermination::kConverged;
  json summary{{"command", "flow"},
               {"termination", to_string(tr.termination)},
               {"converged", converged},
               {"message", tr.message},
               {"iterations", tr.iterations},
               {"step", number(tr.step)},
               {"tol", number(cfg.tol)},
               {"max_iters", cfg.max_iters},
               {"mass_lumping", mass_name(cfg.lumping)},
               {"initial_sup_Htilde", number(tr.sup_h_tilde.front())},
               {"final_sup_Htilde", number(tr.sup_h_tilde.back())},
               {"final_residual", number(tr.residual.back())},
               {"residual_ratio", number(tr.residual_ratio)},
               {"mean_time_initial", number(tr.mean_time.front())},
               {"mean_time_final", number(tr.mean_time.back())},
               {"files", {{"trace", "flow_trace.csv"}, {"immersion", "flow_final.json"}}}};
  write_json_file(out / "flow_summary.json", summary);
  std::printf("%s after %d iterations, sup |H~| = %s\n", to_string(tr.termination), tr.iterations,
              format_double(tr.sup_h_tilde.back()).c_str());
  if (!converged) throw NumericalFailure(std::string("flow did not converge: ") + to_string(tr.termination));
  return kExitOk;
}

}  // namespace rwspace::cli
