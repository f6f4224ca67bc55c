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

#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "common.hpp"
#include "rwspace/expr.hpp"
#include "rwspace/mesh.hpp"

namespace {

using namespace rwspace;
using namespace rwspace::cli;

int fail(int code, const std::string& message) {
  std::fprintf(stderr, "rwspace: %s\n", message.c_str());
  return code;
}

int dispatch(const std::function<int()>& command) {
  try {
    return command();
  } catch (const JsonInputError& e) {
    return fail(kExitMalformedInput, e.what());
  } catch (const ParseError& e) {
    return fail(kExitMalformedInput,
                "expression (offset " + std::to_string(e.offset()) + "): " + e.what());
  } catch (const NumericalFailure& e) {
    return fail(kExitNumerical, e.what());
  } catch (const ValidationFailure& e) {
    return fail(kExitValidation, e.what());
  } catch (const ProfileError& e) {
    return fail(kExitValidation, e.what());
  } catch (const MeshError& e) {
    return fail(kExitValidation, e.what());
  } catch (const ImmersionError& e) {
    return fail(kExitValidation, e.what());
  } catch (const GeometryError& e) {
    return fail(kExitValidation, e.what());
  } catch (const DomainError& e) {
    return fail(kExitValidation, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitValidation, e.what());
  } catch (const std::exception& e) {
    return fail(kExitUsage, e.what());
  }
}

const std::map<std::string, MassLumping> kMassNames{{"mixed", MassLumping::kMixedVoronoi},
                                                    {"barycentric", MassLumping::kBarycentric}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stationary spacelike submanifolds in rotation hypersurfaces of Lorentz-Minkowski space"};
  app.require_subcommand(1);
  std::function<int()> command;

  ProfileOptions po;
  auto add_profile_command = [&](const char* name, const char* help, int (*run)(const ProfileOptions&),
                                 bool with_tol) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("spec", po.spec, "Profile spec JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--grid", po.grid, "Number of sample points")->check(CLI::Range(2, 10000000));
    if (with_tol) sub->add_option("--tol", po.tol, "Classification tolerance (default: automatic)");
    sub->add_option("--out", po.out, "Output directory");
    sub->callback([&, run] { command = [&, run] { return run(po); }; });
  };
  add_profile_command("profile", "Convert between warping function and profile; check admissibility",
                      run_profile, false);
  add_profile_command("geometry", "Sample N, T, K, alpha, beta and H along the profile", run_geometry,
                      false);
  add_profile_command("classify", "Classify Q(r): umbilical, CMC, proportional curvatures, NCC",
                      run_classify, true);

  ImmersionOptions io;
  auto add_immersion_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("immersion", io.immersion, "Immersion JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--profile", io.profile, "Constraint profile spec (overrides the file's)")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", io.out, "Output directory");
    return sub;
  };
  add_immersion_command("immersion", "Validate spacelikeness, connectivity and the constraint")
      ->callback([&] { command = [&] { return run_immersion(io); }; });
  CLI::App* verify = add_immersion_command("verify", "Stationarity report");
  verify->add_option("--tol", io.tol, "Fail with status 2 when the residual sup exceeds this");
  verify->add_option("--mass", io.mass, "Mass lumping")->transform(CLI::CheckedTransformer(kMassNames));
  verify->callback([&] { command = [&] { return run_verify(io); }; });
  CLI::App* flow = add_immersion_command("flow", "Relax toward a stationary immersion");
  flow->add_option("--config", io.config, "Flow config JSON file")->check(CLI::ExistingFile);
  flow->add_option("--tol", io.tol, "Convergence tolerance on sup |H~|");
  flow->add_option("--max-iters", io.max_iters, "Iteration limit");
  flow->add_option("--mass", io.mass, "Mass lumping")->transform(CLI::CheckedTransformer(kMassNames));
  flow->callback([&] { command = [&] { return run_flow(io); }; });

  FamilyOptions fo;
  auto add_family_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("family", fo.family, "Family name")
        ->required()
        ->check(CLI::IsMember({"great-circle", "slice-sphere", "product-geodesic", "desitter-geodesic",
                               "perturbed-circle"}));
    sub->add_option("--profile", fo.profile, "Profile spec for slice-sphere")->check(CLI::ExistingFile);
    sub->add_option("--grid", fo.grid, "Curve vertex count")->check(CLI::Range(3, 100000000));
    sub->add_option("--k", fo.k, "Slice sphere dimension")->check(CLI::Range(1, 2));
    sub->add_option("--n", fo.n, "Sphere dimension of the ambient Q(r)")->check(CLI::PositiveNumber);
    sub->add_option("--t0", fo.t0, "Slice time");
    sub->add_option("--a", fo.a, "Time slope of Q(1) product geodesics");
    sub->add_option("--turns", fo.turns, "Rotations of Q(1) product geodesics")->check(CLI::PositiveNumber);
    sub->add_option("--boost", fo.boost, "Rapidity of the De Sitter geodesic tangent");
    sub->add_option("--radius", fo.radius, "De Sitter radius R in r = sqrt(R^2 + t^2)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--amplitude", fo.amplitude, "Perturbation amplitude of perturbed-circle");
    sub->add_option("--mode", fo.mode, "Angular mode of perturbed-circle");
    sub->add_option("--grading", fo.grading, "Vertex grading epsilon for curves");
    sub->add_option("--out", fo.out, "Output directory");
    return sub;
  };
  CLI::App* families = add_family_command("families", "Write an analytic family immersion file");
  families->add_option("--refine", fo.refine, "Icosphere subdivisions for k = 2")->check(CLI::Range(0, 8));
  families->add_option("--perturb", fo.perturb, "Random perturbation amplitude (projected back)");
  families->add_option("--seed", fo.seed, "Seed for --perturb");
  families->callback([&] { command = [&] { return run_families(fo); }; });
  CLI::App* study = add_family_command("study", "Refinement study of the stationarity residual");
  study->add_option("--refine", fo.refine, "Number of refinement levels")->check(CLI::Range(3, 12));
  study->add_option("--mass", fo.mass, "Mass lumping")->transform(CLI::CheckedTransformer(kMassNames));
  study->callback([&] { command = [&] { return run_study(fo); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  return dispatch(command);
}
