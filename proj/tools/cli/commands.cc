// Copyright 2026 The Authors.
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

#include "cli/commands.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/suites.h"
#include "weylret/errors.h"
#include "weylret/fan.h"
#include "weylret/json_io.h"
#include "weylret/matroid.h"
#include "weylret/retraction.h"
#include "weylret/torus_orbit.h"
#include "weylret/weyl.h"

namespace weylret::cli {
namespace {

struct Options {
  std::string out;
  std::string group;
  std::string set;
  std::string u;
  std::string method = "algebraic";
  std::string strategy = "minimal-set";
  bool closest = false;
  std::string side = "minimal";
  bool flag = false;
  std::string nu;
  uint64_t samples = 1000;
  int min_size = 2;
  int max_size = 6;
  std::string matrix;
  std::string table;
  std::string lambda;
  int n = 3;
  uint64_t seed = 1;
  std::string profile = "generic";
  double density = 0.5;
  std::string lo;
  std::string hi;
  int retries = 10'000;
  std::string suite;
  int count = 100;
  double budget = 600;
  bool timing = false;
};

// Inline JSON when the text starts with '[' or '{', otherwise a file path.
Json LoadJson(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    return ParseJsonText(text);
  }
  std::ifstream in(text);
  if (!in) throw ParseError("cannot read '" + text + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJsonText(buffer.str());
}

MatroidStrategy ParseStrategy(const std::string& name) {
  return name == "greedy-first" ? MatroidStrategy::kGreedyFirst
                                : MatroidStrategy::kMinimalSet;
}

SubsetM LoadSet(const Options& o) {
  if (o.set == "fano") {
    SubsetM fano = FanoMatroidS7();
    if (!o.group.empty() &&
        ParseGroup(o.group) != fano.group().descriptor()) {
      throw DescriptorMismatch("the Fano set lives in A6");
    }
    return fano;
  }
  if (o.group.empty()) throw ParseError("--group is required with --set");
  const WeylGroup g(ParseGroup(o.group));
  return SubsetM(g, WindowListFromJson(LoadJson(o.set)));
}

RationalVector ParseVector(const std::string& text) {
  if (text.find('[') != std::string::npos) {
    return VectorFromJson(ParseJsonText(text));
  }
  RationalVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(ParseRational(item));
  return out;
}

Json ClosestToJson(const ClosestSet& c) {
  return Json{{"distance", c.distance}, {"argmins", WindowListToJson(c.argmins)}};
}

Json WitnessJson(const NotAMatroidAt& e) {
  Json minimal = Json::array();
  for (const auto& w : e.minimal()) minimal.push_back(w);
  return Json{{"error", "not-a-matroid"},
              {"witness", e.u()},
              {"minimal", minimal},
              {"message", e.what()}};
}

void Emit(const Json& j, const Options& o, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw PreconditionError("cannot write '" + o.out + "'");
  file << text;
}

int Retract(const Options& o, std::ostream& out) {
  const SubsetM m = LoadSet(o);
  const SignedPermutation u = m.group().Element(ParseWindow(o.u).window());
  if (o.method != "algebraic" && o.method != "matroid" && o.method != "both") {
    throw ParseError("unknown method '" + o.method + "'");
  }
  Json result{{"group", GroupToJson(m.group().descriptor())},
              {"u", WindowToJson(u)}};
  std::optional<SignedPermutation> algebraic;
  if (o.method != "matroid") {
    const AlgebraicRetraction a = AlgebraicRetractWithIndices(m, u);
    algebraic = a.image;
    result["algebraic"] = {{"image", WindowToJson(a.image)},
                           {"indices", a.indices}};
  }
  if (o.closest) result["closest"] = ClosestToJson(FindClosest(m, u));
  if (o.method != "algebraic") {
    try {
      const SignedPermutation r = MatroidRetract(m, u, ParseStrategy(o.strategy));
      result["matroid"] = {{"image", WindowToJson(r)}};
      if (algebraic) result["agree"] = *algebraic == r;
    } catch (const NotAMatroidAt& e) {
      Json failure = WitnessJson(e);
      failure["partial"] = result;
      Emit(failure, o, out);
      return kExitNotAMatroid;
    }
  }
  result["image"] = o.method == "matroid" ? result["matroid"]["image"]
                                          : result["algebraic"]["image"];
  Emit(result, o, out);
  return kExitOk;
}

int MatroidCheck(const Options& o, std::ostream& out) {
  const SubsetM m = LoadSet(o);
  MatroidCheckOptions options;
  options.side = o.side == "maximal" ? Extremum::kMaximal : Extremum::kMinimal;
  options.strategy = ParseStrategy(o.strategy);
  Json result = VerdictToJson(IsCoxeterMatroid(m, options));
  result["size"] = m.size();
  result["side"] = o.side;
  if (o.flag) result["flag_matroid"] = IsFlagMatroid(m);
  Emit(result, o, out);
  return kExitOk;
}

int MatroidPolytopeCmd(const Options& o, std::ostream& out) {
  const SubsetM m = LoadSet(o);
  const RationalVector nu =
      o.nu.empty() ? DefaultBasePoint(m.group()) : ParseVector(o.nu);
  Emit(PolytopeToJson(PhiPolytopeCheck(m, nu)), o, out);
  return kExitOk;
}

int MatroidSearch(const Options& o, std::ostream& out) {
  if (o.group.empty()) throw ParseError("--group is required");
  const WeylGroup g(ParseGroup(o.group));
  const SearchResult r = SearchUniqueClosestNonMatroid(g, o.samples, o.seed,
                                                       o.min_size, o.max_size);
  Json found = Json::array();
  for (const auto& ws : r.counterexamples) found.push_back(WindowListToJson(ws));
  Emit(Json{{"group", GroupToJson(g.descriptor())},
            {"seed", r.seed},
            {"samples", r.samples},
            {"counterexamples", found},
            {"version", WEYLRET_VERSION}},
       o, out);
  return kExitOk;
}

RationalMatrix LoadMatrix(const Options& o) {
  if (o.matrix.empty()) throw ParseError("--matrix is required");
  return MatrixFromJson(LoadJson(o.matrix));
}

int OrbitFixedPointsCmd(const Options& o, std::ostream& out) {
  const OrbitFixedPoints fp = FixedPoints(LoadMatrix(o));
  Emit(Json{{"support", SupportToJson(fp.support)},
            {"fixed_points", WindowListToJson(fp.points)}},
       o, out);
  return kExitOk;
}

RetractionTable OrbitTable(const RationalMatrix& x, const std::string& method,
                           MatroidStrategy strategy) {
  if (method == "geometric") return GeometricTable(x);
  const SubsetM y = FixedPoints(x).AsSubset();
  if (method == "algebraic") {
    return BuildRetractionTable(y, RetractionMethod::kAlgebraic);
  }
  if (method == "matroid") {
    return BuildRetractionTable(y, RetractionMethod::kMatroid, strategy);
  }
  throw ParseError("unknown method '" + method + "'");
}

int OrbitTableCmd(const Options& o, std::ostream& out) {
  try {
    Emit(TableToJson(OrbitTable(LoadMatrix(o), o.method,
                                ParseStrategy(o.strategy))),
         o, out);
  } catch (const NotAMatroidAt& e) {
    Emit(WitnessJson(e), o, out);
    return kExitNotAMatroid;
  }
  return kExitOk;
}

int OrbitSample(const Options& o, std::ostream& out) {
  SampleProfile profile;
  if (o.profile == "generic") {
    profile.kind = SampleKind::kGeneric;
  } else if (o.profile == "sparse") {
    profile.kind = SampleKind::kSparse;
  } else if (o.profile == "interval") {
    profile.kind = SampleKind::kInterval;
    profile.interval_lo = ParseWindow(o.lo);
    profile.interval_hi = ParseWindow(o.hi);
  } else {
    throw ParseError("unknown profile '" + o.profile + "'");
  }
  profile.density = o.density;
  profile.max_retries = o.retries;
  const RationalMatrix x = SampleRationalPoint(o.n, o.seed, profile);
  Emit(Json{{"n", o.n},
            {"seed", o.seed},
            {"profile", o.profile},
            {"matrix", MatrixToJson(x)},
            {"version", WEYLRET_VERSION}},
       o, out);
  return kExitOk;
}

RetractionTable FanInput(const Options& o) {
  if (!o.table.empty()) return TableFromJson(LoadJson(o.table));
  if (!o.matrix.empty()) {
    return OrbitTable(LoadMatrix(o), o.method, ParseStrategy(o.strategy));
  }
  if (!o.set.empty()) {
    const SubsetM m = LoadSet(o);
    return BuildRetractionTable(m, o.method == "matroid"
                                       ? RetractionMethod::kMatroid
                                       : RetractionMethod::kAlgebraic);
  }
  throw ParseError("one of --table, --matrix or --set is required");
}

int FanBuild(const Options& o, std::ostream& out) {
  Emit(FanToJson(OrbitFan::Build(FanInput(o))), o, out);
  return kExitOk;
}

int FanQuery(const Options& o, std::ostream& out) {
  const OrbitFan fan = OrbitFan::Build(FanInput(o));
  const ConeQueryResult r = fan.Query(ParseVector(o.lambda));
  Emit(Json{{"cone", WindowToJson(r.y)},
            {"grade", MembershipName(r.grade)},
            {"chambers", WindowListToJson(fan.cones().at(r.y))}},
       o, out);
  return kExitOk;
}

int Verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.seed = o.seed;
  options.count = o.count;
  options.budget_seconds = o.budget;
  const SuiteReport report = RunSuite(o.suite, options);
  Emit(report.ToJson(), o, out);
  if (o.timing) {
    err << report.suite << ": " << std::fixed << std::setprecision(3)
        << report.seconds << " s\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

void AddSetOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group,
                  "Group: shorthand such as A3, BC2, A1xD3, or descriptor JSON");
  cmd->add_option("--set", o.set,
                  "Subset M: JSON list of windows, a file, or 'fano'");
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app("Retractions, Coxeter matroids and torus orbit fans of "
               "classical Weyl groups",
               "weylret");
  app.set_version_flag("--version", WEYLRET_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Write JSON here instead of stdout");

  CLI::App* retract = app.add_subcommand("retract", "Retract u onto M");
  AddSetOptions(retract, o);
  retract->add_option("--u", o.u, "Window of u")->required();
  retract->add_option("--method", o.method, "algebraic, matroid or both")
      ->check(CLI::IsMember({"algebraic", "matroid", "both"}));
  retract->add_option("--strategy", o.strategy, "minimal-set or greedy-first")
      ->check(CLI::IsMember({"minimal-set", "greedy-first"}));
  retract->add_flag("--closest", o.closest, "Also list the closest elements");

  CLI::App* matroid = app.add_subcommand("matroid", "Coxeter matroid checks");
  matroid->require_subcommand(1);
  CLI::App* check = matroid->add_subcommand("check", "Coxeter matroid test");
  AddSetOptions(check, o);
  check->add_option("--side", o.side, "minimal or maximal")
      ->check(CLI::IsMember({"minimal", "maximal"}));
  check->add_option("--strategy", o.strategy, "minimal-set or greedy-first")
      ->check(CLI::IsMember({"minimal-set", "greedy-first"}));
  check->add_flag("--flag", o.flag, "Also test the flag maximality property");
  CLI::App* polytope =
      matroid->add_subcommand("polytope", "Edges of the polytope of M");
  AddSetOptions(polytope, o);
  polytope->add_option("--nu", o.nu, "Base point, JSON or comma list");
  CLI::App* search = matroid->add_subcommand(
      "search", "Random unique-closest subsets that are not matroids");
  search->add_option("--group", o.group, "Group shorthand or JSON");
  search->add_option("--samples", o.samples, "Number of random subsets");
  search->add_option("--seed", o.seed, "Random seed");
  search->add_option("--min-size", o.min_size, "Smallest subset size");
  search->add_option("--max-size", o.max_size, "Largest subset size");

  CLI::App* orbit = app.add_subcommand("orbit", "Torus orbit closures");
  orbit->require_subcommand(1);
  CLI::App* fixed = orbit->add_subcommand("fixed-points", "Plücker support");
  fixed->add_option("--matrix", o.matrix, "Matrix JSON or file")->required();
  CLI::App* table = orbit->add_subcommand("table", "Retraction table");
  table->add_option("--matrix", o.matrix, "Matrix JSON or file")->required();
  table->add_option("--method", o.method, "geometric, algebraic or matroid")
      ->check(CLI::IsMember({"geometric", "algebraic", "matroid"}))
      ->default_str("geometric");
  table->add_option("--strategy", o.strategy, "minimal-set or greedy-first")
      ->check(CLI::IsMember({"minimal-set", "greedy-first"}));
  CLI::App* sample = orbit->add_subcommand("sample", "Random matrix");
  sample->add_option("--n", o.n, "Size")->check(CLI::Range(1, 30));
  sample->add_option("--seed", o.seed, "Random seed");
  sample->add_option("--profile", o.profile, "generic, sparse or interval")
      ->check(CLI::IsMember({"generic", "sparse", "interval"}));
  sample->add_option("--density", o.density, "Sparse nonzero probability");
  sample->add_option("--lo", o.lo, "Interval bottom window");
  sample->add_option("--hi", o.hi, "Interval top window");
  sample->add_option("--retries", o.retries, "Attempts before giving up");

  CLI::App* fan = app.add_subcommand("fan", "Fan of a torus orbit closure");
  fan->require_subcommand(1);
  CLI::App* build = fan->add_subcommand("build", "Maximal cones");
  CLI::App* query = fan->add_subcommand("query", "Cone containing lambda");
  for (CLI::App* cmd : {build, query}) {
    cmd->add_option("--table", o.table, "Retraction table JSON or file");
    cmd->add_option("--matrix", o.matrix, "Matrix JSON or file");
    AddSetOptions(cmd, o);
    cmd->add_option("--method", o.method,
                    "Table source: geometric, algebraic or matroid")
        ->check(CLI::IsMember({"geometric", "algebraic", "matroid"}));
  }
  query->add_option("--lambda", o.lambda, "Point, JSON or comma list")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "Run an experiment suite");
  verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember(SuiteNames()));
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--count", o.count, "Matrices per size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--budget", o.budget, "Fano budget in seconds");
  verify->add_flag("--timing", o.timing, "Print wall time to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*retract) return Retract(o, out);
    if (*check) return MatroidCheck(o, out);
    if (*polytope) return MatroidPolytopeCmd(o, out);
    if (*search) return MatroidSearch(o, out);
    if (*fixed) return OrbitFixedPointsCmd(o, out);
    if (*table) {
      if (table->count("--method") == 0) o.method = "geometric";
      return OrbitTableCmd(o, out);
    }
    if (*sample) return OrbitSample(o, out);
    if (*build || *query) {
      if (build->count("--method") == 0 && query->count("--method") == 0) {
        o.method = o.matrix.empty() ? "algebraic" : "geometric";
      }
      return *build ? FanBuild(o, out) : FanQuery(o, out);
    }
    if (*verify) return Verify(o, out, err);
  } catch (const NotAMatroidAt& e) {
    Emit(WitnessJson(e), o, out);
    return kExitNotAMatroid;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitFailure;
}

}  // namespace weylret::cli
