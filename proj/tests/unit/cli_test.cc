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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/suites.h"
#include "gtest/gtest.h"
#include "weylret/json_io.h"

namespace weylret::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return ParseJsonText(out); }
};

Outcome Call(std::vector<std::string> args) {
  args.insert(args.begin(), "weylret");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char kSmallOrbit[] = R"([["1","1","0"],["1","0","1"],["1","0","0"]])";
const char kLineOrbit[] = R"([["1","0","1"],["0","1","0"],["1","0","0"]])";

TEST(CliRetract, GreedyExampleInS4) {
  const Outcome r = Call({"retract", "--group", "A3", "--set",
                          "[[1,4,2,3],[1,4,3,2],[2,4,1,3],[3,4,1,2]]", "--u",
                          "[2,3,1,4]"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["image"], Json::parse("[2,4,1,3]"));
  EXPECT_EQ(r.json()["algebraic"]["indices"], Json::parse("[1,4,3,2]"));
}

TEST(CliRetract, MemberIsFixed) {
  const Outcome r = Call({"retract", "--group", "A3", "--set",
                          "[[1,4,2,3],[1,4,3,2],[2,4,1,3],[3,4,1,2]]", "--u",
                          "3,4,1,2", "--method", "both", "--closest"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["image"], Json::parse("[3,4,1,2]"));
  EXPECT_EQ(j["matroid"]["image"], Json::parse("[3,4,1,2]"));
  EXPECT_EQ(j["closest"]["distance"], 0);
  EXPECT_TRUE(j["agree"].get<bool>());
}

TEST(CliRetract, NonMatroidExitsWithWitness) {
  const Outcome r = Call({"retract", "--group", "A2", "--set",
                          "[[2,1,3],[1,3,2]]", "--u", "[1,2,3]", "--method",
                          "both"});
  EXPECT_EQ(r.code, kExitNotAMatroid);
  const Json j = r.json();
  EXPECT_EQ(j["witness"], Json::parse("[1,2,3]"));
  EXPECT_EQ(j["minimal"], Json::parse("[[1,3,2],[2,1,3]]"));
}

TEST(CliRetract, ParseErrors) {
  EXPECT_EQ(Call({"retract", "--group", "Q3", "--set", "[[1]]", "--u", "1"})
                .code,
            kExitParse);
  EXPECT_EQ(Call({"retract", "--group", "A2", "--set", "[[1,2,3]", "--u",
                  "1,2,3"})
                .code,
            kExitParse);
  EXPECT_EQ(Call({"retract", "--group", "A2", "--set", "[[1,2,3]]"}).code,
            kExitParse);
  EXPECT_EQ(Call({"bogus"}).code, kExitParse);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
}

TEST(CliRetract, PreconditionErrors) {
  // Window outside the group.
  EXPECT_EQ(Call({"retract", "--group", "A2", "--set", "[[1,2,3]]", "--u",
                  "1,2,2"})
                .code,
            kExitPrecondition);
  EXPECT_EQ(Call({"orbit", "fixed-points", "--matrix",
                  R"([["1","1"],["1","1"]])"})
                .code,
            kExitPrecondition);
}

TEST(CliOrbit, FixedPointsOfSmallOrbit) {
  const Outcome r = Call({"orbit", "fixed-points", "--matrix", kSmallOrbit});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["fixed_points"],
            Json::parse("[[1,2,3],[1,3,2],[2,1,3],[3,1,2]]"));
}

TEST(CliOrbit, TableMethodsAgree) {
  const Outcome g = Call({"orbit", "table", "--matrix", kSmallOrbit});
  const Outcome a =
      Call({"orbit", "table", "--matrix", kSmallOrbit, "--method", "algebraic"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(g.json()["provenance"], "geometric-limit");
  EXPECT_EQ(a.json()["provenance"], "algebraic");
  EXPECT_EQ(g.json()["table"], a.json()["table"]);
  EXPECT_EQ(g.json()["table"]["2,3,1"], "2,1,3");
}

TEST(CliOrbit, SampleIsDeterministic) {
  const std::vector<std::string> args = {"orbit", "sample",  "--n",   "4",
                                         "--seed", "17",     "--profile",
                                         "sparse", "--density", "0.4"};
  const Outcome first = Call(args);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_EQ(first.out, Call(args).out);
  EXPECT_EQ(first.json()["seed"], 17);
}

TEST(CliFan, LinealityOfSecondOrbit) {
  const Outcome r = Call({"fan", "build", "--matrix", kLineOrbit});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["lineality"], Json::parse(R"([["1","-2","1"]])"));
  EXPECT_EQ(j["cones"].size(), 2u);
}

TEST(CliFan, QueryAndAmbiguousWall) {
  const Outcome r =
      Call({"fan", "query", "--matrix", kSmallOrbit, "--lambda", "-1,0,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["cone"], Json::parse("[1,2,3]"));
  EXPECT_EQ(r.json()["grade"], "interior");
  // On the wall between C(123) and C(132), whose images differ.
  EXPECT_EQ(
      Call({"fan", "query", "--matrix", kSmallOrbit, "--lambda", "-2,1,1"})
          .code,
      kExitPrecondition);
}

TEST(CliFan, TableFileRoundTrip) {
  const std::string path = ::testing::TempDir() + "cli_table.json";
  const Outcome t = Call({"--out", path, "orbit", "table", "--matrix",
                          kLineOrbit});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_TRUE(t.out.empty());
  const Outcome from_file = Call({"fan", "build", "--table", path});
  const Outcome direct = Call({"fan", "build", "--matrix", kLineOrbit});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_EQ(from_file.out, direct.out);
  std::remove(path.c_str());
}

TEST(CliMatroid, CheckAndPolytope) {
  const Outcome yes = Call({"matroid", "check", "--group", "A2", "--set",
                            "[[1,2,3],[1,3,2],[2,1,3],[3,1,2]]", "--flag"});
  ASSERT_EQ(yes.code, kExitOk) << yes.err;
  EXPECT_TRUE(yes.json()["is_matroid"].get<bool>());
  EXPECT_TRUE(yes.json()["flag_matroid"].get<bool>());

  const Outcome no = Call(
      {"matroid", "check", "--group", "A2", "--set", "[[2,1,3],[1,3,2]]"});
  ASSERT_EQ(no.code, kExitOk) << no.err;
  EXPECT_FALSE(no.json()["is_matroid"].get<bool>());
  EXPECT_EQ(no.json()["witness"], Json::parse("[1,2,3]"));

  const Outcome poly = Call({"matroid", "polytope", "--group", "A2", "--set",
                             "[[2,1,3],[1,3,2]]"});
  ASSERT_EQ(poly.code, kExitOk) << poly.err;
  EXPECT_FALSE(poly.json()["roots_matched"].get<bool>());
  // (1,2,3) is not in the fundamental chamber of A2 from either side.
  EXPECT_EQ(Call({"matroid", "polytope", "--group", "A2", "--set",
                  "[[2,1,3],[1,3,2]]", "--nu", "2,1,3"})
                .code,
            kExitPrecondition);
}

TEST(CliMatroid, FanoIsAMatroid) {
  const Outcome r =
      Call({"matroid", "check", "--set", "fano", "--strategy", "greedy-first"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.json()["is_matroid"].get<bool>());
  EXPECT_EQ(r.json()["size"], 4032);
}

TEST(CliVerify, ReportsAreDeterministic) {
  const Outcome a = Call({"verify", "--suite", "table1", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, Call({"verify", "--suite", "table1", "--seed", "5"}).out);
  const Json j = a.json();
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["version"], WEYLRET_VERSION);
  EXPECT_EQ(j["passed"], 12);
}

TEST(CliVerify, SmallRandomSuites) {
  for (const char* suite : {"thmB-random", "closest-unique"}) {
    const Outcome r =
        Call({"verify", "--suite", suite, "--seed", "9", "--count", "10"});
    EXPECT_EQ(r.code, kExitOk) << suite << r.err;
    EXPECT_EQ(r.json()["total"], 30) << suite;
  }
}

TEST(CliVerify, UnknownSuite) {
  EXPECT_EQ(Call({"verify", "--suite", "nope"}).code, kExitParse);
  EXPECT_THROW(RunSuite("nope", {}), std::invalid_argument);
}

TEST(CliVerify, TimingStaysOffStdout) {
  const Outcome r = Call({"verify", "--suite", "fan-figures", "--timing"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("fan-figures"), std::string::npos);
  EXPECT_EQ(r.out, Call({"verify", "--suite", "fan-figures"}).out);
}

}  // namespace
}  // namespace weylret::cli
