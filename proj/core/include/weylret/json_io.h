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

#ifndef WEYLRET_JSON_IO_H_
#define WEYLRET_JSON_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "weylret/fan.h"
#include "weylret/matroid.h"
#include "weylret/rational.h"
#include "weylret/retraction.h"
#include "weylret/torus_orbit.h"
#include "weylret/weyl.h"

namespace weylret {

using Json = nlohmann::json;

// All parsers throw ParseError on malformed input.
Json ParseJsonText(std::string_view text);

// Either {"factors": [{"type": "BC", "rank": 4}, ...]} with rank the window
// length, or Lie shorthand such as "A3" (S_4), "B2", "C2", "BC2", "D4",
// joined with 'x' for products ("A2xBC2").
GroupDescriptor ParseGroup(std::string_view text);
GroupDescriptor GroupFromJson(const Json& j);
Json GroupToJson(const GroupDescriptor& d);

// [-2, 3, -1, 4]; the text form also accepts "-2,3,-1,4".
SignedPermutation WindowFromJson(const Json& j);
SignedPermutation ParseWindow(std::string_view text);
Json WindowToJson(const SignedPermutation& w);
std::vector<SignedPermutation> WindowListFromJson(const Json& j);
Json WindowListToJson(const std::vector<SignedPermutation>& ws);

// "p/q" strings or JSON integers.
Rational RationalFromJson(const Json& j);
Json RationalToJson(const Rational& q);
RationalVector VectorFromJson(const Json& j);
Json VectorToJson(std::span<const Rational> v);
RationalMatrix MatrixFromJson(const Json& j);
Json MatrixToJson(const RationalMatrix& x);

// {"group": ..., "provenance": ..., "table": {"2,3,1,4": "2,4,1,3", ...}}
Json TableToJson(const RetractionTable& table);
RetractionTable TableFromJson(const Json& j);

Json SupportToJson(const PluckerSupport& support);
Json FanToJson(const OrbitFan& fan);
Json PolytopeToJson(const MatroidPolytope& poly);
Json VerdictToJson(const MatroidVerdict& verdict);

}  // namespace weylret

#endif  // WEYLRET_JSON_IO_H_
