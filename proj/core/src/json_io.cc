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

#include "weylret/json_io.h"

#include <cctype>
#include <utility>

#include "weylret/errors.h"

namespace weylret {
namespace {

WeylType ParseType(std::string_view name) {
  if (name == "A") return WeylType::kA;
  if (name == "B" || name == "C" || name == "BC") return WeylType::kBC;
  if (name == "D") return WeylType::kD;
  throw ParseError("unknown Weyl type '" + std::string(name) + "'");
}

int ParseInt(std::string_view digits, std::string_view context) {
  if (digits.empty() || digits.size() > 6) {
    throw ParseError("bad number in '" + std::string(context) + "'");
  }
  int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad number in '" + std::string(context) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Factor ParseShorthandFactor(std::string_view token) {
  size_t split = 0;
  while (split < token.size() && std::isalpha(static_cast<unsigned char>(
                                     token[split]))) {
    ++split;
  }
  const WeylType type = ParseType(token.substr(0, split));
  const int rank = ParseInt(token.substr(split), token);
  return Factor{type, type == WeylType::kA ? rank + 1 : rank};
}

template <typename T, typename F>
T Wrap(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

GroupDescriptor ParseGroup(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text[0]))) {
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == '{') {
    return GroupFromJson(ParseJsonText(text));
  }
  std::vector<Factor> factors;
  size_t start = 0;
  while (true) {
    const size_t x = text.find('x', start);
    factors.push_back(ParseShorthandFactor(text.substr(start, x - start)));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  try {
    return GroupDescriptor(std::move(factors));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

GroupDescriptor GroupFromJson(const Json& j) {
  std::vector<Factor> factors = Wrap<std::vector<Factor>>([&] {
    std::vector<Factor> out;
    for (const Json& f : j.at("factors")) {
      out.push_back(Factor{ParseType(f.at("type").get<std::string>()),
                           f.at("rank").get<int>()});
    }
    return out;
  });
  try {
    return GroupDescriptor(std::move(factors));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json GroupToJson(const GroupDescriptor& d) {
  Json factors = Json::array();
  for (const Factor& f : d.factors()) {
    factors.push_back({{"type", WeylTypeName(f.type)}, {"rank", f.rank}});
  }
  return Json{{"factors", factors}};
}

SignedPermutation WindowFromJson(const Json& j) {
  return Wrap<SignedPermutation>([&] {
    if (!j.is_array()) throw ParseError("a window must be a JSON array");
    return SignedPermutation(j.get<std::vector<int>>());
  });
}

SignedPermutation ParseWindow(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text[0]))) {
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == '[') {
    return WindowFromJson(ParseJsonText(text));
  }
  return WindowFromJson(ParseJsonText("[" + std::string(text) + "]"));
}

Json WindowToJson(const SignedPermutation& w) { return Json(w.window()); }

std::vector<SignedPermutation> WindowListFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of windows");
  std::vector<SignedPermutation> out;
  for (const Json& w : j) out.push_back(WindowFromJson(w));
  return out;
}

Json WindowListToJson(const std::vector<SignedPermutation>& ws) {
  Json out = Json::array();
  for (const SignedPermutation& w : ws) out.push_back(WindowToJson(w));
  return out;
}

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return ParseRational(j.get<std::string>());
  throw ParseError("a rational must be a string or an integer");
}

Json RationalToJson(const Rational& q) { return FormatRational(q); }

RationalVector VectorFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RationalVector v;
  for (const Json& x : j) v.push_back(RationalFromJson(x));
  return v;
}

Json VectorToJson(std::span<const Rational> v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(RationalToJson(x));
  return out;
}

RationalMatrix MatrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("a matrix must be a nonempty array of rows");
  }
  std::vector<RationalVector> rows;
  for (const Json& r : j) rows.push_back(VectorFromJson(r));
  try {
    return RationalMatrix(rows);
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

Json MatrixToJson(const RationalMatrix& x) {
  Json out = Json::array();
  for (size_t r = 0; r < x.rows(); ++r) out.push_back(VectorToJson(x.Row(r)));
  return out;
}

Json TableToJson(const RetractionTable& table) {
  Json entries = Json::object();
  for (size_t i = 0; i < table.size(); ++i) {
    entries[table.domain()[i].ToString()] = table.images()[i].ToString();
  }
  return Json{{"group", GroupToJson(table.descriptor())},
              {"provenance", ProvenanceName(table.provenance())},
              {"table", entries}};
}

RetractionTable TableFromJson(const Json& j) {
  return Wrap<RetractionTable>([&] {
    const GroupDescriptor d = GroupFromJson(j.at("group"));
    const std::string prov = j.at("provenance").get<std::string>();
    Provenance provenance;
    if (prov == "algebraic") {
      provenance = Provenance::kAlgebraic;
    } else if (prov == "matroid") {
      provenance = Provenance::kMatroid;
    } else if (prov == "geometric-limit") {
      provenance = Provenance::kGeometricLimit;
    } else {
      throw ParseError("unknown provenance '" + prov + "'");
    }
    const WeylGroup g(d);
    std::vector<SignedPermutation> domain, images;
    for (const auto& [key, value] : j.at("table").items()) {
      try {
        domain.push_back(g.Element(ParseWindow(key).window()));
        images.push_back(
            g.Element(ParseWindow(value.get<std::string>()).window()));
      } catch (const InvalidElement& e) {
        throw ParseError(e.what());
      }
    }
    return RetractionTable(d, provenance, std::move(domain),
                           std::move(images));
  });
}

Json SupportToJson(const PluckerSupport& support) {
  Json levels = Json::array();
  for (const auto& level : support.levels) levels.push_back(level);
  return levels;
}

Json FanToJson(const OrbitFan& fan) {
  Json lineality = Json::array();
  for (const RationalVector& v : fan.lineality()) {
    lineality.push_back(VectorToJson(v));
  }
  Json cones = Json::object();
  Json convex = Json::object();
  for (const auto& [y, chambers] : fan.cones()) {
    Json list = Json::array();
    for (const SignedPermutation& u : chambers) list.push_back(u.ToString());
    cones[y.ToString()] = list;
  }
  for (const auto& [y, strong] : fan.StrongConvexityReport()) {
    convex[y.ToString()] = strong;
  }
  return Json{{"group", GroupToJson(fan.group().descriptor())},
              {"lineality", lineality},
              {"cones", cones},
              {"strongly_convex", convex}};
}

Json PolytopeToJson(const MatroidPolytope& poly) {
  Json vertices = Json::array();
  for (const RationalVector& v : poly.vertices) {
    vertices.push_back(VectorToJson(v));
  }
  Json edges = Json::array();
  for (const auto& [a, b] : poly.edges) edges.push_back({a, b});
  Json offending = Json::array();
  for (const auto& [a, b] : poly.offending) offending.push_back({a, b});
  return Json{{"base_point", VectorToJson(poly.base_point)},
              {"vertices", vertices},
              {"edges", edges},
              {"offending", offending},
              {"roots_matched", poly.is_phi}};
}

Json VerdictToJson(const MatroidVerdict& verdict) {
  Json out{{"is_matroid", verdict.is_matroid}};
  if (verdict.witness) {
    out["witness"] = WindowToJson(*verdict.witness);
    out["extremal"] = WindowListToJson(verdict.extremal);
  }
  if (verdict.table) out["table"] = TableToJson(*verdict.table)["table"];
  return out;
}

}  // namespace weylret
