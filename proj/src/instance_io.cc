// Copyright 2026 The igcr Authors
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

#include "igcr/instance_io.h"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "igcr/errors.h"
#include "json.hpp"

namespace igcr {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Integer ReadInteger(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Integer(std::to_string(v.get<std::uint64_t>()), 10);
    }
    return Integer(std::to_string(v.get<std::int64_t>()), 10);
  }
  if (v.is_string()) {
    try {
      return ParseInteger(v.get<std::string>());
    } catch (const ParseError& e) {
      Fail(where, e.what());
    }
  }
  Fail(where, "expected an integer, got " + v.dump());
}

Rational ReadRational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(ReadInteger(v, where));
  if (v.is_string()) {
    try {
      return ParseRational(v.get<std::string>());
    } catch (const ParseError& e) {
      Fail(where, e.what());
    }
  }
  Fail(where, "expected an integer or a \"p/q\" string, got " + v.dump());
}

const json& RequireArray(const json& v, const std::string& where) {
  if (!v.is_array()) Fail(where, "expected an array");
  return v;
}

IntVector ReadIntVector(const json& v, const std::string& where) {
  RequireArray(v, where);
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ReadInteger(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

RationalVector ReadRationalVector(const json& v, const std::string& where) {
  RequireArray(v, where);
  RationalVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ReadRational(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void RequireLength(std::size_t got, std::size_t want, const std::string& where) {
  if (got != want) {
    Fail(where, "has length " + std::to_string(got) + ", expected " +
                    std::to_string(want));
  }
}

ordered_json WriteInteger(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return ToString(z);
}

ordered_json WriteIntVector(const IntVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& z : v) out.push_back(WriteInteger(z));
  return out;
}

ordered_json WriteRationalVector(const RationalVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(ToString(q));
  return out;
}

}  // namespace

bool operator==(const InstanceDocument& a, const InstanceDocument& b) {
  auto norm_eq = [](const std::optional<NormSpec>& x,
                    const std::optional<NormSpec>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x.has_value() || (x->kind == y->kind && x->omega == y->omega);
  };
  return a.instance == b.instance && a.x0 == b.x0 && a.target == b.target &&
         a.basis == b.basis && norm_eq(a.norm, b.norm) && a.box == b.box &&
         a.solutions == b.solutions;
}

InstanceDocument ParseInstance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) Fail("$", "expected a JSON object");
  static const std::set<std::string> kKnown = {
      "A", "b", "c", "x0", "target", "basis", "norm", "box", "solutions"};
  for (const auto& [key, _] : root.items()) {
    if (!kKnown.count(key)) Fail(key, "unknown field");
  }
  for (const char* key : {"A", "b", "c"}) {
    if (!root.contains(key)) Fail(key, "missing required field");
  }

  const json& a_json = RequireArray(root["A"], "A");
  if (a_json.empty()) Fail("A", "must have at least one row");
  const std::size_t m = a_json.size();
  const std::size_t n = RequireArray(a_json[0], "A[0]").size();
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string row_at = "A[" + std::to_string(i) + "]";
    RequireArray(a_json[i], row_at);
    RequireLength(a_json[i].size(), n, row_at);
    for (std::size_t k = 0; k < n; ++k) {
      a(i, k) = ReadInteger(a_json[i][k], row_at + "[" + std::to_string(k) + "]");
    }
  }
  IntVector b = ReadIntVector(root["b"], "b");
  RequireLength(b.size(), m, "b");
  RationalVector c = ReadRationalVector(root["c"], "c");
  RequireLength(c.size(), n, "c");

  InstanceDocument doc{IpInstance(std::move(a), std::move(b), std::move(c)),
                       {}, {}, {}, {}, {}, {}};
  if (root.contains("x0")) {
    doc.x0 = ReadRationalVector(root["x0"], "x0");
    RequireLength(doc.x0->size(), n, "x0");
  }
  if (root.contains("target")) {
    doc.target = ReadRationalVector(root["target"], "target");
    RequireLength(doc.target->size(), n, "target");
  }
  if (root.contains("basis")) {
    const IntVector one_based = ReadIntVector(root["basis"], "basis");
    std::vector<std::size_t> basis;
    for (std::size_t k = 0; k < one_based.size(); ++k) {
      if (one_based[k] < 1 || one_based[k] > static_cast<unsigned long>(n)) {
        Fail("basis[" + std::to_string(k) + "]",
             "column index must be in 1.." + std::to_string(n));
      }
      basis.push_back(one_based[k].get_ui() - 1);
    }
    doc.basis = std::move(basis);
  }
  if (root.contains("norm")) {
    const json& nj = root["norm"];
    if (!nj.is_object()) Fail("norm", "expected an object");
    NormSpec norm;
    if (nj.contains("kind")) {
      if (!nj["kind"].is_string()) Fail("norm.kind", "expected a string");
      try {
        norm.kind = ParseNormKind(nj["kind"].get<std::string>());
      } catch (const ParseError& e) {
        Fail("norm.kind", e.what());
      }
    }
    if (nj.contains("omega")) {
      norm.omega = ReadRationalVector(nj["omega"], "norm.omega");
      RequireLength(norm.omega.size(), n, "norm.omega");
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(norm.omega[k]) < 0) {
          Fail("norm.omega[" + std::to_string(k) + "]", "must be nonnegative");
        }
      }
    }
    doc.norm = std::move(norm);
  }
  if (root.contains("box")) {
    doc.box = ReadIntVector(root["box"], "box");
    RequireLength(doc.box->size(), n, "box");
  }
  if (root.contains("solutions")) {
    const json& sj = root["solutions"];
    if (!sj.is_object()) Fail("solutions", "expected an object");
    for (const auto& [name, value] : sj.items()) {
      RationalVector v = ReadRationalVector(value, "solutions." + name);
      RequireLength(v.size(), n, "solutions." + name);
      doc.solutions.emplace(name, std::move(v));
    }
  }
  return doc;
}

InstanceDocument LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ParseInstance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string SerializeInstance(const InstanceDocument& doc) {
  const IpInstance& inst = doc.instance;
  ordered_json root;
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const auto row = inst.a().row(i);
    a.push_back(WriteIntVector(IntVector(row.begin(), row.end())));
  }
  root["A"] = std::move(a);
  root["b"] = WriteIntVector(inst.b());
  root["c"] = WriteRationalVector(inst.c());
  if (doc.x0) root["x0"] = WriteRationalVector(*doc.x0);
  if (doc.target) root["target"] = WriteRationalVector(*doc.target);
  if (doc.basis) {
    ordered_json basis = ordered_json::array();
    for (std::size_t k : *doc.basis) basis.push_back(k + 1);
    root["basis"] = std::move(basis);
  }
  if (doc.norm) {
    ordered_json norm;
    norm["kind"] = ToString(doc.norm->kind);
    if (!doc.norm->omega.empty()) {
      norm["omega"] = WriteRationalVector(doc.norm->omega);
    }
    root["norm"] = std::move(norm);
  }
  if (doc.box) root["box"] = WriteIntVector(*doc.box);
  if (!doc.solutions.empty()) {
    ordered_json sols = ordered_json::object();
    for (const auto& [name, v] : doc.solutions) {
      sols[name] = WriteRationalVector(v);
    }
    root["solutions"] = std::move(sols);
  }
  return root.dump(2) + "\n";
}

IntVector RequireIntegral(const RationalVector& v, std::string_view what) {
  IntVector out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!IsInteger(v[k])) {
      throw PreconditionError(std::string(what) + "[" + std::to_string(k + 1) +
                              "] = " + ToString(v[k]) + " is not an integer");
    }
    out.push_back(v[k].get_num());
  }
  return out;
}

}  // namespace igcr
