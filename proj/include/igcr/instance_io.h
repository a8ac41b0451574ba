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

// JSON instance documents.
//
//   {
//     "A": [[1, 0, 2, 4], [0, 1, 4, 4]],      integers
//     "b": [9, 15],                            integers
//     "c": [0, 0, -2, "-3"],                   integers or "p/q" strings
//     "x0": [1, 3, 2, 1],                      optional, rationals
//     "target": [...],                         optional, rationals
//     "basis": [3, 4],                         optional, 1-based columns
//     "norm": {"kind": "l1", "omega": [...]},  optional
//     "box": [9, 15, 3, 2],                    optional, integers
//     "solutions": {"name": [...]}             optional, named points
//   }
//
// Rationals are written back as strings in "p/q" (or "p") form, so a
// parse/serialize/parse cycle is exact.

#ifndef IGCR_INSTANCE_IO_H_
#define IGCR_INSTANCE_IO_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "igcr/inverse.h"
#include "igcr/lp.h"
#include "igcr/rational.h"

namespace igcr {

struct InstanceDocument {
  IpInstance instance;
  std::optional<RationalVector> x0;
  std::optional<RationalVector> target;
  std::optional<std::vector<std::size_t>> basis;  // 0-based
  std::optional<NormSpec> norm;
  std::optional<IntVector> box;
  std::map<std::string, RationalVector> solutions;

  friend bool operator==(const InstanceDocument& a,
                         const InstanceDocument& b);
};

// Throws ParseError with a JSON-path location ("c[2]: ...") on malformed
// input and ValidationError for rank-deficient or mis-sized data.
InstanceDocument ParseInstance(std::string_view text);
InstanceDocument LoadInstance(const std::string& path);

std::string SerializeInstance(const InstanceDocument& doc);

// Integer view of a rational point; throws PreconditionError naming `what`
// if some entry is fractional.
IntVector RequireIntegral(const RationalVector& v, std::string_view what);

}  // namespace igcr

#endif  // IGCR_INSTANCE_IO_H_
