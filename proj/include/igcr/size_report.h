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

#ifndef IGCR_SIZE_REPORT_H_
#define IGCR_SIZE_REPORT_H_

#include <cstddef>
#include <span>
#include <string>

#include "igcr/rational.h"

namespace igcr {

// Variable and constraint counts of two inverse LP formulations:
//   group-graph potentials (the ours_* fields):
//     2n + D vars,  2 + (n - m) D cons
//   superadditive duality for general inverse IPs (superadditive_*):
//     2n + P vars,
//     3 + n + 2 prod_i (|b_i|+1)(|b_i|+2)/2 - 2P cons
// with D = |det A_B| and P = prod_i (|b_i| + 1).
struct SizeReport {
  Integer ours_vars;
  Integer ours_cons;
  Integer superadditive_vars;
  Integer superadditive_cons;
};

// Throws DomainError unless n >= m >= 1, det_abs >= 1 and |b| == m.
SizeReport FormulationSizeReport(std::size_t n, std::size_t m,
                                 const Integer& det_abs,
                                 std::span<const Integer> b);

// log10 of a positive integer rendered with one decimal ("1.2").
std::string Log10OneDecimal(const Integer& value);

}  // namespace igcr

#endif  // IGCR_SIZE_REPORT_H_
