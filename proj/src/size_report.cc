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

#include "igcr/size_report.h"

#include <cmath>
#include <cstdio>

#include "igcr/errors.h"

namespace igcr {

SizeReport FormulationSizeReport(std::size_t n, std::size_t m,
                                 const Integer& det_abs,
                                 std::span<const Integer> b) {
  if (m < 1 || n < m) throw DomainError("size report needs n >= m >= 1");
  if (det_abs < 1) throw DomainError("size report needs |det A_B| >= 1");
  if (b.size() != m) throw DomainError("size report needs |b| == m");

  const Integer nn = static_cast<unsigned long>(n);
  const Integer mm = static_cast<unsigned long>(m);
  Integer box_points = 1;   // prod (|b_i| + 1)
  Integer pair_points = 1;  // prod (|b_i| + 1)(|b_i| + 2) / 2
  for (const Integer& bi : b) {
    const Integer a = abs(bi);
    box_points *= a + 1;
    pair_points *= (a + 1) * (a + 2) / 2;
  }
  SizeReport r;
  r.ours_vars = 2 * nn + det_abs;
  r.ours_cons = 2 + (nn - mm) * det_abs;
  r.superadditive_vars = 2 * nn + box_points;
  r.superadditive_cons = 3 + nn + 2 * pair_points - 2 * box_points;
  return r;
}

std::string Log10OneDecimal(const Integer& value) {
  if (sgn(value) <= 0) throw DomainError("log10 of a nonpositive count");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  const double lg = std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", lg);
  return buf;
}

}  // namespace igcr
