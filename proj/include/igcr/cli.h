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

#ifndef IGCR_CLI_H_
#define IGCR_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace igcr {

// Environment variable overriding the feasible-basis enumeration cap.
inline constexpr const char* kBasisCapEnv = "IGCR_BASIS_CAP";

// Runs one `igcr` invocation. `args` excludes the program name. Reports go
// to `out` (text, or JSON with --json); diagnostics go to `err`. Returns the
// process exit status.
int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace igcr

#endif  // IGCR_CLI_H_
