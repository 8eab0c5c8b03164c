// SPDX-License-Identifier: Apache-2.0
//
// aircov - coverage analysis of aerial users served by down-tilted terrestrial base stations
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace aircov::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid_input = 2,
  exit_numerical_failure = 3,
  exit_validation_mismatch = 4,
};

// Entry point of `aircov <command> [flags]`. Results go to `out`, logs and
// diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace aircov::cli
