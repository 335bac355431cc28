/*
   Copyright 2026 The qborel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QBOREL_CLI_HPP
#define QBOREL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qborel/algebra_id.hpp"

namespace qborel {

/// Exit codes of the command line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Accepts "Uq", "U", "C", "Un", "Cn" (n from the argument) and the long
/// forms "Uq_bplus", "U_bplus", "C_bplus". Throws InvalidDescriptor.
AlgebraId parse_algebra(const std::string& name, int n);

/// Runs the tool on args (without the program name), writing results to out
/// and diagnostics to err. Returns one of the exit codes above.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qborel

#endif  // QBOREL_CLI_HPP
