// Copyright 2026 The gossip-tools Authors
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

#ifndef GOSSIP_CLI_HPP_
#define GOSSIP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gossip::cli {

// Exit codes shared by every command.
inline constexpr int kExitYes = 0;  // also generic success
inline constexpr int kExitNo = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitMalformed = 64;
inline constexpr int kExitParse = 65;

// Runs one command.  `args` excludes the program name.  All human-readable
// results go to `out`, diagnostics to `err`; the return value is the exit
// code.  Never throws.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gossip::cli

#endif  // GOSSIP_CLI_HPP_
