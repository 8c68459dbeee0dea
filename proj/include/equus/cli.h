/**
 * Copyright 2026 The Equus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EQUUS_CLI_H
#define EQUUS_CLI_H

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "equus/evaluator.h"

namespace equus {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitMissingFile = 3;
inline constexpr int kExitPortUnavailable = 4;

struct CliHooks {
  // Called by `serve` once the port is bound.
  std::function<void(int port)> on_listening;
};

// Runs `equus <args...>` (args exclude the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           const CliHooks& hooks = {});

// Makes a running `serve` return. Safe to call from a signal handler.
void RequestServeStop();

// Pre-order listing of every subexpression and its value, two spaces of
// indent per depth. Interior nodes whose operands are not all literals also
// show the step with operand values substituted, e.g. "2+3*4 = 2+12 -> 14".
[[nodiscard]] std::string Trace(const AnnotatedTree& tree);

}  // namespace equus

#endif  // EQUUS_CLI_H
