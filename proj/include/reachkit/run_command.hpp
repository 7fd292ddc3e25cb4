/*
 Copyright 2026 reachkit contributors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef REACHKIT_RUN_COMMAND_HPP
#define REACHKIT_RUN_COMMAND_HPP

#include "reachkit/config.hpp"

namespace reachkit {

/// 0 success, 2 validation/parse failure, 3 containment violations,
/// 4 numerical precondition failure.
int exit_code_for(ErrorCode code);

/// Dispatches one of {canonical, envelope, boundary, volume, validate,
/// demo}; artifacts land in out_dir (falls back to config.out_path, then
/// the current directory). `samples` is the Monte Carlo sample count for
/// `validate`. Errors are reported on stderr and mapped to exit codes.
int run_command(const std::string& name, const Config& config,
                const std::string& out_dir, int samples = 2000);

}  // namespace reachkit

#endif  // REACHKIT_RUN_COMMAND_HPP
