// Copyright 2026 The qlsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qlsi::cli {

enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,  // also parse failures and unwritable outputs
  kNumericalError = 3,
};

enum class Format { kCsv, kJson, kSvg };

struct CliConfig {
  std::string command;
  std::string input;
  std::string out;  // empty: stdout (figure1: current directory)
  double tol = 1e-9;
  double step = 1e-3;
  double horizon = 1.0;
  double p0 = 2.0;
  std::optional<double> r0;
  std::uint64_t seed = 7;
  int trials = 100;
  int grid = 20;
  int max_n = 3;
  std::optional<Format> format;
  std::string replay;
};

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_fuzz(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_figure1(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_exponent(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags (and an optional --config file) and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlsi::cli
