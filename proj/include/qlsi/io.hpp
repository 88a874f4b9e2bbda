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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qlsi/operator.hpp"

namespace qlsi {

/// A numeric table with a header row.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Comma-separated, header first, 17 significant digits.
  std::string to_csv() const;
};

/// Shortest round-trip-safe rendering used in every CSV we write.
std::string format_g17(double v);

/// Operator file: {"n": n, "re": [[...]], "im": [[...]]}, row-major.
/// Throws ParseError (with the byte offset for syntax errors) on malformed
/// text and DomainError on non-finite entries or wrong dimensions.
DenseOperator parse_operator_json(std::string_view text);
std::string operator_to_json(const DenseOperator& x);

/// Coefficient file: {"n": n, "coeffs": [{"s": "0312", "re": r, "im": i}]},
/// listing only entries with |x_s| > threshold. Missing entries read as 0.
PauliCoefficients parse_pauli_json(std::string_view text);
std::string pauli_to_json(const PauliCoefficients& c, double threshold = 0.0);

std::string read_text_file(const std::filesystem::path& path);

/// Writes via a sibling temporary file and rename, so readers never see a
/// partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace qlsi
