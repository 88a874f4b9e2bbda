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

#include "qlsi/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qlsi/errors.hpp"

namespace qlsi {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type: " + e.what());
  }
}

std::vector<std::vector<double>> read_square(const json& j, const char* key, std::size_t side) {
  auto rows = field<std::vector<std::vector<double>>>(j, key);
  if (rows.size() != side) {
    throw ParseError(std::string("\"") + key + "\" has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(side));
  }
  for (std::size_t r = 0; r < side; ++r) {
    if (rows[r].size() != side) {
      throw ParseError(std::string("\"") + key + "\" row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(side));
    }
    for (double v : rows[r]) {
      if (!std::isfinite(v)) throw ParseError(std::string("non-finite entry in \"") + key + "\"");
    }
  }
  return rows;
}

}  // namespace

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Table::to_csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_g17(row[c]);
    out << '\n';
  }
  return out.str();
}

DenseOperator parse_operator_json(std::string_view text) {
  const json j = parse_json(text);
  const int n = field<int>(j, "n");
  if (n < 1 || n > kMaxQubits) {
    throw ParseError("\"n\" = " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
  const std::size_t side = std::size_t{1} << n;
  const auto re = read_square(j, "re", side);
  const auto im = read_square(j, "im", side);
  Matrix m(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(re[r][c], im[r][c]);
    }
  }
  DenseOperator op(n, std::move(m));
  op.mark_hermitian();
  return op;
}

std::string operator_to_json(const DenseOperator& x) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < x.dim(); ++r) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index c = 0; c < x.dim(); ++c) {
      re_row.push_back(x(r, c).real());
      im_row.push_back(x(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"n", x.qubits()}, {"re", std::move(re)}, {"im", std::move(im)}}.dump();
}

PauliCoefficients parse_pauli_json(std::string_view text) {
  const json j = parse_json(text);
  const int n = field<int>(j, "n");
  if (n < 1 || n > kMaxQubits) throw ParseError("\"n\" outside the supported range");
  std::vector<Complex> coeffs(std::size_t{1} << (2 * n));
  const json entries = field<json>(j, "coeffs");
  if (!entries.is_array()) throw ParseError("\"coeffs\" must be an array");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto s = field<std::string>(entries[k], "s");
    if (static_cast<int>(s.size()) != n) {
      throw ParseError("coefficient " + std::to_string(k) + " has index length " +
                       std::to_string(s.size()) + ", expected " + std::to_string(n));
    }
    std::uint64_t lex = 0;
    try {
      lex = MultiIndex::parse(s).lex_index();
    } catch (const DomainError& e) {
      throw ParseError("coefficient " + std::to_string(k) + ": " + e.what());
    }
    const double re = field<double>(entries[k], "re");
    const double im = field<double>(entries[k], "im");
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite coefficient");
    coeffs[lex] = Complex(re, im);
  }
  return PauliCoefficients(n, std::move(coeffs));
}

std::string pauli_to_json(const PauliCoefficients& c, double threshold) {
  json entries = json::array();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (std::abs(c[idx]) <= threshold) continue;
    entries.push_back({{"s", MultiIndex::from_lex(c.qubits(), idx).to_string()},
                       {"re", c[idx].real()},
                       {"im", c[idx].imag()}});
  }
  return json{{"n", c.qubits()}, {"coeffs", std::move(entries)}}.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot move output into place at " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace qlsi
