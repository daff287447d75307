// Copyright 2026 The qotto Authors
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


// CSV emission: fixed numeric format, a single `#` provenance line carrying
// the tool version, schema, unit convention and resolved configuration, and
// atomic temp-then-rename writes.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qotto/cli/config.hpp"

namespace qotto::cli {

inline constexpr const char* kToolVersion = QOTTO_VERSION;

/// "%.14e"; non-finite values as nan, inf, -inf.
std::string format_number(double v);

class CsvTable {
 public:
  CsvTable(std::string schema, std::vector<std::string> columns);

  const std::string& schema() const { return schema_; }
  std::size_t rows() const { return rows_.size(); }

  /// Appends a row; the cell count must match the column count. Cells are
  /// quoted when they contain a comma, quote or newline.
  void add_row(const std::vector<std::string>& cells);

  std::string render(const RunConfig& cfg) const;

 private:
  std::string schema_;
  std::vector<std::string> columns_;
  std::vector<std::string> rows_;
};

/// The `#` line written at the top of every file.
std::string header_comment(const std::string& schema, const RunConfig& cfg);

/// Writes content to path via a sibling temporary file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qotto::cli
