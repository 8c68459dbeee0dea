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

#ifndef EQUUS_SHEET_IO_H
#define EQUUS_SHEET_IO_H

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "equus/sheet.h"

namespace equus {

// Sheet files are UTF-8, one `A1<TAB>raw` line per cell, LF line endings,
// canonical upper-case addresses, content verbatim.

class SheetIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SheetDiagnostic {
  size_t line = 0;       // 1-based
  std::string address;   // as it appeared in the file
  size_t position = 0;   // byte offset into the content, for parse errors
  std::string message;
};

struct LoadResult {
  Sheet sheet;
  // Lines that could not be loaded; those cells are skipped.
  std::vector<SheetDiagnostic> diagnostics;
};

[[nodiscard]] LoadResult ReadSheet(std::istream& in);
void WriteSheet(const Sheet& s, std::ostream& out);

// Throws SheetIoError when the file cannot be opened or written, or when a
// cell's content cannot be represented on one line.
[[nodiscard]] LoadResult LoadSheet(const std::filesystem::path& path);
void SaveSheet(const Sheet& s, const std::filesystem::path& path);

}  // namespace equus

#endif  // EQUUS_SHEET_IO_H
