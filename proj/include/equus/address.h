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

#ifndef EQUUS_ADDRESS_H
#define EQUUS_ADDRESS_H

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace equus {

inline constexpr int kMaxColumn = 18278;   // ZZZ
inline constexpr int kMaxRow = 1048576;

// A1-style cell address. Column and row are 1-based; the absolute flags
// record the `$` markers as written and take no part in cell identity.
struct CellAddress {
  int column = 1;
  int row = 1;
  bool column_absolute = false;
  bool row_absolute = false;

  bool operator==(const CellAddress&) const = default;

  // Same cell, ignoring `$` markers.
  [[nodiscard]] bool SameCell(const CellAddress& other) const {
    return column == other.column && row == other.row;
  }
  // Identity with `$` markers dropped.
  [[nodiscard]] CellAddress Relative() const { return {column, row}; }
};

// Orders by (row, column), i.e. row-major. Absolute flags break ties so the
// ordering stays consistent with operator==.
struct CellOrder {
  bool operator()(const CellAddress& a, const CellAddress& b) const {
    if (a.row != b.row) return a.row < b.row;
    if (a.column != b.column) return a.column < b.column;
    if (a.column_absolute != b.column_absolute) return b.column_absolute;
    return !a.row_absolute && b.row_absolute;
  }
};

[[nodiscard]] bool IsValid(const CellAddress& a);

// 1 -> "A", 26 -> "Z", 27 -> "AA", ... (bijective base 26).
[[nodiscard]] std::string ColumnLetters(int column);
// Inverse of ColumnLetters, case-insensitive. nullopt for empty input,
// non-letters, or a column beyond ZZZ.
[[nodiscard]] std::optional<int> ColumnIndex(std::string_view letters);

[[nodiscard]] std::string FormatAddress(const CellAddress& a);
// Parses "A1", "$B$2", "x1" (case-insensitive). Rejects row 0, missing
// letters, out-of-range columns and rows, and trailing garbage.
[[nodiscard]] std::optional<CellAddress> ParseAddress(std::string_view text);

}  // namespace equus

#endif  // EQUUS_ADDRESS_H
