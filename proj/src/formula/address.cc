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

#include "equus/address.h"

#include <cctype>

namespace equus {

bool IsValid(const CellAddress& a) {
  return a.column >= 1 && a.column <= kMaxColumn && a.row >= 1 &&
         a.row <= kMaxRow;
}

std::string ColumnLetters(int column) {
  std::string out;
  while (column > 0) {
    int rem = (column - 1) % 26;
    out.insert(out.begin(), static_cast<char>('A' + rem));
    column = (column - 1) / 26;
  }
  return out;
}

std::optional<int> ColumnIndex(std::string_view letters) {
  if (letters.empty() || letters.size() > 3) return std::nullopt;
  int column = 0;
  for (char c : letters) {
    if (!std::isalpha(static_cast<unsigned char>(c))) return std::nullopt;
    column = column * 26 + (std::toupper(static_cast<unsigned char>(c)) - 'A' + 1);
  }
  if (column > kMaxColumn) return std::nullopt;
  return column;
}

std::string FormatAddress(const CellAddress& a) {
  std::string out;
  if (a.column_absolute) out += '$';
  out += ColumnLetters(a.column);
  if (a.row_absolute) out += '$';
  out += std::to_string(a.row);
  return out;
}

std::optional<CellAddress> ParseAddress(std::string_view text) {
  CellAddress a;
  size_t i = 0;
  if (i < text.size() && text[i] == '$') {
    a.column_absolute = true;
    ++i;
  }
  size_t letters_begin = i;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  auto column = ColumnIndex(text.substr(letters_begin, i - letters_begin));
  if (!column) return std::nullopt;
  a.column = *column;
  if (i < text.size() && text[i] == '$') {
    a.row_absolute = true;
    ++i;
  }
  size_t digits_begin = i;
  if (i < text.size() && text[i] == '0') return std::nullopt;
  long row = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    row = row * 10 + (text[i] - '0');
    if (row > kMaxRow) return std::nullopt;
    ++i;
  }
  if (i == digits_begin || i != text.size() || row < 1) return std::nullopt;
  a.row = static_cast<int>(row);
  return a;
}

}  // namespace equus
