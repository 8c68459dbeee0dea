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

#include "equus/sheet_io.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "equus/parse_error.h"

namespace equus {

LoadResult ReadSheet(std::istream& in) {
  LoadResult result;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      result.diagnostics.push_back({line_no, line, 0, "missing tab separator"});
      continue;
    }
    std::string addr_text = line.substr(0, tab);
    std::string raw = line.substr(tab + 1);
    auto addr = ParseAddress(addr_text);
    if (!addr) {
      result.diagnostics.push_back({line_no, addr_text, 0, "invalid cell address"});
      continue;
    }
    try {
      result.sheet.Set(*addr, raw);
    } catch (const ParseError& e) {
      result.diagnostics.push_back({line_no, addr_text, e.position(), e.message()});
    }
  }
  return result;
}

void WriteSheet(const Sheet& s, std::ostream& out) {
  for (const auto& [addr, content] : s.cells()) {
    if (content.raw.find_first_of("\r\n") != std::string::npos) {
      throw SheetIoError("cell " + FormatAddress(addr) + " contains a line break");
    }
    out << FormatAddress(addr) << '\t' << content.raw << '\n';
  }
}

LoadResult LoadSheet(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SheetIoError("cannot open " + path.string());
  return ReadSheet(in);
}

void SaveSheet(const Sheet& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SheetIoError("cannot write " + path.string());
  WriteSheet(s, out);
  out.flush();
  if (!out) throw SheetIoError("write failed for " + path.string());
}

}  // namespace equus
