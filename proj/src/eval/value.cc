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

#include "equus/value.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace equus {

std::string_view ErrorCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDiv0: return "#DIV/0!";
    case ErrorKind::kNA: return "#N/A";
    case ErrorKind::kName: return "#NAME?";
    case ErrorKind::kNull: return "#NULL!";
    case ErrorKind::kNum: return "#NUM!";
    case ErrorKind::kRef: return "#REF!";
    case ErrorKind::kValue: return "#VALUE!";
    case ErrorKind::kSpill: return "#SPILL!";
  }
  return "#VALUE!";
}

std::optional<ErrorKind> ErrorFromCode(std::string_view code) {
  for (ErrorKind k : kAllErrorKinds) {
    if (ErrorCode(k) == code) return k;
  }
  return std::nullopt;
}

Value Value::Number(double x) {
  if (!std::isfinite(x)) return Error(ErrorKind::kNum);
  if (x == 0) x = 0;  // -0 -> +0
  return Value(Rep(x));
}

namespace {

// Significant digits and decimal exponent of x rounded to `digits` places,
// e.g. 1234.5 at 3 -> ("123", 3).
std::pair<std::string, int> Decompose(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  std::string s(buf);
  size_t e = s.find('e');
  int exponent = std::atoi(s.c_str() + e + 1);
  std::string mantissa;
  for (size_t i = 0; i < e; ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) mantissa += s[i];
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  return {mantissa, exponent};
}

}  // namespace

std::string RenderNumber(double x) {
  if (x == 0) return "0";
  const bool negative = x < 0;
  const double magnitude = std::fabs(x);
  int digits = 1;
  for (; digits < 15; ++digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, magnitude);
    if (std::strtod(buf, nullptr) == magnitude) break;
  }
  auto [mantissa, exponent] = Decompose(magnitude, digits);
  std::string out = negative ? "-" : "";
  if (exponent < -5 || exponent >= 15) {
    out += mantissa[0];
    if (mantissa.size() > 1) {
      out += '.';
      out += mantissa.substr(1);
    }
    char exp_buf[16];
    std::snprintf(exp_buf, sizeof exp_buf, "E%c%02d", exponent < 0 ? '-' : '+',
                  std::abs(exponent));
    out += exp_buf;
  } else if (exponent < 0) {
    out += "0.";
    out += std::string(static_cast<size_t>(-exponent - 1), '0');
    out += mantissa;
  } else {
    const size_t int_digits = static_cast<size_t>(exponent) + 1;
    if (mantissa.size() <= int_digits) {
      out += mantissa;
      out += std::string(int_digits - mantissa.size(), '0');
    } else {
      out += mantissa.substr(0, int_digits);
      out += '.';
      out += mantissa.substr(int_digits);
    }
  }
  return out;
}

std::string RenderValue(const Value& v) {
  switch (v.type()) {
    case Value::Type::kEmpty: return "";
    case Value::Type::kNumber: return RenderNumber(v.number());
    case Value::Type::kBoolean: return v.boolean() ? "TRUE" : "FALSE";
    case Value::Type::kText: return v.text();
    case Value::Type::kError: return std::string(ErrorCode(v.error()));
  }
  return "";
}

std::optional<double> ParseNumericText(std::string_view text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && text[b] == ' ') ++b;
  while (e > b && text[e - 1] == ' ') --e;
  std::string_view s = text.substr(b, e - b);
  size_t i = 0;
  auto digit = [&](size_t k) {
    return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]));
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t mantissa_digits = 0;
  while (digit(i)) ++i, ++mantissa_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (digit(i)) ++i, ++mantissa_digits;
  }
  if (mantissa_digits == 0) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (!digit(i)) return std::nullopt;
    while (digit(i)) ++i;
  }
  if (i != s.size()) return std::nullopt;
  double x = std::strtod(std::string(s).c_str(), nullptr);
  if (!std::isfinite(x)) return std::nullopt;
  return x;
}

Value CoerceToNumber(const Value& v) {
  switch (v.type()) {
    case Value::Type::kNumber:
    case Value::Type::kError: return v;
    case Value::Type::kEmpty: return Value::Number(0);
    case Value::Type::kBoolean: return Value::Number(v.boolean() ? 1 : 0);
    case Value::Type::kText:
      if (auto x = ParseNumericText(v.text())) return Value::Number(*x);
      return Value::Error(ErrorKind::kValue);
  }
  return Value::Error(ErrorKind::kValue);
}

Value CoerceToBoolean(const Value& v) {
  switch (v.type()) {
    case Value::Type::kBoolean:
    case Value::Type::kError: return v;
    case Value::Type::kEmpty: return Value::Boolean(false);
    case Value::Type::kNumber: return Value::Boolean(v.number() != 0);
    case Value::Type::kText: {
      std::string upper;
      for (char c : v.text()) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (upper == "TRUE") return Value::Boolean(true);
      if (upper == "FALSE") return Value::Boolean(false);
      return Value::Error(ErrorKind::kValue);
    }
  }
  return Value::Error(ErrorKind::kValue);
}

Value CoerceToText(const Value& v) {
  if (v.IsError() || v.IsText()) return v;
  return Value::Text(RenderValue(v));
}

}  // namespace equus
