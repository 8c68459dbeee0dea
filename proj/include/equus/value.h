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

#ifndef EQUUS_VALUE_H
#define EQUUS_VALUE_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace equus {

enum class ErrorKind { kDiv0, kNA, kName, kNull, kNum, kRef, kValue, kSpill };

inline constexpr ErrorKind kAllErrorKinds[] = {
    ErrorKind::kDiv0, ErrorKind::kNA,  ErrorKind::kName,  ErrorKind::kNull,
    ErrorKind::kNum,  ErrorKind::kRef, ErrorKind::kValue, ErrorKind::kSpill};

// "#DIV/0!", "#N/A", "#NAME?", "#NULL!", "#NUM!", "#REF!", "#VALUE!", "#SPILL!"
[[nodiscard]] std::string_view ErrorCode(ErrorKind kind);
[[nodiscard]] std::optional<ErrorKind> ErrorFromCode(std::string_view code);

struct Empty {
  bool operator==(const Empty&) const = default;
};

// A cell or subexpression value: Number, Boolean, Text, Empty or Error.
// Numbers are always finite; Number() turns NaN and infinities into #NUM!
// and folds -0 into 0.
class Value {
 public:
  enum class Type { kEmpty, kNumber, kBoolean, kText, kError };

  Value() = default;

  static Value Number(double x);
  static Value Boolean(bool b) { return Value(Rep(b)); }
  static Value Text(std::string s) { return Value(Rep(std::move(s))); }
  static Value Error(ErrorKind k) { return Value(Rep(k)); }
  static Value MakeEmpty() { return Value(); }

  [[nodiscard]] Type type() const { return static_cast<Type>(rep_.index()); }
  [[nodiscard]] bool IsEmpty() const { return type() == Type::kEmpty; }
  [[nodiscard]] bool IsNumber() const { return type() == Type::kNumber; }
  [[nodiscard]] bool IsBoolean() const { return type() == Type::kBoolean; }
  [[nodiscard]] bool IsText() const { return type() == Type::kText; }
  [[nodiscard]] bool IsError() const { return type() == Type::kError; }

  [[nodiscard]] double number() const { return std::get<double>(rep_); }
  [[nodiscard]] bool boolean() const { return std::get<bool>(rep_); }
  [[nodiscard]] const std::string& text() const { return std::get<std::string>(rep_); }
  [[nodiscard]] ErrorKind error() const { return std::get<ErrorKind>(rep_); }

  bool operator==(const Value&) const = default;

 private:
  using Rep = std::variant<Empty, double, bool, std::string, ErrorKind>;
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

// Numbers: shortest form that round-trips, capped at 15 significant digits;
// scientific ("1E+20") outside [1E-5, 1E+15). Booleans TRUE/FALSE, errors
// by code, Empty as "".
[[nodiscard]] std::string RenderNumber(double x);
[[nodiscard]] std::string RenderValue(const Value& v);

// Accepts optional surrounding blanks, an optional sign, digits with an
// optional fraction and exponent. nullopt for anything else.
[[nodiscard]] std::optional<double> ParseNumericText(std::string_view text);

// Context coercions. Each returns an Error value when the input is an
// error or cannot be coerced (#VALUE!).
[[nodiscard]] Value CoerceToNumber(const Value& v);
[[nodiscard]] Value CoerceToBoolean(const Value& v);
[[nodiscard]] Value CoerceToText(const Value& v);

}  // namespace equus

#endif  // EQUUS_VALUE_H
