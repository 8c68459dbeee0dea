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

#ifndef EQUUS_PARSE_ERROR_H
#define EQUUS_PARSE_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace equus {

// Rejection of formula text. position is a byte offset in [0, input length].
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, std::string message,
             std::vector<std::string> expected = {})
      : std::runtime_error(message),
        position_(position),
        message_(std::move(message)),
        expected_(std::move(expected)) {}

  [[nodiscard]] size_t position() const { return position_; }
  [[nodiscard]] const std::string& message() const { return message_; }
  [[nodiscard]] const std::vector<std::string>& expected() const {
    return expected_;
  }

  // {"position":N,"message":"...","expected":[...]}
  [[nodiscard]] std::string ToRecord() const;

 private:
  size_t position_;
  std::string message_;
  std::vector<std::string> expected_;
};

}  // namespace equus

#endif  // EQUUS_PARSE_ERROR_H
