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

#include "equus/functions.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "equus/operators.h"

namespace equus {

Argument Argument::Range(std::vector<Value> cells) {
  Value first;
  for (const Value& v : cells) {
    if (v.IsError()) {
      first = v;
      break;
    }
  }
  return Argument{std::move(first), std::move(cells), true};
}

void FunctionRegistry::Add(FunctionSpec spec) {
  std::string name = spec.name;
  specs_.insert_or_assign(std::move(name), std::move(spec));
}

const FunctionSpec* FunctionRegistry::Find(std::string_view name) const {
  auto it = specs_.find(name);
  return it == specs_.end() ? nullptr : &it->second;
}

std::vector<const FunctionSpec*> FunctionRegistry::All() const {
  std::vector<const FunctionSpec*> out;
  for (const auto& [name, spec] : specs_) out.push_back(&spec);
  return out;
}

ArityLookup FunctionRegistry::Arities() const {
  return [this](std::string_view name) -> std::optional<Arity> {
    const FunctionSpec* spec = Find(name);
    if (spec == nullptr) return std::nullopt;
    return spec->arity;
  };
}

double RoundDecimal(double x, int digits, RoundMode mode) {
  if (x == 0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", std::fabs(x));
  // buf is "d.dddddddddddddde[+-]XX"
  std::string mantissa;
  mantissa += buf[0];
  mantissa.append(buf + 2, 14);
  const int exponent = std::atoi(buf + 17);
  // Keep the digits whose place value is at least 10^-digits.
  const long keep = static_cast<long>(exponent) + digits + 1;
  if (keep >= 15) return x;
  const double sign = x < 0 ? -1 : 1;
  if (keep < 0) return 0;
  const bool round_up = mode == RoundMode::kHalfAwayFromZero && mantissa[keep] >= '5';
  if (keep == 0) {
    if (!round_up) return 0;
    std::snprintf(buf, sizeof buf, "1e%d", -digits);
    return sign * std::strtod(buf, nullptr);
  }
  long long kept = std::strtoll(mantissa.substr(0, static_cast<size_t>(keep)).c_str(),
                                nullptr, 10);
  if (round_up) ++kept;
  std::snprintf(buf, sizeof buf, "%llde%ld", kept, static_cast<long>(exponent) + 1 - keep);
  return sign * std::strtod(buf, nullptr);
}

namespace {

// Numbers an aggregate sees in one argument. References contribute only
// their Number cells; direct values are coerced and may fail with #VALUE!.
template <typename Fn>
std::optional<Value> ForEachNumber(std::span<const Argument> args, Fn&& fn) {
  for (const Argument& a : args) {
    if (a.is_reference) {
      for (const Value& v : a.cells) {
        if (v.IsNumber()) fn(v.number());
      }
      continue;
    }
    Value n = CoerceToNumber(a.value);
    if (n.IsError()) return n;
    fn(n.number());
  }
  return std::nullopt;
}

Value Sum(std::span<const Argument> args) {
  double total = 0;
  if (auto err = ForEachNumber(args, [&](double x) { total += x; })) return *err;
  return Value::Number(total);
}

Value Average(std::span<const Argument> args) {
  double total = 0;
  size_t count = 0;
  if (auto err = ForEachNumber(args, [&](double x) {
        total += x;
        ++count;
      })) {
    return *err;
  }
  if (count == 0) return Value::Error(ErrorKind::kDiv0);
  return Value::Number(total / static_cast<double>(count));
}

template <typename Pick>
Value Extreme(std::span<const Argument> args, Pick pick) {
  std::optional<double> best;
  if (auto err = ForEachNumber(args, [&](double x) { best = best ? pick(*best, x) : x; })) {
    return *err;
  }
  return Value::Number(best.value_or(0));
}

Value Count(std::span<const Argument> args) {
  double count = 0;
  for (const Argument& a : args) {
    if (a.is_reference) {
      for (const Value& v : a.cells) count += v.IsNumber() ? 1 : 0;
    } else if (a.value.IsNumber() || a.value.IsBoolean() ||
               (a.value.IsText() && ParseNumericText(a.value.text()))) {
      count += 1;
    }
  }
  return Value::Number(count);
}

// AND / OR. References contribute Boolean and Number cells; direct values
// are coerced. No logical value at all is #VALUE!.
template <bool kIsAnd>
Value Logical(std::span<const Argument> args) {
  bool seen = false;
  bool acc = kIsAnd;
  auto take = [&](bool b) {
    seen = true;
    acc = kIsAnd ? (acc && b) : (acc || b);
  };
  for (const Argument& a : args) {
    if (a.is_reference) {
      for (const Value& v : a.cells) {
        if (v.IsBoolean()) take(v.boolean());
        if (v.IsNumber()) take(v.number() != 0);
      }
      continue;
    }
    Value b = CoerceToBoolean(a.value);
    if (b.IsError()) return b;
    take(b.boolean());
  }
  if (!seen) return Value::Error(ErrorKind::kValue);
  return Value::Boolean(acc);
}

// Wraps a numeric kernel of fixed arity: coerces every argument to Number
// and passes the doubles on.
template <typename Fn>
Kernel Numeric(Fn fn) {
  return [fn](std::span<const Argument> args) -> Value {
    std::vector<double> xs;
    xs.reserve(args.size());
    for (const Argument& a : args) {
      Value n = CoerceToNumber(a.value);
      if (n.IsError()) return n;
      xs.push_back(n.number());
    }
    return fn(std::span<const double>(xs));
  };
}

int DigitsArg(double d) {
  if (d > 400) return 400;
  if (d < -400) return -400;
  return static_cast<int>(std::trunc(d));
}

FunctionRegistry MakeBuiltins() {
  FunctionRegistry r;
  const Arity variadic{1, std::nullopt};
  auto strict = [&r](std::string name, Arity arity, Kernel k, bool ranges = false) {
    r.Add(FunctionSpec{std::move(name), arity, Strictness::kStrict, ranges, std::move(k)});
  };

  strict("SUM", variadic, Sum, true);
  strict("AVERAGE", variadic, Average, true);
  strict("MIN", variadic, [](std::span<const Argument> a) {
    return Extreme(a, [](double x, double y) { return std::min(x, y); });
  }, true);
  strict("MAX", variadic, [](std::span<const Argument> a) {
    return Extreme(a, [](double x, double y) { return std::max(x, y); });
  }, true);
  strict("COUNT", variadic, Count, true);
  strict("AND", variadic, Logical<true>, true);
  strict("OR", variadic, Logical<false>, true);

  strict("NOT", {1, 1}, [](std::span<const Argument> a) {
    Value b = CoerceToBoolean(a[0].value);
    return b.IsError() ? b : Value::Boolean(!b.boolean());
  });
  strict("TRUE", {0, 0}, [](std::span<const Argument>) { return Value::Boolean(true); });
  strict("FALSE", {0, 0}, [](std::span<const Argument>) { return Value::Boolean(false); });

  r.Add(FunctionSpec{"IF", {3, 3}, Strictness::kSelective, false,
                     [](std::span<const Argument> a) -> Value {
                       Value cond = CoerceToBoolean(a[0].value);
                       if (cond.IsError()) return cond;
                       const Value& chosen = cond.boolean() ? a[1].value : a[2].value;
                       return chosen.IsEmpty() ? Value::Number(0) : chosen;
                     }});

  strict("SIN", {1, 1}, Numeric([](std::span<const double> x) {
    return Value::Number(std::sin(x[0]));
  }));
  strict("COS", {1, 1}, Numeric([](std::span<const double> x) {
    return Value::Number(std::cos(x[0]));
  }));
  strict("TAN", {1, 1}, Numeric([](std::span<const double> x) {
    return Value::Number(std::tan(x[0]));
  }));
  strict("SQRT", {1, 1}, Numeric([](std::span<const double> x) {
    if (x[0] < 0) return Value::Error(ErrorKind::kNum);
    return Value::Number(std::sqrt(x[0]));
  }));
  strict("ABS", {1, 1}, Numeric([](std::span<const double> x) {
    return Value::Number(std::fabs(x[0]));
  }));
  strict("ROUND", {2, 2}, Numeric([](std::span<const double> x) {
    return Value::Number(RoundDecimal(x[0], DigitsArg(x[1]), RoundMode::kHalfAwayFromZero));
  }));
  strict("TRUNC", {1, 2}, Numeric([](std::span<const double> x) {
    const int digits = x.size() > 1 ? DigitsArg(x[1]) : 0;
    return Value::Number(RoundDecimal(x[0], digits, RoundMode::kTowardZero));
  }));
  strict("PI", {0, 0}, [](std::span<const Argument>) {
    return Value::Number(std::numbers::pi);
  });
  strict("POWER", {2, 2}, Numeric([](std::span<const double> x) {
    return Power(x[0], x[1]);
  }));
  strict("MOD", {2, 2}, Numeric([](std::span<const double> x) {
    if (x[1] == 0) return Value::Error(ErrorKind::kDiv0);
    return Value::Number(x[0] - x[1] * std::floor(x[0] / x[1]));
  }));
  return r;
}

}  // namespace

const FunctionRegistry& BuiltinRegistry() {
  static const FunctionRegistry registry = MakeBuiltins();
  return registry;
}

Value CallFunction(const FunctionSpec& spec, std::span<const Argument> args) {
  if (spec.strictness == Strictness::kStrict) {
    for (const Argument& a : args) {
      if (a.value.IsError()) return a.value;
    }
  }
  return spec.kernel(args);
}

Value CallFunction(const FunctionSpec& spec, std::span<const Value> args) {
  std::vector<Argument> wrapped;
  wrapped.reserve(args.size());
  for (const Value& v : args) wrapped.push_back(Argument::Scalar(v));
  return CallFunction(spec, std::span<const Argument>(wrapped));
}

}  // namespace equus
