//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/common.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace btr {
namespace {

std::string offset_message(const std::string &what, std::size_t offset,
                           const std::optional<std::size_t> &line) {
  std::string msg;
  if (line)
    msg += "line " + std::to_string(*line) + ": ";
  msg += what + " (byte offset " + std::to_string(offset) + ")";
  return msg;
}

}  // namespace

ParseError::ParseError(const std::string &what, std::size_t offset,
                       std::optional<std::size_t> line)
    : Error(offset_message(what, offset, line)), message_(what),
      offset_(offset), line_(line) { }

ParseError ParseError::at_line(std::size_t line) const {
  return ParseError(message_, offset_, line);
}

BudgetExceeded::BudgetExceeded(const std::string &what, std::int64_t budget)
    : Error(what + " (budget " + std::to_string(budget) + ")"),
      budget_(budget) { }

ConvergenceError::ConvergenceError(const std::string &what,
                                   double last_residual)
    : Error(what + " (last residual " + std::to_string(last_residual) + ")"),
      last_residual_(last_residual) { }

std::string to_string(BigCount value) {
  if (value == 0)
    return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

double to_double(BigCount value) {
  return static_cast<double>(value);
}

std::int64_t to_int64(BigCount value) {
  if (value > static_cast<BigCount>(std::numeric_limits<std::int64_t>::max()))
    throw OverflowError("count exceeds 64 bits");
  return static_cast<std::int64_t>(value);
}

BigCount checked_add(BigCount a, BigCount b) {
  BigCount out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("128-bit count overflow in addition");
  return out;
}

BigCount checked_mul(BigCount a, BigCount b) {
  BigCount out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("128-bit count overflow in multiplication");
  return out;
}

BigCount checked_pow(BigCount base, int exponent) {
  BigCount out = 1;
  for (int i = 0; i < exponent; ++i)
    out = checked_mul(out, base);
  return out;
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  // Multiply-then-divide keeps every intermediate an exact binomial.
  BigCount out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto num = static_cast<BigCount>(n - k + i);
    // out * num is divisible by i; split to limit intermediate growth.
    const BigCount g = std::gcd(static_cast<std::uint64_t>(i),
                                static_cast<std::uint64_t>(out % i));
    const BigCount i_red = static_cast<BigCount>(i) / g;
    out = checked_mul(out / g, num / i_red);
  }
  return out;
}

double binomial_real(double n, int k) {
  if (k < 0 || n < k)
    return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i)
    out *= (n - k + i) / i;
  return out;
}

}  // namespace btr
