//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_COMMON_H_
#define BTR_COMMON_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace btr {

// Exact counts. Every count in this library is nonnegative; 128 bits is
// enough for d(X)^8 summed over all pairs at the default order cap.
using BigCount = unsigned __int128;

class Error: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError: public Error {
public:
  ParseError(const std::string &what, std::size_t offset,
             std::optional<std::size_t> line = std::nullopt);

  std::size_t offset() const { return offset_; }
  const std::optional<std::size_t> &line() const { return line_; }

  // Copy with the 1-based line number attached.
  ParseError at_line(std::size_t line) const;

private:
  std::string message_;
  std::size_t offset_;
  std::optional<std::size_t> line_;
};

class BudgetExceeded: public Error {
public:
  BudgetExceeded(const std::string &what, std::int64_t budget);
  std::int64_t budget() const { return budget_; }

private:
  std::int64_t budget_;
};

class OverflowError: public Error {
public:
  using Error::Error;
};

class ConvergenceError: public Error {
public:
  ConvergenceError(const std::string &what, double last_residual);
  double last_residual() const { return last_residual_; }

private:
  double last_residual_;
};

// A cross-check between two independent computations disagreed.
class InternalError: public Error {
public:
  using Error::Error;
};

std::string to_string(BigCount value);
double to_double(BigCount value);
// Throws OverflowError above INT64_MAX.
std::int64_t to_int64(BigCount value);

// Throws OverflowError.
BigCount checked_add(BigCount a, BigCount b);
BigCount checked_mul(BigCount a, BigCount b);
BigCount checked_pow(BigCount base, int exponent);

// Exact binomial coefficient; zero when k < 0 or k > n. Throws OverflowError.
BigCount binomial(std::int64_t n, std::int64_t k);

// Floating binomial for formula evaluation (no overflow, may lose precision).
double binomial_real(double n, int k);

}  // namespace btr

#endif  // BTR_COMMON_H_
