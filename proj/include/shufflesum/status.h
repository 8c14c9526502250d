// Copyright 2026 The Shufflesum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHUFFLESUM_STATUS_H_
#define SHUFFLESUM_STATUS_H_

#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace shufflesum {

// Every failure the library can report. Callers branch on the code; the
// message is for humans.
enum class ErrorCode {
  kEpsilonOutOfRange,
  kDeltaOutOfRange,
  kTOutOfRange,
  kBadDimension,
  kInvalidGamma,
  kInfeasibleGamma,
  kRequiresT1,
  kGammaIsOne,
  kDomainError,
  kBucketOutOfRange,
  kMOutOfRange,
  kNotNormalized,
  kZeroRow,
  kFileNotFound,
  kMalformedRow,
  kInsufficientData,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error {
 public:
  Error(ErrorCode code, std::string message)
      : code_(code), message_(std::move(message)) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

  // "<CodeName>: <message>"
  std::string ToString() const;

 private:
  ErrorCode code_;
  std::string message_;
};

// Either a value or an Error. Modeled on StatusOr: check ok() before value().
template <typename T>
class [[nodiscard]] Result {
 public:
  Result(T value) : data_(std::move(value)) {}  // NOLINT: implicit by design
  Result(Error error) : data_(std::move(error)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(data_); }

  const T& value() const& { return std::get<T>(data_); }
  T& value() & { return std::get<T>(data_); }
  T&& value() && { return std::get<T>(std::move(data_)); }

  const Error& error() const { return std::get<Error>(data_); }

  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }
  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }

 private:
  std::variant<T, Error> data_;
};

// Result without a payload.
class [[nodiscard]] Status {
 public:
  Status() = default;
  Status(Error error) : error_(std::move(error)), ok_(false) {}  // NOLINT

  static Status Ok() { return Status(); }

  bool ok() const { return ok_; }
  const Error& error() const { return error_; }

 private:
  Error error_{ErrorCode::kInvalidArgument, ""};
  bool ok_ = true;
};

}  // namespace shufflesum

#define SHUFFLESUM_CONCAT_INNER_(a, b) a##b
#define SHUFFLESUM_CONCAT_(a, b) SHUFFLESUM_CONCAT_INNER_(a, b)

#define SHUFFLESUM_RETURN_IF_ERROR(expr)        \
  do {                                          \
    auto _shufflesum_status = (expr);           \
    if (!_shufflesum_status.ok()) {             \
      return _shufflesum_status.error();        \
    }                                           \
  } while (0)

#define SHUFFLESUM_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                                      \
  if (!tmp.ok()) return tmp.error();                      \
  lhs = std::move(tmp).value()

#define SHUFFLESUM_ASSIGN_OR_RETURN(lhs, expr)                               \
  SHUFFLESUM_ASSIGN_OR_RETURN_IMPL_(                                         \
      SHUFFLESUM_CONCAT_(_shufflesum_result_, __LINE__), lhs, expr)

#endif  // SHUFFLESUM_STATUS_H_
