// Copyright 2026 The alphaneg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALPHANEG_ERRORS_HPP
#define ALPHANEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alphaneg {

enum class ErrorKind {
  kDimensionMismatch,
  kNonHermitian,
  kNegativeSpectrum,
  kNotPositiveDefinite,
  kZeroOperator,
  kAlphaOutOfRange,
  kInvalidState,
  kInvalidArgument,
  kNotConverged,
  kNotCpptp,
  kUnsupportedMap,
  kCommutationFailed,
  kOutOfDomain,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNonHermitian: return "NonHermitian";
    case ErrorKind::kNegativeSpectrum: return "NegativeSpectrum";
    case ErrorKind::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::kZeroOperator: return "ZeroOperator";
    case ErrorKind::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::kInvalidState: return "InvalidState";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotConverged: return "NotConverged";
    case ErrorKind::kNotCpptp: return "NotCpptp";
    case ErrorKind::kUnsupportedMap: return "UnsupportedMap";
    case ErrorKind::kCommutationFailed: return "CommutationFailed";
    case ErrorKind::kOutOfDomain: return "OutOfDomain";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The kind is
/// stable and is what the CLI maps to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by iterative routines that hit their iteration budget. Carries the
/// final iterate and the residual reached.
template <class Payload>
class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, Payload last, double residual)
      : Error(ErrorKind::kNotConverged, what),
        last_(std::move(last)),
        residual_(residual) {}

  const Payload& last_iterate() const noexcept { return last_; }
  double residual() const noexcept { return residual_; }

 private:
  Payload last_;
  double residual_;
};

}  // namespace alphaneg

#endif  // ALPHANEG_ERRORS_HPP
