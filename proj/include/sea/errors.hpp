// Copyright 2026 The SEA Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sea {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller misuse: mismatched instances, empty inputs, bad configuration.
class UsageError : public Error {
  public:
    using Error::Error;
};

enum class NumericFailure {
    NonFinite,
    NonSquare,
    DimensionOutOfRange,
    NonHermitian,
    ConvergenceFailure,
    NotPSD,
    NotEffect,
    NotDensity,
    NotProjection,
    InternalConsistency,
    RetriesExhausted,
};

inline const char *to_string(NumericFailure f) {
    switch (f) {
    case NumericFailure::NonFinite:
        return "NonFinite";
    case NumericFailure::NonSquare:
        return "NonSquare";
    case NumericFailure::DimensionOutOfRange:
        return "DimensionOutOfRange";
    case NumericFailure::NonHermitian:
        return "NonHermitian";
    case NumericFailure::ConvergenceFailure:
        return "ConvergenceFailure";
    case NumericFailure::NotPSD:
        return "NotPSD";
    case NumericFailure::NotEffect:
        return "NotEffect";
    case NumericFailure::NotDensity:
        return "NotDensity";
    case NumericFailure::NotProjection:
        return "NotProjection";
    case NumericFailure::InternalConsistency:
        return "InternalConsistency";
    case NumericFailure::RetriesExhausted:
        return "RetriesExhausted";
    }
    return "Unknown";
}

/// Raised by the matrix kernel and by generators that cannot produce a
/// well-conditioned draw.
class NumericError : public Error {
  public:
    NumericError(NumericFailure failure, const std::string &what)
        : Error(std::string(to_string(failure)) + ": " + what),
          failure_(failure) {}

    [[nodiscard]] NumericFailure failure() const noexcept { return failure_; }

  private:
    NumericFailure failure_;
};

/// A list of elements that does not form a partition of the unit.
class PartitionError : public Error {
  public:
    enum class Kind { UndefinedSum, NotUnit };

    PartitionError(Kind kind, std::optional<std::size_t> index,
                   const std::string &what)
        : Error(what), kind_(kind), index_(index) {}

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// Index of the element whose addition made the running sum undefined.
    [[nodiscard]] std::optional<std::size_t> index() const noexcept {
        return index_;
    }

  private:
    Kind kind_;
    std::optional<std::size_t> index_;
};

/// Lattice meets exist only for sharp elements of the quantum and fuzzy
/// instances.
class MeetUnavailable : public Error {
  public:
    using Error::Error;
};

} // namespace sea
