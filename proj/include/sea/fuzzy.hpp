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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"

namespace sea {

inline constexpr double kFuzzyTol = 1e-12;

/// Membership function on the ground set {0, ..., n-1}.
class FuzzyElement {
  public:
    explicit FuzzyElement(std::vector<double> memberships)
        : mu_(std::move(memberships)) {
        if (mu_.empty()) {
            throw UsageError("fuzzy element over an empty ground set");
        }
        for (std::size_t i = 0; i < mu_.size(); ++i) {
            const double x = mu_[i];
            if (!std::isfinite(x) || x < -kFuzzyTol || x > 1.0 + kFuzzyTol) {
                throw UsageError("membership " + std::to_string(i) + " = " +
                                 std::to_string(x) + " outside [0, 1]");
            }
            mu_[i] = std::clamp(x, 0.0, 1.0);
        }
    }

    [[nodiscard]] std::size_t ground_size() const noexcept {
        return mu_.size();
    }
    [[nodiscard]] double operator[](std::size_t i) const { return mu_[i]; }
    [[nodiscard]] const std::vector<double> &memberships() const noexcept {
        return mu_;
    }

    friend bool operator==(const FuzzyElement &,
                           const FuzzyElement &) = default;

  private:
    std::vector<double> mu_;
};

/// Fuzzy subsets of a finite ground set: pointwise sum when it stays below
/// one, pointwise product as the sequential product.
class FuzzyAlgebra {
  public:
    using element_type = FuzzyElement;
    static constexpr InstanceKind kind = InstanceKind::Fuzzy;

    explicit FuzzyAlgebra(std::size_t n) : n_(n) {
        if (n < 1) {
            throw UsageError("fuzzy ground size must be at least 1");
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] FuzzyElement element(std::vector<double> mu) const {
        FuzzyElement e(std::move(mu));
        check(e);
        return e;
    }

    [[nodiscard]] FuzzyElement zero() const {
        return FuzzyElement(std::vector<double>(n_, 0.0));
    }
    [[nodiscard]] FuzzyElement one() const {
        return FuzzyElement(std::vector<double>(n_, 1.0));
    }

    void check(const FuzzyElement &a) const {
        if (a.ground_size() != n_) {
            throw UsageError("fuzzy element over ground size " +
                             std::to_string(a.ground_size()) +
                             " used with instance of size " +
                             std::to_string(n_));
        }
    }

    [[nodiscard]] std::optional<FuzzyElement>
    try_oplus(const FuzzyElement &a, const FuzzyElement &b) const {
        check(a);
        check(b);
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i] = a[i] + b[i];
            if (out[i] > 1.0 + kFuzzyTol) {
                return std::nullopt;
            }
        }
        return FuzzyElement(std::move(out));
    }

    [[nodiscard]] FuzzyElement seq(const FuzzyElement &a,
                                   const FuzzyElement &b) const {
        check(a);
        check(b);
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i] = a[i] * b[i];
        }
        return FuzzyElement(std::move(out));
    }

    [[nodiscard]] FuzzyElement complement(const FuzzyElement &a) const {
        check(a);
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i] = 1.0 - a[i];
        }
        return FuzzyElement(std::move(out));
    }

    [[nodiscard]] bool leq(const FuzzyElement &a, const FuzzyElement &b) const {
        check(a);
        check(b);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] > b[i] + kFuzzyTol) {
                return false;
            }
        }
        return true;
    }

    /// Crisp sets only.
    [[nodiscard]] bool is_sharp(const FuzzyElement &a) const {
        check(a);
        return std::all_of(a.memberships().begin(), a.memberships().end(),
                           [](double x) { return x == 0.0 || x == 1.0; });
    }

    [[nodiscard]] bool seq_commutes(const FuzzyElement &a,
                                    const FuzzyElement &b) const {
        return seq(a, b) == seq(b, a);
    }

    [[nodiscard]] bool approx_equal(const FuzzyElement &a,
                                    const FuzzyElement &b) const {
        return distance(a, b) <= kFuzzyTol;
    }

    /// Sup-norm distance.
    [[nodiscard]] double distance(const FuzzyElement &a,
                                  const FuzzyElement &b) const {
        check(a);
        check(b);
        double d = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            d = std::max(d, std::abs(a[i] - b[i]));
        }
        return d;
    }

    /// Meet of crisp sets (pointwise minimum). Unsharp inputs have no meet
    /// inside the sequential structure used here.
    [[nodiscard]] FuzzyElement meet(const FuzzyElement &a,
                                    const FuzzyElement &b) const {
        if (!is_sharp(a) || !is_sharp(b)) {
            throw MeetUnavailable("fuzzy meet requires crisp sets");
        }
        return seq(a, b);
    }

  private:
    std::size_t n_;
};

static_assert(SequentialEffectAlgebra<FuzzyAlgebra>);

} // namespace sea
