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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"

namespace sea {

/// Subset of the ground set {0, ..., n-1}, bit i set iff atom i is a member.
class BooleanElement {
  public:
    static constexpr std::size_t kMaxGround = 64;

    BooleanElement(std::size_t ground_size, std::uint64_t members)
        : ground_size_(ground_size), members_(members & mask(ground_size)) {
        if (ground_size < 1 || ground_size > kMaxGround) {
            throw UsageError("boolean ground size " +
                             std::to_string(ground_size) +
                             " outside [1, 64]");
        }
        if (members != members_) {
            throw UsageError("boolean element has members outside the ground "
                             "set");
        }
    }

    static BooleanElement from_indices(std::size_t ground_size,
                                       const std::vector<std::size_t> &atoms) {
        std::uint64_t bits = 0;
        for (auto i : atoms) {
            if (i >= ground_size) {
                throw UsageError("atom " + std::to_string(i) +
                                 " outside ground set of size " +
                                 std::to_string(ground_size));
            }
            bits |= std::uint64_t{1} << i;
        }
        return {ground_size, bits};
    }

    [[nodiscard]] std::size_t ground_size() const noexcept {
        return ground_size_;
    }
    [[nodiscard]] std::uint64_t bits() const noexcept { return members_; }
    [[nodiscard]] bool contains(std::size_t i) const noexcept {
        return i < ground_size_ && ((members_ >> i) & 1U) != 0;
    }
    [[nodiscard]] std::size_t count() const noexcept {
        return static_cast<std::size_t>(std::popcount(members_));
    }
    [[nodiscard]] std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < ground_size_; ++i) {
            if (contains(i)) {
                out.push_back(i);
            }
        }
        return out;
    }

    friend bool operator==(const BooleanElement &,
                           const BooleanElement &) = default;

    static constexpr std::uint64_t mask(std::size_t n) noexcept {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

  private:
    std::size_t ground_size_;
    std::uint64_t members_;
};

/// Power set of a finite ground set. a ⊕ b is the union of disjoint sets and
/// a ∘ b is the intersection.
class BooleanAlgebra {
  public:
    using element_type = BooleanElement;
    static constexpr InstanceKind kind = InstanceKind::Boolean;

    explicit BooleanAlgebra(std::size_t n) : n_(n) {
        if (n < 1 || n > BooleanElement::kMaxGround) {
            throw UsageError("boolean ground size must be in [1, 64]");
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] BooleanElement from_bits(std::uint64_t bits) const {
        return {n_, bits};
    }
    [[nodiscard]] BooleanElement
    element(const std::vector<std::size_t> &atoms) const {
        return BooleanElement::from_indices(n_, atoms);
    }
    [[nodiscard]] BooleanElement atom(std::size_t i) const {
        return BooleanElement::from_indices(n_, {i});
    }

    [[nodiscard]] BooleanElement zero() const { return {n_, 0}; }
    [[nodiscard]] BooleanElement one() const {
        return {n_, BooleanElement::mask(n_)};
    }

    void check(const BooleanElement &a) const {
        if (a.ground_size() != n_) {
            throw UsageError("boolean element over ground size " +
                             std::to_string(a.ground_size()) +
                             " used with instance of size " +
                             std::to_string(n_));
        }
    }

    [[nodiscard]] std::optional<BooleanElement>
    try_oplus(const BooleanElement &a, const BooleanElement &b) const {
        check(a);
        check(b);
        if ((a.bits() & b.bits()) != 0) {
            return std::nullopt;
        }
        return BooleanElement{n_, a.bits() | b.bits()};
    }

    [[nodiscard]] BooleanElement seq(const BooleanElement &a,
                                     const BooleanElement &b) const {
        check(a);
        check(b);
        return {n_, a.bits() & b.bits()};
    }

    [[nodiscard]] BooleanElement complement(const BooleanElement &a) const {
        check(a);
        return {n_, ~a.bits() & BooleanElement::mask(n_)};
    }

    [[nodiscard]] bool leq(const BooleanElement &a,
                           const BooleanElement &b) const {
        check(a);
        check(b);
        return (a.bits() & ~b.bits()) == 0;
    }

    [[nodiscard]] bool is_sharp(const BooleanElement &a) const {
        check(a);
        return true;
    }

    [[nodiscard]] bool seq_commutes(const BooleanElement &a,
                                    const BooleanElement &b) const {
        return seq(a, b) == seq(b, a);
    }

    [[nodiscard]] bool approx_equal(const BooleanElement &a,
                                    const BooleanElement &b) const {
        check(a);
        check(b);
        return a == b;
    }

    /// Size of the symmetric difference.
    [[nodiscard]] double distance(const BooleanElement &a,
                                  const BooleanElement &b) const {
        check(a);
        check(b);
        return static_cast<double>(std::popcount(a.bits() ^ b.bits()));
    }

    /// Lattice meet and join; every element is sharp.
    [[nodiscard]] BooleanElement meet(const BooleanElement &a,
                                      const BooleanElement &b) const {
        return seq(a, b);
    }
    [[nodiscard]] BooleanElement join(const BooleanElement &a,
                                      const BooleanElement &b) const {
        check(a);
        check(b);
        return {n_, a.bits() | b.bits()};
    }

  private:
    std::size_t n_;
};

static_assert(SequentialEffectAlgebra<BooleanAlgebra>);

} // namespace sea
