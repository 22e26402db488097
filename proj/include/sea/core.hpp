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

/**
 * @file
 * Instance-agnostic sequential effect algebra contract: the partial sum,
 * the sequential product, partitions of the unit and their refinements.
 */

#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sea {

enum class InstanceKind { Boolean, Fuzzy, Quantum };

inline std::string_view to_string(InstanceKind k) {
    switch (k) {
    case InstanceKind::Boolean:
        return "boolean";
    case InstanceKind::Fuzzy:
        return "fuzzy";
    case InstanceKind::Quantum:
        return "quantum";
    }
    return "unknown";
}

inline InstanceKind parse_instance_kind(std::string_view s) {
    if (s == "boolean") {
        return InstanceKind::Boolean;
    }
    if (s == "fuzzy") {
        return InstanceKind::Fuzzy;
    }
    if (s == "quantum") {
        return InstanceKind::Quantum;
    }
    throw UsageError("unknown instance kind '" + std::string(s) + "'");
}

/**
 * A sequential effect algebra instance. `try_oplus` is partial and reports
 * undefined sums as an empty optional. `approx_equal` and `distance` carry
 * the instance tolerance (exact for the Boolean instance).
 */
template <class A>
concept SequentialEffectAlgebra =
    requires(const A &alg, const typename A::element_type &a,
             const typename A::element_type &b) {
        typename A::element_type;
        { A::kind } -> std::convertible_to<InstanceKind>;
        { alg.size() } -> std::convertible_to<std::size_t>;
        { alg.zero() } -> std::same_as<typename A::element_type>;
        { alg.one() } -> std::same_as<typename A::element_type>;
        {
            alg.try_oplus(a, b)
            } -> std::same_as<std::optional<typename A::element_type>>;
        { alg.seq(a, b) } -> std::same_as<typename A::element_type>;
        { alg.complement(a) } -> std::same_as<typename A::element_type>;
        { alg.leq(a, b) } -> std::same_as<bool>;
        { alg.is_sharp(a) } -> std::same_as<bool>;
        { alg.seq_commutes(a, b) } -> std::same_as<bool>;
        { alg.approx_equal(a, b) } -> std::same_as<bool>;
        { alg.distance(a, b) } -> std::convertible_to<double>;
        alg.check(a);
    };

template <SequentialEffectAlgebra A> using element_t = typename A::element_type;

/// Ordered list of elements whose orthosum is the unit. Only
/// `validate_partition` builds one.
template <class E> class Partition {
  public:
    struct Key {
      private:
        Key() = default;
        template <SequentialEffectAlgebra A>
        friend Partition<element_t<A>>
        validate_partition(const A &, std::vector<element_t<A>>);
    };

    Partition(Key, std::vector<E> elements) : elements_(std::move(elements)) {}

    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] const E &operator[](std::size_t i) const {
        return elements_[i];
    }
    [[nodiscard]] std::span<const E> elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] auto begin() const noexcept { return elements_.begin(); }
    [[nodiscard]] auto end() const noexcept { return elements_.end(); }

  private:
    std::vector<E> elements_;
};

/// Left fold of `try_oplus`; empty when any partial sum is undefined.
template <SequentialEffectAlgebra A>
std::optional<element_t<A>> orthosum(const A &alg,
                                     std::span<const element_t<A>> xs) {
    if (xs.empty()) {
        throw UsageError("orthosum of an empty list");
    }
    alg.check(xs[0]);
    std::optional<element_t<A>> acc = xs[0];
    for (std::size_t i = 1; i < xs.size() && acc; ++i) {
        acc = alg.try_oplus(*acc, xs[i]);
    }
    return acc;
}

template <SequentialEffectAlgebra A>
Partition<element_t<A>> validate_partition(const A &alg,
                                           std::vector<element_t<A>> xs) {
    using E = element_t<A>;
    if (xs.empty()) {
        throw UsageError("a partition needs at least one element");
    }
    for (const auto &x : xs) {
        alg.check(x);
    }
    E acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
        auto next = alg.try_oplus(acc, xs[i]);
        if (!next) {
            throw PartitionError(PartitionError::Kind::UndefinedSum, i,
                                 "UndefinedSum: adding element " +
                                     std::to_string(i) +
                                     " leaves the effect interval");
        }
        acc = std::move(*next);
    }
    if (!alg.approx_equal(acc, alg.one())) {
        throw PartitionError(PartitionError::Kind::NotUnit, std::nullopt,
                             "NotUnit: elements sum to something other than "
                             "the unit (distance " +
                                 std::to_string(alg.distance(acc, alg.one())) +
                                 ")");
    }
    return Partition<E>(typename Partition<E>::Key{}, std::move(xs));
}

/// Refinement A∘B, elements a_i∘b_j with i outer and j inner.
template <SequentialEffectAlgebra A>
Partition<element_t<A>> refine(const A &alg,
                               const Partition<element_t<A>> &left,
                               const Partition<element_t<A>> &right) {
    std::vector<element_t<A>> out;
    out.reserve(left.size() * right.size());
    for (const auto &a : left) {
        for (const auto &b : right) {
            out.push_back(alg.seq(a, b));
        }
    }
    try {
        return validate_partition(alg, std::move(out));
    } catch (const PartitionError &e) {
        throw NumericError(NumericFailure::InternalConsistency,
                           std::string("refinement is not a partition: ") +
                               e.what());
    }
}

} // namespace sea
