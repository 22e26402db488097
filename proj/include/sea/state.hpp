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
 * States on the three instances: additive, normalized functionals mapping
 * elements to [0, 1].
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "boolean.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "fuzzy.hpp"
#include "quantum.hpp"
#include "spectral.hpp"

namespace sea {

inline constexpr double kWeightTol = 1e-12;
inline constexpr double kDensityTol = 1e-9;
inline constexpr double kProbSlack = 1e-12;

namespace detail {

inline std::vector<double> checked_weights(std::vector<double> w,
                                           const char *what) {
    if (w.empty()) {
        throw UsageError(std::string(what) + ": empty weight vector");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]) || w[i] < 0.0) {
            throw UsageError(std::string(what) + ": weight " +
                             std::to_string(i) + " is negative or not finite");
        }
        total += w[i];
    }
    if (std::abs(total - 1.0) > kWeightTol) {
        throw UsageError(std::string(what) + ": weights sum to " +
                         std::to_string(total) + ", not 1");
    }
    return w;
}

inline double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

} // namespace detail

/// Probability vector over the atoms of a Boolean instance.
class AtomWeights {
  public:
    explicit AtomWeights(std::vector<double> w)
        : w_(detail::checked_weights(std::move(w), "atom weights")) {}
    [[nodiscard]] const std::vector<double> &weights() const noexcept {
        return w_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }

  private:
    std::vector<double> w_;
};

/// Probability vector over the ground points of a fuzzy instance.
class PointWeights {
  public:
    explicit PointWeights(std::vector<double> w)
        : w_(detail::checked_weights(std::move(w), "point weights")) {}
    [[nodiscard]] const std::vector<double> &weights() const noexcept {
        return w_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }

  private:
    std::vector<double> w_;
};

/// Hermitian PSD matrix of unit trace.
class DensityMatrix {
  public:
    explicit DensityMatrix(const spectral::ComplexMatrix &rho) {
        spectral::require_square_finite(rho);
        spectral::require_dimension(static_cast<std::size_t>(rho.rows()));
        if (!spectral::is_density(rho, kDensityTol)) {
            throw NumericError(NumericFailure::NotDensity,
                               "not a density matrix (needs Hermitian, PSD, "
                               "unit trace)");
        }
        rho_ = spectral::hermitize(rho);
    }
    [[nodiscard]] const spectral::ComplexMatrix &matrix() const noexcept {
        return rho_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(rho_.rows());
    }

  private:
    spectral::ComplexMatrix rho_;
};

template <class A> struct state_of;
template <> struct state_of<BooleanAlgebra> {
    using type = AtomWeights;
};
template <> struct state_of<FuzzyAlgebra> {
    using type = PointWeights;
};
template <> struct state_of<QuantumEffectAlgebra> {
    using type = DensityMatrix;
};
template <class A> using state_t = typename state_of<A>::type;

template <class A, class S> void check_state(const A &alg, const S &s) {
    if (s.size() != alg.size()) {
        throw UsageError("state of size " + std::to_string(s.size()) +
                         " used with instance of size " +
                         std::to_string(alg.size()));
    }
}

inline double eval_state(const BooleanAlgebra &alg, const AtomWeights &s,
                         const BooleanElement &a) {
    alg.check(a);
    check_state(alg, s);
    double p = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (a.contains(i)) {
            p += s.weights()[i];
        }
    }
    return detail::clamp_probability(p);
}

inline double eval_state(const FuzzyAlgebra &alg, const PointWeights &s,
                         const FuzzyElement &a) {
    alg.check(a);
    check_state(alg, s);
    double p = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        p += s.weights()[i] * a[i];
    }
    return detail::clamp_probability(p);
}

/// Re tr(rho A)
inline double eval_state(const QuantumEffectAlgebra &alg,
                         const DensityMatrix &s, const QuantumEffect &a) {
    alg.check(a);
    check_state(alg, s);
    const double p = s.matrix().cwiseProduct(a.matrix().transpose()).sum().real();
    return detail::clamp_probability(p);
}

/// s(b | a) = s(a∘b) / s(a), and 0 when s(a) = 0.
template <SequentialEffectAlgebra A>
double cond_prob(const A &alg, const state_t<A> &s, const element_t<A> &b,
                 const element_t<A> &a) {
    const double pa = eval_state(alg, s, a);
    if (pa <= 0.0) {
        return 0.0;
    }
    return detail::clamp_probability(eval_state(alg, s, alg.seq(a, b)) / pa);
}

/// State after executing partition A without observing the outcome:
/// b ↦ Σ_i s(a_i ∘ b).
inline AtomWeights state_after(const BooleanAlgebra &alg, const AtomWeights &s,
                               const Partition<BooleanElement> &part) {
    check_state(alg, s);
    std::vector<double> w(s.size(), 0.0);
    for (const auto &a : part) {
        alg.check(a);
        for (std::size_t x = 0; x < w.size(); ++x) {
            if (a.contains(x)) {
                w[x] += s.weights()[x];
            }
        }
    }
    return AtomWeights(std::move(w));
}

inline PointWeights state_after(const FuzzyAlgebra &alg, const PointWeights &s,
                                const Partition<FuzzyElement> &part) {
    check_state(alg, s);
    std::vector<double> w(s.size(), 0.0);
    for (const auto &a : part) {
        alg.check(a);
        for (std::size_t x = 0; x < w.size(); ++x) {
            w[x] += s.weights()[x] * a[x];
        }
    }
    // Σ_i a_i(x) = 1 within the fuzzy tolerance; renormalize the residue.
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto &x : w) {
        x /= total;
    }
    return PointWeights(std::move(w));
}

/// Lüders form: rho' = Σ_i a_i^{1/2} rho a_i^{1/2}.
inline DensityMatrix state_after(const QuantumEffectAlgebra &alg,
                                 const DensityMatrix &s,
                                 const Partition<QuantumEffect> &part) {
    check_state(alg, s);
    spectral::ComplexMatrix rho = spectral::zeros(alg.size());
    for (const auto &a : part) {
        alg.check(a);
        rho += a.sqrt() * s.matrix() * a.sqrt();
    }
    rho = spectral::hermitize(rho);
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

} // namespace sea
