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
 * Seeded random generators for states, elements and partitions of the three
 * instances. Every trial of a campaign owns an engine seeded from
 * (master seed, trial index), so trials can run in any order.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "boolean.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "fuzzy.hpp"
#include "quantum.hpp"
#include "spectral.hpp"
#include "state.hpp"

namespace sea::verify {

using Rng = std::mt19937_64;
using spectral::ComplexMatrix;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of the stream owned by trial `index` under `master`.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

inline Rng trial_rng(std::uint64_t master, std::uint64_t index) {
    return Rng(trial_seed(master, index));
}

inline double uniform01(Rng &rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::size_t uniform_index(Rng &rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Entries with independent real and imaginary parts of variance 1/2.
inline ComplexMatrix gaussian_matrix(std::size_t d, Rng &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = {re, im};
        }
    }
    return g;
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of R's
/// diagonal divided out.
inline ComplexMatrix random_unitary(std::size_t d, Rng &rng) {
    const ComplexMatrix g = gaussian_matrix(d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const auto rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) {
            q.col(j) *= rjj / mag;
        }
    }
    return q;
}

/// rho = G G^dagger / tr(G G^dagger) for a complex Gaussian G.
inline DensityMatrix gen_random_density(std::size_t d, Rng &rng) {
    spectral::require_dimension(d);
    const ComplexMatrix g = gaussian_matrix(d, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(spectral::hermitize(rho));
}

/// Probability vector drawn uniformly from the simplex; when `zero_rate` is
/// positive each weight is dropped with that probability (at least one
/// survives).
inline std::vector<double> random_probability_vector(std::size_t n, Rng &rng,
                                                     double zero_rate = 0.0) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto &x : w) {
        x = expo(rng);
        if (zero_rate > 0.0 && uniform01(rng) < zero_rate) {
            x = 0.0;
        }
        total += x;
    }
    if (total == 0.0) {
        w[uniform_index(rng, n)] = 1.0;
        total = 1.0;
    }
    for (auto &x : w) {
        x /= total;
    }
    return w;
}

// States ----------------------------------------------------------------

inline AtomWeights random_state(const BooleanAlgebra &alg, Rng &rng) {
    return AtomWeights(random_probability_vector(alg.size(), rng, 0.2));
}

inline PointWeights random_state(const FuzzyAlgebra &alg, Rng &rng) {
    return PointWeights(random_probability_vector(alg.size(), rng, 0.1));
}

inline DensityMatrix random_state(const QuantumEffectAlgebra &alg, Rng &rng) {
    return gen_random_density(alg.size(), rng);
}

// Partitions ------------------------------------------------------------

/// Surjective assignment of the n atoms to k blocks.
inline Partition<BooleanElement>
gen_random_boolean_partition(const BooleanAlgebra &alg, std::size_t k,
                             Rng &rng) {
    const std::size_t n = alg.size();
    if (k < 1 || k > n) {
        throw UsageError("boolean partition into " + std::to_string(k) +
                         " blocks needs 1 <= k <= " + std::to_string(n));
    }
    std::vector<std::size_t> atoms(n);
    for (std::size_t i = 0; i < n; ++i) {
        atoms[i] = i;
    }
    std::shuffle(atoms.begin(), atoms.end(), rng);
    std::vector<std::uint64_t> blocks(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t b = i < k ? i : uniform_index(rng, k);
        blocks[b] |= std::uint64_t{1} << atoms[i];
    }
    std::vector<BooleanElement> elems;
    elems.reserve(k);
    for (auto bits : blocks) {
        elems.push_back(alg.from_bits(bits));
    }
    return validate_partition(alg, std::move(elems));
}

/// Each ground point splits its unit membership over the k parts along an
/// independent uniform draw from the simplex.
inline Partition<FuzzyElement>
gen_random_fuzzy_partition(const FuzzyAlgebra &alg, std::size_t k, Rng &rng) {
    if (k < 1) {
        throw UsageError("fuzzy partition needs at least one part");
    }
    const std::size_t n = alg.size();
    std::vector<std::vector<double>> mu(k, std::vector<double>(n));
    for (std::size_t x = 0; x < n; ++x) {
        const auto w = random_probability_vector(k, rng);
        for (std::size_t i = 0; i < k; ++i) {
            mu[i][x] = w[i];
        }
    }
    std::vector<FuzzyElement> elems;
    elems.reserve(k);
    for (auto &m : mu) {
        elems.push_back(alg.element(std::move(m)));
    }
    return validate_partition(alg, std::move(elems));
}

inline constexpr double kMaxCondition = 1e12;
inline constexpr std::size_t kMaxRedraws = 100;

/**
 * a_i = S^{-1/2} G_i S^{-1/2} with G_i = M_i M_i^dagger and S = Σ G_i.
 * Draws whose S has condition number above 1e12 are redrawn; the number of
 * redraws is added to `redraws` when given.
 */
inline Partition<QuantumEffect>
gen_random_effect_partition(const QuantumEffectAlgebra &alg, std::size_t k,
                            Rng &rng, std::size_t *redraws = nullptr) {
    if (k < 1) {
        throw UsageError("effect partition needs at least one part");
    }
    if (k == 1) {
        return validate_partition(alg, {alg.one()});
    }
    const std::size_t d = alg.size();
    for (std::size_t attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        std::vector<ComplexMatrix> g;
        g.reserve(k);
        ComplexMatrix sum = spectral::zeros(d);
        for (std::size_t i = 0; i < k; ++i) {
            const ComplexMatrix m = gaussian_matrix(d, rng);
            g.push_back(spectral::hermitize(m * m.adjoint()));
            sum += g.back();
        }
        const auto e = spectral::eig_hermitian(sum);
        const double lo = e.eigenvalues(0);
        const double hi = e.eigenvalues(e.eigenvalues.size() - 1);
        if (!(lo > 0.0) || hi / lo > kMaxCondition) {
            if (redraws != nullptr) {
                ++*redraws;
            }
            continue;
        }
        const ComplexMatrix inv_root =
            spectral::spectral_map(e, [](double x) { return 1.0 / std::sqrt(x); });
        std::vector<QuantumEffect> elems;
        elems.reserve(k);
        for (const auto &gi : g) {
            elems.push_back(
                alg.effect(spectral::hermitize(inv_root * gi * inv_root)));
        }
        return validate_partition(alg, std::move(elems));
    }
    throw NumericError(NumericFailure::RetriesExhausted,
                       "no well-conditioned effect partition after " +
                           std::to_string(kMaxRedraws) + " redraws");
}

inline Partition<BooleanElement> random_partition(const BooleanAlgebra &alg,
                                                  std::size_t k, Rng &rng,
                                                  std::size_t * = nullptr) {
    return gen_random_boolean_partition(alg, k, rng);
}

inline Partition<FuzzyElement> random_partition(const FuzzyAlgebra &alg,
                                                std::size_t k, Rng &rng,
                                                std::size_t * = nullptr) {
    return gen_random_fuzzy_partition(alg, k, rng);
}

inline Partition<QuantumEffect>
random_partition(const QuantumEffectAlgebra &alg, std::size_t k, Rng &rng,
                 std::size_t *redraws = nullptr) {
    return gen_random_effect_partition(alg, k, rng, redraws);
}

// Elements for axiom checks -----------------------------------------------
//
// Fuzzy memberships live on the dyadic grid j/1024 so that sums and products
// of two or three of them are exact in double precision.

inline constexpr int kDyadicSteps = 1024;

inline double dyadic(Rng &rng, int max_steps = kDyadicSteps) {
    return static_cast<double>(
               std::uniform_int_distribution<int>(0, max_steps)(rng)) /
           kDyadicSteps;
}

inline BooleanElement random_element(const BooleanAlgebra &alg, Rng &rng) {
    return alg.from_bits(rng() & BooleanElement::mask(alg.size()));
}

inline FuzzyElement random_element(const FuzzyAlgebra &alg, Rng &rng) {
    std::vector<double> mu(alg.size());
    for (auto &x : mu) {
        x = dyadic(rng);
    }
    return alg.element(std::move(mu));
}

/// U diag(u) U^dagger with Haar U and uniform eigenvalues.
inline QuantumEffect random_element(const QuantumEffectAlgebra &alg, Rng &rng) {
    const std::size_t d = alg.size();
    const ComplexMatrix u = random_unitary(d, rng);
    spectral::RealVector lambda(static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        lambda(i) = uniform01(rng);
    }
    return alg.effect(
        spectral::hermitize(u * lambda.asDiagonal() * u.adjoint()));
}

/// Projection onto `rank` Haar-random orthonormal directions.
inline ComplexMatrix random_projection_matrix(std::size_t d, std::size_t rank,
                                              Rng &rng) {
    const ComplexMatrix u = random_unitary(d, rng);
    const auto cols = u.leftCols(static_cast<Eigen::Index>(rank));
    return spectral::hermitize(cols * cols.adjoint());
}

/// k elements whose orthosum is defined (a partition of the unit with one
/// extra slot dropped).
inline std::vector<BooleanElement>
random_orthogonal_elements(const BooleanAlgebra &alg, std::size_t k, Rng &rng) {
    std::vector<std::uint64_t> bits(k, 0);
    for (std::size_t x = 0; x < alg.size(); ++x) {
        const std::size_t slot = uniform_index(rng, k + 1);
        if (slot < k) {
            bits[slot] |= std::uint64_t{1} << x;
        }
    }
    std::vector<BooleanElement> out;
    for (auto b : bits) {
        out.push_back(alg.from_bits(b));
    }
    return out;
}

inline std::vector<FuzzyElement>
random_orthogonal_elements(const FuzzyAlgebra &alg, std::size_t k, Rng &rng) {
    std::vector<std::vector<double>> mu(k, std::vector<double>(alg.size()));
    for (std::size_t x = 0; x < alg.size(); ++x) {
        int left = kDyadicSteps;
        for (std::size_t i = 0; i < k; ++i) {
            const int step = std::uniform_int_distribution<int>(0, left)(rng);
            mu[i][x] = static_cast<double>(step) / kDyadicSteps;
            left -= step;
        }
    }
    std::vector<FuzzyElement> out;
    for (auto &m : mu) {
        out.push_back(alg.element(std::move(m)));
    }
    return out;
}

inline std::vector<QuantumEffect>
random_orthogonal_elements(const QuantumEffectAlgebra &alg, std::size_t k,
                           Rng &rng) {
    const auto part = gen_random_effect_partition(alg, k + 1, rng);
    return {part.begin(), part.begin() + static_cast<std::ptrdiff_t>(k)};
}

/// Pair (p, q) with p∘q = 0: disjoint sets, fuzzy sets with disjoint
/// supports, or a projection and its complement.
inline std::pair<BooleanElement, BooleanElement>
random_annihilating_pair(const BooleanAlgebra &alg, Rng &rng) {
    const auto p = random_element(alg, rng);
    const auto q = alg.seq(random_element(alg, rng), alg.complement(p));
    return {p, q};
}

inline std::pair<FuzzyElement, FuzzyElement>
random_annihilating_pair(const FuzzyAlgebra &alg, Rng &rng) {
    std::vector<double> p(alg.size(), 0.0);
    std::vector<double> q(alg.size(), 0.0);
    for (std::size_t x = 0; x < alg.size(); ++x) {
        if (rng() & 1U) {
            p[x] = dyadic(rng);
        } else {
            q[x] = dyadic(rng);
        }
    }
    return {alg.element(std::move(p)), alg.element(std::move(q))};
}

inline std::pair<QuantumEffect, QuantumEffect>
random_annihilating_pair(const QuantumEffectAlgebra &alg, Rng &rng) {
    const std::size_t d = alg.size();
    const std::size_t rank = uniform_index(rng, d + 1);
    const auto p = alg.effect(random_projection_matrix(d, rank, rng));
    return {p, alg.complement(p)};
}

/**
 * `count` pairwise sequentially independent elements. With `orthogonal` the
 * first two are also summable. Quantum families are either diagonal or
 * functions of one random Hermitian matrix (diagonal in its eigenbasis).
 */
inline std::vector<BooleanElement> random_commuting_family(
    const BooleanAlgebra &alg, std::size_t count, bool orthogonal, Rng &rng) {
    std::vector<BooleanElement> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_element(alg, rng));
    }
    if (orthogonal && count >= 2) {
        out[1] = alg.seq(out[1], alg.complement(out[0]));
    }
    return out;
}

inline std::vector<FuzzyElement> random_commuting_family(
    const FuzzyAlgebra &alg, std::size_t count, bool orthogonal, Rng &rng) {
    std::vector<FuzzyElement> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> mu(alg.size());
        for (auto &x : mu) {
            x = (orthogonal && i < 2) ? dyadic(rng, kDyadicSteps / 2)
                                      : dyadic(rng);
        }
        out.push_back(alg.element(std::move(mu)));
    }
    return out;
}

inline std::vector<QuantumEffect>
random_commuting_family(const QuantumEffectAlgebra &alg, std::size_t count,
                        bool orthogonal, Rng &rng) {
    const std::size_t d = alg.size();
    const auto n = static_cast<Eigen::Index>(d);
    const bool diagonal = (rng() & 1U) != 0;
    ComplexMatrix basis = spectral::identity(d);
    spectral::RealVector spectrum = spectral::RealVector::Zero(n);
    if (!diagonal) {
        const ComplexMatrix g = gaussian_matrix(d, rng);
        const auto e = spectral::eig_hermitian(spectral::hermitize(g));
        basis = e.eigenvectors;
        spectrum = e.eigenvalues;
    }
    std::vector<QuantumEffect> out;
    for (std::size_t k = 0; k < count; ++k) {
        spectral::RealVector values(n);
        if (diagonal) {
            for (Eigen::Index i = 0; i < n; ++i) {
                values(i) = uniform01(rng);
            }
        } else {
            // cubic polynomial of the spectrum rescaled into [0, 1]
            std::normal_distribution<double> normal(0.0, 1.0);
            const double c0 = normal(rng), c1 = normal(rng), c2 = normal(rng),
                         c3 = normal(rng);
            for (Eigen::Index i = 0; i < n; ++i) {
                const double x = spectrum(i);
                values(i) = c0 + x * (c1 + x * (c2 + x * c3));
            }
            const double lo = values.minCoeff();
            const double hi = values.maxCoeff();
            for (Eigen::Index i = 0; i < n; ++i) {
                values(i) = hi > lo ? (values(i) - lo) / (hi - lo) : 0.5;
            }
        }
        if (orthogonal && k < 2) {
            values *= 0.5;
        }
        out.push_back(alg.effect(
            spectral::hermitize(basis * values.asDiagonal() * basis.adjoint())));
    }
    return out;
}

} // namespace sea::verify
