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
 * Effects on a finite-dimensional Hilbert space, 0 <= A <= I, with the
 * Lüders sequential product A∘B = A^{1/2} B A^{1/2}.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "core.hpp"
#include "errors.hpp"
#include "spectral.hpp"

namespace sea {

inline constexpr double kQuantumTol = 1e-9;
inline constexpr double kSharpTol = 1e-8;

/// Hermitian matrix with spectrum in [0, 1]. Carries its square root so the
/// sequential product costs one eigendecomposition.
class QuantumEffect {
  public:
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }
    [[nodiscard]] const spectral::ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    [[nodiscard]] const spectral::ComplexMatrix &sqrt() const noexcept {
        return root_;
    }

    /// Validate an arbitrary matrix as an effect within `tol`, storing the
    /// hermitized, spectrum-clipped value.
    static QuantumEffect from_matrix(const spectral::ComplexMatrix &m,
                                     double tol = kQuantumTol) {
        spectral::require_square_finite(m);
        spectral::require_dimension(static_cast<std::size_t>(m.rows()));
        if (!spectral::is_hermitian(m, tol)) {
            throw NumericError(NumericFailure::NonHermitian,
                               "not Hermitian (defect " +
                                   std::to_string(spectral::hermitian_defect(m)) +
                                   ")");
        }
        auto e = spectral::eig_hermitian(spectral::hermitize(m));
        const auto n = e.eigenvalues.size();
        if (e.eigenvalues(0) < -tol || e.eigenvalues(n - 1) > 1.0 + tol) {
            throw NumericError(NumericFailure::NotEffect,
                               "spectrum [" + std::to_string(e.eigenvalues(0)) +
                                   ", " +
                                   std::to_string(e.eigenvalues(n - 1)) +
                                   "] outside [0, 1]");
        }
        return from_decomposition(spectral::hermitize(m), std::move(e));
    }

    /// `hermitian` must be the matrix `e` decomposes. The stored matrix is
    /// only rebuilt when clipping moved an eigenvalue.
    static QuantumEffect from_decomposition(spectral::ComplexMatrix hermitian,
                                            spectral::EigenDecomposition e) {
        QuantumEffect q;
        if (spectral::clip_unit_interval(e) > 0.0) {
            q.matrix_ = spectral::reconstruct(e);
        } else {
            q.matrix_ = std::move(hermitian);
        }
        q.root_ = spectral::sqrt_from(e);
        return q;
    }

  private:
    QuantumEffect() = default;

    spectral::ComplexMatrix matrix_;
    spectral::ComplexMatrix root_;
};

class QuantumEffectAlgebra {
  public:
    using element_type = QuantumEffect;
    static constexpr InstanceKind kind = InstanceKind::Quantum;

    explicit QuantumEffectAlgebra(std::size_t d)
        : d_(d), zero_(make_zero(d)), one_(make_one(d)) {}

    [[nodiscard]] std::size_t size() const noexcept { return d_; }

    [[nodiscard]] QuantumEffect effect(const spectral::ComplexMatrix &m,
                                       double tol = kQuantumTol) const {
        auto e = QuantumEffect::from_matrix(m, tol);
        check(e);
        return e;
    }

    [[nodiscard]] QuantumEffect zero() const { return zero_; }
    [[nodiscard]] QuantumEffect one() const { return one_; }

    void check(const QuantumEffect &a) const {
        if (a.dim() != d_) {
            throw UsageError("effect of dimension " + std::to_string(a.dim()) +
                             " used with instance of dimension " +
                             std::to_string(d_));
        }
    }

    /// Defined iff the largest eigenvalue of A + B is at most 1 + 1e-9.
    [[nodiscard]] std::optional<QuantumEffect>
    try_oplus(const QuantumEffect &a, const QuantumEffect &b) const {
        check(a);
        check(b);
        spectral::ComplexMatrix sum = a.matrix() + b.matrix();
        auto e = spectral::eig_hermitian(sum);
        if (e.eigenvalues(e.eigenvalues.size() - 1) > 1.0 + kQuantumTol) {
            return std::nullopt;
        }
        return QuantumEffect::from_decomposition(std::move(sum), std::move(e));
    }

    [[nodiscard]] QuantumEffect seq(const QuantumEffect &a,
                                    const QuantumEffect &b) const {
        check(a);
        check(b);
        spectral::ComplexMatrix m =
            spectral::hermitize(a.sqrt() * b.matrix() * a.sqrt());
        auto e = spectral::eig_hermitian(m);
        return QuantumEffect::from_decomposition(std::move(m), std::move(e));
    }

    [[nodiscard]] QuantumEffect complement(const QuantumEffect &a) const {
        check(a);
        spectral::ComplexMatrix m = spectral::identity(d_) - a.matrix();
        auto e = spectral::eig_hermitian(m);
        return QuantumEffect::from_decomposition(std::move(m), std::move(e));
    }

    /// B - A positive semidefinite within 1e-9.
    [[nodiscard]] bool leq(const QuantumEffect &a,
                           const QuantumEffect &b) const {
        check(a);
        check(b);
        const auto e = spectral::eig_hermitian(b.matrix() - a.matrix());
        return e.eigenvalues(0) >= -kQuantumTol;
    }

    /// Sharp effects are the projections: ||A^2 - A||_F <= 1e-8.
    [[nodiscard]] bool is_sharp(const QuantumEffect &a) const {
        check(a);
        return (a.matrix() * a.matrix() - a.matrix()).norm() <= kSharpTol;
    }

    [[nodiscard]] bool seq_commutes(const QuantumEffect &a,
                                    const QuantumEffect &b) const {
        return distance(seq(a, b), seq(b, a)) <= kQuantumTol;
    }

    [[nodiscard]] bool approx_equal(const QuantumEffect &a,
                                    const QuantumEffect &b) const {
        return distance(a, b) <= kQuantumTol;
    }

    /// Frobenius distance.
    [[nodiscard]] double distance(const QuantumEffect &a,
                                  const QuantumEffect &b) const {
        check(a);
        check(b);
        return (a.matrix() - b.matrix()).norm();
    }

    /// Projection lattice meet; only defined for projections.
    [[nodiscard]] QuantumEffect meet(const QuantumEffect &a,
                                     const QuantumEffect &b) const {
        if (!is_sharp(a) || !is_sharp(b)) {
            throw MeetUnavailable("quantum meet requires projections");
        }
        return effect(spectral::meet_projections(a.matrix(), b.matrix()));
    }

    [[nodiscard]] QuantumEffect join(const QuantumEffect &a,
                                     const QuantumEffect &b) const {
        if (!is_sharp(a) || !is_sharp(b)) {
            throw MeetUnavailable("quantum join requires projections");
        }
        return effect(spectral::join_projections(a.matrix(), b.matrix()));
    }

  private:
    static QuantumEffect make_zero(std::size_t d) {
        spectral::require_dimension(d);
        return QuantumEffect::from_matrix(spectral::zeros(d));
    }
    static QuantumEffect make_one(std::size_t d) {
        spectral::require_dimension(d);
        return QuantumEffect::from_matrix(spectral::identity(d));
    }

    std::size_t d_;
    QuantumEffect zero_;
    QuantumEffect one_;
};

static_assert(SequentialEffectAlgebra<QuantumEffectAlgebra>);

} // namespace sea
