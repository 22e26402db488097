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
 * Dense Hermitian kernel used by the quantum effect instance: eigen
 * decomposition, PSD square roots, effect/density/projection predicates and
 * the projection lattice operations (meet and join).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iostream>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "errors.hpp"

namespace sea::spectral {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr std::size_t kMaxDim = 64;

/// Default tolerances of the kernel.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kKernelTol = 1e-8;
inline constexpr double kClipWarn = 1e-6;

/// Eigenvalues at or below this (relative to max(1, |lambda|_max)) are
/// rounding noise and map to zero before taking square roots.
inline constexpr double kSqrtSnap = 1e-13;

struct EigenDecomposition {
    RealVector eigenvalues;    // ascending
    ComplexMatrix eigenvectors; // columns, unitary
};

inline double frobenius(const ComplexMatrix &m) { return m.norm(); }

inline ComplexMatrix identity(std::size_t d) {
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(d),
                                   static_cast<Eigen::Index>(d));
}

inline ComplexMatrix zeros(std::size_t d) {
    return ComplexMatrix::Zero(static_cast<Eigen::Index>(d),
                               static_cast<Eigen::Index>(d));
}

inline void require_dimension(std::size_t d) {
    if (d < 1 || d > kMaxDim) {
        throw NumericError(NumericFailure::DimensionOutOfRange,
                           "dimension " + std::to_string(d) +
                               " outside [1, " + std::to_string(kMaxDim) +
                               "]");
    }
}

inline void require_square_finite(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw NumericError(NumericFailure::NonSquare,
                           std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + " matrix");
    }
    if (!m.allFinite()) {
        throw NumericError(NumericFailure::NonFinite,
                           "matrix has NaN or infinite entries");
    }
}

/// (M + M^dagger) / 2
inline ComplexMatrix hermitize(const ComplexMatrix &m) {
    require_square_finite(m);
    return (m + m.adjoint()) * 0.5;
}

inline double hermitian_defect(const ComplexMatrix &m) {
    return (m - m.adjoint()).norm();
}

inline bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && m.allFinite() &&
           hermitian_defect(m) <= tol * std::max(1.0, m.norm());
}

inline EigenDecomposition eig_hermitian(const ComplexMatrix &m) {
    require_square_finite(m);
    if (!is_hermitian(m, kHermitianTol)) {
        throw NumericError(NumericFailure::NonHermitian,
                           "defect " + std::to_string(hermitian_defect(m)));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        (m + m.adjoint()) * 0.5);
    if (solver.info() != Eigen::Success) {
        throw NumericError(NumericFailure::ConvergenceFailure,
                           "self-adjoint eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

/// V f(diag(lambda)) V^dagger
template <class F>
ComplexMatrix spectral_map(const EigenDecomposition &e, F &&f) {
    const auto n = e.eigenvalues.size();
    RealVector mapped(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        mapped(i) = f(e.eigenvalues(i));
    }
    return e.eigenvectors * mapped.asDiagonal() * e.eigenvectors.adjoint();
}

inline ComplexMatrix reconstruct(const EigenDecomposition &e) {
    return spectral_map(e, [](double x) { return x; });
}

inline double max_abs_eigenvalue(const EigenDecomposition &e) {
    if (e.eigenvalues.size() == 0) {
        return 0.0;
    }
    return std::max(std::abs(e.eigenvalues(0)),
                    std::abs(e.eigenvalues(e.eigenvalues.size() - 1)));
}

/// Square root from an existing decomposition. Negative eigenvalues below
/// -tol are rejected, tiny ones are snapped to zero.
inline ComplexMatrix sqrt_from(const EigenDecomposition &e,
                               double tol = kPsdTol) {
    if (e.eigenvalues.size() > 0 && e.eigenvalues(0) < -tol) {
        throw NumericError(NumericFailure::NotPSD,
                           "eigenvalue " + std::to_string(e.eigenvalues(0)));
    }
    const double snap = kSqrtSnap * std::max(1.0, max_abs_eigenvalue(e));
    return spectral_map(e, [snap](double x) {
        return x <= snap ? 0.0 : std::sqrt(x);
    });
}

inline ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
    return sqrt_from(eig_hermitian(m));
}

/// Clamp the spectrum into [0, 1]. Returns the largest amount any eigenvalue
/// moved.
inline double clip_unit_interval(EigenDecomposition &e) {
    double moved = 0.0;
    for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
        const double x = e.eigenvalues(i);
        const double c = std::clamp(x, 0.0, 1.0);
        moved = std::max(moved, std::abs(x - c));
        e.eigenvalues(i) = c;
    }
    if (moved > kClipWarn) {
        std::cerr << "warning: effect spectrum clipped by " << moved << '\n';
    }
    return moved;
}

inline bool is_effect(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols() || !m.allFinite() || !is_hermitian(m, tol)) {
        return false;
    }
    const auto e = eig_hermitian(hermitize(m));
    return e.eigenvalues(0) >= -tol &&
           e.eigenvalues(e.eigenvalues.size() - 1) <= 1.0 + tol;
}

inline bool is_density(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols() || !m.allFinite() || !is_hermitian(m, tol)) {
        return false;
    }
    const auto e = eig_hermitian(hermitize(m));
    return e.eigenvalues(0) >= -tol && std::abs(m.trace().real() - 1.0) <= tol;
}

inline bool is_projection(const ComplexMatrix &m, double tol) {
    return is_effect(m, tol) && (m * m - m).norm() <= tol;
}

/// Projection onto the eigenvectors whose eigenvalue is at most
/// tol * max(1, lambda_max).
inline ComplexMatrix kernel_projector(const ComplexMatrix &m,
                                      double tol = kKernelTol) {
    const auto e = eig_hermitian(m);
    const auto n = e.eigenvalues.size();
    const double cut = tol * std::max(1.0, e.eigenvalues(n - 1));
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (e.eigenvalues(i) <= cut) {
            const auto v = e.eigenvectors.col(i);
            p += v * v.adjoint();
        }
    }
    return hermitize(p);
}

inline void require_projection(const ComplexMatrix &p, double tol,
                               const char *name) {
    if (!is_projection(p, tol)) {
        throw NumericError(NumericFailure::NotProjection,
                           std::string(name) + " is not a projection");
    }
}

/// Projection onto range(P) ∩ range(Q), the kernel of (I - P) + (I - Q).
inline ComplexMatrix meet_projections(const ComplexMatrix &p,
                                      const ComplexMatrix &q,
                                      double tol = kKernelTol) {
    require_projection(p, tol, "left operand");
    require_projection(q, tol, "right operand");
    if (p.rows() != q.rows()) {
        throw UsageError("meet of projections with different dimensions");
    }
    const auto id = ComplexMatrix::Identity(p.rows(), p.cols());
    return kernel_projector((id - p) + (id - q), tol);
}

/// De Morgan dual of the meet.
inline ComplexMatrix join_projections(const ComplexMatrix &p,
                                      const ComplexMatrix &q,
                                      double tol = kKernelTol) {
    const auto id = ComplexMatrix::Identity(p.rows(), p.cols());
    return id - meet_projections(id - p, id - q, tol);
}

} // namespace sea::spectral
