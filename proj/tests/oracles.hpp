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

// Reference computations for the tests. Everything here is written with
// plain loops and closed forms so it stays independent of the library's
// Eigen-backed code paths.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix mul(const Matrix &a, const Matrix &b) {
    Matrix c = Matrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Complex acc = 0.0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = acc;
        }
    }
    return c;
}

inline double frobenius(const Matrix &a) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

inline double trace_re(const Matrix &a) {
    double t = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        t += a(i, i).real();
    }
    return t;
}

/// Eigenvalues of a 2x2 Hermitian matrix from its characteristic
/// polynomial, ascending.
inline std::pair<double, double> eig2(const Matrix &m) {
    const double tr = m(0, 0).real() + m(1, 1).real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return {(tr - disc) / 2.0, (tr + disc) / 2.0};
}

inline Matrix diag(std::initializer_list<double> values) {
    const auto n = static_cast<Eigen::Index>(values.size());
    Matrix m = Matrix::Zero(n, n);
    Eigen::Index i = 0;
    for (double v : values) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

/// The two bases of C^2 used by the projection-lattice counterexample.
inline Matrix P1() { return diag({0.0, 1.0}); }
inline Matrix P2() { return diag({1.0, 0.0}); }
inline Matrix Q1() { return Matrix::Constant(2, 2, 0.5); }
inline Matrix Q2() {
    Matrix q(2, 2);
    q << 0.5, -0.5, -0.5, 0.5;
    return q;
}

inline double shannon_term(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

/// Classical quantities of a joint table p[i][j].
struct Joint {
    std::vector<std::vector<double>> p;

    [[nodiscard]] std::vector<double> row_marginal() const {
        std::vector<double> r(p.size(), 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (double x : p[i]) {
                r[i] += x;
            }
        }
        return r;
    }
    [[nodiscard]] std::vector<double> col_marginal() const {
        std::vector<double> c(p.empty() ? 0 : p[0].size(), 0.0);
        for (const auto &row : p) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                c[j] += row[j];
            }
        }
        return c;
    }
    [[nodiscard]] double h_joint() const {
        double h = 0.0;
        for (const auto &row : p) {
            for (double x : row) {
                h += shannon_term(x);
            }
        }
        return h;
    }
    [[nodiscard]] static double h(const std::vector<double> &v) {
        double s = 0.0;
        for (double x : v) {
            s += shannon_term(x);
        }
        return s;
    }
    /// H(col | row) = -Σ p(i,j) log p(i,j)/p(i)
    [[nodiscard]] double h_col_given_row() const {
        const auto r = row_marginal();
        double h = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (double x : p[i]) {
                if (x > 0.0) {
                    h -= x * std::log2(x / r[i]);
                }
            }
        }
        return h;
    }
};

/// All set partitions of {0..n-1} as lists of blocks (restricted growth
/// strings).
inline std::vector<std::vector<std::vector<std::size_t>>>
set_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::size_t> label(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                             std::size_t k) {
        if (i == n) {
            std::vector<std::vector<std::size_t>> blocks(k);
            for (std::size_t x = 0; x < n; ++x) {
                blocks[label[x]].push_back(x);
            }
            out.push_back(blocks);
            return;
        }
        for (std::size_t b = 0; b <= k; ++b) {
            label[i] = b;
            rec(i + 1, b == k ? k + 1 : k);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace oracle
