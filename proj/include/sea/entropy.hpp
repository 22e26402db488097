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
 * Entropy of partitions, refinement entropy and conditional entropy on a
 * sequential effect algebra, plus the residuals of the six entropy laws
 * relating them.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "state.hpp"

namespace sea {

struct EntropyOptions {
    double log_base = 2.0;

    void validate() const {
        if (!(log_base > 1.0) || !std::isfinite(log_base)) {
            throw UsageError("log base must be a finite number > 1");
        }
    }
};

/// x log_base(x) with 0 log 0 = 0. Inputs within 1e-12 of [0, 1] are clamped.
inline double xlogx(double x, double base = 2.0) {
    if (!(x >= -kProbSlack && x <= 1.0 + kProbSlack)) {
        throw UsageError("xlogx argument " + std::to_string(x) +
                         " outside [0, 1]");
    }
    x = std::clamp(x, 0.0, 1.0);
    if (x == 0.0) {
        return 0.0;
    }
    return x * std::log(x) / std::log(base);
}

/// H_s(A) = -Σ_i s(a_i) log s(a_i)
template <SequentialEffectAlgebra A>
double entropy(const A &alg, const state_t<A> &s,
               const Partition<element_t<A>> &part,
               const EntropyOptions &opts = {}) {
    opts.validate();
    double h = 0.0;
    for (const auto &a : part) {
        h -= xlogx(eval_state(alg, s, a), opts.log_base);
    }
    return h;
}

/**
 * H_s(B | A) = -Σ_i Σ_j s(a_i∘b_j) log s(b_j | a_i).
 *
 * Terms with zero joint weight, or conditioned on an outcome of zero
 * probability, contribute nothing. `conditioned` may be any partition,
 * including a refinement.
 */
template <SequentialEffectAlgebra A>
double cond_entropy(const A &alg, const state_t<A> &s,
                    const Partition<element_t<A>> &conditioned,
                    const Partition<element_t<A>> &given,
                    const EntropyOptions &opts = {}) {
    opts.validate();
    const double log_base = std::log(opts.log_base);
    double h = 0.0;
    for (const auto &a : given) {
        const double pa = eval_state(alg, s, a);
        if (pa <= 0.0) {
            continue;
        }
        for (const auto &b : conditioned) {
            const double joint = eval_state(alg, s, alg.seq(a, b));
            const double cond = detail::clamp_probability(joint / pa);
            if (joint <= 0.0 || cond <= 0.0) {
                continue;
            }
            h -= joint * std::log(cond) / log_base;
        }
    }
    return h;
}

/// H_s(A∘B)
template <SequentialEffectAlgebra A>
double refinement_entropy(const A &alg, const state_t<A> &s,
                          const Partition<element_t<A>> &left,
                          const Partition<element_t<A>> &right,
                          const EntropyOptions &opts = {}) {
    return entropy(alg, s, refine(alg, left, right), opts);
}

/// Signed gaps of the six entropy laws. r1 should vanish, r2..r6 should be
/// nonnegative.
struct TheoremResiduals {
    double r1 = 0.0; // H(A∘B) - H(B|A) - H(A)
    double r2 = 0.0; // H(A∘B|C) - H(A|C)
    double r3 = 0.0; // H_{s_A}(B) - H(B|A)
    double r4 = 0.0; // H(A) + H_{s_A}(B) - H(A∘B)
    double r5 = 0.0; // H(A∘B) - max{H_{s_A}(B), H(A)}
    double r6 = 0.0; // H_{s_C}(A|B) + H(B|C) - H(B∘A|C)

    [[nodiscard]] double operator[](std::size_t i) const {
        switch (i) {
        case 0:
            return r1;
        case 1:
            return r2;
        case 2:
            return r3;
        case 3:
            return r4;
        case 4:
            return r5;
        default:
            return r6;
        }
    }

    /// |r1| <= tol and every other residual >= -tol.
    [[nodiscard]] bool holds(double tol) const {
        return std::abs(r1) <= tol && r2 >= -tol && r3 >= -tol &&
               r4 >= -tol && r5 >= -tol && r6 >= -tol;
    }
};

template <SequentialEffectAlgebra A>
TheoremResiduals theorem_residuals(const A &alg, const state_t<A> &s,
                                   const Partition<element_t<A>> &pa,
                                   const Partition<element_t<A>> &pb,
                                   const Partition<element_t<A>> &pc,
                                   const EntropyOptions &opts = {}) {
    const auto ab = refine(alg, pa, pb);
    const auto ba = refine(alg, pb, pa);
    const auto s_a = state_after(alg, s, pa);
    const auto s_c = state_after(alg, s, pc);

    const double h_a = entropy(alg, s, pa, opts);
    const double h_ab = entropy(alg, s, ab, opts);
    const double h_b_given_a = cond_entropy(alg, s, pb, pa, opts);
    const double h_sa_b = entropy(alg, s_a, pb, opts);
    const double h_a_given_c = cond_entropy(alg, s, pa, pc, opts);
    const double h_ab_given_c = cond_entropy(alg, s, ab, pc, opts);
    const double h_sc_a_given_b = cond_entropy(alg, s_c, pa, pb, opts);
    const double h_b_given_c = cond_entropy(alg, s, pb, pc, opts);
    const double h_ba_given_c = cond_entropy(alg, s, ba, pc, opts);

    TheoremResiduals r;
    r.r1 = h_ab - h_b_given_a - h_a;
    r.r2 = h_ab_given_c - h_a_given_c;
    r.r3 = h_sa_b - h_b_given_a;
    r.r4 = h_a + h_sa_b - h_ab;
    r.r5 = h_ab - std::max(h_sa_b, h_a);
    r.r6 = h_sc_a_given_b + h_b_given_c - h_ba_given_c;
    return r;
}

} // namespace sea
