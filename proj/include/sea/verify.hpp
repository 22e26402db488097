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
 * Law-verification campaigns over seeded random cases: the six entropy laws,
 * the effect algebra and sequential product axioms, the log sum inequality
 * and the orthomodular law. Trials are independent; results are aggregated
 * by trial index so the worker count never changes a report.
 */

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "boolean.hpp"
#include "core.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "fuzzy.hpp"
#include "quantum.hpp"
#include "random.hpp"
#include "serialize.hpp"
#include "spectral.hpp"
#include "state.hpp"

namespace sea::verify {

using io::Json;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Campaign bookkeeping ------------------------------------------------------

enum class LawMode {
    Absolute,  // pass iff |value| <= tolerance; worst is the largest |value|
    LowerBound // pass iff value >= -tolerance; worst is the smallest value
};

struct LawTally {
    std::string law;
    LawMode mode = LawMode::Absolute;
    double tolerance = 0.0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::optional<double> worst;
    std::optional<std::size_t> worst_trial;
    std::uint64_t worst_seed = 0;

    LawTally(std::string name, LawMode m, double tol)
        : law(std::move(name)), mode(m), tolerance(tol) {}

    [[nodiscard]] bool passes(double value) const {
        if (std::isnan(value)) {
            return false;
        }
        return mode == LawMode::Absolute ? std::abs(value) <= tolerance
                                         : value >= -tolerance;
    }

    /// Trials must be recorded in index order; ties keep the earlier trial.
    void record(std::size_t trial, std::uint64_t seed, double value) {
        (passes(value) ? pass : fail) += 1;
        double key = value;
        if (mode == LawMode::Absolute) {
            key = std::isnan(value) ? kInf : std::abs(value);
        } else if (std::isnan(value)) {
            key = -kInf;
        }
        const bool worse = !worst || (mode == LawMode::Absolute
                                          ? key > *worst
                                          : key < *worst);
        if (worse) {
            worst = key;
            worst_trial = trial;
            worst_seed = seed;
        }
    }

    /// A trial that could not be generated counts against every law.
    void record_error() { ++fail; }
};

struct CampaignReport {
    std::string campaign;
    Json config;
    std::size_t trials = 0;
    std::vector<LawTally> laws;
    std::size_t generator_errors = 0;
    std::size_t generator_redraws = 0;
    std::optional<std::size_t> first_error_trial;
    std::string first_error;
    double runtime_seconds = 0.0;

    [[nodiscard]] bool all_passed() const {
        return std::all_of(laws.begin(), laws.end(),
                           [](const LawTally &t) { return t.fail == 0; });
    }

    [[nodiscard]] const LawTally &law(const std::string &name) const {
        for (const auto &t : laws) {
            if (t.law == name) {
                return t;
            }
        }
        throw UsageError("no law named '" + name + "' in report");
    }
};

/// Runs f(i) for i in [0, trials) on `workers` threads. f must only write
/// to slot i of its own output.
template <class F>
void for_each_trial(std::size_t trials, unsigned workers, F &&f) {
    workers = std::max(1U, workers);
    if (workers == 1 || trials < 2) {
        for (std::size_t i = 0; i < trials; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const auto n = std::min<std::size_t>(workers, trials);
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < trials; i = next++) {
                f(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

/// Per-trial result: one value per law, or a generator error.
struct TrialValues {
    std::vector<double> values;
    std::optional<std::string> error;
    std::size_t redraws = 0;
};

inline void fold_trials(CampaignReport &report, std::uint64_t master,
                        const std::vector<TrialValues> &results) {
    for (std::size_t t = 0; t < results.size(); ++t) {
        const auto &r = results[t];
        report.generator_redraws += r.redraws;
        if (r.error) {
            ++report.generator_errors;
            if (!report.first_error_trial) {
                report.first_error_trial = t;
                report.first_error = *r.error;
            }
            for (auto &law : report.laws) {
                law.record_error();
            }
            continue;
        }
        const auto seed = trial_seed(master, t);
        for (std::size_t k = 0; k < report.laws.size(); ++k) {
            report.laws[k].record(t, seed, r.values[k]);
        }
    }
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

// Entropy-law campaign -----------------------------------------------------

struct CampaignConfig {
    InstanceKind kind = InstanceKind::Quantum;
    std::size_t dim = 2;
    /// Fixed sizes of A, B and C.
    std::vector<std::size_t> sizes{2, 2, 2};
    /// When nonempty, each trial draws the three sizes from this pool.
    std::vector<std::size_t> size_pool;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    double log_base = 2.0;
    /// Threads used to run trials; never affects results.
    unsigned workers = 1;

    void validate() const {
        if (trials < 1) {
            throw UsageError("trials must be at least 1");
        }
        if (!(tolerance > 0.0)) {
            throw UsageError("tolerance must be positive");
        }
        EntropyOptions{log_base}.validate();
        if (dim < 1) {
            throw UsageError("dimension must be at least 1");
        }
        if (kind == InstanceKind::Quantum && dim > spectral::kMaxDim) {
            throw UsageError("quantum dimension must be at most 64");
        }
        if (kind == InstanceKind::Boolean && dim > BooleanElement::kMaxGround) {
            throw UsageError("boolean ground size must be at most 64");
        }
        if (size_pool.empty() && sizes.size() != 3) {
            throw UsageError("sizes must list exactly three partition sizes");
        }
        const auto &check = size_pool.empty() ? sizes : size_pool;
        for (auto k : check) {
            if (k < 1) {
                throw UsageError("partition sizes must be at least 1");
            }
            if (kind == InstanceKind::Boolean && k > dim) {
                throw UsageError("boolean partition size " + std::to_string(k) +
                                 " exceeds ground size " + std::to_string(dim));
            }
        }
    }

    /// Everything that determines the outcome; `workers` is left out.
    [[nodiscard]] Json echo() const {
        Json j;
        j["instance"] = std::string(to_string(kind));
        j["dim"] = dim;
        j["sizes"] = sizes;
        j["size_pool"] = size_pool;
        j["trials"] = trials;
        j["seed"] = seed;
        j["tolerance"] = tolerance;
        j["log_base"] = log_base;
        return j;
    }
};

inline const std::array<const char *, 6> kTheoremLaws = {
    "r1_chain_rule",        "r2_refinement_monotone",
    "r3_conditioning",      "r4_subadditivity",
    "r5_refinement_bounds", "r6_conditional_chain"};

struct TheoremTrial {
    std::array<std::size_t, 3> sizes{};
    TheoremResiduals residuals;
    std::size_t redraws = 0;
};

template <SequentialEffectAlgebra A>
TheoremTrial theorem_trial(const A &alg, const CampaignConfig &config,
                           std::size_t index) {
    auto rng = trial_rng(config.seed, index);
    TheoremTrial t;
    for (std::size_t k = 0; k < 3; ++k) {
        t.sizes[k] = config.size_pool.empty()
                         ? config.sizes[k]
                         : config.size_pool[uniform_index(
                               rng, config.size_pool.size())];
    }
    const auto s = random_state(alg, rng);
    const auto pa = random_partition(alg, t.sizes[0], rng, &t.redraws);
    const auto pb = random_partition(alg, t.sizes[1], rng, &t.redraws);
    const auto pc = random_partition(alg, t.sizes[2], rng, &t.redraws);
    t.residuals = theorem_residuals(alg, s, pa, pb, pc,
                                    EntropyOptions{config.log_base});
    return t;
}

/// Reruns one trial of a campaign standalone.
inline TheoremTrial run_theorem_trial(const CampaignConfig &config,
                                      std::size_t index) {
    config.validate();
    switch (config.kind) {
    case InstanceKind::Boolean:
        return theorem_trial(BooleanAlgebra(config.dim), config, index);
    case InstanceKind::Fuzzy:
        return theorem_trial(FuzzyAlgebra(config.dim), config, index);
    case InstanceKind::Quantum:
        break;
    }
    return theorem_trial(QuantumEffectAlgebra(config.dim), config, index);
}

inline CampaignReport run_theorem_campaign(const CampaignConfig &config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.campaign = "theorem";
    report.config = config.echo();
    report.trials = config.trials;
    report.laws.emplace_back(kTheoremLaws[0], LawMode::Absolute,
                             config.tolerance);
    for (std::size_t k = 1; k < kTheoremLaws.size(); ++k) {
        report.laws.emplace_back(kTheoremLaws[k], LawMode::LowerBound,
                                 config.tolerance);
    }
    std::vector<TrialValues> results(config.trials);
    for_each_trial(config.trials, config.workers, [&](std::size_t i) {
        auto &slot = results[i];
        try {
            const auto t = run_theorem_trial(config, i);
            slot.redraws = t.redraws;
            for (std::size_t k = 0; k < 6; ++k) {
                slot.values.push_back(t.residuals[k]);
            }
        } catch (const Error &e) {
            slot.error = e.what();
        }
    });
    fold_trials(report, config.seed, results);
    report.runtime_seconds = seconds_since(start);
    return report;
}

// Axiom campaign ------------------------------------------------------------

inline const std::array<const char *, 9> kAxiomLaws = {
    "EA1", "EA2", "EA3", "EA4", "SEA1", "SEA2", "SEA3", "SEA4", "SEA5"};

struct AxiomTolerances {
    double ea = 0.0;
    double sea1 = 0.0;
    double sea2 = 0.0;
    double sea3 = 0.0;
    double sea45 = 0.0;
};

/// Boolean and (dyadic) fuzzy checks are exact.
inline AxiomTolerances axiom_tolerances(InstanceKind kind) {
    if (kind == InstanceKind::Quantum) {
        return {1e-12, 1e-10, 1e-12, 1e-9, 1e-9};
    }
    return {};
}

namespace detail {

template <SequentialEffectAlgebra A>
double dist_or_inf(const A &alg, const std::optional<element_t<A>> &x,
                   const std::optional<element_t<A>> &y) {
    if (!x || !y) {
        return kInf;
    }
    return alg.distance(*x, *y);
}

} // namespace detail

/// One draw per axiom; returns the deviation of each, in kAxiomLaws order.
template <SequentialEffectAlgebra A>
std::vector<double> axiom_trial(const A &alg, Rng &rng) {
    using E = element_t<A>;
    using detail::dist_or_inf;
    std::vector<double> dev;

    // EA1: definedness and value of a⊕b are symmetric, on a random pair and
    // on a summable pair.
    {
        double d = 0.0;
        const auto pair = random_orthogonal_elements(alg, 2, rng);
        const std::array<std::pair<E, E>, 2> cases = {
            std::pair<E, E>{random_element(alg, rng), random_element(alg, rng)},
            std::pair<E, E>{pair[0], pair[1]}};
        for (const auto &[a, b] : cases) {
            const auto ab = alg.try_oplus(a, b);
            const auto ba = alg.try_oplus(b, a);
            if (ab.has_value() != ba.has_value()) {
                d = kInf;
            } else if (ab) {
                d = std::max(d, alg.distance(*ab, *ba));
            }
        }
        if (!alg.try_oplus(pair[0], pair[1])) {
            d = kInf;
        }
        dev.push_back(d);
    }
    // EA2: every bracketing of a⊕b⊕c agrees.
    {
        const auto t = random_orthogonal_elements(alg, 3, rng);
        const auto ab = alg.try_oplus(t[0], t[1]);
        const auto bc = alg.try_oplus(t[1], t[2]);
        const auto ac = alg.try_oplus(t[0], t[2]);
        const auto left = ab ? alg.try_oplus(*ab, t[2]) : std::nullopt;
        const auto right = bc ? alg.try_oplus(t[0], *bc) : std::nullopt;
        const auto mid = ac ? alg.try_oplus(*ac, t[1]) : std::nullopt;
        dev.push_back(std::max(dist_or_inf(alg, left, right),
                               dist_or_inf(alg, left, mid)));
    }
    // EA3: a ⊕ a' = 1 and a'' = a.
    {
        const auto a = random_element(alg, rng);
        const auto c = alg.complement(a);
        dev.push_back(std::max(
            dist_or_inf(alg, alg.try_oplus(a, c), std::optional<E>(alg.one())),
            alg.distance(alg.complement(c), a)));
    }
    // EA4: a ⊕ 1 is defined only for a = 0.
    {
        const auto a = random_element(alg, rng);
        double d = 0.0;
        if (alg.try_oplus(a, alg.one()) && !alg.approx_equal(a, alg.zero())) {
            d = kInf;
        }
        d = std::max(d, dist_or_inf(alg, alg.try_oplus(alg.zero(), alg.one()),
                                    std::optional<E>(alg.one())));
        dev.push_back(d);
    }
    // SEA1: b ↦ a∘b is additive.
    {
        const auto a = random_element(alg, rng);
        const auto bc = random_orthogonal_elements(alg, 2, rng);
        const auto sum = alg.try_oplus(bc[0], bc[1]);
        const auto lhs = sum ? std::optional<E>(alg.seq(a, *sum)) : std::nullopt;
        const auto rhs = alg.try_oplus(alg.seq(a, bc[0]), alg.seq(a, bc[1]));
        dev.push_back(dist_or_inf(alg, lhs, rhs));
    }
    // SEA2: 1∘a = a.
    {
        const auto a = random_element(alg, rng);
        dev.push_back(alg.distance(alg.seq(alg.one(), a), a));
    }
    // SEA3: on annihilating pairs both orders vanish.
    {
        const auto [p, q] = random_annihilating_pair(alg, rng);
        dev.push_back(std::max(alg.distance(alg.seq(p, q), alg.zero()),
                               alg.distance(alg.seq(q, p), alg.zero())));
    }
    // SEA4: a|b implies a|b' and a∘(b∘c) = (a∘b)∘c.
    {
        const auto f = random_commuting_family(alg, 3, false, rng);
        const auto &a = f[0];
        const auto &b = f[1];
        const auto &c = f[2];
        const auto bc = alg.complement(b);
        dev.push_back(std::max(
            alg.distance(alg.seq(a, bc), alg.seq(bc, a)),
            alg.distance(alg.seq(a, alg.seq(b, c)), alg.seq(alg.seq(a, b), c))));
    }
    // SEA5: c|a and c|b imply c|(a∘b) and c|(a⊕b).
    {
        const auto f = random_commuting_family(alg, 3, true, rng);
        const auto &a = f[0];
        const auto &b = f[1];
        const auto &c = f[2];
        const auto ab = alg.seq(a, b);
        const auto sum = alg.try_oplus(a, b);
        double d = alg.distance(alg.seq(c, ab), alg.seq(ab, c));
        d = std::max(d, sum ? alg.distance(alg.seq(c, *sum), alg.seq(*sum, c))
                            : kInf);
        dev.push_back(d);
    }
    return dev;
}

struct AxiomConfig {
    InstanceKind kind = InstanceKind::Quantum;
    std::size_t dim = 2;
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    unsigned workers = 1;

    void validate() const {
        if (trials < 1) {
            throw UsageError("trials must be at least 1");
        }
        if (dim < 1) {
            throw UsageError("dimension must be at least 1");
        }
    }

    [[nodiscard]] Json echo() const {
        Json j;
        j["instance"] = std::string(to_string(kind));
        j["dim"] = dim;
        j["trials"] = trials;
        j["seed"] = seed;
        return j;
    }
};

template <SequentialEffectAlgebra A>
CampaignReport check_sea_axioms(const A &alg, const AxiomConfig &config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const auto tol = axiom_tolerances(A::kind);
    CampaignReport report;
    report.campaign = "axioms";
    report.config = config.echo();
    report.trials = config.trials;
    const std::array<double, 9> tols = {tol.ea,   tol.ea,   tol.ea,
                                        tol.ea,   tol.sea1, tol.sea2,
                                        tol.sea3, tol.sea45, tol.sea45};
    for (std::size_t k = 0; k < kAxiomLaws.size(); ++k) {
        report.laws.emplace_back(kAxiomLaws[k], LawMode::Absolute, tols[k]);
    }
    std::vector<TrialValues> results(config.trials);
    for_each_trial(config.trials, config.workers, [&](std::size_t i) {
        auto rng = trial_rng(config.seed, i);
        try {
            results[i].values = axiom_trial(alg, rng);
        } catch (const Error &e) {
            results[i].error = e.what();
        }
    });
    fold_trials(report, config.seed, results);
    report.runtime_seconds = seconds_since(start);
    return report;
}

inline CampaignReport check_sea_axioms(const AxiomConfig &config) {
    config.validate();
    switch (config.kind) {
    case InstanceKind::Boolean:
        return check_sea_axioms(BooleanAlgebra(config.dim), config);
    case InstanceKind::Fuzzy:
        return check_sea_axioms(FuzzyAlgebra(config.dim), config);
    case InstanceKind::Quantum:
        break;
    }
    return check_sea_axioms(QuantumEffectAlgebra(config.dim), config);
}

// Log sum inequality -------------------------------------------------------

/**
 * Σ a_i log(a_i / b_i) - (Σ a_i) log(Σ a_i / Σ b_i), with 0 log 0 = 0,
 * 0 log(0/0) = 0 and a log(a/0) = +inf for a > 0. An infinite left side
 * makes the residual +inf.
 */
inline double check_log_sum(const std::vector<double> &a,
                            const std::vector<double> &b, double base = 2.0) {
    if (a.size() != b.size()) {
        throw UsageError("log sum inequality needs equal-length vectors");
    }
    EntropyOptions{base}.validate();
    const double ln_base = std::log(base);
    const auto term = [ln_base](double x, double y) {
        if (x < 0.0 || y < 0.0) {
            throw UsageError("log sum inequality needs nonnegative entries");
        }
        if (x == 0.0) {
            return 0.0;
        }
        if (y == 0.0) {
            return kInf;
        }
        return x * std::log(x / y) / ln_base;
    };
    double lhs = 0.0;
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        lhs += term(a[i], b[i]);
        sa += a[i];
        sb += b[i];
    }
    if (std::isinf(lhs)) {
        return kInf;
    }
    return lhs - term(sa, sb);
}

struct LogSumConfig {
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    double log_base = 2.0;
    unsigned workers = 1;

    void validate() const {
        if (trials < 1) {
            throw UsageError("trials must be at least 1");
        }
        EntropyOptions{log_base}.validate();
    }

    [[nodiscard]] Json echo() const {
        Json j;
        j["trials"] = trials;
        j["seed"] = seed;
        j["log_base"] = log_base;
        return j;
    }
};

/// Random pairs of lengths 1..10 with entries U[0, 10] (5% exact zeros), and
/// the equality case a = b on each drawn a.
inline CampaignReport run_log_sum_campaign(const LogSumConfig &config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.campaign = "logsum";
    report.config = config.echo();
    report.trials = config.trials;
    report.laws.emplace_back("log_sum", LawMode::LowerBound, 1e-12);
    report.laws.emplace_back("equality_case", LawMode::Absolute, 1e-12);
    std::vector<TrialValues> results(config.trials);
    for_each_trial(config.trials, config.workers, [&](std::size_t i) {
        auto rng = trial_rng(config.seed, i);
        const std::size_t n = 1 + uniform_index(rng, 10);
        std::uniform_real_distribution<double> entry(0.0, 10.0);
        const auto draw = [&] {
            std::vector<double> v(n);
            for (auto &x : v) {
                x = uniform01(rng) < 0.05 ? 0.0 : entry(rng);
            }
            return v;
        };
        const auto a = draw();
        const auto b = draw();
        results[i].values = {check_log_sum(a, b, config.log_base),
                             check_log_sum(a, a, config.log_base)};
    });
    fold_trials(report, config.seed, results);
    report.runtime_seconds = seconds_since(start);
    return report;
}

// Quantum logic -------------------------------------------------------------

/// ||R - (P ∨ (R ∧ P'))||_F for projections P <= R.
inline double orthomodular_residual(const spectral::ComplexMatrix &p,
                                    const spectral::ComplexMatrix &r) {
    const auto id = spectral::identity(static_cast<std::size_t>(p.rows()));
    const auto inner = spectral::meet_projections(r, id - p);
    return (r - spectral::join_projections(p, inner)).norm();
}

struct OrthomodularConfig {
    std::size_t trials = 200;
    std::size_t max_dim = 4;
    std::uint64_t seed = 1;

    [[nodiscard]] Json echo() const {
        Json j;
        j["trials"] = trials;
        j["max_dim"] = max_dim;
        j["seed"] = seed;
        return j;
    }
};

/// Random nested pairs P <= R: both span leading columns of one Haar
/// unitary, P with rank at most R's.
inline CampaignReport run_orthomodular_campaign(const OrthomodularConfig &config) {
    if (config.trials < 1 || config.max_dim < 1 ||
        config.max_dim > spectral::kMaxDim) {
        throw UsageError("orthomodular campaign needs trials >= 1 and "
                         "1 <= max_dim <= 64");
    }
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.campaign = "orthomodular";
    report.config = config.echo();
    report.trials = config.trials;
    report.laws.emplace_back("orthomodular", LawMode::Absolute, 1e-8);
    std::vector<TrialValues> results(config.trials);
    for (std::size_t i = 0; i < config.trials; ++i) {
        auto rng = trial_rng(config.seed, i);
        const std::size_t d = 1 + uniform_index(rng, config.max_dim);
        const std::size_t r_rank = uniform_index(rng, d + 1);
        const std::size_t p_rank = uniform_index(rng, r_rank + 1);
        const auto u = random_unitary(d, rng);
        const auto ur = u.leftCols(static_cast<Eigen::Index>(r_rank));
        const auto up = u.leftCols(static_cast<Eigen::Index>(p_rank));
        const spectral::ComplexMatrix r = ur * ur.adjoint();
        const spectral::ComplexMatrix p = up * up.adjoint();
        try {
            results[i].values = {orthomodular_residual(p, r)};
        } catch (const Error &e) {
            results[i].error = e.what();
        }
    }
    fold_trials(report, config.seed, results);
    report.runtime_seconds = seconds_since(start);
    return report;
}

// Bayes property -----------------------------------------------------------

/// s(b) - Σ_i s(a_i ∧ b) for each probe b. Needs lattice meets, so quantum
/// and fuzzy inputs must be sharp.
template <SequentialEffectAlgebra A>
std::vector<double> check_bayes(const A &alg, const state_t<A> &s,
                                const Partition<element_t<A>> &part,
                                const std::vector<element_t<A>> &probes) {
    std::vector<double> out;
    out.reserve(probes.size());
    for (const auto &b : probes) {
        double meet_sum = 0.0;
        for (const auto &a : part) {
            meet_sum += eval_state(alg, s, alg.meet(a, b));
        }
        out.push_back(eval_state(alg, s, b) - meet_sum);
    }
    return out;
}

// Scenarios ----------------------------------------------------------------

struct ScenarioRecord {
    std::string id;
    Json values = Json::object();
    std::vector<std::pair<std::string, bool>> verdicts;

    [[nodiscard]] bool passed() const {
        return std::all_of(verdicts.begin(), verdicts.end(),
                           [](const auto &v) { return v.second; });
    }

    [[nodiscard]] bool verdict(const std::string &name) const {
        for (const auto &[k, v] : verdicts) {
            if (k == name) {
                return v;
            }
        }
        throw UsageError("no verdict named '" + name + "'");
    }

    [[nodiscard]] Json to_json() const {
        Json j;
        j["id"] = id;
        j["values"] = values;
        Json v = Json::object();
        for (const auto &[k, ok] : verdicts) {
            v[k] = ok;
        }
        j["verdicts"] = v;
        j["passed"] = passed();
        return j;
    }
};

/// Two orthonormal bases of C^2 at 45 degrees: P1, P2 project onto the
/// coordinate axes, Q1, Q2 onto the diagonals.
struct TwoBases {
    spectral::ComplexMatrix p1, p2, q1, q2;
};

inline TwoBases two_bases() {
    TwoBases b;
    b.p1 = spectral::zeros(2);
    b.p1(1, 1) = 1.0;
    b.p2 = spectral::zeros(2);
    b.p2(0, 0) = 1.0;
    b.q1 = spectral::ComplexMatrix::Constant(2, 2, 0.5);
    b.q2 = spectral::identity(2) - b.q1;
    return b;
}

inline ScenarioRecord scenario_example_2_3() {
    ScenarioRecord rec;
    rec.id = "example-2-3";
    const auto m = two_bases();
    const QuantumEffectAlgebra alg(2);
    const auto p1 = alg.effect(m.p1);
    const auto p2 = alg.effect(m.p2);
    const auto q1 = alg.effect(m.q1);
    const auto q2 = alg.effect(m.q2);
    const auto pa = validate_partition(alg, {p1, p2});
    const auto pb = validate_partition(alg, {q1, q2});
    const DensityMatrix rho(spectral::identity(2) * 0.5);
    rec.values["P1"] = io::to_json(m.p1);
    rec.values["P2"] = io::to_json(m.p2);
    rec.values["Q1"] = io::to_json(m.q1);
    rec.values["Q2"] = io::to_json(m.q2);
    rec.values["rho"] = io::to_json(rho.matrix());

    // (a) every meet P_i ∧ Q_j vanishes
    Json meets = Json::array();
    double worst_meet = 0.0;
    for (const auto *p : {&m.p1, &m.p2}) {
        for (const auto *q : {&m.q1, &m.q2}) {
            const double norm = spectral::meet_projections(*p, *q).norm();
            worst_meet = std::max(worst_meet, norm);
            meets.push_back(norm);
        }
    }
    rec.values["meet_norms"] = meets;
    rec.verdicts.emplace_back("meets_vanish", worst_meet <= 1e-10);

    // (b) Bayes property fails: Σ_j s(Q_j) = 1 but Σ_j Σ_i s(P_i ∧ Q_j) = 0
    const auto residuals = check_bayes(alg, rho, pa, {q1, q2});
    double state_sum = 0.0;
    double meet_sum = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
        const double sq = eval_state(alg, rho, pb[j]);
        state_sum += sq;
        meet_sum += sq - residuals[j];
    }
    rec.values["bayes_residuals"] = residuals;
    rec.values["sum_s_Q"] = state_sum;
    rec.values["sum_s_meets"] = meet_sum;
    const bool each_half = std::all_of(residuals.begin(), residuals.end(),
                                       [](double r) {
                                           return std::abs(r - 0.5) <= 1e-12;
                                       });
    rec.verdicts.emplace_back("bayes_contradiction",
                              each_half && std::abs(state_sum - 1.0) <= 1e-12 &&
                                  std::abs(meet_sum) <= 1e-12);

    // (c) the sequential refinement {Q_j∘P_i} = {Q1/2, Q1/2, Q2/2, Q2/2}
    const auto ba = refine(alg, pb, pa);
    const std::array<spectral::ComplexMatrix, 4> expected = {
        m.q1 * 0.5, m.q1 * 0.5, m.q2 * 0.5, m.q2 * 0.5};
    double worst_elem = 0.0;
    spectral::ComplexMatrix total = spectral::zeros(2);
    Json elems = Json::array();
    for (std::size_t k = 0; k < ba.size(); ++k) {
        worst_elem =
            std::max(worst_elem, (ba[k].matrix() - expected[k]).norm());
        total += ba[k].matrix();
        elems.push_back(io::to_json(ba[k].matrix()));
    }
    const double unit_gap = (total - spectral::identity(2)).norm();
    rec.values["refinement_B_A"] = elems;
    rec.values["refinement_unit_gap"] = unit_gap;
    rec.verdicts.emplace_back("refinement_partition",
                              worst_elem <= 1e-10 && unit_gap <= 1e-10);

    // (d) chain rule at rho = I/2 in bits
    const double h_a = entropy(alg, rho, pa);
    const double h_b_a = cond_entropy(alg, rho, pb, pa);
    const double h_ab = refinement_entropy(alg, rho, pa, pb);
    rec.values["H_A"] = h_a;
    rec.values["H_B_given_A"] = h_b_a;
    rec.values["H_AB"] = h_ab;
    rec.verdicts.emplace_back("entropy_triple",
                              std::abs(h_a - 1.0) <= 1e-12 &&
                                  std::abs(h_b_a - 1.0) <= 1e-12 &&
                                  std::abs(h_ab - 2.0) <= 1e-12);
    return rec;
}

inline ScenarioRecord scenario_nondistributivity() {
    ScenarioRecord rec;
    rec.id = "nondistributivity";
    const auto m = two_bases();
    const auto id = spectral::identity(2);
    using spectral::join_projections;
    using spectral::meet_projections;

    const spectral::ComplexMatrix lhs =
        meet_projections(m.p1, join_projections(m.q1, m.q2));
    const spectral::ComplexMatrix rhs = join_projections(
        meet_projections(m.p1, m.q1), meet_projections(m.p1, m.q2));
    const double gap = (lhs - rhs).norm();
    rec.values["lhs"] = io::to_json(lhs);
    rec.values["rhs"] = io::to_json(rhs);
    rec.values["gap"] = gap;
    rec.verdicts.emplace_back("lhs_is_P1", (lhs - m.p1).norm() <= 1e-10);
    rec.verdicts.emplace_back("rhs_is_zero", rhs.norm() <= 1e-10);
    rec.verdicts.emplace_back("distributivity_gap_is_one",
                              std::abs(gap - 1.0) <= 1e-10);

    // b = a ∨ (b ∧ a') for nested pairs a <= b
    const std::array<std::pair<const char *,
                               std::pair<spectral::ComplexMatrix,
                                         spectral::ComplexMatrix>>,
                     4>
        pairs = {{{"P1<=I", {m.p1, id}},
                  {"Q1<=Q1vP1", {m.q1, join_projections(m.q1, m.p1)}},
                  {"Q2<=Q2", {m.q2, m.q2}},
                  {"0<=P2", {spectral::zeros(2), m.p2}}}};
    Json om = Json::object();
    bool all_hold = true;
    for (const auto &[name, pr] : pairs) {
        const double r = orthomodular_residual(pr.first, pr.second);
        om[name] = r;
        all_hold = all_hold && r <= 1e-8;
    }
    rec.values["orthomodular_residuals"] = om;
    rec.verdicts.emplace_back("orthomodular_law", all_hold);
    return rec;
}

} // namespace sea::verify
