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

#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "sea/entropy.hpp"
#include "sea/random.hpp"

using namespace sea;
using Catch::Matchers::WithinAbs;
using sea::verify::Rng;

namespace {

const QuantumEffectAlgebra qubit(2);

Partition<QuantumEffect> qpart(std::initializer_list<oracle::Matrix> ms) {
    std::vector<QuantumEffect> xs;
    for (const auto &m : ms) {
        xs.push_back(qubit.effect(m));
    }
    return validate_partition(qubit, std::move(xs));
}

DensityMatrix half_identity() { return DensityMatrix(oracle::diag({0.5, 0.5})); }

Partition<BooleanElement> block_partition(const BooleanAlgebra &alg,
                                          const std::vector<std::vector<std::size_t>> &blocks) {
    std::vector<BooleanElement> xs;
    for (const auto &b : blocks) {
        xs.push_back(alg.element(b));
    }
    return validate_partition(alg, std::move(xs));
}

oracle::Joint joint_table(const Partition<BooleanElement> &a,
                          const Partition<BooleanElement> &b,
                          const std::vector<double> &w) {
    oracle::Joint j;
    j.p.assign(a.size(), std::vector<double>(b.size(), 0.0));
    for (std::size_t x = 0; x < w.size(); ++x) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (a[i].contains(x) && b[k].contains(x)) {
                    j.p[i][k] += w[x];
                }
            }
        }
    }
    return j;
}

} // namespace

TEST_CASE("xlogx", "[entropy]") {
    CHECK(xlogx(0.0) == 0.0);
    CHECK_THAT(xlogx(0.5), WithinAbs(-0.5, 1e-15));
    CHECK(xlogx(1.0) == 0.0);
    CHECK_THAT(xlogx(0.25, 4.0), WithinAbs(-0.25, 1e-15));
    CHECK_NOTHROW(xlogx(1.0 + 1e-13));
    CHECK_NOTHROW(xlogx(-1e-13));
    CHECK_THROWS_AS(xlogx(1.1), UsageError);
    CHECK_THROWS_AS(xlogx(std::nan("")), UsageError);
}

TEST_CASE("states", "[entropy]") {
    SECTION("density matrices are validated") {
        CHECK_THROWS_AS(DensityMatrix(oracle::diag({1.5, -0.5})), NumericError);
        CHECK_THROWS_AS(DensityMatrix(oracle::diag({0.5, 0.4})), NumericError);
        CHECK_NOTHROW(DensityMatrix(oracle::Q1()));
    }
    SECTION("weights are validated") {
        CHECK_THROWS_AS(AtomWeights({0.5, 0.6}), UsageError);
        CHECK_THROWS_AS(PointWeights({1.5, -0.5}), UsageError);
        CHECK_NOTHROW(AtomWeights({0.25, 0.75}));
    }
    SECTION("size mismatch") {
        const BooleanAlgebra b3(3);
        CHECK_THROWS_AS(eval_state(b3, AtomWeights({0.5, 0.5}), b3.one()),
                        UsageError);
    }
}

TEST_CASE("eval_state", "[entropy]") {
    CHECK_THAT(eval_state(qubit, half_identity(), qubit.effect(oracle::Q1())),
               WithinAbs(0.5, 1e-15));
    const BooleanAlgebra b4(4);
    const AtomWeights uniform({0.25, 0.25, 0.25, 0.25});
    CHECK_THAT(eval_state(b4, uniform, b4.element({0, 1})), WithinAbs(0.5, 0.0));
    CHECK(eval_state(b4, uniform, b4.one()) == 1.0);
    const FuzzyAlgebra f2(2);
    const PointWeights pw({0.25, 0.75});
    CHECK_THAT(eval_state(f2, pw, f2.element({0.5, 1.0})),
               WithinAbs(0.875, 1e-15));
    CHECK_THAT(eval_state(f2, pw, f2.one()), WithinAbs(1.0, 1e-15));

    SECTION("quantum expectation matches the trace oracle") {
        Rng rng(8);
        const QuantumEffectAlgebra q3(3);
        for (int t = 0; t < 20; ++t) {
            const auto rho = verify::gen_random_density(3, rng);
            const auto a = verify::random_element(q3, rng);
            const double expect = oracle::trace_re(oracle::mul(rho.matrix(), a.matrix()));
            CHECK_THAT(eval_state(q3, rho, a), WithinAbs(expect, 1e-12));
        }
    }
}

TEST_CASE("cond_prob", "[entropy]") {
    const BooleanAlgebra b4(4);
    const AtomWeights uniform({0.25, 0.25, 0.25, 0.25});
    CHECK_THAT(cond_prob(b4, uniform, b4.element({0}), b4.element({0, 1})),
               WithinAbs(0.5, 1e-15));
    const AtomWeights point({1.0, 0.0, 0.0, 0.0});
    CHECK(cond_prob(b4, point, b4.element({0}), b4.element({2, 3})) == 0.0);
    // s(Q1 P1 Q1) / s(Q1) = (1/4) / (1/2)
    CHECK_THAT(cond_prob(qubit, half_identity(), qubit.effect(oracle::P1()),
                         qubit.effect(oracle::Q1())),
               WithinAbs(0.5, 1e-15));
}

TEST_CASE("state_after", "[entropy]") {
    SECTION("maximally mixed qubit is unchanged by a projective measurement") {
        const auto after =
            state_after(qubit, half_identity(), qpart({oracle::Q1(), oracle::Q2()}));
        CHECK(oracle::frobenius(after.matrix() - oracle::diag({0.5, 0.5})) <=
              1e-15);
    }
    SECTION("the unit partition leaves any state alone") {
        Rng rng(4);
        const QuantumEffectAlgebra q3(3);
        const auto rho = verify::gen_random_density(3, rng);
        const auto unit = validate_partition(q3, {q3.one()});
        CHECK(oracle::frobenius(state_after(q3, rho, unit).matrix() -
                                rho.matrix()) <= 1e-14);
    }
    SECTION("boolean atoms keep weights") {
        const BooleanAlgebra b4(4);
        const AtomWeights w({0.1, 0.2, 0.3, 0.4});
        const auto atoms = block_partition(b4, {{0}, {1}, {2}, {3}});
        CHECK(state_after(b4, w, atoms).weights() == w.weights());
    }
    SECTION("defining property on random data") {
        Rng rng(31);
        const QuantumEffectAlgebra q3(3);
        const FuzzyAlgebra f4(4);
        for (int t = 0; t < 30; ++t) {
            const auto rho = verify::gen_random_density(3, rng);
            const auto pa = verify::gen_random_effect_partition(q3, 2 + t % 3, rng);
            const auto after = state_after(q3, rho, pa);
            const auto pw = verify::random_state(f4, rng);
            const auto fa = verify::gen_random_fuzzy_partition(f4, 2 + t % 3, rng);
            const auto fafter = state_after(f4, pw, fa);
            for (int k = 0; k < 5; ++k) {
                const auto b = verify::random_element(q3, rng);
                double direct = 0.0;
                for (const auto &a : pa) {
                    direct += eval_state(q3, rho, q3.seq(a, b));
                }
                CHECK_THAT(eval_state(q3, after, b), WithinAbs(direct, 1e-10));

                const auto fb = verify::random_element(f4, rng);
                double fdirect = 0.0;
                for (const auto &a : fa) {
                    fdirect += eval_state(f4, pw, f4.seq(a, fb));
                }
                CHECK_THAT(eval_state(f4, fafter, fb), WithinAbs(fdirect, 1e-12));
            }
        }
    }
}

TEST_CASE("entropy", "[entropy]") {
    const auto basis = qpart({oracle::Q1(), oracle::Q2()});
    CHECK_THAT(entropy(qubit, half_identity(), basis), WithinAbs(1.0, 1e-15));

    SECTION("a certain outcome carries no entropy") {
        const DensityMatrix pure(oracle::Q1());
        CHECK_THAT(entropy(qubit, pure, basis), WithinAbs(0.0, 1e-15));
    }
    SECTION("uniform atoms over 2^k points carry k bits") {
        for (std::size_t k = 0; k <= 5; ++k) {
            const std::size_t n = std::size_t{1} << k;
            const BooleanAlgebra alg(n);
            std::vector<std::vector<std::size_t>> blocks;
            for (std::size_t x = 0; x < n; ++x) {
                blocks.push_back({x});
            }
            const std::vector<double> w(n, 1.0 / static_cast<double>(n));
            const double shannon = oracle::Joint::h(w);
            const double h = entropy(alg, AtomWeights(w), block_partition(alg, blocks));
            CHECK_THAT(h, WithinAbs(static_cast<double>(k), 1e-12));
            CHECK_THAT(h, WithinAbs(shannon, 1e-12));
        }
    }
    SECTION("changing the base rescales by log 2 / log b") {
        Rng rng(2);
        const QuantumEffectAlgebra q3(3);
        for (int t = 0; t < 20; ++t) {
            const auto rho = verify::gen_random_density(3, rng);
            const auto pa = verify::gen_random_effect_partition(q3, 3, rng);
            const double h2 = entropy(q3, rho, pa);
            const double he = entropy(q3, rho, pa, {.log_base = std::exp(1.0)});
            CHECK_THAT(he, WithinAbs(h2 * std::log(2.0), 1e-12));
        }
    }
    SECTION("invalid base") {
        CHECK_THROWS_AS(entropy(qubit, half_identity(), basis, {.log_base = 1.0}),
                        UsageError);
    }
    SECTION("reordering a partition keeps its entropy") {
        const FuzzyAlgebra f3(3);
        const PointWeights pw({0.5, 0.3, 0.2});
        const auto a = validate_partition(
            f3, {f3.element({0.25, 0.5, 1.0}), f3.element({0.75, 0.5, 0.0})});
        const auto b = validate_partition(
            f3, {f3.element({0.75, 0.5, 0.0}), f3.element({0.25, 0.5, 1.0})});
        CHECK_THAT(entropy(f3, pw, a), WithinAbs(entropy(f3, pw, b), 1e-15));
    }
}

TEST_CASE("cond_entropy and refinement_entropy", "[entropy]") {
    const auto p = qpart({oracle::P1(), oracle::P2()});
    const auto q = qpart({oracle::Q1(), oracle::Q2()});
    const auto unit = qpart({Eigen::MatrixXcd::Identity(2, 2)});
    CHECK_THAT(cond_entropy(qubit, half_identity(), p, q), WithinAbs(1.0, 1e-14));
    CHECK_THAT(cond_entropy(qubit, half_identity(), unit, q), WithinAbs(0.0, 1e-15));
    CHECK_THAT(refinement_entropy(qubit, half_identity(), p, q),
               WithinAbs(2.0, 1e-14));
    CHECK_THAT(refinement_entropy(qubit, half_identity(), q, unit),
               WithinAbs(entropy(qubit, half_identity(), q), 1e-15));

    const BooleanAlgebra b4(4);
    const AtomWeights uniform({0.25, 0.25, 0.25, 0.25});
    const auto atoms = block_partition(b4, {{0}, {1}, {2}, {3}});
    CHECK_THAT(cond_entropy(b4, uniform, atoms, atoms), WithinAbs(0.0, 1e-15));
    const auto halves = block_partition(b4, {{0, 1}, {2, 3}});
    const auto parity = block_partition(b4, {{0, 2}, {1, 3}});
    CHECK_THAT(refinement_entropy(b4, uniform, halves, parity),
               WithinAbs(2.0, 1e-15));

    SECTION("zero-probability outcomes are skipped") {
        const AtomWeights point({1.0, 0.0, 0.0, 0.0});
        CHECK_THAT(cond_entropy(b4, point, parity, halves), WithinAbs(0.0, 0.0));
    }
}

TEST_CASE("theorem residuals", "[entropy]") {
    SECTION("two bases of a qubit") {
        const auto p = qpart({oracle::P1(), oracle::P2()});
        const auto q = qpart({oracle::Q1(), oracle::Q2()});
        const auto unit = qpart({Eigen::MatrixXcd::Identity(2, 2)});
        const auto r = theorem_residuals(qubit, half_identity(), p, q, unit);
        CHECK_THAT(r.r1, WithinAbs(0.0, 1e-14));
        CHECK(r.holds(1e-12));
        CHECK(r[0] == r.r1);
        CHECK(r[5] == r.r6);
    }
    SECTION("boolean partitions agree with classical Shannon quantities") {
        const BooleanAlgebra b5(5);
        const auto parts = oracle::set_partitions(5);
        Rng rng(77);
        for (int t = 0; t < 200; ++t) {
            const auto &ba = parts[verify::uniform_index(rng, parts.size())];
            const auto &bb = parts[verify::uniform_index(rng, parts.size())];
            const auto &bc = parts[verify::uniform_index(rng, parts.size())];
            const auto pa = block_partition(b5, ba);
            const auto pb = block_partition(b5, bb);
            const auto pc = block_partition(b5, bc);
            const auto w = verify::random_probability_vector(5, rng, 0.2);
            const AtomWeights s(w);

            const auto j = joint_table(pa, pb, w);
            CHECK_THAT(entropy(b5, s, pa), WithinAbs(oracle::Joint::h(j.row_marginal()), 1e-12));
            CHECK_THAT(refinement_entropy(b5, s, pa, pb), WithinAbs(j.h_joint(), 1e-12));
            CHECK_THAT(cond_entropy(b5, s, pb, pa), WithinAbs(j.h_col_given_row(), 1e-12));

            const auto r = theorem_residuals(b5, s, pa, pb, pc);
            CHECK_THAT(r.r1, WithinAbs(0.0, 1e-12));
            // s_A = s classically, so r3 is the mutual information
            const double mi = oracle::Joint::h(j.col_marginal()) - j.h_col_given_row();
            CHECK_THAT(r.r3, WithinAbs(mi, 1e-12));
            CHECK(r.holds(1e-12));
        }
    }
    SECTION("quantum and fuzzy residuals on random data") {
        Rng rng(13);
        const QuantumEffectAlgebra q3(3);
        const FuzzyAlgebra f4(4);
        for (int t = 0; t < 50; ++t) {
            const auto rho = verify::gen_random_density(3, rng);
            const auto r = theorem_residuals(
                q3, rho, verify::gen_random_effect_partition(q3, 2, rng),
                verify::gen_random_effect_partition(q3, 3, rng),
                verify::gen_random_effect_partition(q3, 2, rng));
            CHECK(r.holds(1e-9));
            const auto pw = verify::random_state(f4, rng);
            const auto rf = theorem_residuals(
                f4, pw, verify::gen_random_fuzzy_partition(f4, 3, rng),
                verify::gen_random_fuzzy_partition(f4, 2, rng),
                verify::gen_random_fuzzy_partition(f4, 4, rng));
            CHECK(rf.holds(1e-9));
        }
    }
}
