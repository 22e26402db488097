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

#include <vector>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "sea/boolean.hpp"
#include "sea/fuzzy.hpp"
#include "sea/quantum.hpp"
#include "sea/random.hpp"

using namespace sea;
using sea::verify::Rng;

namespace {

template <class A> A make_instance();
template <> BooleanAlgebra make_instance() { return BooleanAlgebra(6); }
template <> FuzzyAlgebra make_instance() { return FuzzyAlgebra(5); }
template <> QuantumEffectAlgebra make_instance() {
    return QuantumEffectAlgebra(3);
}

} // namespace

TEST_CASE("instance construction", "[instances]") {
    CHECK_THROWS_AS(BooleanAlgebra(0), UsageError);
    CHECK_THROWS_AS(BooleanAlgebra(65), UsageError);
    CHECK_NOTHROW(BooleanAlgebra(64));
    CHECK_THROWS_AS(FuzzyAlgebra(0), UsageError);
    CHECK_THROWS_AS(QuantumEffectAlgebra(0), NumericError);
    CHECK_THROWS_AS(QuantumEffectAlgebra(65), NumericError);
}

TEST_CASE("boolean instance", "[instances]") {
    const BooleanAlgebra b4(4);
    CHECK_FALSE(b4.try_oplus(b4.element({0, 1}), b4.element({0})));
    CHECK(b4.seq(b4.element({0, 1}), b4.element({1, 2})) == b4.element({1}));
    CHECK(b4.element({0, 3}).indices() == std::vector<std::size_t>{0, 3});
    CHECK(b4.one().count() == 4);
    CHECK(b4.meet(b4.element({0, 1}), b4.element({1, 2})) == b4.element({1}));
    CHECK(b4.join(b4.element({0, 1}), b4.element({1, 2})) ==
          b4.element({0, 1, 2}));
    CHECK(b4.distance(b4.element({0, 1}), b4.element({1, 2})) == 2.0);
    CHECK_THROWS_AS(b4.element({4}), UsageError);
}

TEST_CASE("fuzzy instance", "[instances]") {
    const FuzzyAlgebra f1(1);
    const auto sum = f1.try_oplus(f1.element({0.3}), f1.element({0.7}));
    REQUIRE(sum);
    CHECK((*sum)[0] == Catch::Approx(1.0).margin(1e-15));
    CHECK(f1.seq(f1.element({0.3}), f1.element({0.7}))[0] ==
          Catch::Approx(0.21).margin(1e-15));
    CHECK_FALSE(f1.try_oplus(f1.element({0.6}), f1.element({0.6})));

    CHECK_THROWS_AS(f1.element({1.5}), UsageError);
    CHECK_THROWS_AS(f1.element({-0.1}), UsageError);
    CHECK_THROWS_AS(f1.element({0.2, 0.3}), UsageError);

    SECTION("meets exist for crisp sets only") {
        const FuzzyAlgebra f3(3);
        const auto m = f3.meet(f3.element({1.0, 1.0, 0.0}),
                               f3.element({0.0, 1.0, 1.0}));
        CHECK(m == f3.element({0.0, 1.0, 0.0}));
        CHECK_THROWS_AS(f3.meet(f3.element({0.5, 1.0, 0.0}), f3.one()),
                        MeetUnavailable);
    }
}

TEST_CASE("quantum instance", "[instances]") {
    const QuantumEffectAlgebra q2(2);
    SECTION("projections compose as PQP") {
        Rng rng(5);
        const QuantumEffectAlgebra q4(4);
        for (int t = 0; t < 20; ++t) {
            const auto p = verify::random_projection_matrix(4, 1 + t % 3, rng);
            const auto r = verify::random_projection_matrix(4, 1 + t % 4, rng);
            const oracle::Matrix pqp = oracle::mul(oracle::mul(p, r), p);
            CHECK(oracle::frobenius(q4.seq(q4.effect(p), q4.effect(r)).matrix() -
                                    pqp) <= 1e-9);
        }
    }
    SECTION("diagonal basis sandwich with the second coordinate projection") {
        const auto r = q2.seq(q2.effect(oracle::Q1()), q2.effect(oracle::P2()));
        CHECK(oracle::frobenius(r.matrix() - 0.5 * oracle::Q1()) <= 1e-14);
    }
    SECTION("inputs outside the effect interval") {
        CHECK_THROWS_AS(q2.effect(oracle::diag({1.2, 0.5})), NumericError);
        oracle::Matrix m = oracle::diag({0.5, 0.5});
        m(0, 1) = 0.2;
        CHECK_THROWS_AS(q2.effect(m), NumericError);
        CHECK_THROWS_AS(q2.effect(oracle::diag({0.5, 0.5, 0.5})), UsageError);
    }
    SECTION("the stored root squares back") {
        const auto e = q2.effect(oracle::diag({0.36, 0.81}));
        CHECK(oracle::frobenius(e.sqrt() - oracle::diag({0.6, 0.9})) <= 1e-15);
    }
    SECTION("meets need projections") {
        CHECK_THROWS(q2.meet(q2.effect(oracle::diag({0.5, 0.5})), q2.one()));
        CHECK(oracle::frobenius(
                  q2.meet(q2.effect(oracle::P1()), q2.effect(oracle::Q1()))
                      .matrix()) <= 1e-10);
    }
}

TEMPLATE_TEST_CASE("instance invariants on random elements", "[instances]",
                   BooleanAlgebra, FuzzyAlgebra, QuantumEffectAlgebra) {
    const auto alg = make_instance<TestType>();
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto a = verify::random_element(alg, rng);
        const auto b = verify::random_element(alg, rng);

        // a ⊕ a' = 1 and a'' = a
        const auto whole = alg.try_oplus(a, alg.complement(a));
        REQUIRE(whole);
        CHECK(alg.approx_equal(*whole, alg.one()));
        CHECK(alg.approx_equal(alg.complement(alg.complement(a)), a));

        // a∘b ≤ a, and both a∘b and a∘b' sum back to a
        const auto ab = alg.seq(a, b);
        CHECK(alg.leq(ab, a));
        const auto split = alg.try_oplus(ab, alg.seq(a, alg.complement(b)));
        REQUIRE(split);
        CHECK(alg.approx_equal(*split, a));

        // 0 ≤ a ≤ 1
        CHECK(alg.leq(alg.zero(), a));
        CHECK(alg.leq(a, alg.one()));

        // a ≤ b exactly when a ⊕ c = b for some c; the witness is (b'⊕a)'
        const auto ord = alg.try_oplus(a, alg.complement(b));
        if (alg.leq(a, b)) {
            REQUIRE(ord);
            const auto c = alg.complement(*ord);
            const auto back = alg.try_oplus(a, c);
            REQUIRE(back);
            CHECK(alg.approx_equal(*back, b));
        }
        CHECK(alg.leq(a, alg.try_oplus(a, alg.seq(alg.complement(a), b))
                             .value_or(alg.one())));
    }
}

TEMPLATE_TEST_CASE("sharp elements are idempotent", "[instances]",
                   BooleanAlgebra, FuzzyAlgebra, QuantumEffectAlgebra) {
    const auto alg = make_instance<TestType>();
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const auto [p, q] = verify::random_annihilating_pair(alg, rng);
        if (alg.is_sharp(p)) {
            CHECK(alg.approx_equal(alg.seq(p, p), p));
        }
        CHECK(alg.approx_equal(alg.seq(p, q), alg.zero()));
    }
    CHECK(alg.is_sharp(alg.zero()));
    CHECK(alg.is_sharp(alg.one()));
}
