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
#include <filesystem>
#include <limits>
#include <string>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "sea/entropy.hpp"
#include "sea/io.hpp"
#include "sea/report.hpp"

using namespace sea;
using namespace sea::io;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

std::string parse_error_path(const Json &j) {
    try {
        (void)problem_from_json(j);
    } catch (const ParseError &e) {
        return e.path();
    }
    return "<no error>";
}

Json qubit_problem() {
    return Json::parse(R"({
        "instance": "quantum",
        "dim": 2,
        "state": {"density": [[0.5, 0], [0, 0.5]]},
        "partitions": {
            "A": [[[0, 0], [0, 1]], [[1, 0], [0, 0]]],
            "B": [[[0.5, 0.5], [0.5, 0.5]], [[0.5, -0.5], [-0.5, 0.5]]]
        }
    })");
}

} // namespace

TEST_CASE("shipped problem files", "[io]") {
    SECTION("two qubit bases") {
        const auto any = load_problem(std::string(SEA_DATA_DIR) + "/example_2_3.json");
        const auto &p = std::get<Problem<QuantumEffectAlgebra>>(any);
        const auto &a = p.partition("A");
        const auto &b = p.partition("B");
        CHECK(oracle::frobenius(a[0].matrix() - oracle::P1()) == 0.0);
        CHECK(oracle::frobenius(b[0].matrix() - oracle::Q1()) <= 1e-15);
        CHECK_THAT(entropy(p.algebra, p.state, a), WithinAbs(1.0, 1e-14));
        CHECK_THAT(refinement_entropy(p.algebra, p.state, a, b),
                   WithinAbs(2.0, 1e-14));
        CHECK_THAT(cond_entropy(p.algebra, p.state, b, a), WithinAbs(1.0, 1e-14));
    }
    SECTION("boolean blocks") {
        const auto any = load_problem(std::string(SEA_DATA_DIR) + "/boolean_blocks.json");
        const auto &p = std::get<Problem<BooleanAlgebra>>(any);
        CHECK_THAT(refinement_entropy(p.algebra, p.state, p.partition("A"),
                                      p.partition("B")),
                   WithinAbs(2.0, 1e-15));
    }
    SECTION("fuzzy points") {
        const auto any = load_problem(std::string(SEA_DATA_DIR) + "/fuzzy_points.json");
        const auto &p = std::get<Problem<FuzzyAlgebra>>(any);
        CHECK(p.partitions.size() == 3);
        CHECK(theorem_residuals(p.algebra, p.state, p.partition("A"),
                                p.partition("B"), p.partition("C"))
                  .holds(1e-12));
    }
}

TEST_CASE("problem round trip", "[io]") {
    for (const char *file : {"example_2_3.json", "boolean_blocks.json",
                             "fuzzy_points.json"}) {
        const auto first = load_problem(std::string(SEA_DATA_DIR) + "/" + file);
        const auto j1 = to_json(first);
        const auto j2 = to_json(problem_from_json(j1));
        CHECK(j1.dump() == j2.dump());
    }

    SECTION("through a file") {
        const auto path =
            std::filesystem::temp_directory_path() / "sea_io_round_trip.json";
        const auto j = to_json(problem_from_json(qubit_problem()));
        write_json_file(path.string(), j);
        CHECK(read_json_file(path.string()).dump() == j.dump());
        std::filesystem::remove(path);
    }
}

TEST_CASE("path-addressed parse errors", "[io]") {
    auto j = qubit_problem();
    CHECK(parse_error_path(j) == "<no error>");

    SECTION("non-Hermitian element") {
        j["partitions"]["A"][1] = Json::parse("[[1, 0.3], [0, 0]]");
        try {
            (void)problem_from_json(j);
            FAIL("expected a parse error");
        } catch (const ParseError &e) {
            CHECK(e.path() == "partitions.A[1]");
            CHECK_THAT(std::string(e.what()),
                       ContainsSubstring("partitions.A[1]: not Hermitian"));
        }
    }
    SECTION("bad density") {
        j["state"]["density"] = Json::parse("[[1.5, 0], [0, -0.5]]");
        CHECK(parse_error_path(j) == "state.density");
    }
    SECTION("elements that do not sum to the identity") {
        j["partitions"]["B"][1] = Json::parse("[[0.25, 0], [0, 0.25]]");
        CHECK_THAT(parse_error_path(j), ContainsSubstring("partitions.B"));
    }
    SECTION("ragged matrix") {
        j["partitions"]["A"][0] = Json::parse("[[0, 0], [0]]");
        CHECK(parse_error_path(j) == "partitions.A[0][1]");
    }
    SECTION("bad entry") {
        j["partitions"]["A"][0][0][0] = "zero";
        CHECK(parse_error_path(j) == "partitions.A[0][0][0]");
    }
    SECTION("unknown instance") {
        j["instance"] = "hilbert";
        CHECK(parse_error_path(j) == "instance");
    }
    SECTION("missing keys") {
        j.erase("dim");
        CHECK(parse_error_path(j) == "dim");
    }
    SECTION("bad log base") {
        j["options"] = Json{{"log_base", 0.5}};
        CHECK(parse_error_path(j) == "options.log_base");
    }
    SECTION("unknown partition name") {
        const auto p = std::get<Problem<QuantumEffectAlgebra>>(problem_from_json(j));
        try {
            (void)p.partition("Z");
            FAIL("expected a parse error");
        } catch (const ParseError &e) {
            CHECK(e.path() == "partitions.Z");
        }
    }
    SECTION("boolean atoms outside the ground set") {
        const auto b = Json::parse(R"({"instance": "boolean", "size": 2,
            "state": {"weights": [0.5, 0.5]},
            "partitions": {"A": [[0], [1, 2]]}})");
        CHECK(parse_error_path(b) == "partitions.A[1][1]");
    }
    SECTION("fuzzy weights that do not sum to one") {
        const auto f = Json::parse(R"({"instance": "fuzzy", "size": 2,
            "state": {"weights": [0.5, 0.6]},
            "partitions": {"A": [[1, 1]]}})");
        CHECK_THAT(parse_error_path(f), ContainsSubstring("state"));
    }
    SECTION("shipped bad inputs") {
        CHECK(parse_error_path(read_json_file(std::string(SEA_TEST_DATA_DIR) +
                                              "/bad_density.json")) ==
              "state.density");
        CHECK(parse_error_path(read_json_file(std::string(SEA_TEST_DATA_DIR) +
                                              "/not_hermitian.json")) ==
              "partitions.A[1]");
    }
    SECTION("unreadable file") {
        CHECK_THROWS_AS(read_json_file("/nonexistent/problem.json"), ParseError);
    }
}

TEST_CASE("report envelope", "[io]") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(number(std::nan("")) == "nan");
    CHECK(number(0.25) == 0.25);

    const Json config{{"seed", 1}};
    const auto r = make_report("entropy", config, Json::object(), Json::object());
    CHECK(r["tool"] == "sea");
    CHECK(r["command"] == "entropy");
    CHECK(r["config_hash"] == fnv1a_hex(config.dump()));

    verify::CampaignReport c;
    c.campaign = "x";
    c.runtime_seconds = 3.0;
    CHECK_FALSE(campaign_report("x", c).contains("timing"));
    CHECK(campaign_report("x", c, true)["timing"]["runtime_seconds"] == 3.0);
}
