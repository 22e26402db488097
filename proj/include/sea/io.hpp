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
 * Problem files: an instance, a state and named partitions, as JSON.
 *
 *   {
 *     "instance": "quantum",          // "boolean" | "fuzzy" | "quantum"
 *     "dim": 2,                       // "size" for boolean and fuzzy
 *     "state": {"density": [[...]]},  // {"weights": [...]} otherwise
 *     "partitions": {"A": [...], "B": [...]},
 *     "options": {"log_base": 2, "tolerance": 1e-9}
 *   }
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "boolean.hpp"
#include "core.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "fuzzy.hpp"
#include "quantum.hpp"
#include "serialize.hpp"
#include "state.hpp"

namespace sea::io {

template <SequentialEffectAlgebra A> struct Problem {
    using partition_type = Partition<element_t<A>>;

    A algebra;
    state_t<A> state;
    std::vector<std::pair<std::string, partition_type>> partitions;
    EntropyOptions options;
    double tolerance = 1e-9;

    [[nodiscard]] const partition_type &partition(const std::string &name) const {
        for (const auto &[k, p] : partitions) {
            if (k == name) {
                return p;
            }
        }
        throw ParseError("partitions." + name, "no such partition");
    }

    /// Adds or replaces a named partition, keeping file order.
    void set_partition(const std::string &name, partition_type p) {
        for (auto &[k, existing] : partitions) {
            if (k == name) {
                existing = std::move(p);
                return;
            }
        }
        partitions.emplace_back(name, std::move(p));
    }
};

using AnyProblem = std::variant<Problem<BooleanAlgebra>, Problem<FuzzyAlgebra>,
                                Problem<QuantumEffectAlgebra>>;

namespace detail {

template <SequentialEffectAlgebra A>
Problem<A> decode_problem(const Json &j, std::size_t size) {
    A alg = [&] {
        try {
            return A(size);
        } catch (const Error &e) {
            throw ParseError(A::kind == InstanceKind::Quantum ? "dim" : "size",
                             e.what());
        }
    }();
    auto state = state_from_json(alg, require_key(j, "", "state"), "state");

    EntropyOptions options;
    double tolerance = 1e-9;
    if (const auto it = j.find("options"); it != j.end()) {
        if (!it->is_object()) {
            throw ParseError("options", "expected an object");
        }
        if (const auto b = it->find("log_base"); b != it->end()) {
            options.log_base = require_number(*b, "options.log_base");
            try {
                options.validate();
            } catch (const UsageError &e) {
                throw ParseError("options.log_base", e.what());
            }
        }
        if (const auto t = it->find("tolerance"); t != it->end()) {
            tolerance = require_number(*t, "options.tolerance");
            if (!(tolerance > 0.0)) {
                throw ParseError("options.tolerance", "must be positive");
            }
        }
    }

    Problem<A> problem{std::move(alg), std::move(state), {}, options,
                       tolerance};
    const auto &parts = require_key(j, "", "partitions");
    if (!parts.is_object()) {
        throw ParseError("partitions", "expected an object of named lists");
    }
    for (const auto &[name, list] : parts.items()) {
        problem.partitions.emplace_back(
            name, partition_from_json(problem.algebra, list,
                                      "partitions." + name));
    }
    return problem;
}

} // namespace detail

inline AnyProblem problem_from_json(const Json &j) {
    if (!j.is_object()) {
        throw ParseError("<root>", "expected an object");
    }
    const auto &kind_json = require_key(j, "", "instance");
    if (!kind_json.is_string()) {
        throw ParseError("instance", "expected a string");
    }
    InstanceKind kind{};
    try {
        kind = parse_instance_kind(kind_json.get<std::string>());
    } catch (const UsageError &e) {
        throw ParseError("instance", e.what());
    }
    const char *size_key = kind == InstanceKind::Quantum ? "dim" : "size";
    const auto size = require_count(require_key(j, "", size_key), size_key);
    switch (kind) {
    case InstanceKind::Boolean:
        return detail::decode_problem<BooleanAlgebra>(j, size);
    case InstanceKind::Fuzzy:
        return detail::decode_problem<FuzzyAlgebra>(j, size);
    case InstanceKind::Quantum:
        break;
    }
    return detail::decode_problem<QuantumEffectAlgebra>(j, size);
}

template <SequentialEffectAlgebra A> Json to_json(const Problem<A> &p) {
    Json j;
    j["instance"] = std::string(to_string(A::kind));
    j[A::kind == InstanceKind::Quantum ? "dim" : "size"] = p.algebra.size();
    j["state"] = to_json(p.state);
    Json parts = Json::object();
    for (const auto &[name, part] : p.partitions) {
        parts[name] = to_json(part);
    }
    j["partitions"] = parts;
    j["options"] = Json{{"log_base", p.options.log_base},
                        {"tolerance", p.tolerance}};
    return j;
}

inline Json to_json(const AnyProblem &p) {
    return std::visit([](const auto &x) { return to_json(x); }, p);
}

inline Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, "cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(path, e.what());
    }
}

inline AnyProblem load_problem(const std::string &path) {
    return problem_from_json(read_json_file(path));
}

/// Pretty-printed with a trailing newline.
inline void write_json_file(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

} // namespace sea::io
