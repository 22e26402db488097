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
 * JSON encoding of matrices, elements, states and partitions. Complex
 * numbers are [re, im] pairs and matrices are row-major nested arrays.
 * Decoders report failures with the JSON path of the offending value.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "boolean.hpp"
#include "errors.hpp"
#include "fuzzy.hpp"
#include "quantum.hpp"
#include "spectral.hpp"
#include "state.hpp"

namespace sea::io {

using Json = nlohmann::ordered_json;

/// Input that does not decode; `path()` addresses the bad value, e.g.
/// "partitions.A[1]".
class ParseError : public UsageError {
  public:
    ParseError(std::string path, const std::string &message)
        : UsageError(path + ": " + message), path_(std::move(path)) {}
    [[nodiscard]] const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

inline std::string index_path(const std::string &path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

inline std::string key_path(const std::string &path, const std::string &key) {
    return path.empty() ? key : path + "." + key;
}

inline const Json &require_key(const Json &j, const std::string &path,
                               const std::string &key) {
    if (!j.is_object()) {
        throw ParseError(path.empty() ? "<root>" : path, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(key_path(path, key), "missing");
    }
    return *it;
}

inline double require_number(const Json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ParseError(path, "expected a number");
    }
    return j.get<double>();
}

inline std::size_t require_count(const Json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw ParseError(path, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

inline const Json &require_array(const Json &j, const std::string &path) {
    if (!j.is_array()) {
        throw ParseError(path, "expected an array");
    }
    return j;
}

// Matrices -------------------------------------------------------------

inline Json to_json(const spectral::ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Accepts [re, im] pairs or plain real numbers as entries.
inline spectral::ComplexMatrix matrix_from_json(const Json &j,
                                                const std::string &path) {
    require_array(j, path);
    const auto n = static_cast<Eigen::Index>(j.size());
    if (n == 0) {
        throw ParseError(path, "empty matrix");
    }
    spectral::ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto row_path = index_path(path, static_cast<std::size_t>(i));
        const auto &row = require_array(j[static_cast<std::size_t>(i)], row_path);
        if (static_cast<Eigen::Index>(row.size()) != n) {
            throw ParseError(row_path, "expected " + std::to_string(n) +
                                           " entries (square matrix)");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto entry_path =
                index_path(row_path, static_cast<std::size_t>(c));
            const auto &v = row[static_cast<std::size_t>(c)];
            if (v.is_number()) {
                m(i, c) = {v.get<double>(), 0.0};
            } else if (v.is_array() && v.size() == 2 && v[0].is_number() &&
                       v[1].is_number()) {
                m(i, c) = {v[0].get<double>(), v[1].get<double>()};
            } else {
                throw ParseError(entry_path, "expected [re, im] or a number");
            }
        }
    }
    return m;
}

// Elements -------------------------------------------------------------

inline Json to_json(const BooleanElement &a) {
    Json out = Json::array();
    for (auto i : a.indices()) {
        out.push_back(i);
    }
    return out;
}

inline Json to_json(const FuzzyElement &a) { return Json(a.memberships()); }

inline Json to_json(const QuantumEffect &a) { return to_json(a.matrix()); }

inline BooleanElement element_from_json(const BooleanAlgebra &alg,
                                        const Json &j,
                                        const std::string &path) {
    require_array(j, path);
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto atom = require_count(j[i], index_path(path, i));
        if (atom >= alg.size()) {
            throw ParseError(index_path(path, i),
                             "atom outside ground set of size " +
                                 std::to_string(alg.size()));
        }
        atoms.push_back(atom);
    }
    return alg.element(atoms);
}

inline FuzzyElement element_from_json(const FuzzyAlgebra &alg, const Json &j,
                                      const std::string &path) {
    require_array(j, path);
    if (j.size() != alg.size()) {
        throw ParseError(path, "expected " + std::to_string(alg.size()) +
                                   " memberships");
    }
    std::vector<double> mu;
    for (std::size_t i = 0; i < j.size(); ++i) {
        mu.push_back(require_number(j[i], index_path(path, i)));
    }
    try {
        return alg.element(std::move(mu));
    } catch (const Error &e) {
        throw ParseError(path, e.what());
    }
}

inline QuantumEffect element_from_json(const QuantumEffectAlgebra &alg,
                                       const Json &j, const std::string &path) {
    const auto m = matrix_from_json(j, path);
    if (static_cast<std::size_t>(m.rows()) != alg.size()) {
        throw ParseError(path, "expected a " + std::to_string(alg.size()) +
                                   "x" + std::to_string(alg.size()) +
                                   " matrix");
    }
    if (!spectral::is_hermitian(m, kQuantumTol)) {
        throw ParseError(path, "not Hermitian");
    }
    try {
        return alg.effect(m);
    } catch (const NumericError &e) {
        throw ParseError(path, std::string("not an effect (") + e.what() + ")");
    }
}

// States ---------------------------------------------------------------

inline Json to_json(const AtomWeights &s) {
    return Json{{"weights", s.weights()}};
}
inline Json to_json(const PointWeights &s) {
    return Json{{"weights", s.weights()}};
}
inline Json to_json(const DensityMatrix &s) {
    return Json{{"density", to_json(s.matrix())}};
}

inline std::vector<double> weights_from_json(const Json &j,
                                             const std::string &path,
                                             std::size_t n) {
    const auto wpath = key_path(path, "weights");
    const auto &w = require_array(require_key(j, path, "weights"), wpath);
    if (w.size() != n) {
        throw ParseError(wpath, "expected " + std::to_string(n) + " weights");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(require_number(w[i], index_path(wpath, i)));
    }
    return out;
}

inline AtomWeights state_from_json(const BooleanAlgebra &alg, const Json &j,
                                   const std::string &path) {
    try {
        return AtomWeights(weights_from_json(j, path, alg.size()));
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(key_path(path, "weights"), e.what());
    }
}

inline PointWeights state_from_json(const FuzzyAlgebra &alg, const Json &j,
                                    const std::string &path) {
    try {
        return PointWeights(weights_from_json(j, path, alg.size()));
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(key_path(path, "weights"), e.what());
    }
}

inline DensityMatrix state_from_json(const QuantumEffectAlgebra &alg,
                                     const Json &j, const std::string &path) {
    const auto dpath = key_path(path, "density");
    const auto m = matrix_from_json(require_key(j, path, "density"), dpath);
    if (static_cast<std::size_t>(m.rows()) != alg.size()) {
        throw ParseError(dpath, "expected a " + std::to_string(alg.size()) +
                                    "x" + std::to_string(alg.size()) +
                                    " matrix");
    }
    if (!spectral::is_density(m, kDensityTol)) {
        throw ParseError(dpath,
                         "not a density matrix (needs Hermitian, PSD, unit "
                         "trace)");
    }
    return DensityMatrix(m);
}

// Partitions -----------------------------------------------------------

template <class E> Json to_json(const Partition<E> &p) {
    Json out = Json::array();
    for (const auto &e : p) {
        out.push_back(to_json(e));
    }
    return out;
}

template <SequentialEffectAlgebra A>
Partition<element_t<A>> partition_from_json(const A &alg, const Json &j,
                                            const std::string &path) {
    require_array(j, path);
    std::vector<element_t<A>> elems;
    for (std::size_t i = 0; i < j.size(); ++i) {
        elems.push_back(element_from_json(alg, j[i], index_path(path, i)));
    }
    try {
        return validate_partition(alg, std::move(elems));
    } catch (const PartitionError &e) {
        const auto where =
            e.index() ? index_path(path, *e.index()) : path;
        throw ParseError(where, e.what());
    } catch (const UsageError &e) {
        throw ParseError(path, e.what());
    }
}

} // namespace sea::io
