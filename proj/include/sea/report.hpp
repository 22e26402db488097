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
 * Report files written by the command-line tool. Field order is fixed and
 * nothing that varies between identical runs (wall time) is included unless
 * asked for, so equal inputs give byte-identical reports.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "serialize.hpp"
#include "verify.hpp"

namespace sea::io {

inline constexpr const char *kToolName = "sea";
inline constexpr const char *kToolVersion = "0.1.0";

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a_hex(const std::string &bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

/// JSON has no infinities; they are written as strings.
inline Json number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return x;
}

inline Json make_report(const std::string &command, const Json &config,
                        Json results, Json verdicts) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = config;
    j["config_hash"] = fnv1a_hex(config.dump());
    j["results"] = std::move(results);
    j["verdicts"] = std::move(verdicts);
    return j;
}

inline Json to_json(const verify::LawTally &t) {
    Json j;
    j["law"] = t.law;
    j["mode"] = t.mode == verify::LawMode::Absolute ? "abs" : "lower_bound";
    j["tolerance"] = t.tolerance;
    j["pass"] = t.pass;
    j["fail"] = t.fail;
    j["worst"] = t.worst ? number(*t.worst) : Json(nullptr);
    j["worst_trial"] = t.worst_trial ? Json(*t.worst_trial) : Json(nullptr);
    j["worst_seed"] = t.worst_trial ? Json(t.worst_seed) : Json(nullptr);
    return j;
}

inline Json to_json(const verify::CampaignReport &r) {
    Json j;
    j["campaign"] = r.campaign;
    j["trials"] = r.trials;
    Json laws = Json::array();
    for (const auto &t : r.laws) {
        laws.push_back(to_json(t));
    }
    j["laws"] = laws;
    j["generator_errors"] = r.generator_errors;
    j["generator_redraws"] = r.generator_redraws;
    j["first_error_trial"] =
        r.first_error_trial ? Json(*r.first_error_trial) : Json(nullptr);
    j["first_error"] = r.first_error;
    j["all_passed"] = r.all_passed();
    return j;
}

/// Report of a single campaign; `timing` adds a separate wall-time field.
inline Json campaign_report(const std::string &command,
                            const verify::CampaignReport &r,
                            bool timing = false) {
    auto j = make_report(command, r.config, to_json(r),
                         Json{{"all_passed", r.all_passed()}});
    if (timing) {
        j["timing"] = Json{{"runtime_seconds", r.runtime_seconds}};
    }
    return j;
}

} // namespace sea::io
